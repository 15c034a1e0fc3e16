"""Polynomial-time deciders for the tractable target/mode families.

Covered: the irreflexive targets T1, T2, C3, T3 (where the ios and iot
questions coincide) and the reflexive targets T1r, T2r under both modes.
Everything else -- the reflexive triangle, T3r, the whole U family and
custom targets -- is where the problems turn NP-complete, and decide_poly
reports those as not covered (None) instead of silently guessing.

Every yes answer carries a reconstructed witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Mode,
    OrientedGraph,
    ShapeKind,
    component_shapes,
    degrees,
    find_hats,
    max_degrees,
)
from .solver import Homomorphism
from .targets import TargetSpec, build_named
from .twosat import TwoSatInstance, solve_2sat


@dataclass
class PolyVerdict:
    satisfiable: bool
    witness: Homomorphism | None
    algorithm: str


_TINY_KINDS = (ShapeKind.ISOLATED_VERTEX, ShapeKind.SINGLE_ARC)


def _check_irreflexive(g: OrientedGraph) -> None:
    if g.reflexive:
        raise ValueError("polynomial deciders take irreflexive inputs")


def decide_T1_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Maps to the single loopless vertex exist iff g has no arcs."""
    _check_irreflexive(g)
    if g.arcs:
        return PolyVerdict(False, None, "edgeless-check")
    return PolyVerdict(True, Homomorphism((0,) * g.n, mode), "edgeless-check")


def decide_T2_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Against the loopless single arc: every component must be an
    isolated vertex or a single arc."""
    _check_irreflexive(g)
    assignment = [0] * g.n
    for shape in component_shapes(g):
        if shape.kind not in _TINY_KINDS:
            return PolyVerdict(False, None, "tiny-components")
        if shape.kind is ShapeKind.SINGLE_ARC:
            u, v = shape.vertices
            if not g.has_arc(u, v):
                u, v = v, u
            assignment[u], assignment[v] = 0, 1
    return PolyVerdict(True, Homomorphism(tuple(assignment), mode), "tiny-components")


def decide_C3_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Against the loopless directed triangle: in- and out-degrees at most
    one (so components are directed paths and cycles) and every directed
    cycle's length divisible by three."""
    _check_irreflexive(g)
    din, dout = max_degrees(g)
    if din > 1 or dout > 1:
        return PolyVerdict(False, None, "path-cycle-mod3")
    assignment = [0] * g.n
    for shape in component_shapes(g):
        if shape.kind is ShapeKind.DIRECTED_CYCLE and shape.cycle_length % 3 != 0:
            return PolyVerdict(False, None, "path-cycle-mod3")
        walk = _directed_walk(g, shape)
        for i, v in enumerate(walk):
            assignment[v] = i % 3
    return PolyVerdict(True, Homomorphism(tuple(assignment), mode), "path-cycle-mod3")


def _directed_walk(g: OrientedGraph, shape) -> list:
    """Vertices of a directed path/cycle component in arc order."""
    if shape.kind is ShapeKind.ISOLATED_VERTEX:
        return list(shape.vertices)
    if shape.kind is ShapeKind.DIRECTED_CYCLE:
        start = shape.vertices[0]
    else:
        (start,) = [v for v in shape.vertices if g.in_degree(v) == 0]
    walk = [start]
    cur = start
    while g.out_nbrs[cur]:
        cur = g.out_nbrs[cur][0]
        if cur == start:
            break
        walk.append(cur)
    return walk


def decide_T1r_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Against the single looped vertex: neighbourhoods must be too small
    to collide, i.e. all in- and out-degrees at most one."""
    _check_irreflexive(g)
    din, dout = max_degrees(g)
    if din > 1 or dout > 1:
        return PolyVerdict(False, None, "degree-one-check")
    return PolyVerdict(True, Homomorphism((0,) * g.n, mode), "degree-one-check")


def decide_T1r_iot(g: OrientedGraph, mode: Mode = Mode.IOT) -> PolyVerdict:
    """Against the single looped vertex with whole-neighbourhood
    injectivity: components must be isolated vertices or single arcs."""
    _check_irreflexive(g)
    ok = all(shape.kind in _TINY_KINDS for shape in component_shapes(g))
    if not ok:
        return PolyVerdict(False, None, "tiny-components")
    return PolyVerdict(True, Homomorphism((0,) * g.n, mode), "tiny-components")


def build_2sat_T2r_ios(g: OrientedGraph) -> TwoSatInstance:
    """Clause system for mapping g to the reflexive single arc t0 -> t1
    with separate in/out injectivity; variable v is true iff v maps to t1.

    Clause groups: (i) out-degree-2 vertices must sit at t0, (ii)
    in-degree-2 vertices at t1, (iii) arcs forbid t1 -> t0, (iv) two
    vertices sharing a common in- or out-neighbour take different images.
    Requires max in- and out-degree at most two.
    """
    _check_irreflexive(g)
    din, dout = max_degrees(g)
    if din > 2 or dout > 2:
        raise ValueError("2-SAT encoding needs in- and out-degrees at most 2")
    inst = TwoSatInstance(g.n)
    for v, (ind, outd) in enumerate(degrees(g)):
        if outd == 2:
            inst.add_clause((v, False))
        if ind == 2:
            inst.add_clause((v, True))
    for v, w in sorted(g.arcs):
        inst.add_clause((v, False), (w, True))
    for v, w in find_hats(g):
        inst.add_clause((v, True), (w, True))
        inst.add_clause((v, False), (w, False))
    return inst


def decide_T2r_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Against the reflexive single arc, via the 2-SAT encoding."""
    _check_irreflexive(g)
    din, dout = max_degrees(g)
    if din > 2 or dout > 2:
        # a vertex with three protected neighbours cannot fit in two images
        return PolyVerdict(False, None, "two-sat")
    assignment = solve_2sat(build_2sat_T2r_ios(g))
    if assignment is None:
        return PolyVerdict(False, None, "two-sat")
    image = tuple(1 if a else 0 for a in assignment)
    return PolyVerdict(True, Homomorphism(image, mode), "two-sat")


def decide_T3_ios(g: OrientedGraph, mode: Mode = Mode.IOS) -> PolyVerdict:
    """Against the loopless transitive triangle.  A vertex of underlying
    degree three can never fit (its neighbour images would need more in-
    or out-room than T3 has), so only degree-<=2 inputs remain and the
    transfer DP finishes those."""
    _check_irreflexive(g)
    if any(len(g.underlying_nbrs[v]) > 2 for v in range(g.n)):
        return PolyVerdict(False, None, "degree2-dp")
    return decide_degree2_dp(g, "T3", mode)


def decide_T2r_iot(g: OrientedGraph, mode: Mode = Mode.IOT) -> PolyVerdict:
    """Against the reflexive single arc with whole-neighbourhood
    injectivity: underlying degree three forces three distinct images
    into a two-vertex target, so answer no; otherwise run the DP."""
    _check_irreflexive(g)
    if any(len(g.underlying_nbrs[v]) > 2 for v in range(g.n)):
        return PolyVerdict(False, None, "degree2-dp")
    return decide_degree2_dp(g, "T2r", mode)


# --- transfer DP over components of underlying degree <= 2 ---


def _resolve_target(target) -> OrientedGraph:
    if isinstance(target, OrientedGraph):
        return target
    return build_named(target)


def _arc_ok(g, h, x, y, a, b) -> bool:
    """May x, y (adjacent in g) take images a, b?"""
    tail, head = (a, b) if g.has_arc(x, y) else (b, a)
    if tail == head:
        return h.reflexive
    return h.has_arc(tail, head)


def _must_differ(g, x, p, q, mode: Mode) -> bool:
    """Do p and q, the two neighbours of x, need distinct images?"""
    if mode is Mode.IOT:
        return True
    if mode is Mode.PLAIN:
        return False
    both_in = g.has_arc(p, x) and g.has_arc(q, x)
    both_out = g.has_arc(x, p) and g.has_arc(x, q)
    return both_in or both_out


def _component_orders(g: OrientedGraph):
    """Each weak component as (is_cycle, vertex walk along the underlying
    path or cycle); assumes underlying degree <= 2."""
    for shape in component_shapes(g):
        verts = shape.vertices
        if shape.kind is ShapeKind.OTHER:
            raise ValueError("underlying degree exceeds 2")
        if len(verts) == 1:
            yield False, list(verts)
            continue
        is_cycle = shape.cycle_length is not None
        if is_cycle:
            start = verts[0]
            prev = None
        else:
            start = min(v for v in verts if len(g.underlying_nbrs[v]) == 1)
            prev = None
        order = [start]
        cur = start
        while True:
            nxt = [w for w in g.underlying_nbrs[cur] if w != prev]
            if not nxt:
                break
            step = min(nxt)
            if is_cycle and step == start:
                break
            prev, cur = cur, step
            order.append(cur)
            if len(order) == len(verts):
                break
        yield is_cycle, order


def decide_degree2_dp(g: OrientedGraph, target, mode: Mode) -> PolyVerdict:
    """Transfer DP deciding mode-injective maps from a graph whose
    underlying degrees are at most 2 into an arbitrary fixed target.

    States are image pairs of consecutive walk vertices; the only local
    constraint beyond arc preservation is whether a vertex's two walk
    neighbours must take different images.  Inputs with an underlying
    degree-3 vertex are rejected as invalid.
    """
    _check_irreflexive(g)
    if any(len(g.underlying_nbrs[v]) > 2 for v in range(g.n)):
        raise ValueError("underlying degree exceeds 2")
    h = _resolve_target(target)
    assignment = [0] * g.n
    if g.n and h.n == 0:
        return PolyVerdict(False, None, "degree2-dp")
    for is_cycle, order in _component_orders(g):
        images = _dp_cycle(g, h, order, mode) if is_cycle else _dp_path(g, h, order, mode)
        if images is None:
            return PolyVerdict(False, None, "degree2-dp")
        for v, a in zip(order, images):
            assignment[v] = a
    return PolyVerdict(True, Homomorphism(tuple(assignment), mode), "degree2-dp")


def _dp_path(g, h, order, mode):
    k = len(order)
    if k == 1:
        return [0]
    first = {}
    for a in range(h.n):
        for b in range(h.n):
            if _arc_ok(g, h, order[0], order[1], a, b):
                first[(a, b)] = None
    layers = [first]
    for i in range(2, k):
        if not layers[-1]:
            return None
        need_diff = _must_differ(g, order[i - 1], order[i - 2], order[i], mode)
        cur = {}
        for (a, b) in layers[-1]:
            for c in range(h.n):
                if need_diff and a == c:
                    continue
                if _arc_ok(g, h, order[i - 1], order[i], b, c) and (b, c) not in cur:
                    cur[(b, c)] = (a, b)
        layers.append(cur)
    if not layers[-1]:
        return None
    state = min(layers[-1])
    rev = [state[1], state[0]]
    for j in range(len(layers) - 1, 0, -1):
        state = layers[j][state]
        rev.append(state[0])
    return rev[::-1]


def _dp_cycle(g, h, order, mode):
    k = len(order)
    for a0 in range(h.n):
        for a1 in range(h.n):
            if not _arc_ok(g, h, order[0], order[1], a0, a1):
                continue
            layers = [{(a0, a1): None}]
            dead = False
            for i in range(2, k):
                need_diff = _must_differ(g, order[i - 1], order[i - 2], order[i], mode)
                cur = {}
                for (a, b) in layers[-1]:
                    for c in range(h.n):
                        if need_diff and a == c:
                            continue
                        if _arc_ok(g, h, order[i - 1], order[i], b, c) and (b, c) not in cur:
                            cur[(b, c)] = (a, b)
                if not cur:
                    dead = True
                    break
                layers.append(cur)
            if dead:
                continue
            close_last = _must_differ(g, order[k - 1], order[k - 2], order[0], mode)
            close_first = _must_differ(g, order[0], order[k - 1], order[1], mode)
            for state in sorted(layers[-1]):
                b, c = state
                if not _arc_ok(g, h, order[k - 1], order[0], c, a0):
                    continue
                if close_last and b == a0:
                    continue
                if close_first and c == a1:
                    continue
                rev = [c, b]
                st = state
                for j in range(len(layers) - 1, 0, -1):
                    st = layers[j][st]
                    rev.append(st[0])
                return rev[::-1]
    return None


# --- dispatch ---

_POLY_TABLE = {
    ("T1", Mode.IOS): decide_T1_ios,
    ("T1", Mode.IOT): decide_T1_ios,
    ("T2", Mode.IOS): decide_T2_ios,
    ("T2", Mode.IOT): decide_T2_ios,
    ("C3", Mode.IOS): decide_C3_ios,
    ("C3", Mode.IOT): decide_C3_ios,
    ("T3", Mode.IOS): decide_T3_ios,
    ("T3", Mode.IOT): decide_T3_ios,
    ("T1r", Mode.IOS): decide_T1r_ios,
    ("T1r", Mode.IOT): decide_T1r_iot,
    ("T2r", Mode.IOS): decide_T2r_ios,
    ("T2r", Mode.IOT): decide_T2r_iot,
}


def decide_poly(g: OrientedGraph, target, mode: Mode):
    """Run the matching polynomial decider, or return None when the
    (target, mode) pair has no known polynomial algorithm here."""
    spec = TargetSpec.parse(target) if isinstance(target, str) else target
    if not isinstance(spec, TargetSpec):
        spec = TargetSpec.from_graph(spec)
    if spec.custom is not None or spec.name is None:
        return None
    fn = _POLY_TABLE.get((spec.name, mode))
    if fn is None:
        return None
    return fn(g, mode)
