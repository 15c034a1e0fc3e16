"""Polynomial transformations between problems, with provenance, plus
brute-force oracles for the undirected source problems.

Each reducer consumes a SimpleGraph and emits a ReductionInstance: the
transformed oriented graph, the target/mode it is meant to be solved
against, and a provenance table that partitions the new vertex set among
the source objects (one entry per source vertex and per source edge).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .gadgets import antidirected_cycle, apex_cycle, equalizer, in_star, selector_cycle
from .graphs import Mode, OrientedGraph, disjoint_union
from .targets import build_named


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on 0..n-1 with a per-vertex ordering of
    incident edges (the numbering the constructions index gadget ports
    by).  Default ordering sorts by the other endpoint; pass edge_order
    to exercise a different numbering."""

    n: int
    edges: frozenset
    edge_order: tuple | None = None

    def __init__(self, n: int, edges, edge_order=None):
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        if edge_order is not None:
            edge_order = tuple(tuple(es) for es in edge_order)
            if len(edge_order) != n:
                raise ValueError("edge_order needs one row per vertex")
            for v in range(n):
                if sorted(edge_order[v]) != sorted(self._incident_sorted(v)):
                    raise ValueError(f"edge_order[{v}] is not a permutation of incident edges")
        object.__setattr__(self, "edge_order", edge_order)

    def _incident_sorted(self, v: int) -> list:
        return sorted(e for e in self.edges if v in e)

    def incident(self, v: int) -> tuple:
        """Incident edges of v in this graph's fixed order."""
        if self.edge_order is not None:
            return self.edge_order[v]
        return tuple(sorted((e for e in self.edges if v in e), key=lambda e: e[0] + e[1] - v))

    def edge_index(self, v: int, edge) -> int:
        """1-based position of edge in v's incident ordering."""
        edge = (min(edge), max(edge))
        return self.incident(v).index(edge) + 1

    def neighbours(self, v: int) -> list:
        return sorted((a + b - v) for a, b in self.edges if v in (a, b))

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def min_degree(self) -> int:
        return min((self.degree(v) for v in range(self.n)), default=0)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(self.degree(v) == 3 for v in range(self.n))

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in self.neighbours(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n


def with_random_edge_order(g: SimpleGraph, rng) -> SimpleGraph:
    """Same graph, incident edges shuffled independently per vertex."""
    rows = []
    for v in range(g.n):
        row = list(g._incident_sorted(v))
        rng.shuffle(row)
        rows.append(row)
    return SimpleGraph(g.n, g.edges, edge_order=rows)


def complete_graph(k: int) -> SimpleGraph:
    return SimpleGraph(k, itertools.combinations(range(k), 2))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return SimpleGraph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, ((i, i + 1) for i in range(n - 1)))


def prism_graph() -> SimpleGraph:
    """Two triangles joined by a matching; cubic on 6 vertices."""
    return SimpleGraph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def bridged_cubic_graph() -> SimpleGraph:
    """Smallest cubic graph with a bridge (10 vertices); the bridge makes
    a proper 3-edge-colouring impossible."""
    half1 = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4), (0, 4)]
    half2 = [(5, 6), (5, 7), (6, 7), (6, 8), (7, 8), (8, 9), (5, 9)]
    return SimpleGraph(10, half1 + half2 + [(4, 9)])


@dataclass
class ReductionInstance:
    """Transformed instance: solve `graph` against `target` under `mode`.

    provenance maps ("vertex", v) / ("edge", (u, w)) source keys to the
    role->index table of the vertices that key owns; together the entries
    partition the whole vertex set.
    """

    graph: OrientedGraph
    provenance: dict
    source_kind: str
    target: str
    mode: Mode

    def vertex_roles(self, v: int) -> dict:
        return self.provenance[("vertex", v)]

    def edge_roles(self, u: int, w: int) -> dict:
        return self.provenance[("edge", (min(u, w), max(u, w)))]


class _Builder:
    def __init__(self):
        self.arcs = []
        self.n = 0
        self.prov = {}

    def block(self, key, size: int, roles: dict, arcs) -> dict:
        """Add `size` fresh vertices under provenance `key`; `roles` and
        `arcs` use block-local indices.  Returns local->global map."""
        base = self.n
        self.n += size
        table = {name: base + idx for name, idx in roles.items()}
        self.prov[key] = table
        self.arcs.extend((base + u, base + v) for u, v in arcs)
        return table

    def arc(self, u: int, v: int) -> None:
        self.arcs.append((u, v))

    def instance(self, source_kind: str, target: str, mode: Mode) -> ReductionInstance:
        return ReductionInstance(OrientedGraph(self.n, self.arcs), self.prov, source_kind, target, mode)


def reduce_3col_to_ios_c3r(g: SimpleGraph) -> ReductionInstance:
    """Proper 3-colourability of a min-degree-3 graph as an ios question
    against the reflexive triangle.

    One selector_cycle(deg(x)) per vertex x, whose forced cycle carries
    x's colour.  Each edge wz becomes a bridge of three fresh vertices
    a -> m <- b with feeds n_i -> a and n_j -> b from the link vertices
    numbered by the edge's position at w and at z.  An arc n -> a forces
    a's image one step past the cycle colour (the link already has an
    out-neighbour carrying the colour itself), so in-injectivity at m
    says exactly colour(w) != colour(z).
    """
    if g.min_degree() < 3:
        raise ValueError("reduction needs minimum degree 3")
    b = _Builder()
    for x in range(g.n):
        gad = selector_cycle(g.degree(x))
        b.block(("vertex", x), gad.graph.n, gad.roles, gad.graph.arcs)
    for w, z in sorted(g.edges):
        table = b.block(
            ("edge", (w, z)), 3, {"a": 0, "m": 1, "b": 2}, [(0, 1), (2, 1)]
        )
        i = g.edge_index(w, (w, z))
        j = g.edge_index(z, (w, z))
        b.arc(b.prov[("vertex", w)][f"n{i}"], table["a"])
        b.arc(b.prov[("vertex", z)][f"n{j}"], table["b"])
    return b.instance("vertex-3-colouring", "C3r", Mode.IOS)


def reduce_3edge_to_t3r(g: SimpleGraph, mode: Mode = Mode.IOS) -> ReductionInstance:
    """Proper 3-edge-colourability of a cubic graph against the reflexive
    transitive triangle (same construction for ios and iot).

    One in-star per vertex (its three leaf images become the colours of
    the three incident edges) and one equalizer per edge whose ports are
    identified with the matching leaves, forcing both endpoints to agree
    on the edge's colour.
    """
    if mode not in (Mode.IOS, Mode.IOT):
        raise ValueError("mode must be ios or iot")
    if not g.is_cubic():
        raise ValueError("reduction needs a cubic graph")
    b = _Builder()
    for x in range(g.n):
        star = in_star()
        b.block(("vertex", x), star.graph.n, star.roles, star.graph.arcs)
    eq = equalizer()
    port_u, port_v = eq.roles["u"], eq.roles["v"]
    interior = [w for w in range(eq.graph.n) if w not in (port_u, port_v)]
    local = {w: idx for idx, w in enumerate(interior)}
    roles = {f"f{w}": local[w] for w in interior}
    inner_arcs = [
        (local[a], local[c]) for a, c in eq.graph.arcs if a in local and c in local
    ]
    port_arcs = [(a, c) for a, c in eq.graph.arcs if a not in local or c not in local]
    for x, y in sorted(g.edges):
        table = b.block(("edge", (x, y)), len(interior), roles, inner_arcs)
        i = g.edge_index(x, (x, y))
        j = g.edge_index(y, (x, y))
        glue = {
            port_u: b.prov[("vertex", x)][f"leaf{i}"],
            port_v: b.prov[("vertex", y)][f"leaf{j}"],
        }
        for a, c in port_arcs:
            ga = glue.get(a, table.get(f"f{a}"))
            gc = glue.get(c, table.get(f"f{c}"))
            b.arc(ga, gc)
    return b.instance("cubic-3-edge-colouring", "T3r", mode)


def reduce_3col_to_iot_c3r(g: SimpleGraph) -> ReductionInstance:
    """Proper 3-colourability of a connected graph as an iot question
    against the reflexive triangle.

    One antidirected cycle on 6*deg(x) vertices per vertex x (labelled so
    the attachment points x_{6i} have in-degree two), and per edge a fresh
    apex reached from both attachment points by directed length-2 paths;
    whole-neighbourhood injectivity at the apex forbids equal colours.
    """
    if not g.is_connected():
        raise ValueError("reduction needs a connected graph")
    if g.min_degree() < 1:
        raise ValueError("reduction needs minimum degree 1")
    b = _Builder()
    for x in range(g.n):
        size = 6 * g.degree(x)
        gad = antidirected_cycle(size)
        # relabel: x_k is raw vertex (k+1) mod size, putting every x_{6i}
        # in the in-degree-2 class
        roles = {f"x{k}": (k + 1) % size for k in range(size)}
        b.block(("vertex", x), size, roles, gad.graph.arcs)
    for x, y in sorted(g.edges):
        table = b.block(
            ("edge", (x, y)), 3, {"mid0": 0, "mid1": 1, "apex": 2}, [(0, 2), (1, 2)]
        )
        i = g.edge_index(x, (x, y))
        j = g.edge_index(y, (x, y))
        b.arc(b.prov[("vertex", x)][f"x{6 * (i - 1)}"], table["mid0"])
        b.arc(b.prov[("vertex", y)][f"x{6 * (j - 1)}"], table["mid1"])
    return b.instance("vertex-3-colouring", "C3r", Mode.IOT)


def reduce_3edge_to_u4(g: SimpleGraph) -> ReductionInstance:
    """Proper 3-edge-colourability of a cubic graph against the loopless
    U4 tournament: keep the vertices, replace each edge xy by the path
    x -> v1 -> v2 -> v3 -> v4 <- y.  Vertices are forced onto the
    dominating vertex, so the v1/v4 images around a vertex enumerate its
    edge colours."""
    if not g.is_cubic():
        raise ValueError("reduction needs a cubic graph")
    b = _Builder()
    for x in range(g.n):
        b.block(("vertex", x), 1, {"x": 0}, ())
    for x, y in sorted(g.edges):
        table = b.block(
            ("edge", (x, y)),
            4,
            {"v1": 0, "v2": 1, "v3": 2, "v4": 3},
            [(0, 1), (1, 2), (2, 3)],
        )
        b.arc(b.prov[("vertex", x)]["x"], table["v1"])
        b.arc(b.prov[("vertex", y)]["x"], table["v4"])
    return b.instance("cubic-3-edge-colouring", "U4", Mode.IOS)


def lift_u4_instance(inst: ReductionInstance, m: int) -> ReductionInstance:
    """Lift a U4 instance to U_m (m >= 4) by giving each original vertex
    enough fresh in-pendants to reach in-degree m-4, which pins it to the
    one U_m vertex that dominates the triangle with room to spare."""
    if m < 4:
        raise ValueError("U targets need m >= 4")
    if inst.target != "U4":
        raise ValueError("can only lift U4 instances")
    arcs = list(inst.graph.arcs)
    prov = {key: dict(table) for key, table in inst.provenance.items()}
    n = inst.graph.n
    for key, table in prov.items():
        if key[0] != "vertex":
            continue
        x = table["x"]
        need = (m - 4) - inst.graph.in_degree(x)
        for p in range(max(0, need)):
            table[f"pend{p + 1}"] = n
            arcs.append((n, x))
            n += 1
    return ReductionInstance(
        OrientedGraph(n, arcs), prov, inst.source_kind, f"U{m}", inst.mode
    )


def reduce_3edge_to_um(g: SimpleGraph, m: int = 4) -> ReductionInstance:
    """reduce_3edge_to_u4 followed by the lift to U_m."""
    inst = reduce_3edge_to_u4(g)
    return inst if m == 4 else lift_u4_instance(inst, m)


def reduce_ios_c3r_to_umr(g: OrientedGraph, m: int) -> ReductionInstance:
    """Transfer an ios question against the reflexive triangle (input max
    in/out degree 2) to one against reflexive U_m: in-pendants raise each
    vertex's in-degree past anything outside U_m's triangle, so the
    original graph must land inside the triangle copy."""
    if m < 4:
        raise ValueError("U targets need m >= 4")
    if g.reflexive:
        raise ValueError("input must be irreflexive")
    if any(d > 2 for pair in ((g.in_degree(v), g.out_degree(v)) for v in range(g.n)) for d in pair):
        raise ValueError("reduction needs in- and out-degrees at most 2")
    b = _Builder()
    for x in range(g.n):
        pendants = m - 3 if g.in_degree(x) == 2 else m - 2
        roles = {"x": 0}
        roles.update({f"pend{p + 1}": p + 1 for p in range(pendants)})
        arcs = [(p + 1, 0) for p in range(pendants)]
        b.block(("vertex", x), 1 + pendants, roles, arcs)
    for u, v in sorted(g.arcs):
        b.arc(b.prov[("vertex", u)]["x"], b.prov[("vertex", v)]["x"])
    return b.instance("ios-C3r", f"U{m}r", Mode.IOS)


def reduce_iot_c3r_to_umr(g: OrientedGraph, m: int) -> ReductionInstance:
    """Transfer an iot question against the reflexive triangle to one
    against reflexive U_m: each vertex gets a private transitive
    tournament on m-3 vertices shooting into it, and every tournament
    vertex gets three private out-pendants keeping it off the triangle."""
    if m < 4:
        raise ValueError("U targets need m >= 4")
    if g.reflexive:
        raise ValueError("input must be irreflexive")
    b = _Builder()
    t = m - 3
    for x in range(g.n):
        roles = {"x": 0}
        arcs = []
        for i in range(1, t + 1):
            roles[f"t{i}"] = i
            arcs.append((i, 0))
            for j in range(i + 1, t + 1):
                arcs.append((i, j))
        pos = t + 1
        for i in range(1, t + 1):
            for tag in ("a", "b", "c"):
                roles[f"t{i}{tag}"] = pos
                arcs.append((i, pos))
                pos += 1
        b.block(("vertex", x), pos, roles, arcs)
    for u, v in sorted(g.arcs):
        b.arc(b.prov[("vertex", u)]["x"], b.prov[("vertex", v)]["x"])
    return b.instance("iot-C3r", f"U{m}r", Mode.IOT)


_FLAVOURS = {
    "proper-ios": "proper-ios",
    "ios-proper": "proper-ios",
    "improper-ios": "improper-ios",
    "ios-improper": "improper-ios",
    "improper-iot": "improper-iot",
    "iot-improper": "improper-iot",
}


def canonical_flavour(text: str) -> str:
    try:
        return _FLAVOURS[str(text).lower()]
    except KeyError:
        raise ValueError(f"unknown flavour {text!r}; expected proper-ios, improper-ios or improper-iot") from None


def colouring_instance(g: OrientedGraph, k: int, flavour: str):
    """Wrap g so a single homomorphism question answers whether the
    WRAPPED graph admits a flavour k-colouring (which in turn equals
    whether g maps to the canonical k-vertex target).

    Returns (graph, target name, mode).  Proper colourings need k >= 4,
    improper ones k >= 3; smaller k is outside the hard range and is
    answered directly by the chromatic module instead.
    """
    flavour = canonical_flavour(flavour)
    if g.reflexive:
        raise ValueError("input must be irreflexive")
    if flavour == "proper-ios":
        if k < 4:
            raise ValueError("proper-ios wrapping needs k >= 4")
        return disjoint_union(g, build_named(f"U{k}")), f"U{k}", Mode.IOS
    mode = Mode.IOS if flavour == "improper-ios" else Mode.IOT
    if k == 3:
        return disjoint_union(g, apex_cycle(6).graph), "C3r", mode
    if k >= 4:
        return disjoint_union(g, build_named(f"U{k}")), f"U{k}r", mode
    raise ValueError("improper wrapping needs k >= 3")


# --- brute-force oracles for the source problems ---

_ORACLE_CAP = 20


def oracle_k_colouring(g: SimpleGraph, k: int):
    """Exhaustive proper k-colouring search; returns a colour list or
    None.  Capped at 20 vertices."""
    if g.n > _ORACLE_CAP:
        raise ValueError(f"oracle size cap exceeded: {g.n} > {_ORACLE_CAP} vertices")
    if k < 0:
        raise ValueError("k must be nonnegative")
    nbrs = [g.neighbours(v) for v in range(g.n)]
    colours = [-1] * g.n

    def place(v: int, used: int) -> bool:
        if v == g.n:
            return True
        for c in range(min(k, used + 1)):  # first use of each colour in order
            if all(colours[w] != c for w in nbrs[v]):
                colours[v] = c
                if place(v + 1, max(used, c + 1)):
                    return True
        colours[v] = -1
        return False

    return list(colours) if place(0, 0) else None


def oracle_3col(g: SimpleGraph, k: int = 3) -> bool:
    return oracle_k_colouring(g, k) is not None


def oracle_3edge(g: SimpleGraph) -> bool:
    return find_3edge_colouring(g) is not None


def find_3edge_colouring(g: SimpleGraph):
    """Exhaustive proper 3-edge-colouring; returns {edge: colour} or None.
    Capped at 20 vertices."""
    if g.n > _ORACLE_CAP:
        raise ValueError(f"oracle size cap exceeded: {g.n} > {_ORACLE_CAP} vertices")
    edges = sorted(g.edges)
    touching = [
        [f for f in range(len(edges)) if f != e and set(edges[f]) & set(edges[e])]
        for e in range(len(edges))
    ]
    colours = [-1] * len(edges)

    def place(e: int) -> bool:
        if e == len(edges):
            return True
        for c in range(3):
            if all(colours[f] != c for f in touching[e]):
                colours[e] = c
                if place(e + 1):
                    return True
        colours[e] = -1
        return False

    if not place(0):
        return None
    return {edges[e]: colours[e] for e in range(len(edges))}
