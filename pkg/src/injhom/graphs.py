"""Core oriented-graph model and structural queries.

An oriented graph is a loopless digraph with at most one arc between any
pair of vertices.  Loops are never stored in the arc set: a target that
carries a loop at every vertex is marked with the ``reflexive`` flag
instead.  Vertices are dense 0-based integers so constructions stay
bit-reproducible.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class Mode(enum.Enum):
    """Which local-injectivity constraint a homomorphism must satisfy.

    PLAIN asks only for arc preservation.  IOS additionally requires the
    map to be injective on each vertex's in-neighbourhood and, separately,
    on its out-neighbourhood.  IOT requires injectivity on the union of
    the two neighbourhoods; this is stronger than IOS exactly when the
    target is reflexive, and coincides with IOS on irreflexive targets.
    """

    PLAIN = "plain"
    IOS = "ios"
    IOT = "iot"

    @classmethod
    def parse(cls, text) -> "Mode":
        if isinstance(text, cls):
            return text
        try:
            return cls(str(text).lower())
        except ValueError:
            raise ValueError(f"unknown mode {text!r}; expected plain, ios or iot") from None


@dataclass(frozen=True)
class OrientedGraph:
    """Immutable oriented graph on vertices 0..n-1.

    ``arcs`` holds ordered pairs (u, v) with u != v; for any pair of
    vertices at most one of (u, v), (v, u) may be present.  ``reflexive``
    means every vertex carries a loop (loops are implicit, never listed).
    """

    n: int
    arcs: frozenset
    reflexive: bool = False

    def __init__(self, n: int, arcs: Iterable = (), reflexive: bool = False):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(tuple(a) for a in arcs))
        object.__setattr__(self, "reflexive", bool(reflexive))
        self._validate()

    def _validate(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.arcs:
            if not (isinstance(u, int) and isinstance(v, int)):
                raise ValueError(f"arc endpoints must be ints, got ({u!r}, {v!r})")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={self.n}")
            if u == v:
                raise ValueError(f"loop at {u}: loops are modelled by the reflexive flag")
            if (v, u) in self.arcs:
                raise ValueError(f"digon between {u} and {v}: graph must be oriented")

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def out_nbrs(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            out[u].append(v)
        return tuple(tuple(row) for row in out)

    @cached_property
    def in_nbrs(self) -> tuple:
        inn = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            inn[v].append(u)
        return tuple(tuple(row) for row in inn)

    @cached_property
    def underlying_nbrs(self) -> tuple:
        und = [set() for _ in range(self.n)]
        for u, v in self.arcs:
            und[u].add(v)
            und[v].add(u)
        return tuple(tuple(sorted(row)) for row in und)

    def in_degree(self, v: int) -> int:
        return len(self.in_nbrs[v])

    def out_degree(self, v: int) -> int:
        return len(self.out_nbrs[v])

    def __repr__(self) -> str:  # keep small graphs readable in test output
        flag = ", reflexive" if self.reflexive else ""
        return f"OrientedGraph({self.n}, {sorted(self.arcs)}{flag})"


def converse(g: OrientedGraph) -> OrientedGraph:
    """Reverse every arc; the reflexive flag is preserved."""
    return OrientedGraph(g.n, ((v, u) for u, v in g.arcs), g.reflexive)


def disjoint_union(g: OrientedGraph, h: OrientedGraph) -> OrientedGraph:
    """Place h next to g, shifting h's vertices by g.n."""
    if g.reflexive != h.reflexive:
        raise ValueError("cannot union a reflexive graph with an irreflexive one")
    arcs = list(g.arcs) + [(u + g.n, v + g.n) for u, v in h.arcs]
    return OrientedGraph(g.n + h.n, arcs, g.reflexive)


def degrees(g: OrientedGraph) -> list:
    """Per-vertex (in-degree, out-degree), loops not counted."""
    return [(len(g.in_nbrs[v]), len(g.out_nbrs[v])) for v in range(g.n)]


def max_degrees(g: OrientedGraph) -> tuple:
    """(max in-degree, max out-degree); (0, 0) for the empty graph."""
    if g.n == 0:
        return (0, 0)
    ds = degrees(g)
    return (max(d for d, _ in ds), max(d for _, d in ds))


def find_hats(g: OrientedGraph) -> list:
    """All unordered pairs {a, b} of distinct vertices that share a common
    out-neighbour or a common in-neighbour.

    Such a pair forms the two ends of a length-two walk through the shared
    vertex, so any map injective on that vertex's in- (or out-)
    neighbourhood must separate a and b.  Loops are ignored.
    """
    pairs = set()
    for v in range(g.n):
        for group in (g.in_nbrs[v], g.out_nbrs[v]):
            for a, b in itertools.combinations(group, 2):
                pairs.add((a, b) if a < b else (b, a))
    return sorted(pairs)


class ShapeKind(enum.Enum):
    ISOLATED_VERTEX = "isolated-vertex"
    SINGLE_ARC = "single-arc"
    DIRECTED_PATH = "directed-path"
    DIRECTED_CYCLE = "directed-cycle"
    UNDERLYING_PATH = "underlying-path"
    UNDERLYING_CYCLE = "underlying-cycle"
    OTHER = "other"


@dataclass(frozen=True)
class ComponentShape:
    kind: ShapeKind
    vertices: tuple
    cycle_length: int | None = None


def component_shapes(g: OrientedGraph) -> list:
    """Classify each weak component of g.

    "directed" path/cycle means every arc points the same way along the
    walk (equivalently in- and out-degree at most 1 inside the component);
    the "underlying-" kinds cover other orientations of paths and cycles.
    Anything with an underlying degree-3 vertex is OTHER.
    """
    seen = [False] * g.n
    shapes = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        stack = [start]
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.underlying_nbrs[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comp.sort()
        shapes.append(_classify_component(g, comp))
    return shapes


def _classify_component(g: OrientedGraph, comp: list) -> ComponentShape:
    verts = tuple(comp)
    if len(comp) == 1:
        return ComponentShape(ShapeKind.ISOLATED_VERTEX, verts)
    if len(comp) == 2:
        return ComponentShape(ShapeKind.SINGLE_ARC, verts)
    und_deg = {v: len(g.underlying_nbrs[v]) for v in comp}
    if any(d > 2 for d in und_deg.values()):
        return ComponentShape(ShapeKind.OTHER, verts)
    ends = [v for v in comp if und_deg[v] == 1]
    one_way = all(g.in_degree(v) <= 1 and g.out_degree(v) <= 1 for v in comp)
    if ends:  # a path
        kind = ShapeKind.DIRECTED_PATH if one_way else ShapeKind.UNDERLYING_PATH
        return ComponentShape(kind, verts)
    kind = ShapeKind.DIRECTED_CYCLE if one_way else ShapeKind.UNDERLYING_CYCLE
    return ComponentShape(kind, verts, cycle_length=len(comp))


# --- small constructors used throughout tests and demos ---


def edgeless(n: int) -> OrientedGraph:
    return OrientedGraph(n, ())


def directed_path(n: int) -> OrientedGraph:
    """P_n: vertices 0..n-1 with arcs i -> i+1."""
    return OrientedGraph(n, ((i, i + 1) for i in range(n - 1)))


def directed_cycle(n: int) -> OrientedGraph:
    """C_n (directed): arcs i -> i+1 mod n; needs n >= 3 to stay oriented."""
    if n < 3:
        raise ValueError("a directed cycle needs at least 3 vertices")
    return OrientedGraph(n, ((i, (i + 1) % n) for i in range(n)))


def hat() -> OrientedGraph:
    """Two arcs into a common head: 0 -> 1 <- 2."""
    return OrientedGraph(3, ((0, 1), (2, 1)))


def transitive_tournament(n: int) -> OrientedGraph:
    return OrientedGraph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def is_tournament(g: OrientedGraph) -> bool:
    """Exactly one arc between every pair of distinct vertices."""
    return g.num_arcs == g.n * (g.n - 1) // 2


def all_oriented_graphs(n: int) -> Iterator[OrientedGraph]:
    """Every oriented graph on n labelled vertices (3 states per pair)."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s == 1:
                arcs.append((u, v))
            elif s == 2:
                arcs.append((v, u))
        yield OrientedGraph(n, arcs)


def random_oriented_graph(n: int, rng, arc_chance: float = 2 / 3) -> OrientedGraph:
    """Sample an oriented graph: each pair gets an arc with probability
    ``arc_chance``, direction uniform.  rng is a random.Random."""
    arcs = []
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < arc_chance:
            arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return OrientedGraph(n, arcs)
