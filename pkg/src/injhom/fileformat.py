"""Plain-text edge-list format.

Layout: an optional run of comment lines (starting with '#') or blank
lines anywhere, a header ``n m`` optionally followed by the word
``reflexive``, then exactly m lines ``u v`` of 0-based arc endpoints.
The same layout doubles for undirected graphs, where each line is an
edge and the reflexive token is not allowed.
"""

from __future__ import annotations

from typing import Iterable

from .graphs import OrientedGraph


class EdgeListError(ValueError):
    """Parse failure, carrying the 1-based offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_header(lineno: int, line: str, allow_reflexive: bool):
    parts = line.split()
    if len(parts) == 3 and parts[2] == "reflexive":
        if not allow_reflexive:
            raise EdgeListError(lineno, "reflexive flag not allowed here")
        reflexive = True
        parts = parts[:2]
    elif len(parts) == 2:
        reflexive = False
    else:
        raise EdgeListError(lineno, f"expected header 'n m [reflexive]', got {line!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListError(lineno, f"header counts must be integers, got {line!r}") from None
    if n < 0 or m < 0:
        raise EdgeListError(lineno, "header counts must be nonnegative")
    return n, m, reflexive


def _parse_body(lines, n: int, m: int, directed: bool):
    pairs = []
    seen = set()
    for lineno, line in lines:
        if len(pairs) == m:
            raise EdgeListError(lineno, f"expected {m} arcs but found more data")
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"endpoints must be integers, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(lineno, f"endpoint out of range 0..{n - 1}: {line!r}")
        if u == v:
            raise EdgeListError(lineno, f"loop at {u} is not allowed")
        if (u, v) in seen:
            raise EdgeListError(lineno, f"duplicate arc {u} {v}")
        if (v, u) in seen:
            kind = "opposite arc" if directed else "duplicate edge"
            raise EdgeListError(lineno, f"{kind} {v} {u} already given")
        seen.add((u, v))
        pairs.append((u, v, lineno))
    if len(pairs) != m:
        raise EdgeListError(0, f"expected {m} arcs but file has {len(pairs)}")
    return pairs


def parse_edge_list(text: str) -> OrientedGraph:
    """Parse an oriented graph; raises EdgeListError with a line number."""
    lines = _data_lines(text)
    for lineno, line in lines:
        n, m, reflexive = _parse_header(lineno, line, allow_reflexive=True)
        break
    else:
        raise EdgeListError(0, "empty input: missing header")
    pairs = _parse_body(lines, n, m, directed=True)
    return OrientedGraph(n, ((u, v) for u, v, _ in pairs), reflexive)


def parse_undirected_edge_list(text: str):
    """Parse an undirected graph; returns (n, edges) with edges as
    normalized (min, max) tuples."""
    lines = _data_lines(text)
    for lineno, line in lines:
        n, m, _ = _parse_header(lineno, line, allow_reflexive=False)
        break
    else:
        raise EdgeListError(0, "empty input: missing header")
    pairs = _parse_body(lines, n, m, directed=False)
    return n, frozenset((min(u, v), max(u, v)) for u, v, _ in pairs)


def format_edge_list(g: OrientedGraph, comments: Iterable = ()) -> str:
    """Render a graph in the edge-list format; comments go on top."""
    out = [f"# {c}".rstrip() for c in comments]
    header = f"{g.n} {g.num_arcs}"
    if g.reflexive:
        header += " reflexive"
    out.append(header)
    out.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(out) + "\n"


def format_undirected_edge_list(n: int, edges, comments: Iterable = ()) -> str:
    out = [f"# {c}".rstrip() for c in comments]
    norm = sorted((min(u, v), max(u, v)) for u, v in edges)
    out.append(f"{n} {len(norm)}")
    out.extend(f"{u} {v}" for u, v in norm)
    return "\n".join(out) + "\n"
