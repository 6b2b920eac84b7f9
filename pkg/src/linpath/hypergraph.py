"""Immutable simple r-uniform hypergraph with exact degree queries.

Vertices are the integers 0..n-1.  Edges are stored as sorted tuples, the
edge set itself sorted lexicographically, and the structure never mutates
after construction, so values are safe to share across threads.

The text format (1-based labels, LF line endings):

    c optional comment
    p h3 <n> <m>
    e v1 v2 v3        (strictly increasing, m such lines)
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeArityError,
    NotPairUniformError,
    ParseError,
    RepeatedVertexError,
    VertexOutOfRangeError,
)


class Hypergraph:
    """A simple r-graph on vertex set {0,...,n-1}.

    Use :func:`build` rather than calling the constructor directly; the
    constructor assumes already-validated canonical edges.
    """

    __slots__ = ("r", "n", "edges", "_incident", "_pair_map", "_eset")

    def __init__(self, r: int, n: int, edges: tuple):
        self.r = r
        self.n = n
        self.edges = edges
        incident = [[] for _ in range(n)]
        for e in edges:
            for v in e:
                incident[v].append(e)
        self._incident = [tuple(es) for es in incident]
        # For 3-graphs, precompute pair -> third vertices: the finder
        # queries pair codegrees heavily and this makes them O(1).
        pair_map = {}
        if r == 3:
            for a, b, c in edges:
                pair_map.setdefault((a, b), []).append(c)
                pair_map.setdefault((a, c), []).append(b)
                pair_map.setdefault((b, c), []).append(a)
            pair_map = {p: tuple(sorted(ws)) for p, ws in pair_map.items()}
        self._pair_map = pair_map
        self._eset = frozenset(edges)

    # -- basic queries ----------------------------------------------------

    def size(self) -> int:
        """Number of edges e(H)."""
        return len(self.edges)

    def incident_edges(self, v: int) -> tuple:
        """All edges containing vertex v."""
        self._check_vertex(v)
        return self._incident[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incident[v])

    def set_degree(self, S: Iterable[int]) -> int:
        """d_H(S): the number of edges containing every vertex of S."""
        s = tuple(S)
        for v in s:
            self._check_vertex(v)
        if len(set(s)) != len(s):
            raise RepeatedVertexError(f"set {s} has repeated vertices")
        if not s:
            return len(self.edges)
        if len(s) == 2 and self.r == 3:
            a, b = sorted(s)
            return len(self._pair_map.get((a, b), ()))
        key = set(s)
        anchor = min(s, key=self.degree)
        return sum(1 for e in self._incident[anchor] if key.issubset(e))

    def pair_neighborhood(self, u: int, v: int) -> tuple:
        """All w with {u,v,w} an edge, sorted ascending (3-graphs only)."""
        if self.r != 3:
            raise NotPairUniformError("pair neighborhoods need r=3")
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise RepeatedVertexError("pair requires two distinct vertices")
        if u > v:
            u, v = v, u
        return self._pair_map.get((u, v), ())

    def min_degree(self) -> int:
        """delta_1(H); 0 when some vertex is isolated."""
        return min(len(self._incident[v]) for v in range(self.n))

    def has_edge(self, e: Iterable[int]) -> bool:
        return tuple(sorted(e)) in self._eset

    def _check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise VertexOutOfRangeError(f"vertex {v} not in [0, {self.n})")

    # -- equality is (r, n, edge set); isomorphism is NOT equality --------

    def __eq__(self, other):
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.r, self.n, self.edges) == (other.r, other.n, other.edges)

    def __hash__(self):
        return hash((self.r, self.n, self.edges))

    def __repr__(self):
        return f"Hypergraph(r={self.r}, n={self.n}, m={len(self.edges)})"


def build(r: int, n: int, edges: Iterable[Sequence[int]]) -> Hypergraph:
    """Validate and construct a simple r-graph on n vertices.

    Raises EdgeArityError, VertexOutOfRangeError, RepeatedVertexError or
    DuplicateEdgeError on malformed input; multi-edges are rejected.
    """
    if r < 2:
        raise EdgeArityError(f"uniformity r={r} must be >= 2")
    if n < r:
        raise VertexOutOfRangeError(f"order n={n} smaller than r={r}")
    canon = []
    seen = set()
    for e in edges:
        t = tuple(e)
        if len(t) != r:
            raise EdgeArityError(f"edge {t} has {len(t)} vertices, expected {r}")
        for v in t:
            if not isinstance(v, int) or v < 0 or v >= n:
                raise VertexOutOfRangeError(f"vertex {v} not in [0, {n})")
        s = tuple(sorted(t))
        if len(set(s)) != r:
            raise RepeatedVertexError(f"edge {t} repeats a vertex")
        if s in seen:
            raise DuplicateEdgeError(f"edge {s} supplied twice")
        seen.add(s)
        canon.append(s)
    return Hypergraph(r, n, tuple(sorted(canon)))


def serialize(H: Hypergraph) -> str:
    """Bit-exact text form: header then lexicographically sorted edges."""
    lines = [f"p h{H.r} {H.n} {len(H.edges)}"]
    for e in H.edges:
        lines.append("e " + " ".join(str(v + 1) for v in e))
    return "\n".join(lines) + "\n"


def parse(text: str) -> Hypergraph:
    """Inverse of :func:`serialize`; accepts comments and any edge order."""
    r = n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            if r is not None:
                raise ParseError("duplicate header", lineno)
            parts = line.split()
            if len(parts) != 4 or not parts[1].startswith("h"):
                raise ParseError(f"bad header {line!r}", lineno)
            try:
                r = int(parts[1][1:])
                n = int(parts[2])
                m = int(parts[3])
            except ValueError:
                raise ParseError(f"bad header {line!r}", lineno) from None
        elif line.startswith("e"):
            if r is None:
                raise ParseError("edge before header", lineno)
            parts = line.split()[1:]
            try:
                vs = [int(p) - 1 for p in parts]
            except ValueError:
                raise ParseError(f"bad edge {line!r}", lineno) from None
            if any(v < 0 for v in vs):
                raise VertexOutOfRangeError(f"line {lineno}: labels are 1-based")
            edges.append(tuple(vs))
        else:
            raise ParseError(f"unrecognized line {line!r}", lineno)
    if r is None:
        raise ParseError("missing header")
    if len(edges) != m:
        raise ParseError(f"header promised {m} edges, found {len(edges)}")
    return build(r, n, edges)


def all_triples(n: int):
    """All C(n,3) sorted triples on {0,...,n-1}, lexicographically."""
    return list(combinations(range(n), 3))
