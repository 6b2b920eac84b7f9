"""Exhaustive search for linear paths, cycles, and cycle-plus patterns.

This module is the ground truth for everything else: searches are complete
backtracking with pruning that provably preserves exhaustiveness (a dead
partial state is memoized only as a function of its used-vertex set and
its extension endpoint, which determine all possible continuations).
Returned witnesses validate themselves before being handed out, and are
deterministic: the lexicographically least found under a fixed expansion
order.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable, Iterator, Optional

from .errors import (
    InvalidParameterError,
    NotPairUniformError,
    OrderTooLargeError,
    SearchExhaustedError,
)
from .hypergraph import Hypergraph, all_triples
from .paths import CyclePlusWitness, LinearCycle, LinearPath


def _extension_table(H: Hypergraph):
    """For each vertex x: sorted (w1, w2) with {x, w1, w2} an edge.

    Both orders of the fresh pair appear: w1 becomes the new middle vertex
    and w2 the new endpoint, and the two choices lead to different
    continuations.
    """
    table = [[] for _ in range(H.n)]
    for a, b, c in H.edges:
        table[a] += [(b, c), (c, b)]
        table[b] += [(a, c), (c, a)]
        table[c] += [(a, b), (b, a)]
    return [sorted(t) for t in table]


def _start_sequences(H: Hypergraph):
    """All 6 ordered readings of every edge, globally sorted."""
    starts = []
    for e in H.edges:
        starts += list(permutations(e))
    return sorted(starts)


def find_path(H: Hypergraph, t: int, budget: Optional[int] = None) -> Optional[LinearPath]:
    """A linear t-path, or None only when no such path exists.

    Depth-first over partial paths extended one edge at a time at the right
    end; dead (used-set, endpoint) states are memoized, which keeps the
    search complete while collapsing the exponential blowup on dense hosts.
    """
    if H.r != 3:
        raise NotPairUniformError("path search implemented for 3-graphs only")
    if t < 1:
        raise InvalidParameterError(f"path length t={t} must be >= 1")
    if H.n < 2 * t + 1 or len(H.edges) < t:
        return None
    ext = _extension_table(H)
    dead = set()
    nodes = 0

    def dfs(seq, mask, s):
        nonlocal nodes
        if s == t:
            return seq
        last = seq[-1]
        key = (mask, last)
        if key in dead:
            return None
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchExhaustedError(f"path search exceeded {budget} nodes")
        for w1, w2 in ext[last]:
            bits = (1 << w1) | (1 << w2)
            if bits & mask:
                continue
            hit = dfs(seq + [w1, w2], mask | bits, s + 1)
            if hit is not None:
                return hit
        dead.add(key)
        return None

    for a, b, c in _start_sequences(H):
        hit = dfs([a, b, c], (1 << a) | (1 << b) | (1 << c), 1)
        if hit is not None:
            return LinearPath(tuple(hit)).validate(H)
    return None


def iter_paths(H: Hypergraph, t: int) -> Iterator[LinearPath]:
    """Every linear t-path, as vertex sequences (each subgraph appears
    once per traversal direction).  No memoization: all hits are wanted."""
    if H.r != 3:
        raise NotPairUniformError("path search implemented for 3-graphs only")
    if t < 1:
        raise InvalidParameterError(f"path length t={t} must be >= 1")
    if H.n < 2 * t + 1 or len(H.edges) < t:
        return
    ext = _extension_table(H)

    def dfs(seq, mask, s):
        if s == t:
            yield LinearPath(tuple(seq))
            return
        for w1, w2 in ext[seq[-1]]:
            bits = (1 << w1) | (1 << w2)
            if bits & mask:
                continue
            yield from dfs(seq + [w1, w2], mask | bits, s + 1)

    for a, b, c in _start_sequences(H):
        yield from dfs([a, b, c], (1 << a) | (1 << b) | (1 << c), 1)


def longest_path(H: Hypergraph, cap: int, budget: Optional[int] = None):
    """(max t <= cap with a linear t-path, witness); (0, None) if edgeless."""
    if cap < 1:
        raise InvalidParameterError(f"cap={cap} must be >= 1")
    best_t, best = 0, None
    for t in range(1, cap + 1):
        hit = find_path(H, t, budget=budget)
        if hit is None:
            break
        best_t, best = t, hit
    return best_t, best


def find_cycle(H: Hypergraph, k: int, budget: Optional[int] = None) -> Optional[LinearCycle]:
    """A linear k-cycle, or None on proven absence.

    The cyclic sequence is anchored at its smallest connector vertex, which
    loses no cycles (rotation symmetry) and prunes the rest.
    """
    if H.r != 3:
        raise NotPairUniformError("cycle search implemented for 3-graphs only")
    if k < 3:
        raise InvalidParameterError(f"cycle length k={k} must be >= 3")
    if H.n < 2 * k or len(H.edges) < k:
        return None
    ext = _extension_table(H)
    nodes = 0

    def dfs(seq, mask, i):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise SearchExhaustedError(f"cycle search exceeded {budget} nodes")
        z0 = seq[0]
        if i == k - 1:
            # close with {z_{2k-2}, z_{2k-1}, z0}
            for w in H.pair_neighborhood(seq[-1], z0):
                if not (mask >> w) & 1:
                    return seq + [w]
            return None
        for w1, w2 in ext[seq[-1]]:
            if w2 <= z0:  # connectors stay above the anchor
                continue
            bits = (1 << w1) | (1 << w2)
            if bits & mask:
                continue
            hit = dfs(seq + [w1, w2], mask | bits, i + 1)
            if hit is not None:
                return hit
        return None

    for z0 in range(H.n):
        for w1, w2 in ext[z0]:
            if w2 <= z0:
                continue
            bits = (1 << z0) | (1 << w1) | (1 << w2)
            hit = dfs([z0, w1, w2], bits, 1)
            if hit is not None:
                return LinearCycle(tuple(hit)).validate(H)
    return None


def find_cycle_plus(H: Hypergraph, k: int, budget: Optional[int] = None) -> Optional[CyclePlusWitness]:
    """A k-cycle with a parallel edge, or None on proven absence.

    Canonical decomposition: the cycle minus the swappable edge is a linear
    (k-1)-path whose endpoint pair has two common neighbors outside the
    path; those supply the closing and parallel vertices.  Every C_k^+
    contains such a decomposition, so scanning all (k-1)-paths is complete.
    """
    if k < 3:
        raise InvalidParameterError(f"cycle length k={k} must be >= 3")
    if H.n < 2 * k + 1:
        return None
    count = 0
    for path in iter_paths(H, k - 1):
        count += 1
        if budget is not None and count > budget:
            raise SearchExhaustedError(f"cycle-plus scan exceeded {budget} paths")
        used = path.vertex_set()
        outside = [w for w in H.pair_neighborhood(path.vertices[0], path.vertices[-1])
                   if w not in used]
        if len(outside) >= 2:
            return CyclePlusWitness(path, outside[0], outside[1]).validate(H)
    return None


def enumerate_hypergraphs(n: int, predicate: Optional[Callable[[Hypergraph], bool]] = None) -> Iterator[Hypergraph]:
    """Every labeled simple 3-graph on n vertices (n <= 6), each once."""
    if n > 6:
        raise OrderTooLargeError(f"exhaustive enumeration capped at n=6, got {n}")
    if n < 3:
        raise InvalidParameterError(f"need n >= 3 for 3-graphs, got {n}")
    triples = all_triples(n)
    m = len(triples)
    for mask in range(1 << m):
        edges = tuple(triples[i] for i in range(m) if (mask >> i) & 1)
        H = Hypergraph(3, n, edges)
        if predicate is None or predicate(H):
            yield H
