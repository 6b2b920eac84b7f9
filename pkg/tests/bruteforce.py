"""Independent oracles for cross-checking the package.

Deliberately share no code with the package's search: paths are found by
trying every injective vertex sequence, degrees by scanning the raw edge
list.  Only usable at tiny scale.
"""

from itertools import permutations


def brute_force_path(H, t):
    """First injective sequence of 2t+1 vertices whose consecutive triples
    are all edges, or None."""
    edge_set = set(H.edges)
    for seq in permutations(range(H.n), 2 * t + 1):
        if all(
            tuple(sorted(seq[i : i + 3])) in edge_set
            for i in range(0, 2 * t - 1, 2)
        ):
            return seq
    return None


def naive_degree(H, v):
    """Degree by scanning the edge list."""
    return sum(1 for e in H.edges if v in e)


def naive_set_degree(H, S):
    key = set(S)
    return sum(1 for e in H.edges if key.issubset(e))


def naive_outside_codegree(H, vertices, a, b):
    """d_P(a, b) for the path given as a raw vertex tuple, by scanning the
    edge list."""
    pair = {vertices[a], vertices[b]}
    inside = set(vertices)
    count = 0
    for e in H.edges:
        if pair.issubset(e):
            (w,) = set(e) - pair
            count += w not in inside
    return count


def naive_M(H, vertices):
    """Connector indices i with at least two outside common neighbors of
    x_{2i}, x_{2i+2}, recomputed from the raw edge list."""
    s = (len(vertices) - 1) // 2
    return {
        i
        for i in range(s)
        if naive_outside_codegree(H, vertices, 2 * i, 2 * i + 2) >= 2
    }
