"""Independent brute-force oracles for the exact solvers.

These must stay independent of the library's search code: omega enumerates
subsets, chi enumerates canonical color assignments with nothing smarter
than an early edge check.
"""

from __future__ import annotations

from itertools import combinations


def brute_omega(ids, adj):
    """Largest pairwise-adjacent subset, by descending-size enumeration."""
    ids = list(ids)
    for size in range(len(ids), 0, -1):
        for subset in combinations(ids, size):
            if all(v in adj[u] for u, v in combinations(subset, 2)):
                return size
    return 0


def brute_chi(ids, adj):
    """Smallest k admitting a proper k-coloring, by exhaustive assignment.

    Vertices are colored in fixed order; vertex i may use colors
    0..min(i, k-1), which enumerates every partition into at most k classes
    exactly once up to color names.
    """
    ids = list(ids)
    if not ids:
        return 0

    def colorable(k):
        assignment = {}

        def go(i):
            if i == len(ids):
                return True
            v = ids[i]
            limit = min(i + 1, k)
            for c in range(limit):
                if any(assignment.get(u) == c for u in adj[v]):
                    continue
                assignment[v] = c
                if go(i + 1):
                    return True
                del assignment[v]
            return False

        return go(0)

    for k in range(1, len(ids) + 1):
        if colorable(k):
            return k
    raise AssertionError("unreachable: n colors always suffice")
