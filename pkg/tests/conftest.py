"""Shared oracles for the test suite.

Everything here is deliberately independent of the library's own
algorithms: a literal re-enactment of the construction rule, BFS for
distances, and mpmath high-precision floats for the floor formulas.
The library must agree with these, never the other way around.
"""

from collections import deque

import mpmath
import pytest
from hypothesis import HealthCheck, settings

PROPERTY_SETTINGS = settings(max_examples=200, deadline=None,
                             suppress_health_check=[HealthCheck.too_slow])


def naive_jaco_edges(n):
    """Edge set of J_n by running the growth rule verbatim.

    Seed a 3-vertex path, then for i = 3..n-1 attach v_i forward to
    consecutive vertices while its degree stays within i. Quadratic and
    trusting nothing from the library.
    """
    edges = set()
    deg = [0] * (n + 2)
    if n >= 2:
        edges.add((1, 2))
        deg[1] += 1
        deg[2] += 1
    if n >= 3:
        edges.add((2, 3))
        deg[2] += 1
        deg[3] += 1
    for i in range(3, n):
        j = i + 1
        while j <= n and deg[i] < i:
            if (i, j) not in edges:
                edges.add((i, j))
                deg[i] += 1
                deg[j] += 1
            j += 1
    return sorted(edges)


def adjacency_from_edges(n, edges):
    adj = {i: set() for i in range(1, n + 1)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    return adj


def bfs_distances(adj, src):
    dist = {src: 0}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def bfs_diameter(n, edges):
    adj = adjacency_from_edges(n, edges)
    best = 0
    for s in range(1, n + 1):
        dist = bfs_distances(adj, s)
        assert len(dist) == n, "graph must be connected"
        best = max(best, max(dist.values()))
    return best


def mp_floor_affine(a, b, d, m):
    """floor((a + b*sqrt(5)) * m / d) via 60-digit floats."""
    with mpmath.workdps(60):
        value = (mpmath.mpf(a * m) + mpmath.mpf(b * m) * mpmath.sqrt(5)) / d
        return int(mpmath.floor(value))


def mp_floor_exp(t):
    """floor(e**t) via 150-digit floats; safe far past t = 64."""
    with mpmath.workdps(150):
        return int(mpmath.floor(mpmath.exp(t)))


@pytest.fixture(scope="session")
def petersen():
    from jacograph.dompath import GeneralGraph
    from jacograph.fixtures import PETERSEN_EDGES

    return GeneralGraph(10, PETERSEN_EDGES)
