"""Dominating paths.

A dom-path is a path whose vertex set contains a dominating set of the
host graph. Linear Jaco graphs get two closed-form constructions, one
growing from v_1 (primary) and one descending from v_n (secondary),
both organized in strings of three vertices. Arbitrary graphs get an
exhaustive shortest-first search.
"""

from dataclasses import dataclass
from itertools import combinations

from .jaco_core import back_degree_table, upper_reach

PATH_KINDS = ("primary", "secondary", "general")


@dataclass(frozen=True)
class DomPath:
    vertices: tuple
    kind: str
    gamma_set: tuple

    def __post_init__(self):
        if self.kind not in PATH_KINDS:
            raise ValueError(f"unknown path kind {self.kind!r}")
        if not set(self.gamma_set) <= set(self.vertices):
            raise ValueError("gamma_set must lie on the path")

    def edge_length(self):
        return len(self.vertices) - 1


class GeneralGraph:
    """Arbitrary simple graph on vertices 1..n with explicit edges."""

    def __init__(self, n, edges):
        if n < 1:
            raise ValueError("need n >= 1")
        adj = {i: set() for i in range(1, n + 1)}
        for a, b in edges:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a},{b}) outside 1..{n}")
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if b in adj[a]:
                raise ValueError(f"duplicate edge ({a},{b})")
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.edges = tuple(sorted((min(a, b), max(a, b)) for a, b in edges))
        self._adj = adj

    def neighbors(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex index {i} outside 1..{self.n}")
        return tuple(sorted(self._adj[i]))


def upper_neighbor(g, i):
    """Largest-index neighbor of v_i in g (v_i itself when i = n)."""
    g._check_vertex(i)
    return g.hi[i]


def lower_neighbor(g, i):
    """Smallest-index neighbor of v_i in g; v_1 has none."""
    g._check_vertex(i)
    if i == 1:
        raise ValueError("v_1 has no lower neighbor")
    return g.lo[i]


def path_gamma(k):
    """Domination number of the path graph on k vertices: ceil(k/3)."""
    if k < 1:
        raise ValueError("need k >= 1")
    return (k + 2) // 3


def dominates(g, vertices):
    """True when the closed neighborhoods of `vertices` cover all of g."""
    covered = [False] * (g.n + 1)
    for v in vertices:
        for j in g.neighbors(v):  # validates v before anything is marked
            covered[j] = True
        covered[v] = True
    return all(covered[1:])


def string_middles(count):
    """Middle subscripts of the first `count` 3-strings: 2, 7, 20, 54, ...

    Strings chain through the unbounded construction: each starts one
    past the previous end, and the second and third members are upper
    reach hops. The middles are exactly the dominating subscripts the
    primary paths accumulate.
    """
    if count < 1:
        raise ValueError("need count >= 1")
    out = []
    f = 1
    for _ in range(count):
        m = upper_reach(f)
        out.append(m)
        f = upper_reach(m) + 1
    return tuple(out)


def primary_dom_path(n):
    """Dom-path of J_n grown from v_1 by 3-strings.

    Complete strings (f, m, l) with m = reach(f), l = reach(m) are laid
    down until the next string would pass n; the tail then depends on
    where n falls. With n at most the pending middle, v_n is appended
    right after the last vertex when they are adjacent, otherwise after
    the pending first vertex, and joins the dominating set. Past the
    middle, first and middle are kept and the middle dominates instead.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n == 1:
        return DomPath((1,), "primary", ())
    path = []
    middles = []
    f, m, l = 1, 2, 3
    while l < n:
        path.extend((f, m, l))
        middles.append(m)
        f = l + 1
        m = upper_reach(f)
        l = upper_reach(m)
    if n <= m:
        if not path or upper_reach(path[-1]) < n:
            path.append(f)
        path.append(n)
        gamma = middles + [n]
    else:
        path.extend((f, m, n))
        gamma = middles + [m]
    return DomPath(tuple(path), "primary", tuple(gamma))


def secondary_dom_path(n):
    """Dom-path of J_n descending from v_n.

    Mirrors the primary pattern: two lower-neighbor hops then a step of
    minus one, repeated until v_1. The dominating set takes the middle
    of each full 3-chunk and the final vertex of a trailing partial
    chunk.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    bd = back_degree_table(n)
    verts = [n]
    i = n
    step = 0
    while i > 1:
        i = i - 1 if step % 3 == 2 else i - bd[i]
        verts.append(i)
        step += 1
    gamma = []
    for c in range(0, len(verts), 3):
        chunk = verts[c:c + 3]
        gamma.append(chunk[1] if len(chunk) == 3 else chunk[-1])
    if n == 1:
        gamma = []  # J_1 is dominated trivially, matching gamma = 0
    return DomPath(tuple(verts), "secondary", tuple(gamma))


BRUTE_FORCE_LIMIT = 25
PATH_SEARCH_LIMIT = 12


def all_minimum_dominating_sets(g, limit=BRUTE_FORCE_LIMIT):
    """Every dominating set of minimum cardinality, ascending tuples.

    Exhaustive over subsets in ascending cardinality, standard
    convention throughout (a single vertex needs itself).
    """
    n = g.n
    if n > limit:
        raise ValueError(f"enumeration capped at {limit} vertices")
    for k in range(1, n + 1):
        found = [c for c in combinations(range(1, n + 1), k)
                 if dominates(g, c)]
        if found:
            return tuple(found)
    raise AssertionError("vertex set always dominates itself")


def minimal_dom_path(g, limit=PATH_SEARCH_LIMIT):
    """Shortest path carrying a minimum dominating set of g.

    Qualifying paths must contain some minimum dominating set X and
    have gamma(P_k) equal to gamma(g), which pins the vertex count k to
    the window [3*gamma - 2, 3*gamma]. Simple paths are enumerated
    shortest-first, vertices in ascending order, so the result is
    deterministic. Exponential in the worst case, hence the hard cap.

    Raises LookupError when no window length admits such a path (a
    disconnected graph can make containment impossible).
    """
    n = g.n
    if n > limit:
        raise ValueError(f"path search capped at {limit} vertices")
    gsets = all_minimum_dominating_sets(g, limit)
    gamma = len(gsets[0])
    targets = [set(x) for x in gsets]
    for k in range(max(3 * gamma - 2, 1), 3 * gamma + 1):
        if k > n:
            break
        hit = _search_paths(g, k, targets)
        if hit is not None:
            verts = hit
            on_path = set(verts)
            for x in gsets:
                if set(x) <= on_path:
                    return DomPath(tuple(verts), "general", x)
    raise LookupError("no dominating path in the admissible length window")


def _search_paths(g, k, targets):
    # DFS over simple paths with exactly k vertices; prune when no
    # target set can still fit in the remaining slots
    path = []
    on_path = set()

    def extend():
        if len(path) == k:
            return any(t <= on_path for t in targets)
        slack = k - len(path)
        if all(len(t - on_path) > slack for t in targets):
            return False
        for w in g.neighbors(path[-1]):
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                if extend():
                    return True
                path.pop()
                on_path.remove(w)
        return False

    for start in range(1, g.n + 1):
        path[:] = [start]
        on_path.clear()
        on_path.add(start)
        if extend():
            return list(path)
    return None
