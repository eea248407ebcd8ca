"""Structural parameters of linear Jaco graphs.

Size, maximum degree and its realizing set, domination number, and
diameter, each computed from the interval form without enumerating
edges. A brute-force domination check over all vertex subsets is kept
for cross-validation on small graphs.
"""

from dataclasses import dataclass
from itertools import combinations

from .jaco_core import JacoGraph, back_degree_formula, back_degree_table, build_jaco


@dataclass(frozen=True)
class ParamRow:
    """One row of the parameter table for J_n."""

    n: int
    back_degree: int
    forward_degree: int
    size: int
    max_degree_set: tuple
    domination_number: int
    diameter: int
    max_degree: int


def size(g):
    """Number of edges."""
    return g.edge_count()


def _crossover(bd, n):
    """Largest i with 2i - bd[i] <= n.

    Below the crossover a vertex has full degree i (all its budget
    spent); the vertex after it already loses forward room, and degrees
    are non-increasing from there. So the crossover vertex realizes the
    maximum degree.
    """
    i = 1
    while i < n and 2 * (i + 1) - bd[i + 1] <= n:
        i += 1
    return i


def max_degree(g):
    if g.n == 1:
        return 0
    bd = back_degree_table(g.n)
    return _crossover(bd, g.n)


def max_degree_set(g):
    """Indices of all vertices realizing the maximum degree, ascending."""
    n = g.n
    if n == 1:
        return (1,)
    bd = back_degree_table(n)
    star = _crossover(bd, n)
    out = [star]
    j = star + 1
    # past the crossover, deg(v_j) = bd[j] + (n - j); collect the ties
    while j <= n and bd[j] + n - j == star:
        out.append(j)
        j += 1
    return tuple(out)


def max_degree_recursive(n):
    """Maximum degree via the two-step back-degree form, for n >= 2.

    Delta(J_n) = d(v_n) + d(v_{n - d(v_n)}) where d is the stable back
    degree. Agrees with the crossover computation; exposed separately so
    the identity itself can be checked.
    """
    if n < 2:
        raise ValueError("recursive form needs n >= 2")
    d_n = back_degree_formula(n)
    return d_n + back_degree_formula(n - d_n)


def diameter(g):
    """Eccentricity-based diameter, exact.

    In the interval form, the set of vertices within k hops of v_1 is a
    prefix 1..R_k with R_{k+1} = hi[R_k], and the set within k hops of
    v_n is a suffix. Both extremes are each other's farthest vertices,
    so dist(v_1, v_n) is the diameter; the forward sweep computes it and
    a backward sweep over lo[] cross-checks.
    """
    n = g.n
    if n == 1:
        return 0
    hops = 0
    r = 1
    while r < n:
        r = g.hi[r]
        hops += 1
    back = 0
    l = n
    while l > 1:
        l = g.lo[l]
        back += 1
    assert back == hops, "forward and backward hop counts disagree"
    return hops


def domination_number(g):
    """Size of a minimum dominating set.

    Interval greedy: cover v_1 by the neighbor reaching farthest, jump
    past everything that vertex dominates, repeat. Ties are broken by
    the largest index, which for interval graphs is optimal. J_1 is
    taken to need no dominator (its sole vertex seen as the trivial
    case); the general-graph brute force below uses the standard
    convention instead.
    """
    n = g.n
    if n == 1:
        return 0
    count = 0
    u = 1
    while u <= n:
        w = g.hi[u]
        count += 1
        u = g.hi[w] + 1
    return count


def dominating_vertices(g):
    """The dominating set the interval greedy selects, ascending."""
    n = g.n
    if n == 1:
        return ()
    out = []
    u = 1
    while u <= n:
        w = g.hi[u]
        out.append(w)
        u = g.hi[w] + 1
    return tuple(out)


def domination_number_bruteforce(g, limit=25):
    """Minimum dominating set size by exhaustive search.

    Works on anything exposing n plus neighbors(i). Exponential, hence
    the hard size limit. A single-vertex JacoGraph answers 0 so the two
    domination routines agree on every order; a general K_1 keeps the
    standard answer 1.
    """
    n = g.n
    if n > limit:
        raise ValueError(f"brute force capped at {limit} vertices")
    if n == 1 and isinstance(g, JacoGraph):
        return 0
    closed = []
    for i in range(1, n + 1):
        nb = set(g.neighbors(i))
        nb.add(i)
        closed.append(nb)
    full = set(range(1, n + 1))
    for k in range(1, n + 1):
        for combo in combinations(range(1, n + 1), k):
            covered = set()
            for i in combo:
                covered |= closed[i - 1]
            if covered == full:
                return k
    return n


def param_row(n):
    g = build_jaco(n)
    bd = back_degree_formula(n)
    return ParamRow(
        n=n,
        back_degree=bd,
        forward_degree=n - bd,
        size=size(g),
        max_degree_set=max_degree_set(g),
        domination_number=domination_number(g),
        diameter=diameter(g),
        max_degree=max_degree(g),
    )


def _greedy_gamma(ur, n):
    # same walk as domination_number, over min(ur[i], n) in place of hi
    count = 0
    u = 1
    while u <= n:
        w = min(ur[u], n)
        count += 1
        u = min(ur[w], n) + 1
    return count


def _hop_count(ur, n):
    hops = 0
    r = 1
    while r < n:
        r = min(ur[r], n)
        hops += 1
    return hops


def table_rows(max_n):
    """Parameter rows for every J_n, n = 1..max_n, in one sweep.

    Nothing here builds a graph. hi[i] inside J_n equals the stable
    upper reach clipped to n, so every column comes from the stable
    back-degree table: size and the maximum-degree crossover advance
    incrementally, domination and diameter are short clipped walks.
    """
    if max_n < 1:
        raise ValueError("need max_n >= 1")
    bd = back_degree_table(max_n)
    rows = [ParamRow(1, 0, 1, 0, (1,), 0, 0, 0)]
    if max_n == 1:
        return rows
    ur = [2 * i - bd[i] for i in range(max_n + 1)]
    total = 0
    star = 1
    for n in range(2, max_n + 1):
        total += bd[n]
        while star < n and ur[star + 1] <= n:
            star += 1
        dset = [star]
        j = star + 1
        while j <= n and bd[j] + n - j == star:
            dset.append(j)
            j += 1
        rows.append(ParamRow(
            n=n,
            back_degree=bd[n],
            forward_degree=n - bd[n],
            size=total,
            max_degree_set=tuple(dset),
            domination_number=_greedy_gamma(ur, n),
            diameter=_hop_count(ur, n),
            max_degree=star,
        ))
    return rows


def size_prefix(max_n):
    """size(J_n) for n = 1..max_n as a list indexed by n (slot 0 unused).

    Count each edge at its higher endpoint: size(J_n) is the sum of back
    degrees over v_1..v_n. Back degrees are n-independent (clipping a
    forward interval at n never removes coverage of an index <= n), so
    one cumulative sum over the stable table gives every prefix at once.
    """
    bd = back_degree_table(max_n)
    out = [0] * (max_n + 1)
    total = 0
    for n in range(1, max_n + 1):
        total += bd[n]
        out[n] = total
    return out
