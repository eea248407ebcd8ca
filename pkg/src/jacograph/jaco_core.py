"""Construction of linear Jaco graphs and their degree structure.

A linear Jaco graph on n vertices v_1..v_n is grown from the path
v_1 v_2 v_3 by repeatedly attaching the next vertex: after v_{i+1}
arrives, edges v_i v_j are added for increasing j in i+2..n while the
total degree of v_i stays within its index cap deg(v_i) <= i.

The closed neighborhood of every vertex comes out as a contiguous index
interval, so the whole graph is stored as two arrays lo[] and hi[]:
vertex i is adjacent to exactly the vertices in [lo[i], i) and (i, hi[i]].
"""

from dataclasses import dataclass

from .exact_arith import floor_affine_sqrt5


@dataclass(frozen=True)
class JacoGraph:
    """Interval representation of a linear Jaco graph.

    lo and hi are 1-indexed tuples (slot 0 unused). N(v_i) is the set
    of v_j with lo[i] <= j <= hi[i], j != i.
    """

    n: int
    lo: tuple
    hi: tuple

    def neighbors(self, i):
        self._check_vertex(i)
        return tuple(j for j in range(self.lo[i], self.hi[i] + 1) if j != i)

    def degree(self, i):
        self._check_vertex(i)
        return self.hi[i] - self.lo[i]

    def edges(self):
        """All edges as (i, j) pairs with i < j, lexicographic."""
        return tuple((i, j) for i in range(1, self.n + 1)
                     for j in range(i + 1, self.hi[i] + 1))

    def edge_count(self):
        return sum(self.hi[i] - i for i in range(1, self.n + 1))

    def _check_vertex(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex index {i} outside 1..{self.n}")


def build_jaco(n):
    """Build the linear Jaco graph on n vertices.

    Runs the growth rule in closed form: when vertex i gets its forward
    edges, it can reach t = i - indeg(i) vertices ahead (its remaining
    degree budget), clipped to the n - i vertices that exist. In-degrees
    are accumulated with a difference array over the forward intervals,
    which is enough because vertex i's in-edges all come from vertices
    below i, already processed when i is reached.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    indeg_delta = [0] * (n + 2)
    running = 0
    for i in range(1, n + 1):
        running += indeg_delta[i]
        t = min(i - running, n - i)
        lo[i] = i - running
        hi[i] = i + t
        if t > 0:
            indeg_delta[i + 1] += 1
            indeg_delta[i + t + 1] -= 1
    g = JacoGraph(n, tuple(lo), tuple(hi))
    _validate(g)
    return g


def _validate(g):
    # Structural invariants of the interval form; cheap, then kept on
    # every build so a bad construction can never leak out.
    n, lo, hi = g.n, g.lo, g.hi
    for i in range(1, n + 1):
        assert 1 <= lo[i] <= i <= hi[i] <= n, f"interval broken at {i}"
        assert hi[i] - lo[i] <= i, f"degree cap broken at {i}"
        if i > 1:
            assert lo[i - 1] <= lo[i] and hi[i - 1] <= hi[i], \
                f"monotonicity broken at {i}"
        # adjacency must be symmetric: j in N(i) iff i in N(j)
        if lo[i] < i:
            assert hi[lo[i]] >= i, f"symmetry broken at ({lo[i]},{i})"
            assert lo[i] == 1 or hi[lo[i] - 1] < i, \
                f"symmetry broken at ({lo[i] - 1},{i})"
    assert sum(hi[i] - i for i in range(1, n + 1)) == \
        sum(i - lo[i] for i in range(1, n + 1)), "edge identity broken"


def back_degree(g, i):
    """Number of neighbors of v_i with smaller index, within graph g."""
    g._check_vertex(i)
    return i - g.lo[i]


def back_degree_formula(i):
    """Stable back degree of v_i: floor(2(i+1) / (3 + sqrt(5))).

    Stable means taken in any J_n with n large enough that v_i has its
    full forward interval; adding vertices never changes edges among
    the first i, so the value does not depend on n.
    """
    if i < 1:
        raise ValueError("need i >= 1")
    # 2/(3+sqrt(5)) = (3-sqrt(5))/2, rationalized to keep d positive
    return floor_affine_sqrt5(3, -1, 2, i + 1)


def back_degree_table(max_i):
    """Stable back degrees for i = 1..max_i from one construction sweep.

    Equivalent to [back_degree_formula(i) for i in 1..max_i] but linear
    time overall; used by every bulk computation.
    """
    if max_i < 1:
        raise ValueError("need max_i >= 1")
    bd = [0] * (max_i + 1)
    indeg_delta = [0] * (max_i + 2)
    running = 0
    for i in range(1, max_i + 1):
        running += indeg_delta[i]
        bd[i] = running
        t = i - running
        if t > 0:
            indeg_delta[i + 1] += 1
            if i + t + 1 <= max_i + 1:
                # intervals ending past the table never matter
                indeg_delta[i + t + 1] -= 1
    return bd


def forward_degree(i):
    """Stable forward degree of v_i: its index minus its back degree."""
    return i - back_degree_formula(i)


def upper_reach(i):
    """Largest index adjacent to v_i once v_i has all forward edges.

    Equals i + forward_degree(i) = 2i - back_degree(i).
    """
    return 2 * i - back_degree_formula(i)
