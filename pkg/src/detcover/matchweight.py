"""Weighted matching sums on a projected view, via determinants.

A view with only pairs and loops induces a multigraph on U.  Its perfect
matchings (loops cover one vertex, pairs cover two) are graded by loop
count, and the graded sums are read off determinants:

  * bipartite, pairs only: the |U|/2 x |U|/2 matrix whose (row, col)
    entry XORs the weights of edges joining left vertex `row` to right
    vertex `col` has determinant equal to the matching sum, each matching
    contributing the product of its edge weights.  In characteristic 2
    the determinant is the permanent, so nothing cancels by sign.

  * general, with loops: the symmetric |U| x |U| matrix with s-scaled
    loop sums on the diagonal has a determinant that is a polynomial in
    s whose degree-i coefficient M_i sums, over perfect matchings using
    exactly i loops, the product of loop weights times squared pair
    weights.  Evaluating at |U| + 1 distinct points and interpolating
    recovers every M_i.

cover_weight() combines the M_i with elementary symmetric sums Z_j of the
untouched-edge weights: a cover of all n/k vertex groups decomposes into
a matching on U plus j = n/k - (|U| + i)/2 edges missing U entirely, so
the total cover weight is XOR over i of Z_j * M_i.
"""

from __future__ import annotations

from .gf2m import GF2m
from .hypergraph import ProjectedView
from .linalg import determinant, interpolate


def build_edmonds(view: ProjectedView, weights, left, right) -> list[list[int]]:
    """Bipartite matching matrix for a pairs-only view.

    left and right are the two vertex blocks (original ids); every pairs
    edge must join them.  Parallel edges XOR into the same entry.  No
    field is needed: accumulation is addition only.
    """
    if view.loops or view.empties or view.dropped:
        raise ValueError("bipartite matrix needs a pairs-only view")
    if len(left) != len(right):
        raise ValueError("left and right blocks differ in size")
    lpos = {v: i for i, v in enumerate(left)}
    rpos = {v: i for i, v in enumerate(right)}
    b = len(left)
    mat = [[0] * b for _ in range(b)]
    for eid, i, j in view.pairs:
        vi, vj = view.u_order[i], view.u_order[j]
        if vi in lpos and vj in rpos:
            mat[lpos[vi]][rpos[vj]] ^= weights[eid]
        elif vj in lpos and vi in rpos:
            mat[lpos[vj]][rpos[vi]] ^= weights[eid]
        else:
            raise ValueError(f"edge {eid} does not join the two blocks")
    return mat


def _tutte_parts(view: ProjectedView, weights):
    """Off-diagonal pair matrix and per-vertex loop weight sums."""
    u = view.u_size
    off = [[0] * u for _ in range(u)]
    loop_sums = [0] * u
    for eid, i, j in view.pairs:
        w = weights[eid]
        off[i][j] ^= w
        off[j][i] ^= w
    for eid, i in view.loops:
        loop_sums[i] ^= weights[eid]
    return off, loop_sums


def build_tutte(view: ProjectedView, weights, s: int, gf: GF2m) -> list[list[int]]:
    """Symmetric matching matrix at diagonal scale s."""
    if view.dropped:
        raise ValueError("view still contains dropped edges")
    off, loop_sums = _tutte_parts(view, weights)
    for i in range(view.u_size):
        off[i][i] = gf.mul(s, loop_sums[i])
    return off


def loop_weights(view: ProjectedView, weights, gf: GF2m) -> list[int]:
    """Matching sums M_0..M_|U| graded by loop count.

    Interpolates det(tutte(s)) from |U| + 1 distinct evaluations; the
    result does not depend on which distinct points are used.  M_i is
    zero whenever i and |U| have different parity.
    """
    if view.dropped:
        raise ValueError("view still contains dropped edges")
    u = view.u_size
    off, loop_sums = _tutte_parts(view, weights)
    xs = gf.distinct_points(u + 1)
    points = []
    for s in xs:
        mat = [row[:] for row in off]
        for i in range(u):
            mat[i][i] = gf.mul(s, loop_sums[i])
        points.append((s, determinant(mat, gf)))
    return interpolate(points, u, gf)


def elementary_symmetric(values, max_degree: int, gf: GF2m) -> list[int]:
    """Z_0..Z_max_degree: sums over j-subsets of the products of values.

    One in-place pass per value; order of the values cannot matter.
    Degrees beyond len(values) are zero, Z_0 is one.
    """
    table = [0] * (max_degree + 1)
    table[0] = 1
    seen = 0
    for v in values:
        seen += 1
        for j in range(min(seen, max_degree), 0, -1):
            if table[j - 1] and v:
                table[j] ^= gf.mul(table[j - 1], v)
    return table


def cover_weight(view: ProjectedView, weights, n: int, k: int, gf: GF2m) -> int:
    """Probe value of the sieve: weight of U-matchings padded to n/k edges.

    Sums, over perfect matchings of U with i loops and over all
    (n/k - (|U| + i)/2)-subsets of the empties pool, the product of edge
    weights with pair weights squared.  XORed across every avoided set X
    the non-covering families cancel in pairs and only exact covers of
    the vertex set survive.  Exact zero short-circuits: an uncoverable U
    vertex, too few surviving edges, or a U too large for the edge
    budget.
    """
    if view.dropped:
        raise ValueError("view still contains dropped edges")
    need = n // k
    u = view.u_size
    if len(view.pairs) + len(view.loops) + len(view.empties) < need:
        return 0
    if u:
        covered = [False] * u
        for _, i, j in view.pairs:
            covered[i] = True
            covered[j] = True
        for _, i in view.loops:
            covered[i] = True
        if not all(covered):
            return 0
        if (u + 1) // 2 > need:
            return 0
    m_vals = loop_weights(view, weights, gf)
    z_vals = elementary_symmetric([weights[e] for e in view.empties], need, gf)
    total = 0
    for i, m_i in enumerate(m_vals):
        if not m_i:
            continue
        j = need - (u + i) // 2
        if j >= 0:
            total ^= gf.mul(z_vals[j], m_i)
    return total
