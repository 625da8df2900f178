"""Independent oracles and shared fixtures for the test suite.

Everything here is deliberately naive and separate from the library code
paths it checks: cofactor determinants instead of Bareiss, gcd of maximal
minors instead of echelon forms, and a dumb full-variable row reduction for
quotient dimensions instead of the elimination pipeline.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd

from toriccsm import (
    Fan,
    hirzebruch,
    product,
    projective_space,
    weighted_projective,
)
from toriccsm.exact_linalg import IntegerMatrix


def cofactor_det(rows: list[list[int]]) -> int:
    """Determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def gcd_minors_index(rows: list[list[int]]) -> int:
    """gcd of all maximal minors of an n x d (n >= d) integer matrix: the
    index of its column span inside the saturation."""
    n, d = len(rows), len(rows[0])
    g = 0
    for sel in combinations(range(n), d):
        g = gcd(g, abs(cofactor_det([rows[i] for i in sel])))
    return g


def oracle_multiplicity(fan: Fan, cone) -> int:
    return gcd_minors_index(fan.ray_matrix(cone).row_lists())


def is_column_hnf(h: IntegerMatrix) -> bool:
    """Canonical-form predicate: positive pivots in strictly increasing row
    positions, zeros above every pivot, and entries left of a pivot in its
    row reduced into [0, pivot)."""
    pivots = []
    for j in range(h.cols):
        rows_j = [i for i in range(h.rows) if h.at(i, j)]
        if not rows_j:
            return False
        p = rows_j[0]
        if h.at(p, j) <= 0:
            return False
        pivots.append(p)
    if pivots != sorted(pivots) or len(set(pivots)) != len(pivots):
        return False
    for j, p in enumerate(pivots):
        for k in range(j):
            if not 0 <= h.at(p, k) < h.at(p, j):
                return False
    return True


def int_row_rank(rows: list[list[int]]) -> int:
    """Exact rank of an integer matrix: echelon reduction with sparsest-row
    pivoting and content stripping."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    start = 0
    for c in range(ncols):
        piv, best = None, None
        for i in range(start, len(work)):
            if work[i][c]:
                nz = sum(1 for x in work[i] if x)
                if best is None or nz < best:
                    best, piv = nz, i
        if piv is None:
            continue
        work[start], work[piv] = work[piv], work[start]
        pr = work[start]
        a = pr[c]
        for i in range(start + 1, len(work)):
            b = work[i][c]
            if not b:
                continue
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = [ma * x - mb * y for x, y in zip(work[i], pr)]
            g2 = 0
            for x in new:
                if x:
                    g2 = gcd(g2, x)
                    if g2 == 1:
                        break
            if g2 > 1:
                new = [x // g2 for x in new]
            work[i] = new
        rank += 1
        start += 1
    return rank


def exponent_tuples(nvars: int, total: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(prefix, remaining, left):
        if left == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, left - 1)

    if nvars == 0:
        return [()] if total == 0 else []
    rec((), total, nvars)
    return out


def brute_quotient_dims(fan: Fan) -> list[int]:
    """Graded dimensions of the quotient ring computed over the full set of
    ray variables: degree-d monomials modulo the span of all monomial
    multiples of the non-face and linear-relation generators.
    """
    from toriccsm import linear_relations, stanley_reisner_nonfaces

    r = len(fan.rays)
    n = fan.ambient_dim
    gens: list[dict[tuple[int, ...], int]] = []
    for s in stanley_reisner_nonfaces(fan):
        e = [0] * r
        for j in s:
            e[j] = 1
        gens.append({tuple(e): 1})
    for form in linear_relations(fan):
        g = {}
        for j, cf in enumerate(form):
            if cf:
                e = [0] * r
                e[j] = 1
                g[tuple(e)] = cf
        if g:
            gens.append(g)
    dims = []
    for d in range(n + 1):
        mons = exponent_tuples(r, d)
        col = {m: i for i, m in enumerate(mons)}
        rows = []
        for g in gens:
            deg_g = sum(next(iter(g)))
            if deg_g > d:
                continue
            for m in exponent_tuples(r, d - deg_g):
                row = [0] * len(mons)
                for gm, gc in g.items():
                    row[col[tuple(x + y for x, y in zip(m, gm))]] = gc
                rows.append(row)
        dims.append(len(mons) - int_row_rank(rows))
    return dims


def suite_fans() -> list[tuple[str, Fan]]:
    """The acceptance suite: projective spaces to P^8, products up to
    P^5 x P^6, the Hirzebruch family, the weighted projective family, and
    pairwise products of small members of those families."""
    fans: list[tuple[str, Fan]] = []
    for n in range(1, 9):
        fans.append((f"pn={n}", projective_space(n)))
    fans.append(("pn=1*pn=1", product(projective_space(1), projective_space(1))))
    fans.append(("pn=2*pn=3", product(projective_space(2), projective_space(3))))
    fans.append(("pn=5*pn=6", product(projective_space(5), projective_space(6))))
    for rr in range(11):
        fans.append((f"hirzebruch={rr}", hirzebruch(rr)))
    for q in range(1, 6):
        fans.append((f"wps=1,1,{q}", weighted_projective([1, 1, q])))
    small = [
        ("pn=1", lambda: projective_space(1)),
        ("pn=2", lambda: projective_space(2)),
        ("hirzebruch=0", lambda: hirzebruch(0)),
        ("hirzebruch=5", lambda: hirzebruch(5)),
        ("wps=1,1,2", lambda: weighted_projective([1, 1, 2])),
        ("wps=1,1,3", lambda: weighted_projective([1, 1, 3])),
    ]
    for i, (name1, b1) in enumerate(small):
        for name2, b2 in small[i:]:
            fans.append((f"{name1}*{name2}", product(b1(), b2())))
    return fans
