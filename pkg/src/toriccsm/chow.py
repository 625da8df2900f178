"""Rational Chow ring presentation and exact graded normal-form reduction.

The ring of a complete simplicial fan with rays ``x_0..x_{r-1}`` is the
polynomial ring over Q modulo the squarefree monomial ideal of minimal
non-faces and the ``n`` linear relations coming from the ray coordinates.
Rather than running a general quotient-ring engine we eliminate the ``n``
variables of one maximal cone (its ray matrix is invertible), which leaves
``r - n`` variables, and reduce each graded piece by plain rational row
reduction against the substituted non-face generators.

Classes are sparse:

  Monomial    = tuple of (ray_index, exponent) pairs, sorted, exponents > 0
  GradedClass = dict mapping Monomial -> Fraction, no zero coefficients

The empty tuple is the constant monomial 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .errors import InternalError, ValidationError
from .exact_linalg import RationalMatrix, rational_rref
from .fan import Cone, Fan, multiplicity

__all__ = [
    "Monomial",
    "GradedClass",
    "ChowPresentation",
    "squarefree_monomial",
    "monomial_degree",
    "class_add",
    "stanley_reisner_nonfaces",
    "linear_relations",
    "build_presentation",
    "normal_form",
    "graded_dimensions",
    "degree",
]

Monomial = Tuple[Tuple[int, int], ...]
GradedClass = Dict[Monomial, Fraction]

_F0 = Fraction(0)
_F1 = Fraction(1)


def squarefree_monomial(ray_indices: Iterable[int]) -> Monomial:
    """The monomial prod x_i over the given ray indices."""
    return tuple((int(i), 1) for i in sorted(ray_indices))


def monomial_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def class_add(a: GradedClass, b: GradedClass) -> GradedClass:
    out = dict(a)
    for m, c in b.items():
        s = out.get(m, _F0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def stanley_reisner_nonfaces(fan: Fan) -> tuple[tuple[int, ...], ...]:
    """Inclusion-minimal sets of ray indices spanning no cone of the fan.

    A set is a non-face exactly when it meets the complement of every
    maximal cone, so the minimal non-faces are the minimal transversals of
    the complement hypergraph; computed by sequential transversal updates
    over bitmasks.
    """
    r = len(fan.rays)
    full = (1 << r) - 1
    edges = sorted({full ^ _mask(c.ray_indices) for c in fan.max_cones})

    def minimalize(masks: list[int]) -> list[int]:
        masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
        kept: list[int] = []
        for m in masks:
            if not any(k & m == k for k in kept):
                kept.append(m)
        return kept

    trans = [0]
    for e in edges:
        nxt = [t for t in trans if t & e]
        bits = [v for v in range(r) if e >> v & 1]
        for t in trans:
            if not t & e:
                nxt.extend(t | (1 << v) for v in bits)
        trans = minimalize(nxt)
    return tuple(sorted(tuple(v for v in range(r) if t >> v & 1) for t in trans))


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def linear_relations(fan: Fan) -> tuple[tuple[int, ...], ...]:
    """The n linear forms of the ray relations, one per lattice coordinate.

    Form ``k`` is given by its coefficient tuple over the ray variables:
    coefficient of ``x_j`` is the k-th coordinate of ray ``j``.
    """
    n = fan.ambient_dim
    return tuple(tuple(v[k] for v in fan.rays) for k in range(n))


# Dense polynomials over the kept variables: exponent tuple -> Fraction.
_Dense = Dict[Tuple[int, ...], Fraction]


def _poly_mul(a: _Dense, b: _Dense) -> _Dense:
    out: _Dense = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            s = out.get(m, _F0) + ca * cb
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _exponent_tuples(nvars: int, total: int) -> list[tuple[int, ...]]:
    """All exponent tuples of the given length summing to ``total``, in
    decreasing graded-lexicographic order (earlier variable more
    significant)."""
    if nvars == 0:
        return [()] if total == 0 else []
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], remaining: int, left: int) -> None:
        if left == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, left - 1)

    rec((), total, nvars)
    return out


class ChowPresentation:
    """Quotient-ring data for one fan and one choice of elimination cone.

    Attributes:
        fan:            the underlying fan
        nonfaces:       minimal non-face index sets (Stanley-Reisner data)
        linear_forms:   coefficient tuples of the n linear relations
        elim_cone:      the maximal cone whose variables were eliminated
        kept:           the remaining ray indices, increasing
        substitution:   eliminated ray index -> degree-1 GradedClass over kept vars
        degree_bases:   per degree d = 0..n, the basis monomials (descending order)
        point_coeff:    coefficient of the top basis monomial in the reduced
                        squarefree monomial of the reference maximal cone
        point_mult:     multiplicity of the reference maximal cone

    The degree map sends the top basis monomial to 1/(point_coeff * point_mult),
    which makes every maximal cone's orbit-closure class integrate to 1.
    """

    __slots__ = (
        "fan",
        "nonfaces",
        "linear_forms",
        "elim_cone",
        "kept",
        "substitution",
        "degree_bases",
        "point_coeff",
        "point_mult",
        "_kept_pos",
        "_subst_dense",
        "_basis_sets",
        "_reductions",
    )

    def __repr__(self) -> str:
        return (
            f"ChowPresentation(elim={self.elim_cone.ray_indices}, "
            f"kept={self.kept}, dims={tuple(len(b) for b in self.degree_bases)})"
        )


def build_presentation(fan: Fan, elim_cone: Cone | Iterable[int] | None = None) -> ChowPresentation:
    """Build the quotient presentation of the fan's rational Chow ring.

    ``elim_cone`` may name any maximal cone; by default the one with the
    lexicographically smallest ray-index tuple is used.  Raises
    ``ValidationError`` ("fan not complete") when the top graded piece is
    not one-dimensional.
    """
    n = fan.ambient_dim
    r = len(fan.rays)
    if elim_cone is None:
        elim = min(fan.max_cones, key=lambda c: c.ray_indices)
    else:
        elim = elim_cone if isinstance(elim_cone, Cone) else Cone(elim_cone)
        if elim not in fan.max_cones:
            raise ValidationError(
                f"elimination cone {elim.ray_indices} is not a maximal cone of the fan"
            )
        elim = fan.max_cones[fan.max_cones.index(elim)]

    p = ChowPresentation.__new__(ChowPresentation)
    p.fan = fan
    p.nonfaces = stanley_reisner_nonfaces(fan)
    p.linear_forms = linear_relations(fan)
    p.elim_cone = elim
    kept = tuple(j for j in range(r) if j not in set(elim.ray_indices))
    p.kept = kept
    p._kept_pos = {ray: i for i, ray in enumerate(kept)}

    # Solve the linear relations for the eliminated variables: the columns
    # of the elimination cone form an invertible matrix, so each form
    # determines one eliminated variable as a rational combination of the
    # kept ones.
    elim_idx = elim.ray_indices
    aug_rows = []
    for k in range(n):
        row = [Fraction(fan.rays[j][k]) for j in elim_idx]
        row += [Fraction(-fan.rays[j][k]) for j in kept]
        aug_rows.append(row)
    red, pivots = rational_rref(RationalMatrix.from_rows(aug_rows))
    if pivots != tuple(range(n)):
        raise InternalError("elimination system is singular; contradicts simpliciality")
    rl = red.row_lists()
    nk = len(kept)
    subst_dense: dict[int, _Dense] = {}
    for i, ray in enumerate(elim_idx):
        form: _Dense = {}
        for m in range(nk):
            c = rl[i][n + m]
            if c:
                exp = tuple(1 if t == m else 0 for t in range(nk))
                form[exp] = c
        subst_dense[ray] = form
    p._subst_dense = subst_dense
    p.substitution = {
        ray: {_dense_to_sparse(m, kept): c for m, c in form.items()}
        for ray, form in subst_dense.items()
    }

    # Substituted Stanley-Reisner generators (homogeneous over kept vars).
    gens: list[tuple[int, _Dense]] = []
    zero_exp = (0,) * nk
    for s in p.nonfaces:
        poly: _Dense = {zero_exp: _F1}
        base = [0] * nk
        for j in s:
            if j in p._kept_pos:
                base[p._kept_pos[j]] += 1
            else:
                poly = _poly_mul(poly, subst_dense[j])
        if any(base):
            shift = tuple(base)
            poly = {tuple(x + y for x, y in zip(m, shift)): c for m, c in poly.items()}
        if poly:
            gens.append((len(s), poly))

    # Per-degree reduction data: basis monomials are the non-pivot columns
    # of the row-reduced generator multiples, columns ordered by decreasing
    # graded-lex (smaller ray index more significant).
    basis_all: list[tuple[Monomial, ...]] = []
    basis_sets: list[set[tuple[int, ...]]] = []
    reductions: list[dict[tuple[int, ...], dict[tuple[int, ...], Fraction]]] = []
    for d in range(n + 1):
        mons = _exponent_tuples(nk, d)
        col = {m: i for i, m in enumerate(mons)}
        rows = []
        for deg_g, g in gens:
            if deg_g > d:
                continue
            for m in _exponent_tuples(nk, d - deg_g):
                row = [_F0] * len(mons)
                for gm, gc in g.items():
                    row[col[tuple(x + y for x, y in zip(m, gm))]] = gc
                rows.append(row)
        red_d: dict[tuple[int, ...], dict[tuple[int, ...], Fraction]] = {}
        if rows:
            rmat, piv = rational_rref(RationalMatrix.from_rows(rows))
            pivset = set(piv)
            rrows = rmat.row_lists()
            basis_idx = [j for j in range(len(mons)) if j not in pivset]
            for i, pcol in enumerate(piv):
                red_d[mons[pcol]] = {
                    mons[j]: -rrows[i][j] for j in basis_idx if rrows[i][j]
                }
        else:
            basis_idx = list(range(len(mons)))
        basis_all.append(tuple(_dense_to_sparse(mons[j], kept) for j in basis_idx))
        basis_sets.append({mons[j] for j in basis_idx})
        reductions.append(red_d)
    p.degree_bases = tuple(basis_all)
    p._basis_sets = basis_sets
    p._reductions = reductions
    if len(p.degree_bases[n]) != 1:
        raise ValidationError(
            f"fan not complete: top graded piece has dimension {len(p.degree_bases[n])}"
        )

    # Degree-map calibration against the lexicographically smallest maximal
    # cone: its multiplicity times its squarefree monomial is a point class,
    # so it must integrate to 1.
    ref = min(fan.max_cones, key=lambda c: c.ray_indices)
    reduced = normal_form({squarefree_monomial(ref.ray_indices): _F1}, p)
    top = p.degree_bases[n][0]
    c0 = reduced.get(top, _F0)
    if c0 == 0:
        raise ValidationError("degenerate presentation: fan not complete or reduction bug")
    p.point_coeff = c0
    p.point_mult = multiplicity(fan, ref)
    return p


def _dense_to_sparse(m: tuple[int, ...], kept: tuple[int, ...]) -> Monomial:
    return tuple((kept[i], e) for i, e in enumerate(m) if e)


def normal_form(c: GradedClass, pres: ChowPresentation) -> GradedClass:
    """Canonical representative of a class: substitute the eliminated
    variables, expand, and reduce every graded piece to its basis monomials.

    Linear in the input and idempotent on classes already in basis form.
    """
    n = pres.fan.ambient_dim
    nk = len(pres.kept)
    kept_pos = pres._kept_pos
    subst = pres._subst_dense
    acc: _Dense = {}
    for mono, coeff in c.items():
        if coeff == 0:
            continue
        if monomial_degree(mono) > n:
            raise ValidationError("monomial degree exceeds the fan dimension")
        base = [0] * nk
        factors: list[tuple[int, int]] = []
        for ray, e in mono:
            if ray in kept_pos:
                base[kept_pos[ray]] += e
            elif ray in subst:
                factors.append((ray, e))
            else:
                raise ValidationError(f"monomial references unknown ray index {ray}")
        poly: _Dense = {tuple(base): Fraction(coeff)}
        for ray, e in factors:
            for _ in range(e):
                poly = _poly_mul(poly, subst[ray])
        for m, q in poly.items():
            s = acc.get(m, _F0) + q
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    out: _Dense = {}

    def put(m: tuple[int, ...], q: Fraction) -> None:
        s = out.get(m, _F0) + q
        if s:
            out[m] = s
        else:
            out.pop(m, None)

    for m, q in acc.items():
        d = sum(m)
        if m in pres._basis_sets[d]:
            put(m, q)
        else:
            for bm, rc in pres._reductions[d][m].items():
                put(bm, q * rc)
    return {_dense_to_sparse(m, pres.kept): q for m, q in out.items()}


def graded_dimensions(pres: ChowPresentation) -> tuple[int, ...]:
    """Dimension of each graded piece of the quotient, degrees 0..n."""
    return tuple(len(b) for b in pres.degree_bases)


def degree(c: GradedClass, pres: ChowPresentation) -> Fraction:
    """Degree (integral) of the top-dimensional part of a class in normal
    form.

    Calibrated so that the reference maximal cone's point class has degree
    exactly 1; all other point classes then also integrate to 1.
    """
    top = pres.degree_bases[pres.fan.ambient_dim][0]
    q = c.get(top, _F0)
    return q / (pres.point_coeff * pres.point_mult)
