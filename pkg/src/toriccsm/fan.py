"""Fan data model: validation, face enumeration, multiplicities, builders.

A fan is given by its ambient dimension, a list of primitive ray
generators in ``Z^n``, and the maximal cones as sets of ray indices
(0-based).  Only complete simplicial fans are supported; completeness is
checked through the wall condition (every wall, i.e. every
``(n-1)``-dimensional face, must lie in exactly two maximal cones), which
is necessary but not sufficient.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .errors import ValidationError
from .exact_linalg import (
    IntegerMatrix,
    column_lattice_index,
    determinant,
    hermite_normal_form,
    strip_zero_rows,
)

__all__ = [
    "Cone",
    "Fan",
    "build_fan",
    "enumerate_cones",
    "multiplicity",
    "is_smooth",
    "wall_check",
    "projective_space",
    "hirzebruch",
    "weighted_projective",
    "product",
]

LatticeVector = tuple[int, ...]


class Cone:
    """A simplicial cone, identified by its sorted ray indices.

    The multiplicity is cached after first computation; everything else is
    immutable, so cones are safe to share across threads (the cache write
    is idempotent).
    """

    __slots__ = ("ray_indices", "_mult")

    def __init__(self, ray_indices: Iterable[int]):
        idx = tuple(sorted(int(i) for i in ray_indices))
        if len(set(idx)) != len(idx):
            raise ValidationError("duplicate ray index in cone")
        self.ray_indices = idx
        self._mult: int | None = None

    @property
    def dim(self) -> int:
        return len(self.ray_indices)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cone) and self.ray_indices == other.ray_indices

    def __hash__(self) -> int:
        return hash(self.ray_indices)

    def __repr__(self) -> str:
        return f"Cone({self.ray_indices})"


class Fan:
    """A validated complete simplicial fan.  Construct via ``build_fan``."""

    __slots__ = ("ambient_dim", "rays", "max_cones", "_faces", "_smooth")

    def __init__(self, ambient_dim: int, rays: Sequence[LatticeVector], max_cones: Sequence[Cone]):
        self.ambient_dim = ambient_dim
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.max_cones = tuple(max_cones)
        self._faces: dict[int, tuple[Cone, ...]] | None = None
        self._smooth: bool | None = None

    @property
    def faces(self) -> dict[int, tuple[Cone, ...]]:
        """Cones of each dimension 1..n, derived from the maximal cones.

        Built lazily on first access (a write-once cache, like the per-cone
        multiplicities) since only the full class computation needs it.
        """
        if self._faces is None:
            by_dim: dict[int, set[tuple[int, ...]]] = {d: set() for d in range(1, self.ambient_dim + 1)}
            for c in self.max_cones:
                idx = c.ray_indices
                for d in range(1, len(idx) + 1):
                    by_dim[d].update(combinations(idx, d))
            table: dict[int, tuple[Cone, ...]] = {}
            top = self.ambient_dim
            for d in range(1, top + 1):
                if d == top:
                    # reuse the maximal cone objects so cached multiplicities
                    # are shared
                    table[d] = tuple(sorted(self.max_cones, key=lambda c: c.ray_indices))
                else:
                    table[d] = tuple(Cone(t) for t in sorted(by_dim[d]))
            self._faces = table
        return self._faces

    def ray_matrix(self, cone: Cone) -> IntegerMatrix:
        """The n x d matrix whose columns are the cone's ray generators."""
        for j in cone.ray_indices:
            if not 0 <= j < len(self.rays):
                raise ValidationError(f"cone {cone.ray_indices} references unknown ray {j}")
        n = self.ambient_dim
        return IntegerMatrix.from_rows(
            [[self.rays[j][k] for j in cone.ray_indices] for k in range(n)]
        )

    def __repr__(self) -> str:
        return (
            f"Fan(dim={self.ambient_dim}, rays={len(self.rays)}, "
            f"max_cones={len(self.max_cones)})"
        )


def _is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def build_fan(
    ambient_dim: int,
    rays: Sequence[Sequence[int]],
    max_cones: Sequence[Iterable[int]],
    validate: bool = True,
) -> Fan:
    """Build and validate a fan from raw data.

    Checks, in order: ray shape and primitivity, no duplicate rays, maximal
    cones of dimension exactly ``ambient_dim`` with in-range indices,
    simpliciality of every maximal cone, every ray used, and the wall
    condition.  ``validate=False`` skips all checks (trusted input).
    """
    if ambient_dim < 1:
        raise ValidationError("ambient dimension must be at least 1")
    ray_tuples = [tuple(int(x) for x in r) for r in rays]
    # Fresh cone objects: a caller-supplied Cone may carry a multiplicity
    # cached against some other fan's rays.
    cones = [Cone(c.ray_indices if isinstance(c, Cone) else c) for c in max_cones]
    fan = Fan(ambient_dim, ray_tuples, cones)
    if not validate:
        return fan

    n = ambient_dim
    for i, v in enumerate(ray_tuples):
        if len(v) != n:
            raise ValidationError(f"ray {i} has {len(v)} coordinates, expected {n}")
        if all(x == 0 for x in v) or not _is_primitive(v):
            raise ValidationError(f"ray not primitive: ray {i} = {v}")
    if len(set(ray_tuples)) != len(ray_tuples):
        raise ValidationError("duplicate ray")
    if not cones:
        raise ValidationError("maximal cone wrong dimension: no maximal cones given")

    used: set[int] = set()
    for c in cones:
        if c.dim != n:
            raise ValidationError(
                f"maximal cone wrong dimension: cone {c.ray_indices} has {c.dim} rays, expected {n}"
            )
        for j in c.ray_indices:
            if not 0 <= j < len(ray_tuples):
                raise ValidationError(f"cone {c.ray_indices} references unknown ray {j}")
        used.update(c.ray_indices)
        if determinant(fan.ray_matrix(c)) == 0:
            raise ValidationError(f"not simplicial: maximal cone {c.ray_indices}")
    missing = sorted(set(range(len(ray_tuples))) - used)
    if missing:
        raise ValidationError(f"unused ray: ray {missing[0]} appears in no maximal cone")
    if not wall_check(fan):
        raise ValidationError("fan fails completeness check")
    return fan


def wall_check(fan: Fan) -> bool:
    """True iff every (n-1)-face of a maximal cone lies in exactly two of
    them (a necessary condition for completeness)."""
    counts: dict[tuple[int, ...], int] = {}
    n = fan.ambient_dim
    for c in fan.max_cones:
        for wall in combinations(c.ray_indices, n - 1):
            counts[wall] = counts.get(wall, 0) + 1
    return all(v == 2 for v in counts.values())


def enumerate_cones(fan: Fan) -> dict[int, tuple[Cone, ...]]:
    """All cones of the fan by dimension 1..n.

    For a simplicial fan every face of a cone is spanned by a subset of its
    rays, so the subsets of maximal cones enumerate exactly the cones.
    """
    return fan.faces


def multiplicity(fan: Fan, cone: Cone) -> int:
    """Multiplicity of a cone: the index of the sublattice spanned by its
    ray generators inside the lattice points of its linear span.

    Full-dimensional cones go through the Hermite normal form of the square
    ray matrix (strip, then take the determinant); lower-dimensional cones
    use the ambient-basis echelon form, which computes the same index when
    the cone's span is a proper subspace.  Equals 1 exactly when the
    corresponding affine chart is smooth.
    """
    if cone._mult is not None:
        return cone._mult
    mat = fan.ray_matrix(cone)
    if mat.rows == mat.cols:
        h, _ = hermite_normal_form(mat)
        m = abs(determinant(strip_zero_rows(h)))
    else:
        m = column_lattice_index(mat)
    cone._mult = m
    return m


def is_smooth(fan: Fan) -> bool:
    """True iff every maximal cone is unimodular (multiplicity 1).

    Faces of unimodular simplicial cones are unimodular, so checking the
    maximal cones suffices.
    """
    if fan._smooth is None:
        fan._smooth = all(multiplicity(fan, c) == 1 for c in fan.max_cones)
    return fan._smooth


def projective_space(n: int) -> Fan:
    """Fan of n-dimensional projective space: rays e_1..e_n and -(e_1+...+e_n),
    maximal cones all n-subsets of the n+1 rays."""
    if n < 1:
        raise ValidationError("projective space requires n >= 1")
    rays = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [c for c in combinations(range(n + 1), n)]
    return build_fan(n, rays, cones)


def hirzebruch(r: int) -> Fan:
    """The Hirzebruch surface fan: rays (1,0), (0,1), (-1,r), (0,-1)."""
    if r < 0:
        raise ValidationError("hirzebruch parameter must be nonnegative")
    rays = [(1, 0), (0, 1), (-1, r), (0, -1)]
    return build_fan(2, rays, [(0, 1), (1, 2), (2, 3), (3, 0)])


def weighted_projective(weights: Sequence[int]) -> Fan:
    """Weighted projective space fan for weights (q_0, ..., q_n).

    Rays are e_1..e_n and v_0 = -(q_1 e_1 + ... + q_n e_n)/q_0; only weight
    vectors making v_0 an integral primitive vector are supported (the
    q_0 = 1 family always works).
    """
    w = [int(q) for q in weights]
    if len(w) < 2:
        raise ValidationError("weighted projective space needs at least two weights")
    if any(q <= 0 for q in w):
        raise ValidationError("weights must be positive")
    g = 0
    for q in w:
        g = gcd(g, q)
    if g != 1:
        raise ValidationError("weights must have gcd 1")
    q0, rest = w[0], w[1:]
    if any(q % q0 for q in rest):
        raise ValidationError("unsupported weights: apex ray is not integral")
    v0 = tuple(-q // q0 for q in rest)
    if not _is_primitive(v0):
        raise ValidationError("unsupported weights: apex ray is not primitive")
    n = len(rest)
    rays = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    rays.append(v0)
    cones = [c for c in combinations(range(n + 1), n)]
    return build_fan(n, rays, cones)


def product(f1: Fan, f2: Fan) -> Fan:
    """Product fan: rays of each factor padded with zeros, maximal cones all
    unions of one maximal cone from each factor."""
    n1, n2 = f1.ambient_dim, f2.ambient_dim
    zeros1 = (0,) * n1
    zeros2 = (0,) * n2
    rays = [r + zeros2 for r in f1.rays] + [zeros1 + r for r in f2.rays]
    shift = len(f1.rays)
    cones = []
    for c1 in f1.max_cones:
        for c2 in f2.max_cones:
            cones.append(tuple(c1.ray_indices) + tuple(j + shift for j in c2.ray_indices))
    return build_fan(n1 + n2, rays, cones)
