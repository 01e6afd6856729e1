"""Canonical projective linear algebra over an exact field.

A subspace of P^n is stored as the reduced row echelon basis of the
underlying linear subspace of k^(n+1).  The echelon basis is the unique
canonical representative, so subspace equality is tuple equality and every
operation (span, meet, join, projection) returns canonical output.

Conventions:

* the empty subspace has projective dimension -1 and an empty basis;
* points are homogeneous coordinate vectors scaled so the first nonzero
  coordinate is 1;
* meets are computed through annihilators (the kernel of the stacked
  annihilator bases), which are cached per subspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import AmbientMismatchError, LowdegError, ProjectionError
from .fields import Field, Scalar, require_same_field

Matrix = tuple[tuple[Scalar, ...], ...]


def rref(rows: Sequence[Sequence[Scalar]], field: Field) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped.

    Returns ``(rows, pivot_columns)``.  The result is the unique reduced
    echelon form of the row space, so ``rref(rref(M)) == rref(M)`` and the
    number of returned rows is the rank.
    """
    mat = [[field.coerce(x) for x in row] for row in rows]
    if mat:
        width = len(mat[0])
        if any(len(row) != width for row in mat):
            raise LowdegError("matrix rows must all have the same length")
    else:
        return (), ()
    pivots: list[int] = []
    r = 0
    for c in range(width):
        pivot_row = next((i for i in range(r, len(mat)) if not field.is_zero(mat[i][c])), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        scale = field.inv(mat[r][c])
        mat[r] = [field.mul(scale, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][c]):
                factor = mat[i][c]
                mat[i] = [field.sub(x, field.mul(factor, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return tuple(tuple(row) for row in mat[:r]), tuple(pivots)


def _kernel_rows(mat: Matrix, pivots: Sequence[int], width: int, field: Field) -> Matrix:
    """Canonical basis of ``{x : mat @ x = 0}`` for ``mat`` already in rref."""
    pivot_set = set(pivots)
    free_cols = [c for c in range(width) if c not in pivot_set]
    vectors = []
    for f in free_cols:
        v = [field.zero] * width
        v[f] = field.one
        for row, c in zip(mat, pivots):
            v[c] = field.neg(row[f])
        vectors.append(v)
    reduced, _ = rref(vectors, field)
    return reduced


@dataclass(frozen=True)
class ProjPoint:
    """A point of P^n: nonzero homogeneous coordinates, first nonzero entry 1."""

    field: Field
    coords: tuple[Scalar, ...]

    def __post_init__(self) -> None:
        coords = [self.field.coerce(x) for x in self.coords]
        lead = next((x for x in coords if not self.field.is_zero(x)), None)
        if lead is None:
            raise LowdegError("homogeneous coordinates must not all vanish")
        scale = self.field.inv(lead)
        object.__setattr__(self, "coords", tuple(self.field.mul(scale, x) for x in coords))

    @property
    def ambient(self) -> int:
        return len(self.coords) - 1


@dataclass(frozen=True)
class ProjSubspace:
    """A linear subspace of P^n in canonical reduced-echelon-basis form.

    ``rows`` must already be a reduced echelon basis with no zero rows; use
    :meth:`from_vectors` or :func:`span` to build one from arbitrary
    spanning vectors.
    """

    field: Field
    ambient: int
    rows: Matrix

    def __post_init__(self) -> None:
        if self.ambient < 0:
            raise LowdegError("ambient projective dimension must be >= 0")
        width = self.ambient + 1
        rows = tuple(tuple(self.field.coerce(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        last_pivot = -1
        for i, row in enumerate(rows):
            if len(row) != width:
                raise LowdegError(f"row width {len(row)} does not match ambient {self.ambient}")
            pivot = next((c for c, x in enumerate(row) if not self.field.is_zero(x)), None)
            if pivot is None:
                raise LowdegError("zero rows are not part of a canonical basis")
            if pivot <= last_pivot or row[pivot] != self.field.one:
                raise LowdegError("basis is not in reduced row echelon form")
            if any(
                not self.field.is_zero(other[pivot]) for j, other in enumerate(rows) if j != i
            ):
                raise LowdegError("basis is not in reduced row echelon form")
            last_pivot = pivot

    @classmethod
    def from_vectors(
        cls, field: Field, ambient: int, vectors: Iterable[Sequence[Scalar]]
    ) -> "ProjSubspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient + 1:
                raise AmbientMismatchError(
                    f"vector of length {len(v)} cannot span inside P^{ambient}"
                )
        reduced, _ = rref(vecs, field)
        return cls(field, ambient, reduced)

    @classmethod
    def empty(cls, field: Field, ambient: int) -> "ProjSubspace":
        return cls(field, ambient, ())

    @classmethod
    def full(cls, field: Field, ambient: int) -> "ProjSubspace":
        width = ambient + 1
        rows = tuple(
            tuple(field.one if i == j else field.zero for j in range(width)) for i in range(width)
        )
        return cls(field, ambient, rows)

    @property
    def dim(self) -> int:
        """Projective dimension: number of basis rows minus one."""
        return len(self.rows) - 1

    @property
    def codim(self) -> int:
        return self.ambient - self.dim

    @property
    def is_empty(self) -> bool:
        return not self.rows

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(
            next(c for c, x in enumerate(row) if not self.field.is_zero(x)) for row in self.rows
        )

    def basis_points(self) -> tuple[ProjPoint, ...]:
        return tuple(ProjPoint(self.field, row) for row in self.rows)

    def reduce_vector(self, vector: Sequence[Scalar]) -> list[Scalar]:
        """Subtract the component along this subspace, zeroing its pivot columns."""
        field = self.field
        v = [field.coerce(x) for x in vector]
        for row, c in zip(self.rows, self.pivot_columns):
            if not field.is_zero(v[c]):
                factor = v[c]
                v = [field.sub(x, field.mul(factor, y)) for x, y in zip(v, row)]
        return v

    def contains_point(self, point: ProjPoint) -> bool:
        _check_compatible(self, point)
        if self.is_empty:
            return False
        return all(self.field.is_zero(x) for x in self.reduce_vector(point.coords))

    def contains_subspace(self, other: "ProjSubspace") -> bool:
        _check_compatible(self, other)
        return all(
            all(self.field.is_zero(x) for x in self.reduce_vector(row)) for row in other.rows
        )


def _check_compatible(a: ProjSubspace | ProjPoint, b: ProjSubspace | ProjPoint) -> Field:
    field = require_same_field(a.field, b.field)
    if a.ambient != b.ambient:
        raise AmbientMismatchError(
            f"operands live in P^{a.ambient} and P^{b.ambient}"
        )
    return field


def span(
    points: Sequence[ProjPoint],
    *,
    field: Optional[Field] = None,
    ambient: Optional[int] = None,
) -> ProjSubspace:
    """Smallest subspace containing the given points.

    The empty list spans the empty subspace (dimension -1); in that case the
    field and ambient dimension must be passed explicitly.
    """
    if not points:
        if field is None or ambient is None:
            raise LowdegError("spanning an empty set needs explicit field= and ambient=")
        return ProjSubspace.empty(field, ambient)
    first = points[0]
    for p in points[1:]:
        _check_compatible(first, p)
    if field is not None:
        require_same_field(field, first.field)
    if ambient is not None and ambient != first.ambient:
        raise AmbientMismatchError(f"points live in P^{first.ambient}, not P^{ambient}")
    return ProjSubspace.from_vectors(first.field, first.ambient, [p.coords for p in points])


def join(s1: ProjSubspace, s2: ProjSubspace) -> ProjSubspace:
    """Smallest subspace containing both operands."""
    field = _check_compatible(s1, s2)
    return ProjSubspace.from_vectors(field, s1.ambient, list(s1.rows) + list(s2.rows))


@lru_cache(maxsize=None)
def _annihilator_rows(subspace: ProjSubspace) -> Matrix:
    """Canonical basis of the annihilator of the row space (cached)."""
    reduced, pivots = subspace.rows, subspace.pivot_columns
    return _kernel_rows(reduced, pivots, subspace.ambient + 1, subspace.field)


def meet(s1: ProjSubspace, s2: ProjSubspace) -> ProjSubspace:
    """Intersection subspace, via the kernel of the stacked annihilators."""
    field = _check_compatible(s1, s2)
    stacked = list(_annihilator_rows(s1)) + list(_annihilator_rows(s2))
    reduced, pivots = rref(stacked, field)
    rows = _kernel_rows(reduced, pivots, s1.ambient + 1, field)
    return ProjSubspace(field, s1.ambient, rows)


def contains(subspace: ProjSubspace, point: ProjPoint) -> bool:
    """Membership test; the empty subspace contains no point."""
    return subspace.contains_point(point)


def project_from(center: ProjSubspace, point: ProjPoint) -> ProjPoint:
    """Image of ``point`` under projection away from ``center``.

    Quotient coordinates are obtained by reducing against the center's
    echelon basis and deleting its pivot columns, which is deterministic and
    independent of how the center was presented.  The image lives in a
    projective space of dimension ``ambient - dim(center) - 1``; projecting
    from the empty subspace is the identity.
    """
    _check_compatible(center, point)
    if center.is_empty:
        return ProjPoint(point.field, point.coords)
    reduced = center.reduce_vector(point.coords)
    if all(center.field.is_zero(x) for x in reduced):
        raise ProjectionError("point lies in the projection center")
    pivot_set = set(center.pivot_columns)
    quotient = [x for c, x in enumerate(reduced) if c not in pivot_set]
    return ProjPoint(center.field, tuple(quotient))


def project_subspace_from(center: ProjSubspace, subspace: ProjSubspace) -> ProjSubspace:
    """Image of a whole subspace under projection away from ``center``."""
    field = _check_compatible(center, subspace)
    if center.is_empty:
        return subspace
    pivot_set = set(center.pivot_columns)
    images = []
    for row in subspace.rows:
        reduced = center.reduce_vector(row)
        quotient = [x for c, x in enumerate(reduced) if c not in pivot_set]
        if any(not field.is_zero(x) for x in quotient):
            images.append(quotient)
    return ProjSubspace.from_vectors(field, subspace.ambient - len(center.rows), images)


def projected_span_dim(center: ProjSubspace, subspace: ProjSubspace) -> int:
    """Dimension of the image of ``subspace`` under projection from ``center``.

    Equals ``dim join(subspace, center) - dim center - 1``; requires that the
    subspace is not contained in the center.
    """
    _check_compatible(center, subspace)
    if center.contains_subspace(subspace):
        raise ProjectionError("subspace lies in the projection center")
    return join(subspace, center).dim - center.dim - 1
