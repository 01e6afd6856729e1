"""Brute-force laboratory for incidence configurations.

Three gadgets live here:

* extraction of the codimension-3 subspace common to a family of
  codimension-2 subspaces that pairwise lie in hyperplanes and jointly span,
* Sylvester-Gallai checks for plane point sets, with exact collinearity via
  3x3 determinants (no tolerances anywhere),
* a finite stand-in for the symmetric square of an elliptic curve: unordered
  pairs over Z/N with the two divisor families "pairs containing x" and
  "pairs summing to s".  The incidence counts of those families reproduce
  the intersection table of :mod:`lowdeg.sym2_lattice`; the model only
  claims the divisor combinatorics, not an actual curve.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import ConfigurationError, LowdegError
from .fields import Field, PrimeField, Scalar, require_same_field
from .projective import ProjPoint, ProjSubspace, join, meet, span

Pair = tuple[int, int]


# ---------------------------------------------------------------------------
# Common codimension-3 subspace of a pencil-like family


def common_subspace(subspaces: Sequence[ProjSubspace]) -> ProjSubspace:
    """The codimension-3 subspace contained in every member of the family.

    Preconditions, each checked and reported separately: at least two
    subspaces, all of codimension 2 in a common P^n, any two of them lying
    in a common hyperplane, and the whole family spanning P^n.  Under these
    the intersection of the first two members has codimension 3 and is
    contained in every other member; the containment is verified rather
    than assumed.
    """
    subs = list(subspaces)
    if len(subs) < 2:
        raise ConfigurationError(f"need at least two subspaces, got {len(subs)}")
    field = subs[0].field
    ambient = subs[0].ambient
    for i, s in enumerate(subs[1:], start=1):
        require_same_field(field, s.field)
        if s.ambient != ambient:
            raise ConfigurationError(
                f"subspace {i} lives in P^{s.ambient}, expected P^{ambient}"
            )
    for i, s in enumerate(subs):
        if s.codim != 2:
            raise ConfigurationError(
                f"subspace {i} has codimension {s.codim}, expected 2"
            )
    for i in range(len(subs)):
        for j in range(i + 1, len(subs)):
            joined = join(subs[i], subs[j])
            if joined.dim == ambient - 2:
                raise ConfigurationError(f"subspaces {i} and {j} coincide")
            if joined.dim != ambient - 1:
                raise ConfigurationError(
                    f"subspaces {i} and {j} span all of P^{ambient}; "
                    f"they do not lie in a common hyperplane"
                )
    total = subs[0]
    for s in subs[1:]:
        total = join(total, s)
    if total.dim != ambient:
        raise ConfigurationError(
            f"the family only spans a subspace of dimension {total.dim} in P^{ambient}"
        )
    lam = meet(subs[0], subs[1])
    for i, s in enumerate(subs[2:], start=2):
        if not s.contains_subspace(lam):
            raise LowdegError(
                f"verification failed: subspace {i} does not contain the "
                f"candidate common subspace"
            )
    return lam


def _random_vector(rng: random.Random, field: Field, length: int) -> list[Scalar]:
    while True:
        if isinstance(field, PrimeField):
            vec: list[Scalar] = [rng.randrange(field.p) for _ in range(length)]
        else:
            vec = [Fraction(rng.randint(-9, 9)) for _ in range(length)]
        if any(not field.is_zero(x) for x in vec):
            return vec


def random_point(rng: random.Random, field: Field, ambient: int) -> ProjPoint:
    return ProjPoint(field, tuple(_random_vector(rng, field, ambient + 1)))


def random_subspace(rng: random.Random, field: Field, ambient: int, dim: int) -> ProjSubspace:
    """Uniform-ish subspace of the requested projective dimension (resamples
    until the spanning vectors are independent)."""
    if not -1 <= dim <= ambient:
        raise LowdegError(f"dimension {dim} out of range for P^{ambient}")
    if dim == -1:
        return ProjSubspace.empty(field, ambient)
    while True:
        vectors = [_random_vector(rng, field, ambient + 1) for _ in range(dim + 1)]
        candidate = ProjSubspace.from_vectors(field, ambient, vectors)
        if candidate.dim == dim:
            return candidate


def random_common_subspace_instance(
    rng: random.Random,
    field: Field,
    ambient: int,
    count: int = 4,
) -> list[ProjSubspace]:
    """A valid random input for :func:`common_subspace`: a planted
    codimension-3 subspace fattened by one extra point per member.  Redraws
    until every precondition holds (small fields can produce degenerate
    draws)."""
    if ambient < 3:
        raise ConfigurationError("need ambient dimension at least 3")
    if count < 2:
        raise ConfigurationError("need at least two members")
    while True:
        planted = random_subspace(rng, field, ambient, ambient - 3)
        members = []
        for _ in range(count):
            extra = random_point(rng, field, ambient)
            candidate = join(planted, span([extra]))
            if candidate.dim == ambient - 2:
                members.append(candidate)
        if len(members) < count:
            continue
        try:
            common_subspace(members)
        except ConfigurationError:
            continue
        return members


# ---------------------------------------------------------------------------
# Plane point sets and the Sylvester-Gallai property


@dataclass(frozen=True)
class PointConfig:
    """A finite set of pairwise distinct points in a common projective space."""

    points: tuple[ProjPoint, ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ConfigurationError("a point configuration must be nonempty")
        first = self.points[0]
        seen = set()
        for p in self.points:
            require_same_field(first.field, p.field)
            if p.ambient != first.ambient:
                raise ConfigurationError(
                    f"points live in P^{first.ambient} and P^{p.ambient}"
                )
            if p.coords in seen:
                raise ConfigurationError(f"duplicate point {p.coords}")
            seen.add(p.coords)

    @property
    def field(self) -> Field:
        return self.points[0].field

    @property
    def ambient(self) -> int:
        return self.points[0].ambient

    def __len__(self) -> int:
        return len(self.points)


def _det3(field: Field, p: Sequence[Scalar], q: Sequence[Scalar], r: Sequence[Scalar]) -> Scalar:
    raw = (
        p[0] * q[1] * r[2]
        + p[1] * q[2] * r[0]
        + p[2] * q[0] * r[1]
        - p[2] * q[1] * r[0]
        - p[1] * q[0] * r[2]
        - p[0] * q[2] * r[1]
    )
    return field.coerce(raw)


def collinear(config: PointConfig, i: int, j: int, k: int) -> bool:
    """Exact collinearity of three configuration points in the plane."""
    if config.ambient != 2:
        raise ConfigurationError("collinearity checks require points in the plane")
    pts = config.points
    return config.field.is_zero(_det3(config.field, pts[i].coords, pts[j].coords, pts[k].coords))


@dataclass(frozen=True)
class SylvesterGallaiReport:
    """Outcome of the two incidence properties of a plane configuration:
    every connecting line carries a third point (``is_sylvester_gallai``)
    and the size of the largest collinear subset.  When the first property
    fails, ``witness`` holds the indices of an ordinary pair."""

    num_points: int
    is_sylvester_gallai: bool
    max_collinear: int
    witness: Optional[Pair]


def check_sylvester_gallai(config: PointConfig) -> SylvesterGallaiReport:
    """Cubic-time scan of all point triples; exact arithmetic throughout."""
    if config.ambient != 2:
        raise ConfigurationError(f"expected points in P^2, got P^{config.ambient}")
    n = len(config)
    if n < 3:
        raise ConfigurationError(f"need at least 3 points, got {n}")
    is_sg = True
    witness: Optional[Pair] = None
    max_collinear = 0
    for i in range(n):
        for j in range(i + 1, n):
            on_line = 2 + sum(
                1 for k in range(n) if k != i and k != j and collinear(config, i, j, k)
            )
            if on_line > max_collinear:
                max_collinear = on_line
            if on_line == 2 and witness is None:
                is_sg = False
                witness = (i, j)
    return SylvesterGallaiReport(
        num_points=n,
        is_sylvester_gallai=is_sg,
        max_collinear=max_collinear,
        witness=witness,
    )


def maximal_lines(config: PointConfig) -> tuple[tuple[int, ...], ...]:
    """All lines spanned by the configuration, as sorted index tuples of the
    points lying on them (each line listed once)."""
    if config.ambient != 2:
        raise ConfigurationError(f"expected points in P^2, got P^{config.ambient}")
    n = len(config)
    lines = set()
    for i in range(n):
        for j in range(i + 1, n):
            members = [i, j] + [
                k for k in range(n) if k != i and k != j and collinear(config, i, j, k)
            ]
            lines.add(tuple(sorted(members)))
    return tuple(sorted(lines))


def hesse_configuration() -> PointConfig:
    """The nine points (x, y, 1), x, y in GF(3): a Sylvester-Gallai
    configuration whose twelve lines carry three points each."""
    gf3 = PrimeField(3)
    points = tuple(
        ProjPoint(gf3, (x, y, 1)) for x in range(3) for y in range(3)
    )
    return PointConfig(points)


# ---------------------------------------------------------------------------
# Unordered pairs over Z/N and their two divisor families


@dataclass(frozen=True)
class Sym2GroupModel:
    """Unordered pairs {x, y} over Z/N, diagonal included; N(N+1)/2 elements."""

    modulus: int

    def __post_init__(self) -> None:
        if not isinstance(self.modulus, int) or isinstance(self.modulus, bool):
            raise ConfigurationError(f"modulus must be an integer, got {self.modulus!r}")
        if self.modulus < 5:
            raise ConfigurationError(f"modulus must be at least 5, got {self.modulus}")

    @property
    def size(self) -> int:
        return self.modulus * (self.modulus + 1) // 2

    def elements(self) -> tuple[Pair, ...]:
        n = self.modulus
        return tuple((x, y) for x in range(n) for y in range(x, n))

    def normalize(self, pair: Pair) -> Pair:
        x, y = pair[0] % self.modulus, pair[1] % self.modulus
        return (x, y) if x <= y else (y, x)


def sym2_model(modulus: int) -> Sym2GroupModel:
    return Sym2GroupModel(modulus)


def pairs_containing(model: Sym2GroupModel, x: int) -> frozenset[Pair]:
    """The point-divisor at x: every pair with x as a member (N pairs,
    the diagonal {x, x} included)."""
    return frozenset(model.normalize((x, y)) for y in range(model.modulus))


def pairs_with_sum(model: Sym2GroupModel, s: int) -> frozenset[Pair]:
    """The fiber-divisor at s: every pair {x, s - x}.

    For odd N this has (N+1)/2 elements for every s; for even N it has
    N/2 + 1 elements when s is even (two diagonal members) and N/2 when s
    is odd (none).
    """
    return frozenset(model.normalize((x, s - x)) for x in range(model.modulus))


@dataclass(frozen=True)
class IncidenceReport:
    modulus: int
    checks_run: int
    violations: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def incidence_pairing_check(model: Sym2GroupModel) -> IncidenceReport:
    """Exhaustively verify the three incidence counts of the divisor families:
    |point(x) & point(y)| = 1, |point(x) & fiber(s)| = 1, |fiber(s) & fiber(t)| = 0
    for x != y and s != t.  These are the lattice products 1, 1, 0."""
    n = model.modulus
    point_divs = [pairs_containing(model, x) for x in range(n)]
    fiber_divs = [pairs_with_sum(model, s) for s in range(n)]
    violations = []
    checks = 0
    for x in range(n):
        for y in range(x + 1, n):
            checks += 1
            got = len(point_divs[x] & point_divs[y])
            if got != 1:
                violations.append(f"|point({x}) & point({y})| = {got}, expected 1")
    for x in range(n):
        for s in range(n):
            checks += 1
            got = len(point_divs[x] & fiber_divs[s])
            if got != 1:
                violations.append(f"|point({x}) & fiber({s})| = {got}, expected 1")
    for s in range(n):
        for t in range(s + 1, n):
            checks += 1
            got = len(fiber_divs[s] & fiber_divs[t])
            if got != 0:
                violations.append(f"|fiber({s}) & fiber({t})| = {got}, expected 0")
    return IncidenceReport(modulus=n, checks_run=checks, violations=tuple(violations))


@dataclass(frozen=True)
class TwoDivisorReport:
    """Membership audit of a subset against the point-divisor family.

    Every off-diagonal pair must lie in exactly two point-divisors (the
    ones at its two members); diagonal pairs are flagged because they lie
    in only one.  ``degrees`` counts, per group element x, how many subset
    members the point-divisor at x contains."""

    modulus: int
    subset_size: int
    flagged_diagonal: tuple[Pair, ...]
    violations: tuple[str, ...]
    degrees: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return not self.violations and not self.flagged_diagonal


def two_divisor_check(model: Sym2GroupModel, subset: Iterable[Pair]) -> TwoDivisorReport:
    n = model.modulus
    members = sorted({model.normalize(p) for p in subset})
    point_divs = {x: pairs_containing(model, x) for x in range(n)}
    flagged = tuple(p for p in members if p[0] == p[1])
    violations = []
    for p in members:
        if p[0] == p[1]:
            continue
        holders = [x for x in range(n) if p in point_divs[x]]
        if len(holders) != 2 or set(holders) != {p[0], p[1]}:
            violations.append(f"pair {p} lies in point-divisors {holders}, expected {sorted(p)}")
    member_set = set(members)
    degrees = tuple((x, len(point_divs[x] & member_set)) for x in range(n))
    return TwoDivisorReport(
        modulus=n,
        subset_size=len(members),
        flagged_diagonal=flagged,
        violations=tuple(violations),
        degrees=degrees,
    )
