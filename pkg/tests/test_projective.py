import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lowdeg.errors import (
    AmbientMismatchError,
    LowdegError,
    MixedFieldError,
    ProjectionError,
)
from lowdeg.fields import QQ, PrimeField
from lowdeg.projective import (
    ProjPoint,
    ProjSubspace,
    contains,
    join,
    meet,
    project_from,
    project_subspace_from,
    projected_span_dim,
    rref,
    span,
)

GF5 = PrimeField(5)
GF101 = PrimeField(101)
BIG_PRIME = PrimeField(2147483647)


def qpoint(*coords):
    return ProjPoint(QQ, tuple(coords))


def qspace(ambient, *vectors):
    return ProjSubspace.from_vectors(QQ, ambient, vectors)


def unit(ambient, i):
    return qpoint(*(1 if j == i else 0 for j in range(ambient + 1)))


class TestRref:
    def test_identity_fixed_point(self):
        rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        reduced, pivots = rref(rows, QQ)
        assert reduced == tuple(tuple(map(Fraction, r)) for r in rows)
        assert pivots == (0, 1, 2)

    def test_proportional_rows_collapse(self):
        reduced, _ = rref([[2, 4], [1, 2]], QQ)
        assert reduced == ((Fraction(1), Fraction(2)),)

    def test_hand_elimination(self):
        reduced, _ = rref([[1, 1, 0], [0, 1, 1], [1, 0, -1]], QQ)
        assert reduced == (
            (Fraction(1), Fraction(0), Fraction(-1)),
            (Fraction(0), Fraction(1), Fraction(1)),
        )

    def test_ragged_matrix_rejected(self):
        with pytest.raises(LowdegError):
            rref([[1, 2], [1]], QQ)

    def test_mixed_entries_rejected(self):
        with pytest.raises(MixedFieldError):
            rref([[Fraction(1, 2), 1]], GF5)

    @settings(max_examples=60)
    @given(
        rows=st.lists(
            st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=1, max_size=5
        )
    )
    def test_idempotent_over_qq_and_gf5(self, rows):
        for field in (QQ, GF5):
            reduced, _ = rref(rows, field)
            again, _ = rref(reduced, field)
            assert again == reduced


class TestProjPoint:
    def test_normalization(self):
        assert qpoint(2, 4, 6).coords == (1, 2, 3)
        assert ProjPoint(GF5, (0, 2, 1)).coords == (0, 1, 3)  # scaled by inverse of 2

    def test_canonical_equality(self):
        assert qpoint(2, 4, 6) == qpoint(1, 2, 3)
        assert qpoint(1, 0, 0) != qpoint(0, 1, 0)

    def test_zero_vector_rejected(self):
        with pytest.raises(LowdegError):
            qpoint(0, 0, 0)


class TestSpan:
    def test_collinear_points_make_a_line(self):
        pts = [qpoint(1, 0, 1), qpoint(1, 1, 1), qpoint(1, 2, 1)]
        # collinear: all on the line through (1,0,1) with direction (0,1,0)
        assert span(pts).dim == 1

    def test_coordinate_points_span_everything(self):
        pts = [unit(3, i) for i in range(4)]
        assert span(pts) == ProjSubspace.full(QQ, 3)

    def test_empty_span(self):
        s = span([], field=QQ, ambient=2)
        assert s.dim == -1 and s.is_empty

    def test_empty_span_needs_context(self):
        with pytest.raises(LowdegError):
            span([])

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            span([qpoint(1, 0), qpoint(1, 0, 0)])

    def test_field_mismatch(self):
        with pytest.raises(MixedFieldError):
            span([qpoint(1, 0, 0), ProjPoint(GF5, (0, 1, 0))])

    def test_canonical_independent_of_presentation(self):
        a = span([qpoint(1, 2, 3), qpoint(0, 1, 1)])
        b = span([qpoint(2, 4, 6), qpoint(1, 3, 4), qpoint(0, 2, 2)])
        assert a == b


class TestMeetJoin:
    def test_two_hyperplanes(self):
        for n in (3, 4):
            h1 = ProjSubspace.from_vectors(
                QQ, n, [[1 if j == i else 0 for j in range(n + 1)] for i in range(n)]
            )
            h2 = ProjSubspace.from_vectors(
                QQ, n, [[1 if j == i + 1 else 0 for j in range(n + 1)] for i in range(n)]
            )
            assert meet(h1, h2).dim == n - 2

    def test_meet_idempotent(self):
        s = qspace(3, [1, 2, 3, 4], [0, 1, 0, 1])
        assert meet(s, s) == s

    def test_general_planes_in_p5_miss(self):
        rng = random.Random(7)
        while True:
            rows1 = [[rng.randrange(101) for _ in range(6)] for _ in range(3)]
            rows2 = [[rng.randrange(101) for _ in range(6)] for _ in range(3)]
            s1 = ProjSubspace.from_vectors(GF101, 5, rows1)
            s2 = ProjSubspace.from_vectors(GF101, 5, rows2)
            stacked, _ = rref(rows1 + rows2, GF101)
            if s1.dim == 2 and s2.dim == 2 and len(stacked) == 6:
                break  # certified general: stacked basis has full rank
        assert meet(s1, s2).is_empty

    def test_join_of_two_points_is_a_line(self):
        assert join(span([qpoint(1, 0, 0)]), span([qpoint(0, 1, 0)])).dim == 1

    def test_join_with_empty_is_identity(self):
        s = qspace(3, [1, 0, 0, 2], [0, 1, 1, 0])
        assert join(s, ProjSubspace.empty(QQ, 3)) == s

    def test_skew_lines_fill_p3(self):
        l1 = qspace(3, [1, 0, 0, 0], [0, 1, 0, 0])
        l2 = qspace(3, [0, 0, 1, 0], [0, 0, 0, 1])
        assert join(l1, l2).dim == 3

    def test_ambient_mismatch(self):
        with pytest.raises(AmbientMismatchError):
            meet(qspace(2, [1, 0, 0]), qspace(3, [1, 0, 0, 0]))

    def test_field_mismatch(self):
        s_q = qspace(2, [1, 0, 0])
        s_5 = ProjSubspace.from_vectors(GF5, 2, [[1, 0, 0]])
        with pytest.raises(MixedFieldError):
            join(s_q, s_5)


class TestContains:
    def test_basis_points_are_members(self):
        s = qspace(3, [1, 0, 2, 0], [0, 1, 1, 1])
        for p in s.basis_points():
            assert contains(s, p)

    def test_point_off_a_line(self):
        line = qspace(2, [1, 0, 0], [0, 1, 0])
        assert not contains(line, qpoint(0, 0, 1))
        assert not contains(line, qpoint(1, 1, 7))

    def test_empty_contains_nothing(self):
        assert not contains(ProjSubspace.empty(QQ, 2), qpoint(1, 0, 0))


class TestProjection:
    def test_line_through_center_collapses(self):
        center = span([qpoint(0, 0, 1)])
        # three points on a line through the center
        images = {
            project_from(center, p).coords
            for p in (qpoint(1, 1, 0), qpoint(1, 1, 1), qpoint(1, 1, 4))
        }
        assert len(images) == 1

    def test_line_missing_center_projects_injectively(self):
        center = span([qpoint(0, 0, 1)])
        images = {
            project_from(center, p).coords
            for p in (qpoint(1, 0, 0), qpoint(0, 1, 0), qpoint(1, 1, 0))
        }
        assert len(images) == 3
        assert span([ProjPoint(QQ, c) for c in images]).dim == 1

    def test_empty_center_is_identity(self):
        p = qpoint(3, 1, 4)
        assert project_from(ProjSubspace.empty(QQ, 2), p) == p

    def test_point_in_center_rejected(self):
        center = span([qpoint(1, 0, 0), qpoint(0, 1, 0)])
        with pytest.raises(ProjectionError):
            project_from(center, qpoint(1, 1, 0))

    def test_quotient_dimension(self):
        center = qspace(5, [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0])
        image = project_from(center, qpoint(0, 0, 0, 1, 2, 3))
        assert image.ambient == 5 - (center.dim + 1)

    def test_disjoint_plane_keeps_dimension_in_p5(self):
        center = qspace(5, [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1])
        plane = qspace(5, [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0])
        assert meet(center, plane).is_empty
        assert projected_span_dim(center, plane) == 2
        assert project_subspace_from(center, plane).dim == 2


class TestProjectedSpanDim:
    def test_point_center_line(self):
        center = span([unit(3, 0)])
        line = qspace(3, [0, 1, 0, 0], [0, 0, 1, 0])
        assert projected_span_dim(center, line) == 1

    def test_concurrent_lines_collapse(self):
        center = qspace(3, [1, 0, 0, 0], [0, 1, 0, 0])
        line = qspace(3, [0, 1, 0, 0], [0, 0, 1, 0])  # meets the center at one point
        assert projected_span_dim(center, line) == 0

    def test_planes_meeting_in_a_point_in_p5(self):
        s = qspace(5, [1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0])
        v = qspace(5, [0, 0, 1, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0])
        assert meet(s, v).dim == 0
        assert projected_span_dim(v, s) == s.dim - meet(s, v).dim - 1 == 1

    def test_subspace_inside_center_rejected(self):
        v = qspace(3, [1, 0, 0, 0], [0, 1, 0, 0])
        s = qspace(3, [1, 0, 0, 0])
        with pytest.raises(ProjectionError):
            projected_span_dim(v, s)
        with pytest.raises(ProjectionError):
            projected_span_dim(v, ProjSubspace.empty(QQ, 3))


# ---------------------------------------------------------------------------
# Property tests


@st.composite
def subspace_pairs(draw):
    field = draw(st.sampled_from([QQ, GF5, GF101]))
    ambient = draw(st.integers(2, 5))
    rows = st.lists(st.integers(-5, 5), min_size=ambient + 1, max_size=ambient + 1)
    v1 = draw(st.lists(rows, min_size=1, max_size=ambient + 1))
    v2 = draw(st.lists(rows, min_size=1, max_size=ambient + 1))
    s1 = ProjSubspace.from_vectors(field, ambient, v1)
    s2 = ProjSubspace.from_vectors(field, ambient, v2)
    return s1, s2


@settings(max_examples=120)
@given(pair=subspace_pairs())
def test_grassmann_dimension_formula(pair):
    s1, s2 = pair
    met, joined = meet(s1, s2), join(s1, s2)
    # with dim(empty) = -1 this is an exact identity
    assert met.dim + joined.dim == s1.dim + s2.dim
    if met.is_empty:
        assert joined.dim == s1.dim + s2.dim + 1
    assert joined.dim <= s1.ambient


@settings(max_examples=120)
@given(pair=subspace_pairs())
def test_projection_law(pair):
    center, s = pair
    if s.is_empty or center.contains_subspace(s):
        return
    expected = s.dim - meet(center, s).dim - 1
    assert projected_span_dim(center, s) == expected
    assert project_subspace_from(center, s).dim == expected


@settings(max_examples=120)
@given(pair=subspace_pairs())
def test_meet_and_join_are_canonical_and_contained(pair):
    s1, s2 = pair
    met, joined = meet(s1, s2), join(s1, s2)
    assert s1.contains_subspace(met) and s2.contains_subspace(met)
    assert joined.contains_subspace(s1) and joined.contains_subspace(s2)
    # outputs are valid canonical subspaces: reconstructing from their rows is a no-op
    assert ProjSubspace.from_vectors(met.field, met.ambient, met.rows) == met
    assert ProjSubspace.from_vectors(joined.field, joined.ambient, joined.rows) == joined


def test_rank_agrees_between_qq_and_big_prime_field():
    rng = random.Random(20260808)
    for _ in range(60):
        n_rows = rng.randint(1, 5)
        n_cols = rng.randint(2, 7)
        rows = [[rng.randint(-9, 9) for _ in range(n_cols)] for _ in range(n_rows)]
        over_q, _ = rref(rows, QQ)
        over_p, _ = rref(rows, BIG_PRIME)
        # entries are tiny compared to the modulus, so every minor survives reduction
        assert len(over_q) == len(over_p)


def test_deterministic_outputs():
    vectors = [[3, 1, 4, 1], [5, 9, 2, 6], [5, 3, 5, 8]]
    first = ProjSubspace.from_vectors(QQ, 3, vectors)
    second = ProjSubspace.from_vectors(QQ, 3, vectors)
    assert first == second and first.rows == second.rows


def test_subspace_rejects_non_canonical_rows():
    with pytest.raises(LowdegError):
        ProjSubspace(QQ, 2, ((Fraction(2), Fraction(0), Fraction(0)),))
    with pytest.raises(LowdegError):
        ProjSubspace(QQ, 2, ((Fraction(0), Fraction(1), Fraction(0)), (Fraction(1), Fraction(0), Fraction(0))))
