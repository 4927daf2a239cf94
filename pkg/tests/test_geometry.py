from fractions import Fraction

import pytest

from polydouble.catalog import (
    cube_hrep,
    polygon_complex,
    polygon_hrep,
    simplex_hrep,
)
from polydouble.complexes import double_complex, equal_under_relabel
from polydouble.errors import (
    Empty,
    Infeasible,
    NotSimple,
    RankDeficient,
    RedundantRow,
    Unbounded,
    ValidationError,
)
from polydouble.geometry import (
    LinearSlice,
    PolytopeSystem,
    derive_linear_slice,
    double_system,
    dual_complex_from_hrep,
    enumerate_slice_vertices,
    enumerate_vertices,
    recession_cone_is_trivial,
    validate_hrep,
)

F = Fraction


def system(A, b):
    return validate_hrep(
        [[F(v) for v in row] for row in A], [F(v) for v in b]
    )


SQUARE = ([[1, 0], [0, 1], [-1, 0], [0, -1]], [0, 0, 1, 1])
PENTAGON = ([[1, 0], [0, 1], [-1, 0], [0, -1], [-1, -1]], [0, 0, 2, 2, 3])
TRIANGLE = ([[1, 0], [0, 1], [-1, -1]], [0, 0, 1])
SEGMENT = ([[1], [-1]], [0, 1])


class TestValidateHrep:
    def test_square(self):
        S = system(*SQUARE)
        assert (S.m, S.n) == (4, 2)

    def test_pentagon(self):
        S = system(*PENTAGON)
        assert (S.m, S.n) == (5, 2)

    def test_half_plane_unbounded(self):
        with pytest.raises(Unbounded):
            system([[1, 0], [0, 1], [0, -1]], [0, 0, 1])

    def test_empty(self):
        with pytest.raises(Empty):
            system([[1], [-1]], [0, -1])

    def test_not_simple(self):
        # Three concurrent lines through the origin vertex.
        with pytest.raises(NotSimple):
            system([[1, 0], [0, 1], [-1, -1], [1, 1]], [0, 0, 1, 0])

    def test_redundant_row(self):
        # x + y <= 3 never touches the unit square.
        with pytest.raises(RedundantRow) as info:
            system([[1, 0], [0, 1], [-1, 0], [0, -1], [-1, -1]], [0, 0, 1, 1, 3])
        assert info.value.row == 5

    def test_too_few_rows(self):
        with pytest.raises(ValidationError):
            system([[1, 0]], [1])


def test_recession_cone_line_is_not_trivial():
    # {y = 0} contains the whole x-axis even though the y-projection is {0}.
    assert not recession_cone_is_trivial(
        ((F(0), F(1)), (F(0), F(-1)))
    )


class TestEnumerateVertices:
    def test_square(self):
        vs = enumerate_vertices(system(*SQUARE))
        assert [tuple(map(int, v)) for v in vs.vertices] == [
            (0, 0), (0, 1), (1, 0), (1, 1),
        ]

    def test_pentagon_frozen(self):
        vs = enumerate_vertices(system(*PENTAGON))
        assert [tuple(map(int, v)) for v in vs.vertices] == [
            (0, 0), (0, 2), (1, 2), (2, 0), (2, 1),
        ]
        assert all(len(t) == 2 for t in vs.incidences)

    def test_triangle(self):
        vs = enumerate_vertices(system(*TRIANGLE))
        assert len(vs.vertices) == 3


class TestDualComplex:
    def test_square_is_four_cycle(self):
        dual = dual_complex_from_hrep(system(*SQUARE))
        assert set(dual.complex.facets_as_tuples()) == {
            (1, 2), (2, 3), (1, 4), (3, 4),
        }

    def test_pentagon_is_five_cycle(self):
        dual = dual_complex_from_hrep(system(*PENTAGON))
        relabel = {1: 1, 2: 2, 3: 3, 5: 4, 4: 5}
        assert equal_under_relabel(dual.complex, polygon_complex(5), relabel)

    def test_simplex(self):
        dual = dual_complex_from_hrep(system(*simplex_hrep(3)))
        assert len(dual.complex.maximal_faces) == 4
        assert dual.dim == 3


class TestLinearSlice:
    def test_segment(self):
        L = derive_linear_slice(system(*SEGMENT))
        assert L.C == ((1, 1),)
        assert L.q == (F(1),)

    def test_square_canonical(self):
        L = derive_linear_slice(system(*cube_hrep(2)))
        assert L.C == ((1, 0, 1, 0), (0, 1, 0, 1))
        assert L.q == (F(1), F(1))

    def test_triangle(self):
        L = derive_linear_slice(system(*TRIANGLE))
        assert L.C == ((1, 1, 1),)
        assert L.q == (F(1),)

    def test_pentagon_kernel_identities(self):
        S = system(*PENTAGON)
        L = derive_linear_slice(S)
        assert L.rows == 3 and L.cols == 5
        for row in L.C:
            for j in range(S.n):
                assert sum(row[i] * S.A[i][j] for i in range(S.m)) == 0
        assert L.q == tuple(
            sum(F(row[i]) * S.b[i] for i in range(S.m)) for row in L.C
        )

    def test_gale_columns(self):
        L = derive_linear_slice(system(*cube_hrep(2)))
        assert L.gale_columns() == ((1, 0), (0, 1), (1, 0), (0, 1))

    def test_rank_deficient(self):
        # Bypasses validation: all rows parallel, A has rank 1 < 2.
        S = PolytopeSystem(
            A=((F(1), F(0)), (F(2), F(0)), (F(-1), F(0))),
            b=(F(0), F(0), F(1)),
        )
        with pytest.raises(RankDeficient):
            derive_linear_slice(S)


class TestDoubleSystem:
    def test_segment_gives_simplex3_system(self):
        L = double_system(derive_linear_slice(system(*SEGMENT)))
        assert L.C == ((1, 1, 1, 1),)
        assert L.q == (F(1),)

    def test_empty_system(self):
        empty = LinearSlice(C=(), q=(), cols=0)
        assert double_system(empty) == empty

    def test_pentagon_shape_and_columns(self):
        base = derive_linear_slice(system(*PENTAGON))
        L = double_system(base)
        assert (L.rows, L.cols) == (3, 10)
        cols = L.gale_columns()
        assert cols[:5] == cols[5:] == base.gale_columns()


class TestSliceVertices:
    def test_doubled_segment(self):
        L = double_system(derive_linear_slice(system(*SEGMENT)))
        vs, dual = enumerate_slice_vertices(L)
        assert len(vs.vertices) == 4
        assert len(dual.complex.maximal_faces) == 4
        assert dual.dim == 3

    def test_pentagon_slice_matches_embedding(self):
        S = system(*PENTAGON)
        L = derive_linear_slice(S)
        vs, dual = enumerate_slice_vertices(L)
        expected = sorted(S.embed(v) for v in enumerate_vertices(S).vertices)
        assert list(vs.vertices) == expected
        assert dual.complex == dual_complex_from_hrep(S).complex

    def test_doubled_pentagon(self):
        S = system(*PENTAGON)
        L = double_system(derive_linear_slice(S))
        vs, dual = enumerate_slice_vertices(L)
        assert len(vs.vertices) == 40
        # Simplicity: exactly cols - rows = 7 zero coordinates each, so
        # exactly 3 positive ones.
        for v, tight in zip(vs.vertices, vs.incidences):
            assert len(tight) == 7
            assert sum(1 for c in v if c > 0) == 3
        assert dual.complex == double_complex(dual_complex_from_hrep(S).complex)

    def test_infeasible(self):
        with pytest.raises(Infeasible):
            enumerate_slice_vertices(LinearSlice(C=((1, 1),), q=(F(-1),), cols=2))

    def test_degenerate_not_simple(self):
        with pytest.raises(NotSimple):
            enumerate_slice_vertices(LinearSlice(C=((1, -1),), q=(F(0),), cols=2))


def test_round_trip_all_small_systems():
    for A, b in (SQUARE, PENTAGON, TRIANGLE, SEGMENT):
        S = system(A, b)
        direct = dual_complex_from_hrep(S)
        _, via_slice = enumerate_slice_vertices(derive_linear_slice(S))
        assert direct.complex == via_slice.complex


def test_polygon_hreps_have_matching_counts():
    for m in range(3, 9):
        S = validate_hrep(*polygon_hrep(m))
        assert S.m == m
        assert len(enumerate_vertices(S).vertices) == m
