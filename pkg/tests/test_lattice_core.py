from fractions import Fraction

import pytest
from sympy import Matrix

from toricdeg.core.exceptions import DimensionMismatch, NotPointed
from toricdeg.models.lattice import CertificateKind, GeneratorMatrix, dot
from toricdeg.services import lattice_core


def cols(*columns):
    return GeneratorMatrix.from_columns(columns)


@pytest.mark.parametrize("a,b", [(240, 46), (17, 5), (0, 9), (-12, 18)])
def test_xgcd_bezout(a, b):
    x, y, g = lattice_core.xgcd(a, b)
    assert g >= 0
    assert x * a + y * b == g
    assert a % g == 0 and b % g == 0


def test_kernel_of_numerical_semigroup():
    kernel = lattice_core.lattice_kernel(cols((2,), (3,)))
    assert len(kernel) == 1
    u = kernel[0]
    assert 2 * u[0] + 3 * u[1] == 0
    assert abs(u[0]) == 3 and abs(u[1]) == 2


def test_kernel_of_twisted_cubic():
    A = cols((1, 0), (1, 1), (1, 2), (1, 3))
    kernel = lattice_core.lattice_kernel(A)
    assert len(kernel) == 2
    for u in kernel:
        assert A.image(u) == (0, 0)
    assert lattice_core.rank(A) == 2


@pytest.mark.parametrize(
    "columns,expected",
    [
        (((2,), (3,)), True),
        (((2,), (4,)), False),
        (((1, 0), (1, 1), (3, 4)), True),
        (((2, 0), (0, 2)), False),
        (((1, 0),), False),
    ],
)
def test_is_full_lattice(columns, expected):
    assert lattice_core.is_full_lattice(cols(*columns)) is expected


def test_pointed_functional_is_positive_on_every_column():
    A = cols((1, 0, 1), (1, 1, 1), (3, 4, 1), (0, 0, 1))
    pointed, functional = lattice_core.is_pointed(A)
    assert pointed
    assert all(dot(functional, c) > 0 for c in A.columns)


def test_not_pointed():
    assert lattice_core.is_pointed(cols((1,), (-1,))) == (False, None)
    assert lattice_core.is_pointed(cols((1, 0), (0, 1), (-1, -1)))[0] is False


def test_solve_lp_exact_optimum():
    result = lattice_core.solve_lp([[1, 2]], [4], cost=[1, 1])
    assert result.status is lattice_core.LPStatus.optimal
    assert result.value == 2
    assert result.x == (Fraction(0), Fraction(2))


def test_solve_lp_infeasible():
    result = lattice_core.solve_lp([[1, 1]], [-1])
    assert result.status is lattice_core.LPStatus.infeasible


def test_cone_member_certificate_reproduces_point():
    A = cols((1, 0, 1), (1, 1, 1), (3, 4, 1), (0, 0, 1))
    inside, cert = lattice_core.cone_member((2, 2, 1), A)
    assert inside
    assert cert.kind is CertificateKind.membership
    assert cert.reproduces(A, (2, 2, 1))


def test_cone_member_outside():
    inside, cert = lattice_core.cone_member((-1, 0), cols((1, 0), (1, 1)))
    assert not inside
    assert cert.kind is CertificateKind.infeasible
    assert cert.coefficients == ()


def test_cone_member_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        lattice_core.cone_member((1, 2, 3), cols((1, 0), (1, 1)))


def test_zonotope_of_numerical_semigroup():
    assert lattice_core.zonotope_points(cols((2,), (3,))) == [(k,) for k in range(6)]


def test_zonotope_of_a2():
    points = lattice_core.zonotope_points(cols((1, 0), (1, 1), (2, 3)))
    assert set(points) == {
        (0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (2, 3), (3, 3), (3, 4), (4, 4),
    }
    assert points[0] == (0, 0)


def test_zonotope_of_empty_configuration():
    A = GeneratorMatrix.from_columns([], ambient_dim=2)
    assert lattice_core.zonotope_points(A) == [(0, 0)]


def test_zonotope_needs_pointed_cone():
    with pytest.raises(NotPointed):
        lattice_core.zonotope_points(cols((1,), (-1,)))


def test_primitive_integer():
    assert lattice_core.primitive_integer([Fraction(1, 2), Fraction(3, 4)]) == (2, 3)
    assert lattice_core.primitive_integer([Fraction(-5, 6), Fraction(1)]) == (-5, 6)


@pytest.mark.parametrize(
    "columns",
    [
        ((2,), (3,)),
        ((1, 0), (1, 1), (1, 2), (1, 3)),
        ((1, 1, 0), (2, 0, 1), (0, 1, 0), (0, 0, 1)),
        ((2, 4), (1, 2), (3, 6)),
    ],
)
def test_rank_and_kernel_against_sympy(columns):
    A = cols(*columns)
    expected = Matrix(A.rows).rank()
    assert lattice_core.rank(A) == expected
    assert len(lattice_core.lattice_kernel(A)) == A.count - expected


@pytest.mark.parametrize(
    "columns",
    [
        ((2,), (3,)),
        ((1, 0), (1, 1), (2, 3)),
        ((1, 0), (1, 1), (3, 4)),
        ((1, 0), (1, 1), (1, 2), (1, 3)),
    ],
)
def test_zonotope_is_centrally_symmetric(columns):
    A = cols(*columns)
    total = tuple(map(sum, zip(*A.columns)))
    points = set(lattice_core.zonotope_points(A))
    assert {tuple(s - c for s, c in zip(total, p)) for p in points} == points
    assert total in points
