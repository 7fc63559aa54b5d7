import pytest

from unproj.coeff import make_field
from unproj.pfaffian import (
    MatrixShapeError,
    SkewSymmetricMatrix,
    determinant,
    kernel_residual,
    matrix_rank,
    pfaffian,
    submaximal_pfaffians,
)
from unproj.polyring import make_ring, parse_poly


def _random_skew(ring, size, rng):
    fld = ring.field
    entries = {
        (i, j): ring.constant(fld.random_element(rng))
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
    }
    return SkewSymmetricMatrix.from_upper(ring, size, entries)


def test_pfaffian_squared_is_determinant(gf31, rng):
    ring = make_ring(["x"], [1], gf31)
    for _ in range(100):
        size = rng.choice([2, 4, 6, 8])
        matrix = _random_skew(ring, size, rng)
        pf = pfaffian(matrix)
        assert pf * pf == determinant(matrix.rows())


def test_pfaffian_of_4x4(qq):
    ring = make_ring(["a", "b", "c", "d", "e", "f"], [1] * 6, qq)
    g = ring.gen
    matrix = SkewSymmetricMatrix.from_upper(
        ring, 4, {(1, 2): g("a"), (1, 3): g("b"), (1, 4): g("c"), (2, 3): g("d"), (2, 4): g("e"), (3, 4): g("f")}
    )
    assert pfaffian(matrix) == parse_poly("a*f - b*e + c*d", ring)


def test_generic_5x5_kernel_identity(qq):
    names = [f"a{i}{j}" for i in range(1, 6) for j in range(i + 1, 6)]
    ring = make_ring(names, [1] * len(names), qq)
    matrix = SkewSymmetricMatrix.from_upper(
        ring, 5, {(int(n[1]), int(n[2])): ring.gen(n) for n in names}
    )
    assert len(submaximal_pfaffians(matrix)) == 5
    assert all(entry.is_zero() for entry in kernel_residual(matrix))


def test_shape_errors(xyz_ring):
    with pytest.raises(MatrixShapeError):
        pfaffian(SkewSymmetricMatrix.from_upper(xyz_ring, 3, {}))
    with pytest.raises(MatrixShapeError):
        SkewSymmetricMatrix.from_upper(xyz_ring, 3, {(2, 1): xyz_ring.gen("x")})
    with pytest.raises(MatrixShapeError):
        determinant([[xyz_ring.gen("x"), xyz_ring.gen("y")]])


def test_matrix_rank(gf31):
    fld = make_field(gf31)
    assert matrix_rank([[1, 2], [2, 4]], fld) == 1
    assert matrix_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]], fld) == 3
    assert matrix_rank([], fld) == 0
