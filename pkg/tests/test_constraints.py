import random
from fractions import Fraction

import pytest

from algequiv.constraints import (
    PatternMatrixConstraint,
    PolynomialConstraint,
    build_correlation,
    build_minor,
    build_partial_correlation,
    degree,
    evaluate,
    expand_pattern,
)
from algequiv.errors import DimensionMismatch
from algequiv.field import M31, M127, ff_from_rational
from algequiv.linalg import FieldMatrix

from conftest import SPURIOUS_SIGMA


def embed(rows, m):
    return FieldMatrix(m, [[ff_from_rational(Fraction(x).numerator, Fraction(x).denominator, m) for x in r] for r in rows])


def spurious_generators():
    a, b, c, d, e = range(5)
    return [
        build_correlation(a, e),
        build_correlation(b, e),
        build_correlation(c, e),
        build_minor([b, c], [d, c]),
        PatternMatrixConstraint((((a, a), (a, b), None), ((b, a), (b, b), (b, d)), ((c, a), (c, b), (c, d)))),
        PatternMatrixConstraint((((a, a), (a, b), None), ((b, a), (b, b), (b, c)), ((c, a), (c, b), (c, c)))),
    ]


@pytest.mark.parametrize("m", [M31, M127])
def test_spurious_sigma_satisfies_generators(m):
    s = embed(SPURIOUS_SIGMA, m)
    for f in spurious_generators():
        assert int(evaluate(f, s)) == 0
    # yet sigma_de is nonzero
    assert int(evaluate(build_correlation(3, 4), s)) != 0


def test_last_generator_arithmetic():
    # 1 - 9/16 - 9/16 + 2/16 = 0, evaluated over the rationals for comparison
    s = [[Fraction(x) for x in r] for r in SPURIOUS_SIGMA]
    det = (
        s[0][0] * (s[1][1] * s[2][2] - s[1][2] * s[2][1])
        - s[0][1] * (s[1][0] * s[2][2] - s[1][2] * s[2][0])
    )
    assert det == 0


def test_builders():
    assert build_correlation(1, 2).cells == (((1, 2),),)
    pc = build_partial_correlation(0, 1, [2])
    assert pc.cells == (((0, 1), (0, 2)), ((2, 1), (2, 2)))
    with pytest.raises(ValueError):
        build_partial_correlation(0, 1, [1])
    with pytest.raises(DimensionMismatch):
        build_minor([0, 1], [2])
    with pytest.raises(DimensionMismatch):
        PatternMatrixConstraint((((0, 1), None),))


def test_degree():
    assert degree(build_minor([0, 1, 2], [3, 4, 5])) == 3
    assert degree(PolynomialConstraint([(1, [(0, 1), (2, 3)]), (-4, [(0, 0)])])) == 2


def test_polynomial_matches_pattern():
    rng = random.Random(3)
    for _ in range(50):
        r = rng.randint(1, 4)
        cells = tuple(
            tuple(None if rng.random() < 0.2 else (rng.randrange(5), rng.randrange(5)) for _ in range(r))
            for _ in range(r)
        )
        f = PatternMatrixConstraint(cells)
        sym = [[0] * 5 for _ in range(5)]
        for i in range(5):
            for j in range(i, 5):
                sym[i][j] = sym[j][i] = rng.randrange(M31.p)
        s = FieldMatrix(M31, sym)
        assert evaluate(expand_pattern(f), s) == evaluate(f, s)


def test_pattern_may_exceed_n():
    # a 3 x 3 pattern over a 2-node Sigma is legal
    f = PatternMatrixConstraint((((0, 0), (0, 1), None), ((1, 0), (1, 1), None), (None, None, (0, 0))))
    s = FieldMatrix(M31, [[2, 1], [1, 3]])
    assert int(evaluate(f, s)) == 5 * 2


def test_out_of_range_node():
    with pytest.raises(IndexError):
        evaluate(build_correlation(0, 5), FieldMatrix(M31, [[1, 0], [0, 1]]))
