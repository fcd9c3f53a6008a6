# Does a graph impose a polynomial constraint on its covariance matrices?
from fractions import Fraction
from pathlib import Path

from algequiv import (
    M31,
    FieldMatrix,
    PatternMatrixConstraint,
    build_correlation,
    build_minor,
    decide_constraint,
    evaluate,
    parse_constraint,
    parse_graph,
)
from algequiv.field import ff_from_rational

GRAPHS = Path(__file__).parent / "graphs"

# A positive definite matrix with sigma_de != 0.  It cannot come from the
# confounded chain (e is isolated there), yet it satisfies these six
# polynomials that all vanish on the model.
rational = [
    [1, Fraction(3, 4), Fraction(2, 9), 0, 0],
    [Fraction(3, 4), 1, Fraction(3, 4), 0, 0],
    [Fraction(2, 9), Fraction(3, 4), 1, 0, 0],
    [0, 0, 0, 1, Fraction(1, 2)],
    [0, 0, 0, Fraction(1, 2), 1],
]
sigma = FieldMatrix(M31, [[ff_from_rational(Fraction(v).numerator, Fraction(v).denominator, M31) for v in r] for r in rational])
a, b, c, d, e = range(5)
generators = [
    build_correlation(a, e),
    build_correlation(b, e),
    build_correlation(c, e),
    build_minor([b, c], [d, c]),
    PatternMatrixConstraint((((a, a), (a, b), None), ((b, a), (b, b), (b, d)), ((c, a), (c, b), (c, d)))),
    PatternMatrixConstraint((((a, a), (a, b), None), ((b, a), (b, b), (b, c)), ((c, a), (c, b), (c, c)))),
]
print("generator values:", [int(evaluate(f, sigma)) for f in generators])
print("sigma_de:", int(evaluate(build_correlation(d, e), sigma)))

# Randomized constraint test on a graph with two colliders.
g = parse_graph((GRAPHS / "two_colliders.graph").read_text())
for name in ("minor_ab_cd.constraint", "minor_ab_ce.constraint"):
    f = parse_constraint((GRAPHS / name).read_text(), g.names)
    verdict = decide_constraint(g, f, M31, 7)
    print(name, "->", verdict.verdict, "bound", verdict.bound_decimal)

# A false verdict is certain; a true verdict can be wrong with probability at
# most the bound, which shrinks geometrically with repetition.
