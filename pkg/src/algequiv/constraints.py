"""Algebraic constraints on a covariance matrix.

Two representations: a pattern matrix whose cells are either 0 or a
covariance entry (its determinant is the constraint), and an explicit
sparse polynomial with integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence, Union

from .errors import DimensionMismatch
from .field import FieldElement
from .linalg import FieldMatrix, det_rows

__all__ = [
    "PatternMatrixConstraint",
    "PolynomialConstraint",
    "Constraint",
    "build_correlation",
    "build_partial_correlation",
    "build_minor",
    "evaluate",
    "degree",
    "expand_pattern",
]


def _sigma_key(v: int, w: int) -> tuple:
    return (v, w) if v <= w else (w, v)


@dataclass(frozen=True)
class PatternMatrixConstraint:
    """An r x r grid; each cell is None (a structural zero) or a node pair (v, w)."""

    cells: tuple

    def __post_init__(self):
        cells = tuple(
            tuple(None if c is None else (int(c[0]), int(c[1])) for c in row)
            for row in self.cells
        )
        r = len(cells)
        if r < 1:
            raise ValueError("pattern matrix must be at least 1 x 1")
        if any(len(row) != r for row in cells):
            raise DimensionMismatch("pattern matrix must be square")
        object.__setattr__(self, "cells", cells)

    @property
    def size(self) -> int:
        return len(self.cells)

    def max_node(self) -> int:
        return max((max(c) for row in self.cells for c in row if c is not None), default=-1)


@dataclass(frozen=True)
class PolynomialConstraint:
    """Sum of coeff * prod(sigma_vw) terms; coefficients are plain integers."""

    terms: tuple = ()

    def __post_init__(self):
        terms = tuple(
            (int(coef), tuple(_sigma_key(int(v), int(w)) for v, w in mono))
            for coef, mono in self.terms
        )
        object.__setattr__(self, "terms", terms)

    def max_node(self) -> int:
        return max((max(vw) for _, mono in self.terms for vw in mono), default=-1)


Constraint = Union[PatternMatrixConstraint, PolynomialConstraint]


def build_correlation(v: int, w: int) -> PatternMatrixConstraint:
    return PatternMatrixConstraint((((v, w),),))


def build_minor(rows: Sequence[int], cols: Sequence[int]) -> PatternMatrixConstraint:
    """The minor |Sigma_{A,B}| with rows A and columns B in the given order."""
    if len(rows) != len(cols):
        raise DimensionMismatch(f"minor needs |A| = |B|, got {len(rows)} and {len(cols)}")
    return PatternMatrixConstraint(tuple(tuple((a, b) for b in cols) for a in rows))


def build_partial_correlation(v: int, w: int, given: Sequence[int] = ()) -> PatternMatrixConstraint:
    """Numerator of the partial correlation of v and w given S: |Sigma_{v+S, w+S}|."""
    given = list(given)
    if v in given or w in given:
        raise ValueError("v and w must not be in the conditioning set")
    if len(set(given)) != len(given):
        raise ValueError("duplicate node in conditioning set")
    return build_minor([v] + given, [w] + given)


def degree(c: Constraint) -> int:
    if isinstance(c, PatternMatrixConstraint):
        return c.size
    return max((len(mono) for _, mono in c.terms), default=0)


def evaluate(c: Constraint, sigma: FieldMatrix) -> FieldElement:
    """Value of the constraint polynomial at ``sigma``."""
    n, p = sigma.nrows, sigma.field.p
    if c.max_node() >= n:
        raise IndexError(f"constraint refers to node {c.max_node()} but Sigma is {n} x {n}")
    if isinstance(c, PatternMatrixConstraint):
        rows = [[0 if cell is None else sigma.value(*cell) for cell in row] for row in c.cells]
        return FieldElement(det_rows(rows, p), sigma.field)
    total = 0
    for coef, mono in c.terms:
        term = coef
        for v, w in mono:
            term = term * sigma.value(v, w) % p
        total += term
    return FieldElement(total, sigma.field)


def expand_pattern(c: PatternMatrixConstraint) -> PolynomialConstraint:
    """Leibniz expansion into an explicit polynomial (factorial size; small r only)."""
    r = c.size
    terms = {}
    for perm in permutations(range(r)):
        cells = [c.cells[i][perm[i]] for i in range(r)]
        if any(cell is None for cell in cells):
            continue
        inversions = sum(perm[i] > perm[j] for i in range(r) for j in range(i + 1, r))
        mono = tuple(sorted(_sigma_key(*cell) for cell in cells))
        terms[mono] = terms.get(mono, 0) + (-1) ** inversions
    return PolynomialConstraint(tuple((coef, mono) for mono, coef in terms.items() if coef))
