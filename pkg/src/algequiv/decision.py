"""Randomized decision procedures over GF(p) and their error bounds.

All three deciders are one-sided Monte Carlo procedures: a ``False``
verdict is always correct, a ``True`` verdict is wrong with probability
at most ``Decision.error_bound``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable, Optional

from .constraints import Constraint, degree as constraint_degree, evaluate
from .errors import NodeCountMismatch, NotBAP, NTooSmall
from .field import PrimeModulus, derive_seed, make_stream
from .graph import (
    MixedGraph,
    classify,
    degree,
    longest_directed_path,
    skeleton,
    topological_order,
)
from .linalg import FieldMatrix, column_deleted_minors_rows, congruence
from .lsem import phi, sample_params

__all__ = [
    "Diagnostics",
    "Decision",
    "AVector",
    "SolveState",
    "decide_constraint",
    "error_bound_constraint",
    "solve_column",
    "decide_inclusion",
    "a_values",
    "error_bound_inclusion",
    "error_bound_generic",
    "decide_equivalence",
    "decide_with_repeats",
    "render_decimal",
    "repeats_for_confidence",
]


def render_decimal(x: Fraction, digits: int = 3) -> str:
    """Locale-independent rendering with ``digits`` significant figures, e.g. 4.61e-8."""
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits + 20
        d = Decimal(x.numerator) / Decimal(x.denominator)
        ctx.prec = digits
        d = +d  # round to the requested significant figures
        adj = d.adjusted()
        # same switch-over points as float formatting with "g"
        if -4 <= adj < digits:
            text = format(d.normalize(), "f")
        else:
            text = f"{format(d.scaleb(-adj).normalize(), 'f')}e{adj}"
    return text


@dataclass(frozen=True)
class Diagnostics:
    witness_pair: Optional[tuple] = None
    singular_pivot_seen: bool = False
    seed: Optional[int] = None


@dataclass(frozen=True)
class Decision:
    verdict: bool
    error_bound: Fraction
    repeats_used: int = 1
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    def __bool__(self):
        return self.verdict

    @property
    def bound_decimal(self) -> str:
        return render_decimal(self.error_bound)

    def to_record(self, names=None) -> dict:
        """Plain-dict form with the bound as an exact fraction and as a decimal string."""
        witness = self.diagnostics.witness_pair
        if witness is not None and names is not None:
            witness = [names[i] for i in witness]
        return {
            "verdict": self.verdict,
            "bound_numerator": str(self.error_bound.numerator),
            "bound_denominator": str(self.error_bound.denominator),
            "bound_decimal": self.bound_decimal,
            "repeats": self.repeats_used,
            "seed": self.diagnostics.seed,
            "diagnostics": {
                "witness_pair": list(witness) if witness is not None else None,
                "singular_pivot_seen": self.diagnostics.singular_pivot_seen,
            },
        }


def _stream(rng) -> tuple[random.Random, Optional[int]]:
    if isinstance(rng, random.Random):
        return rng, None
    return make_stream(int(rng)), int(rng)


def _certain_false(witness=None, singular=False, seed=None) -> Decision:
    return Decision(False, Fraction(0), 1, Diagnostics(witness, singular, seed))


def _require_bap(g: MixedGraph, label: str):
    if not classify(g).is_bap:
        raise NotBAP(f"{label} must be a BAP")


def _require_same_n(g: MixedGraph, gp: MixedGraph):
    if g.n != gp.n:
        raise NodeCountMismatch(f"graphs have {g.n} and {gp.n} nodes")


# -- constraint test ---------------------------------------------------------


def error_bound_constraint(g: MixedGraph, f: Constraint, m: PrimeModulus) -> Fraction:
    return Fraction((2 * longest_directed_path(g) + 1) * constraint_degree(f), m.p)


def decide_constraint(g: MixedGraph, f: Constraint, m: PrimeModulus, rng) -> Decision:
    """Does every covariance matrix of ``g``'s model satisfy f = 0?"""
    bound = error_bound_constraint(g, f, m)
    rng, seed = _stream(rng)
    sigma = phi(sample_params(g, m, rng))
    if evaluate(f, sigma).residue != 0:
        return _certain_false(seed=seed)
    return Decision(True, min(bound, Fraction(1)), 1, Diagnostics(seed=seed))


# -- model inclusion ---------------------------------------------------------


@dataclass
class SolveState:
    """Mutable working state of the identification sweep.

    ``lt`` holds the scaled matrix (I - Lambda') column by column as a list of
    rows; it starts as the identity.
    """

    lt: list
    solved: list
    singular_pivot_seen: bool = False

    @classmethod
    def fresh(cls, n: int) -> "SolveState":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], [False] * n)

    def lambda_tilde(self, m: PrimeModulus) -> FieldMatrix:
        return FieldMatrix(m, self.lt)


def solve_column(gp: MixedGraph, sigma: FieldMatrix, v: int, state: SolveState) -> None:
    """Fill column v of the scaled (I - Lambda') by division-free Cramer's rule.

    For pa(v) = (w_1..w_k), row w of M is column w of the current matrix when
    w is half-trek reachable from v and the unit vector e_w otherwise.  With
    A = M Sigma[:, pa(v)] and b = M Sigma[:, v], the column gets |A| on the
    diagonal and -|A_w| at parent w, where A_w has column w replaced by b.
    """
    if state.solved[v]:
        return
    state.solved[v] = True
    pa = gp._pa[v]
    if not pa:
        return
    htr = gp._htr[v]
    for w in pa:
        if w in htr:
            solve_column(gp, sigma, w, state)

    p = sigma.field.p
    srows = sigma._rows
    lt = state.lt
    cols = list(pa) + [v]
    k = len(pa)
    aug = []
    for w in pa:
        if w in htr:
            # column w of lt is supported on {w} and pa(w)
            support = [(x, lt[x][w]) for x in (w,) + gp._pa[w] if lt[x][w]]
            row = [
                sum(c * srows[x][j] for x, c in support) % p
                for j in cols
            ]
        else:
            sw = srows[w]
            row = [sw[j] for j in cols]
        aug.append(row)

    minors = column_deleted_minors_rows(aug, p)
    det_a = minors[k]
    if det_a == 0:
        state.singular_pivot_seen = True
    lt[v][v] = det_a
    for j, w in enumerate(pa):
        # |A with column j replaced by b| = (-1)^(k-1-j) * minor_j
        replaced = minors[j] if (k - 1 - j) % 2 == 0 else -minors[j]
        lt[w][v] = -replaced % p


def decide_inclusion(g: MixedGraph, gp: MixedGraph, m: PrimeModulus, rng) -> Decision:
    """Is the algebraic model of ``g`` contained in that of the BAP ``gp``?"""
    topological_order(g)
    _require_bap(gp, "G'")
    _require_same_n(g, gp)
    bound = error_bound_inclusion(g, gp, m)
    rng, seed = _stream(rng)
    n = g.n
    sigma = phi(sample_params(g, m, rng))
    state = SolveState.fresh(n)
    for v in range(n):
        if degree(gp, v) < n - 1:
            solve_column(gp, sigma, v, state)
    omega_t = congruence(FieldMatrix._raw(m, state.lt, n), sigma)
    adj = gp._adj
    for v in range(n):
        for w in range(v + 1, n):
            if w not in adj[v] and omega_t.value(v, w):
                return _certain_false((v, w), state.singular_pivot_seen, seed)
    return Decision(
        True, min(bound, Fraction(1)), 1, Diagnostics(None, state.singular_pivot_seen, seed)
    )


@dataclass(frozen=True)
class AVector:
    values: tuple
    solved: tuple


def a_values(gp: MixedGraph) -> AVector:
    """Degree bounds a_v, replaying exactly the solve calls of the inclusion test."""
    _require_bap(gp, "G'")
    n = gp.n
    a = [0] * n
    solved = [False] * n

    def solve(v):
        if solved[v]:
            return
        solved[v] = True
        pa = gp._pa[v]
        if not pa:
            return
        htr = gp._htr[v]
        total = len(pa)
        for w in pa:
            if w in htr:
                solve(w)
                total += a[w]
        a[v] = total

    for v in range(n):
        if degree(gp, v) < n - 1:
            solve(v)
    return AVector(tuple(a), tuple(solved))


def error_bound_inclusion(g: MixedGraph, gp: MixedGraph, m: PrimeModulus) -> Fraction:
    """(2 l_G + 1)(1 + max over nonadjacent {v,w} of a_v + a_w) / p; 0 if G' is complete."""
    ell = longest_directed_path(g)
    _require_same_n(g, gp)
    av = a_values(gp).values
    adj = gp._adj
    worst = max(
        (av[v] + av[w] for v in range(gp.n) for w in range(v + 1, gp.n) if w not in adj[v]),
        default=None,
    )
    if worst is None:
        return Fraction(0)
    return Fraction((2 * ell + 1) * (1 + worst), m.p)


def error_bound_generic(n: int, m: PrimeModulus) -> Fraction:
    """Graph-independent bound (2n - 1)((3/8) 2^n - 1) / p, valid for n >= 4."""
    if n < 4:
        raise NTooSmall(f"the generic bound needs n >= 4, got {n}")
    return Fraction((2 * n - 1) * (3 * 2 ** (n - 3) - 1), m.p)


# -- equivalence -------------------------------------------------------------


def decide_equivalence(g: MixedGraph, gp: MixedGraph, m: PrimeModulus, rng) -> Decision:
    """Algebraic equivalence of two BAPs: skeleton check, then one inclusion."""
    _require_bap(g, "G")
    _require_bap(gp, "G'")
    _require_same_n(g, gp)
    sk, skp = skeleton(g), skeleton(gp)
    if sk != skp:
        seed = None if isinstance(rng, random.Random) else int(rng)
        return _certain_false(min(sk ^ skp), False, seed)
    return decide_inclusion(g, gp, m, rng)


# -- repetition --------------------------------------------------------------


def decide_with_repeats(task: Callable[[int], Decision], k: int, master_seed: int) -> Decision:
    """Run ``task(seed)`` up to k times until a False or k Trues.

    The i-th run gets ``derive_seed(master_seed, i)``.  On k Trues the
    reported bound is the single-run bound raised to the k-th power.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    bound = Fraction(1)
    singular = False
    for i in range(k):
        d = task(derive_seed(master_seed, i))
        singular = singular or d.diagnostics.singular_pivot_seen
        if not d.verdict:
            return Decision(
                False, Fraction(0), i + 1,
                Diagnostics(d.diagnostics.witness_pair, singular, master_seed),
            )
        bound *= min(d.error_bound, Fraction(1))
    return Decision(True, bound, k, Diagnostics(None, singular, master_seed))


def repeats_for_confidence(single_bound: Fraction, target: Fraction) -> int:
    """Smallest k >= 1 with single_bound ** k <= target."""
    target = Fraction(target)
    if target <= 0:
        raise ValueError("target confidence bound must be positive")
    if single_bound >= 1 and target < 1:
        raise ValueError("single-run bound is at least 1; repetition cannot help")
    k, b = 1, single_bound
    while b > target:
        k += 1
        b *= single_bound
    return k
