"""Linear SEM parameters, the covariance map, and a trek-rule evaluator.

``phi`` computes Sigma = (I - Lambda)^-T Omega (I - Lambda)^-1 by matrix
inversion.  ``sigma_via_trek_rule`` computes a single entry by explicitly
enumerating treks; it shares no code with ``phi`` and serves as its oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .field import FieldElement, PrimeModulus
from .graph import MixedGraph, topological_order
from .linalg import FieldMatrix, congruence, identity, mat_inverse

__all__ = [
    "ParamAssignment",
    "Trek",
    "sample_params",
    "phi",
    "treks",
    "sigma_via_trek_rule",
    "identity_params",
]


@dataclass(frozen=True)
class ParamAssignment:
    lam: FieldMatrix
    omega: FieldMatrix
    graph: MixedGraph

    def __post_init__(self):
        g, n = self.graph, self.graph.n
        if self.lam.shape != (n, n) or self.omega.shape != (n, n):
            raise ValueError("parameter matrices must be n x n")
        for v in range(n):
            for w in range(n):
                if self.lam.value(v, w) and (v, w) not in g.directed:
                    raise ValueError(f"Lambda[{v},{w}] nonzero without edge {v}->{w}")
                x = self.omega.value(v, w)
                if x != self.omega.value(w, v):
                    raise ValueError("Omega must be symmetric")
                if x and v != w and (min(v, w), max(v, w)) not in g.bidirected:
                    raise ValueError(f"Omega[{v},{w}] nonzero without edge {v}<->{w}")


def sample_params(g: MixedGraph, m: PrimeModulus, rng: random.Random) -> ParamAssignment:
    """Uniform draws over GF(p) for every free entry of Lambda and Omega.

    Draw order is fixed (directed edges sorted, then the diagonal, then
    bidirected pairs sorted), so a seed pins down the assignment.
    """
    topological_order(g)  # raises CyclicGraph
    n, p = g.n, m.p
    lam = [[0] * n for _ in range(n)]
    omega = [[0] * n for _ in range(n)]
    for t, h in sorted(g.directed):
        lam[t][h] = rng.randrange(p)
    for v in range(n):
        omega[v][v] = rng.randrange(p)
    for a, b in sorted(g.bidirected):
        omega[a][b] = omega[b][a] = rng.randrange(p)
    return ParamAssignment(FieldMatrix._raw(m, lam, n), FieldMatrix._raw(m, omega, n), g)


def phi(theta: ParamAssignment) -> FieldMatrix:
    """Sigma = (I - Lambda)^-T Omega (I - Lambda)^-1."""
    lam = theta.lam
    n, p = lam.nrows, lam.field.p
    i_minus_lam = FieldMatrix._raw(
        lam.field,
        [[(int(i == j) - lam.value(i, j)) % p for j in range(n)] for i in range(n)],
        n,
    )
    # acyclic support makes I - Lambda a permuted unit-triangular matrix,
    # so the inverse always exists
    return congruence(mat_inverse(i_minus_lam), theta.omega)


class Trek(NamedTuple):
    """A trek between v and w.

    ``left`` is a directed path listed from its top down to v, ``right``
    likewise down to w.  ``middle`` is ``("top", c)`` when both paths start
    at the same node c, or ``("bidirected", x, y)`` when the left path
    starts at x, the right path at y, and x <-> y is an edge.
    """

    left: tuple
    middle: tuple
    right: tuple

    @property
    def length(self) -> int:
        """Number of edges, the bidirected one included."""
        return len(self.left) + len(self.right) - 2 + (self.middle[0] == "bidirected")

    @property
    def degree(self) -> int:
        """Degree of the trek's monomial: one lambda per directed edge, one omega."""
        return len(self.left) + len(self.right) - 1


def _paths_into(g: MixedGraph, target: int) -> dict:
    """Map each node x to the list of directed paths x -> ... -> target."""
    out = {}

    def walk(node, suffix):
        path = (node,) + suffix
        out.setdefault(node, []).append(path)
        for u in g._pa[node]:
            walk(u, path)

    walk(target, ())
    return out


def treks(g: MixedGraph, v: int, w: int) -> Iterator[Trek]:
    """Every trek between v and w, each exactly once."""
    topological_order(g)
    into_v = _paths_into(g, v)
    into_w = _paths_into(g, w)
    for c in sorted(set(into_v) & set(into_w)):
        for lp in into_v[c]:
            for rp in into_w[c]:
                yield Trek(lp, ("top", c), rp)
    for a, b in sorted(g.bidirected):
        for x, y in ((a, b), (b, a)):
            for lp in into_v.get(x, ()):
                for rp in into_w.get(y, ()):
                    yield Trek(lp, ("bidirected", x, y), rp)


def sigma_via_trek_rule(g: MixedGraph, theta: ParamAssignment, v: int, w: int) -> FieldElement:
    """sigma_vw as a sum over treks of (left lambdas) * omega_top * (right lambdas)."""
    p = theta.lam.field.p
    lam, om = theta.lam, theta.omega
    total = 0
    for t in treks(g, v, w):
        term = 1
        for path in (t.left, t.right):
            for a, b in zip(path, path[1:]):
                term = term * lam.value(a, b) % p
        if t.middle[0] == "top":
            c = t.middle[1]
            term = term * om.value(c, c) % p
        else:
            term = term * om.value(t.middle[1], t.middle[2]) % p
        total += term
    return FieldElement(total, theta.lam.field)


def identity_params(g: MixedGraph, m: PrimeModulus) -> ParamAssignment:
    """Lambda = 0, Omega = I: the point whose image is the identity matrix."""
    n = g.n
    return ParamAssignment(
        FieldMatrix._raw(m, [[0] * n for _ in range(n)], n), identity(n, m), g
    )
