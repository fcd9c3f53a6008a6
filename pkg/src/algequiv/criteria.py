"""Structural necessary and sufficient conditions for algebraic equivalence."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import NodeCountMismatch, NotBAP, NotDAG
from .graph import MixedGraph, classify, collider_triples, induced_subgraph, skeleton, v_structures

__all__ = [
    "Status",
    "PairClassification",
    "classify_pair",
    "dag_markov_equivalent",
    "first_inequivalent_subset",
]


class Status(enum.Enum):
    EQUIVALENT = "definitely-equivalent"
    NOT_EQUIVALENT = "definitely-not-equivalent"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class PairClassification:
    status: Status
    reason: str  # skeleton-mismatch | v-structure-mismatch | same-collider-triples | gap


def classify_pair(g: MixedGraph, gp: MixedGraph) -> PairClassification:
    """Decide equivalence of two BAPs from structure alone, where possible.

    Different skeletons or v-structures rule equivalence out; equal
    skeletons and collider triples guarantee it.  Anything in between is
    left undetermined.
    """
    for label, h in (("G", g), ("G'", gp)):
        if not classify(h).is_bap:
            raise NotBAP(f"{label} must be a BAP")
    if g.n != gp.n:
        raise NodeCountMismatch(f"graphs have {g.n} and {gp.n} nodes")
    if skeleton(g) != skeleton(gp):
        return PairClassification(Status.NOT_EQUIVALENT, "skeleton-mismatch")
    if v_structures(g) != v_structures(gp):
        return PairClassification(Status.NOT_EQUIVALENT, "v-structure-mismatch")
    if collider_triples(g) == collider_triples(gp):
        return PairClassification(Status.EQUIVALENT, "same-collider-triples")
    return PairClassification(Status.UNDETERMINED, "gap")


def dag_markov_equivalent(g: MixedGraph, gp: MixedGraph) -> bool:
    for label, h in (("G", g), ("G'", gp)):
        if not classify(h).is_dag:
            raise NotDAG(f"{label} must be a DAG")
    if g.n != gp.n:
        raise NodeCountMismatch(f"graphs have {g.n} and {gp.n} nodes")
    return skeleton(g) == skeleton(gp) and v_structures(g) == v_structures(gp)


def first_inequivalent_subset(g: MixedGraph, gp: MixedGraph, decide) -> Optional[tuple]:
    """Check induced subgraphs on every node subset (exponential; small n only).

    ``decide(h, hp)`` returns a verdict for two induced subgraphs.  Returns
    the first subset, smallest first, whose subgraphs are found inequivalent,
    or None.
    """
    if g.n != gp.n:
        raise NodeCountMismatch(f"graphs have {g.n} and {gp.n} nodes")
    for size in range(2, g.n + 1):
        for subset in combinations(range(g.n), size):
            if not decide(induced_subgraph(g, subset), induced_subgraph(gp, subset)):
                return subset
    return None
