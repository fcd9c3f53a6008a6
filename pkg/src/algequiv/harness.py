"""Graph-family enumeration, equivalence-class partitioning and the timing experiment."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from itertools import combinations, product
from typing import Sequence

from networkx.utils import UnionFind

from .criteria import Status, classify_pair
from .decision import (
    decide_equivalence,
    decide_inclusion,
    decide_with_repeats,
    error_bound_generic,
)
from .errors import NodeCountMismatch, NotBAP, TooLarge
from .field import PrimeModulus, derive_seed
from .graph import MixedGraph, classify, is_acyclic, skeleton

__all__ = [
    "Family",
    "GraphFamilySpec",
    "EquivalenceClassReport",
    "TimingReport",
    "enumerate_graphs",
    "build_extremal_pair",
    "extremal_family",
    "partition_classes",
    "extremal_timing_experiment",
]

MAX_ENUMERATION_N = 6


class Family(enum.Enum):
    ALL_BAPS = "baps"
    ALL_DAGS = "dags"
    COMPLETE_BAPS = "complete-baps"
    EXTREMAL = "extremal"


@dataclass(frozen=True)
class GraphFamilySpec:
    n: int
    family: Family
    allow_large: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        object.__setattr__(self, "family", Family(self.family))


# edge choices per unordered pair (i, j), i < j
_NONE, _FWD, _BWD, _BI = range(4)
_CHOICES = {
    Family.ALL_BAPS: (_NONE, _FWD, _BWD, _BI),
    Family.ALL_DAGS: (_NONE, _FWD, _BWD),
    Family.COMPLETE_BAPS: (_FWD, _BWD, _BI),
}


def enumerate_graphs(request: GraphFamilySpec) -> list[MixedGraph]:
    """All acyclic graphs of the family, in a fixed order."""
    n = request.n
    if request.family is Family.EXTREMAL:
        return extremal_family(n)
    if n > MAX_ENUMERATION_N and not request.allow_large:
        raise TooLarge(
            f"enumerating {request.family.value} on {n} nodes is too large; "
            "pass the override flag to force it"
        )
    pairs = list(combinations(range(n), 2))
    out = []
    for assignment in product(_CHOICES[request.family], repeat=len(pairs)):
        directed, bidirected = [], []
        for (i, j), choice in zip(pairs, assignment):
            if choice == _FWD:
                directed.append((i, j))
            elif choice == _BWD:
                directed.append((j, i))
            elif choice == _BI:
                bidirected.append((i, j))
        g = MixedGraph(n, frozenset(directed), frozenset(bidirected))
        if is_acyclic(g):
            out.append(g)
    return out


def build_extremal_pair(n: int, s: int) -> tuple[MixedGraph, tuple[int, int]]:
    """A BAP maximizing the inclusion error bound, with s and t = n-1 nonadjacent.

    Nodes 0..n-2 form a complete graph: 0 -> 1, and every v >= 2 has parents
    1..v-1 and a bidirected edge to 0.  The last node t gets a bidirected
    edge to 0 (to 1 when s = 0) and directed edges from every other earlier
    node except s.
    """
    if n < 4:
        raise ValueError(f"extremal construction needs n >= 4, got {n}")
    if not 0 <= s < n - 1:
        raise ValueError(f"s must lie in [0, {n - 2}], got {s}")
    t = n - 1
    directed = {(0, 1)}
    bidirected = set()
    for v in range(2, t):
        bidirected.add((0, v))
        directed.update((w, v) for w in range(1, v))
    partner = 1 if s == 0 else 0
    bidirected.add((partner, t))
    directed.update((w, t) for w in range(t) if w not in (s, partner))
    return MixedGraph(n, frozenset(directed), frozenset(bidirected)), (s, t)


def extremal_family(n: int) -> list[MixedGraph]:
    return [build_extremal_pair(n, s)[0] for s in range(n - 1)]


@dataclass(frozen=True)
class EquivalenceClassReport:
    classes: tuple  # tuples of input positions, each sorted; classes ordered by first member
    repeats_used: int
    prime: PrimeModulus
    seed: int
    undetermined_pairs: int  # randomized comparisons the structural criteria could not settle
    randomized_calls: int
    inconsistent_pairs: tuple = ()


def partition_classes(
    graphs: Sequence[MixedGraph], m: PrimeModulus, k: int, master_seed: int
) -> EquivalenceClassReport:
    """Split BAPs into algebraic equivalence classes.

    Graphs are bucketed by skeleton (a certain split).  Inside a bucket
    each graph is compared with the first member of every class found so
    far and merged on a True verdict.  A final pass re-checks every member
    against its class root with a fresh stream.
    """
    graphs = list(graphs)
    for i, g in enumerate(graphs):
        if not classify(g).is_bap:
            raise NotBAP(f"graph {i} is not a BAP")
        if g.n != graphs[0].n:
            raise NodeCountMismatch("all graphs must have the same node count")

    task = 0
    undetermined = 0

    def equivalent(a: int, b: int) -> bool:
        nonlocal task, undetermined
        if classify_pair(graphs[a], graphs[b]).status is Status.UNDETERMINED:
            undetermined += 1
        run = partial(decide_equivalence, graphs[a], graphs[b], m)
        d = decide_with_repeats(run, k, derive_seed(master_seed, task))
        task += 1
        return d.verdict

    buckets: dict = {}
    for i, g in enumerate(graphs):
        buckets.setdefault(skeleton(g), []).append(i)

    uf = UnionFind(range(len(graphs)))
    for members in buckets.values():
        reps: list[int] = []
        for i in members:
            hits = [r for r in reps if equivalent(r, i)]
            if not hits:
                reps.append(i)
                continue
            for r in hits:
                uf.union(r, i)
            if len(hits) > 1:
                # i bridged several classes; keep one representative for them
                reps = [r for r in reps if r not in hits[1:]]

    classes = sorted(tuple(sorted(c)) for c in uf.to_sets())
    inconsistent = []
    for c in classes:
        root = c[0]
        for i in c[1:]:
            if not equivalent(root, i):
                inconsistent.append((root, i))

    return EquivalenceClassReport(
        classes=tuple(classes),
        repeats_used=k,
        prime=m,
        seed=master_seed,
        undetermined_pairs=undetermined,
        randomized_calls=task,
        inconsistent_pairs=tuple(inconsistent),
    )


@dataclass(frozen=True)
class TimingReport:
    n: int
    prime: PrimeModulus
    instances: int
    mean_time_ms: float
    false_positive_count: int
    theoretical_bound: Fraction


def extremal_timing_experiment(n: int, m: PrimeModulus, trials: int, master_seed: int) -> TimingReport:
    """Time the inclusion test on ordered pairs of distinct extremal graphs.

    Distinct members have different skeletons and equal edge counts, so no
    pair is a true inclusion: every True verdict is a false positive.
    Pairs are cycled until at least ``trials`` instances have run.
    """
    family = extremal_family(n)
    pairs = [(a, b) for a in range(len(family)) for b in range(len(family)) if a != b]
    decide_inclusion(family[0], family[1], m, derive_seed(master_seed, -1))  # warm-up

    total = 0.0
    fp = 0
    count = 0
    while count < trials:
        for a, b in pairs:
            seed = derive_seed(master_seed, count)
            start = time.perf_counter()
            d = decide_inclusion(family[a], family[b], m, seed)
            total += time.perf_counter() - start
            fp += d.verdict
            count += 1
            if count >= trials:
                break
    return TimingReport(
        n=n,
        prime=m,
        instances=count,
        mean_time_ms=1000.0 * total / max(count, 1),
        false_positive_count=fp,
        theoretical_bound=error_bound_generic(n, m),
    )
