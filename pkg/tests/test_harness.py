import itertools

import pytest

from algequiv.criteria import Status, classify_pair
from algequiv.decision import a_values, error_bound_generic, error_bound_inclusion
from algequiv.errors import NotBAP, TooLarge
from algequiv.field import M31
from algequiv.graph import MixedGraph, classify, longest_directed_path, skeleton
from algequiv.harness import (
    Family,
    GraphFamilySpec,
    build_extremal_pair,
    enumerate_graphs,
    extremal_family,
    partition_classes,
    extremal_timing_experiment,
)

from conftest import bowed_chain, class6_graphs


@pytest.mark.parametrize(
    "family,n,count",
    [
        (Family.ALL_BAPS, 2, 4),
        (Family.ALL_BAPS, 3, 62),  # 4^3 assignments minus the two directed 3-cycles
        (Family.ALL_DAGS, 1, 1),
        (Family.ALL_DAGS, 2, 3),
        (Family.ALL_DAGS, 3, 25),
        (Family.ALL_DAGS, 4, 543),
        (Family.COMPLETE_BAPS, 3, 25),  # 3^3 minus the two 3-cycles
        (Family.COMPLETE_BAPS, 4, 543),
    ],
)
def test_enumeration_counts(family, n, count):
    graphs = enumerate_graphs(GraphFamilySpec(n, family))
    assert len(graphs) == count
    assert len(set(graphs)) == count
    assert all(classify(g).is_bap for g in graphs)


def test_enumeration_kinds():
    assert all(classify(g).is_dag for g in enumerate_graphs(GraphFamilySpec(4, Family.ALL_DAGS)))
    assert all(len(skeleton(g)) == 6 for g in enumerate_graphs(GraphFamilySpec(4, Family.COMPLETE_BAPS)))


def test_enumeration_deterministic():
    request = GraphFamilySpec(3, "baps")
    assert enumerate_graphs(request) == enumerate_graphs(request)


def test_enumeration_too_large():
    with pytest.raises(TooLarge):
        enumerate_graphs(GraphFamilySpec(7, Family.ALL_BAPS))
    with pytest.raises(ValueError):
        GraphFamilySpec(0, Family.ALL_BAPS)


def test_extremal_structure():
    g, (s, t) = build_extremal_pair(6, 2)
    assert (s, t) == (2, 5)
    assert t not in g._adj[s]
    assert classify(g).is_bap
    assert (0, 5) in g.bidirected
    assert set(g._pa[5]) == {1, 3, 4}
    # nodes 0..n-2 are pairwise adjacent
    assert all(b in g._adj[a] for a, b in itertools.combinations(range(5), 2))
    g0, _ = build_extremal_pair(6, 0)
    assert (1, 5) in g0.bidirected and set(g0._pa[5]) == {2, 3, 4}
    with pytest.raises(ValueError):
        build_extremal_pair(6, 5)
    with pytest.raises(ValueError):
        build_extremal_pair(3, 0)


def test_extremal_longest_path():
    for n in range(4, 10):
        for s in range(n - 1):
            g, _ = build_extremal_pair(n, s)
            # n-2 -> t is missing exactly when s = n-2
            assert longest_directed_path(g) == (n - 2 if s == n - 2 else n - 1)


def test_extremal_members_distinct_skeletons():
    fam = extremal_family(7)
    assert len({skeleton(g) for g in fam}) == len(fam)
    assert len({len(skeleton(g)) for g in fam}) == 1


def test_extremal_bound_matches_generic():
    for n in range(4, 10):
        g_long, _ = build_extremal_pair(n, 1)
        for s in range(1, n - 1):
            gp, _ = build_extremal_pair(n, s)
            assert error_bound_inclusion(g_long, gp, M31) == error_bound_generic(n, M31)
        # s = 0 is one below the maximum
        gp0, _ = build_extremal_pair(n, 0)
        assert error_bound_inclusion(g_long, gp0, M31) < error_bound_generic(n, M31)


def test_partition_class6():
    graphs = list(class6_graphs().values())
    r = partition_classes(graphs, M31, 2, 11)
    assert r.classes == (tuple(range(6)),)
    assert r.inconsistent_pairs == ()
    assert r.repeats_used == 2 and r.seed == 11 and r.prime is M31


def test_partition_different_skeletons():
    g = MixedGraph.from_edges("abc", ["ab"])
    h = MixedGraph.from_edges("abc", ["bc"])
    r = partition_classes([g, h], M31, 1, 0)
    assert r.classes == ((0,), (1,))
    assert r.randomized_calls == 0


def test_partition_rejects_non_bap():
    with pytest.raises(NotBAP):
        partition_classes([bowed_chain()], M31, 1, 0)


def test_partition_reproducible_and_cross_validated():
    graphs = enumerate_graphs(GraphFamilySpec(3, Family.ALL_BAPS))
    r1 = partition_classes(graphs, M31, 1, 99)
    r2 = partition_classes(graphs, M31, 1, 99)
    assert r1 == r2
    covered = sorted(i for c in r1.classes for i in c)
    assert covered == list(range(len(graphs)))
    cls = {i: k for k, c in enumerate(r1.classes) for i in c}
    for i, j in itertools.combinations(range(len(graphs)), 2):
        same = cls[i] == cls[j]
        if same:
            assert skeleton(graphs[i]) == skeleton(graphs[j])
        status = classify_pair(graphs[i], graphs[j]).status
        if status is Status.EQUIVALENT:
            assert same
        elif status is Status.NOT_EQUIVALENT:
            assert not same


def test_timing_experiment_small():
    r = extremal_timing_experiment(5, M31, 40, 3)
    assert r.instances == 40
    assert r.false_positive_count == 0
    assert r.theoretical_bound == error_bound_generic(5, M31)
    assert r.mean_time_ms > 0
