import itertools
import random
from fractions import Fraction

import pytest

from algequiv.graph import MixedGraph

_CLASS6_COMMON_DIRECTED = ["be", "cd"]
_CLASS6_COMMON_BIDIRECTED = ["bc", "bd", "ce"]
_CLASS6 = {
    "a": (["ba", "ad", "ea"], ["ac"]),
    "b": (["ba", "ad"], ["ac", "ae"]),
    "c": (["ba", "ad", "ae"], ["ac"]),
    "d": (["ca", "ad", "ae"], ["ab"]),
    "e": (["ca", "ae"], ["ab", "ad"]),
    "f": (["ca", "da", "ae"], ["ab"]),
}


def class6_graphs() -> dict:
    """Six BAPs on a..e forming one algebraic equivalence class."""
    return {
        k: MixedGraph.from_edges(
            "abcde", d + _CLASS6_COMMON_DIRECTED, b + _CLASS6_COMMON_BIDIRECTED
        )
        for k, (d, b) in _CLASS6.items()
    }


def complete_bidirected4() -> MixedGraph:
    return MixedGraph.from_edges("abcd", [], ["ab", "ac", "ad", "bc", "bd", "cd"])


def chain_bidirected4() -> MixedGraph:
    return MixedGraph.from_edges("abcd", ["ab", "bc", "cd"], ["ac", "bd", "ad"])


def confounded_chain() -> MixedGraph:
    """a -> b -> c -> d with a <-> c, a <-> d; e isolated."""
    return MixedGraph.from_edges("abcde", ["ab", "bc", "cd"], ["ac", "ad"])


def bowed_chain() -> MixedGraph:
    """Not a BAP: c -> d and c -> e both carry a bidirected twin."""
    return MixedGraph.from_edges("abcde", ["ab", "ac", "bc", "cd", "ce", "de"], ["cd", "ce"])


def two_colliders() -> MixedGraph:
    return MixedGraph.from_edges("abcde", ["ab", "ae", "cb", "ce", "db", "de"], ["be", "cd"])


# positive definite, outside the model of confounded_chain, yet on a spurious component
SPURIOUS_SIGMA = [
    [Fraction(1), Fraction(3, 4), Fraction(2, 9), 0, 0],
    [Fraction(3, 4), Fraction(1), Fraction(3, 4), 0, 0],
    [Fraction(2, 9), Fraction(3, 4), Fraction(1), 0, 0],
    [0, 0, 0, Fraction(1), Fraction(1, 2)],
    [0, 0, 0, Fraction(1, 2), Fraction(1)],
]


def random_bap(n: int, rng: random.Random, p_dir=0.35, p_bi=0.25) -> MixedGraph:
    perm = list(range(n))
    rng.shuffle(perm)
    d, b = set(), set()
    for i, j in itertools.combinations(range(n), 2):
        r = rng.random()
        if r < p_dir:
            d.add((perm[i], perm[j]))
        elif r < p_dir + p_bi:
            b.add((perm[i], perm[j]))
    return MixedGraph(n, frozenset(d), frozenset(b))


def random_admg(n: int, rng: random.Random) -> MixedGraph:
    """Acyclic, bows allowed."""
    perm = list(range(n))
    rng.shuffle(perm)
    d, b = set(), set()
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < 0.4:
            d.add((perm[i], perm[j]))
        if rng.random() < 0.3:
            b.add((perm[i], perm[j]))
    return MixedGraph(n, frozenset(d), frozenset(b))


@pytest.fixture
def rng():
    return random.Random(20240611)


# one line per acceptance criterion, echoed at the end of the run
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
