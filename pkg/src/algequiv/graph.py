"""Mixed graphs (ADMGs, BAPs, DAGs) and their purely structural queries."""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CyclicGraph, SelfLoop

__all__ = [
    "MixedGraph",
    "GraphClassReport",
    "classify",
    "topological_order",
    "parents",
    "spouses",
    "children",
    "adjacent",
    "degree",
    "half_trek_reachable",
    "longest_directed_path",
    "skeleton",
    "v_structures",
    "collider_triples",
    "induced_subgraph",
    "is_acyclic",
]


def _default_names(n: int) -> tuple[str, ...]:
    # a, b, ..., z, then v26, v27, ...
    return tuple(chr(ord("a") + i) if i < 26 else f"v{i}" for i in range(n))


@dataclass(frozen=True, eq=False)
class MixedGraph:
    """Nodes 0..n-1 with directed edges (tail, head) and bidirected pairs (i, j), i < j.

    ``names`` only matters for I/O and display; all computation uses indices.
    Two graphs compare equal when they have the same names and edge sets.
    """

    n: int
    directed: frozenset = frozenset()
    bidirected: frozenset = frozenset()
    names: tuple = field(default=())

    def __post_init__(self):
        n = self.n
        if n < 0:
            raise ValueError("node count must be non-negative")
        names = tuple(self.names) if self.names else _default_names(n)
        if len(names) != n:
            raise ValueError(f"expected {n} names, got {len(names)}")
        if len(set(names)) != n:
            raise ValueError("node names must be unique")
        object.__setattr__(self, "names", names)

        directed = frozenset((int(t), int(h)) for t, h in self.directed)
        bidirected = frozenset(
            (min(int(a), int(b)), max(int(a), int(b))) for a, b in self.bidirected
        )
        for a, b in directed | bidirected:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"edge ({a}, {b}) out of range for {n} nodes")
            if a == b:
                raise SelfLoop(f"self-loop at node {names[a]}")
        object.__setattr__(self, "directed", directed)
        object.__setattr__(self, "bidirected", bidirected)

    @classmethod
    def from_edges(
        cls,
        names: Sequence[str] | str,
        directed: Iterable = (),
        bidirected: Iterable = (),
    ) -> "MixedGraph":
        """Build from node labels, e.g. ``from_edges("abc", ["ab", "bc"], ["ac"])``."""
        names = tuple(names.split()) if isinstance(names, str) and " " in names else tuple(names)
        index = {name: i for i, name in enumerate(names)}

        def resolve(pair):
            u, v = pair
            return index[u], index[v]

        return cls(
            len(names),
            frozenset(map(resolve, directed)),
            frozenset(map(resolve, bidirected)),
            names,
        )

    def __eq__(self, other):
        if not isinstance(other, MixedGraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.names == other.names
            and self.directed == other.directed
            and self.bidirected == other.bidirected
        )

    def __hash__(self):
        return hash((self.n, self.names, self.directed, self.bidirected))

    def __repr__(self):
        nm = self.names
        d = ", ".join(f"{nm[t]}->{nm[h]}" for t, h in sorted(self.directed))
        b = ", ".join(f"{nm[x]}<->{nm[y]}" for x, y in sorted(self.bidirected))
        return f"MixedGraph(nodes={' '.join(nm)}; {d}; {b})"

    def index(self, name: str) -> int:
        return self.names.index(name)

    # adjacency tables, built once per graph
    @cached_property
    def _pa(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for t, h in self.directed:
            out[h].append(t)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def _ch(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for t, h in self.directed:
            out[t].append(h)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def _sp(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for a, b in self.bidirected:
            out[a].append(b)
            out[b].append(a)
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def _adj(self) -> tuple:
        out = [set() for _ in range(self.n)]
        for a, b in self.directed | self.bidirected:
            out[a].add(b)
            out[b].add(a)
        return tuple(frozenset(x) for x in out)

    @cached_property
    def _topo(self):
        # Kahn's algorithm, smallest available index first
        indeg = [len(p) for p in self._pa]
        ready = [v for v in range(self.n) if indeg[v] == 0]
        order = []
        heapq.heapify(ready)
        while ready:
            v = heapq.heappop(ready)
            order.append(v)
            for w in self._ch[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    heapq.heappush(ready, w)
        return tuple(order) if len(order) == self.n else None

    @cached_property
    def _htr(self) -> tuple:
        return tuple(frozenset(_htr_bfs(self, v)) for v in range(self.n))

    def relabel(self, names: Sequence[str]) -> "MixedGraph":
        """The same graph re-indexed so that node i is named ``names[i]``."""
        names = tuple(names)
        if sorted(names) != sorted(self.names):
            raise ValueError("node name sets differ")
        pos = {name: i for i, name in enumerate(names)}
        m = [pos[name] for name in self.names]
        return MixedGraph(
            self.n,
            frozenset((m[t], m[h]) for t, h in self.directed),
            frozenset((m[a], m[b]) for a, b in self.bidirected),
            names,
        )


@dataclass(frozen=True)
class GraphClassReport:
    acyclic: bool
    bow_free: bool
    is_bap: bool
    is_dag: bool
    ancestral: bool


def _check_node(g: MixedGraph, v: int):
    if not 0 <= v < g.n:
        raise IndexError(f"node {v} out of range for {g.n} nodes")


def is_acyclic(g: MixedGraph) -> bool:
    return g._topo is not None


def topological_order(g: MixedGraph) -> tuple:
    """Topological order of the directed part, ties broken by index."""
    order = g._topo
    if order is None:
        raise CyclicGraph("graph has a directed cycle")
    return order


def parents(g: MixedGraph, v: int) -> tuple:
    _check_node(g, v)
    return g._pa[v]


def children(g: MixedGraph, v: int) -> tuple:
    _check_node(g, v)
    return g._ch[v]


def spouses(g: MixedGraph, v: int) -> tuple:
    _check_node(g, v)
    return g._sp[v]


def adjacent(g: MixedGraph, v: int, w: int) -> bool:
    _check_node(g, v)
    _check_node(g, w)
    return w in g._adj[v]


def degree(g: MixedGraph, v: int) -> int:
    """Number of distinct nodes joined to v by any edge."""
    _check_node(g, v)
    return len(g._adj[v])


def _descendants_closure(g: MixedGraph, start: Iterable[int]) -> set:
    seen = set(start)
    queue = deque(seen)
    ch = g._ch
    while queue:
        x = queue.popleft()
        for y in ch[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _htr_bfs(g: MixedGraph, v: int) -> set:
    # a directed path of length >= 1 starts at a child; a bidirected step
    # lands on a spouse, followed by a directed path of length >= 0
    return _descendants_closure(g, set(g._ch[v]) | set(g._sp[v]))


def half_trek_reachable(g: MixedGraph, v: int) -> frozenset:
    _check_node(g, v)
    return g._htr[v]


def longest_directed_path(g: MixedGraph) -> int:
    """Edge count of the longest directed path (0 if there are no directed edges)."""
    order = topological_order(g)
    depth = [0] * g.n
    for v in order:
        for u in g._pa[v]:
            if depth[u] + 1 > depth[v]:
                depth[v] = depth[u] + 1
    return max(depth, default=0)


def skeleton(g: MixedGraph) -> frozenset:
    return frozenset((min(a, b), max(a, b)) for a, b in g.directed | g.bidirected)


def _arrowheads_into(g: MixedGraph, v: int) -> tuple:
    return tuple(sorted(set(g._pa[v]) | set(g._sp[v])))


def collider_triples(g: MixedGraph) -> frozenset:
    """Triples (u, v, w), u < w, with an arrowhead at v on both the u-v and w-v edges."""
    out = set()
    for v in range(g.n):
        into = _arrowheads_into(g, v)
        for i, u in enumerate(into):
            for w in into[i + 1:]:
                out.add((u, v, w))
    return frozenset(out)


def v_structures(g: MixedGraph) -> frozenset:
    adj = g._adj
    return frozenset(t for t in collider_triples(g) if t[2] not in adj[t[0]])


def induced_subgraph(g: MixedGraph, nodes: Iterable[int]) -> MixedGraph:
    """Subgraph on ``nodes`` (kept in increasing index order, names preserved)."""
    keep = sorted(set(nodes))
    for v in keep:
        _check_node(g, v)
    pos = {v: i for i, v in enumerate(keep)}
    return MixedGraph(
        len(keep),
        frozenset((pos[t], pos[h]) for t, h in g.directed if t in pos and h in pos),
        frozenset((pos[a], pos[b]) for a, b in g.bidirected if a in pos and b in pos),
        tuple(g.names[v] for v in keep),
    )


def _is_ancestral(g: MixedGraph) -> bool:
    if g._topo is None:
        return False
    for a, b in g.bidirected:
        if b in _descendants_closure(g, g._ch[a]) or a in _descendants_closure(g, g._ch[b]):
            return False
    return True


def classify(g: MixedGraph) -> GraphClassReport:
    acyclic = g._topo is not None
    bow_free = not any((a, b) in g.directed or (b, a) in g.directed for a, b in g.bidirected)
    is_bap = acyclic and bow_free
    return GraphClassReport(
        acyclic=acyclic,
        bow_free=bow_free,
        is_bap=is_bap,
        is_dag=is_bap and not g.bidirected,
        ancestral=_is_ancestral(g),
    )
