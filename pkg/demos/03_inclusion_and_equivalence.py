# Model inclusion and algebraic equivalence of bow-free acyclic path diagrams.
from pathlib import Path

from algequiv import (
    M31,
    classify_pair,
    decide_equivalence,
    decide_inclusion,
    decide_with_repeats,
    parse_graph,
    partition_classes,
)
from algequiv.graph import MixedGraph

GRAPHS = Path(__file__).parent / "graphs"


def load(name):
    return parse_graph((GRAPHS / name).read_text())


# two complete graphs on four nodes: nothing to check, so both inclusions hold
g = load("complete_bidirected4.graph")
gp = load("chain_bidirected4.graph").relabel(g.names)
print("complete pair equivalent:", decide_equivalence(g, gp, M31, 1).verdict)

# a chain is not inside the collider model: sigma_ac must vanish there
chain = MixedGraph.from_edges("abc", ["ab", "bc"])
collider = MixedGraph.from_edges("abc", ["ab", "cb"])
d = decide_inclusion(chain, collider, M31, 3)
print("chain in collider:", d.verdict, "witness", [chain.names[i] for i in d.diagnostics.witness_pair])

# six graphs that differ in orientation yet share one algebraic model
members = sorted((GRAPHS / "class6").glob("*.graph"))
graphs = [load(f"class6/{p.name}") for p in members]
for p, h in zip(members[1:], graphs[1:]):
    print(members[0].stem, "vs", p.stem, classify_pair(graphs[0], h).status.value,
          decide_equivalence(graphs[0], h, M31, 5).verdict)

# repetition: stop at the first false, otherwise the bound is raised to the k-th power
rep = decide_with_repeats(lambda s: decide_equivalence(graphs[0], graphs[3], M31, s), 3, 2024)
print("three repeats:", rep.verdict, "bound", rep.bound_decimal)

report = partition_classes(graphs, M31, 2, 7)
print("classes:", report.classes, "randomized calls:", report.randomized_calls)
