"""Forcing the bipartite colourer to its colour bound.

An adversary that can read the signature table and watch each announcement
picks star centres whose differing-index set it knows, connects them
grid-fashion, and realises every colour (i, x, y) with x, y below
max_degree/(2s): a certified floor of max_degree^2/(4s) distinct colours.
The efficiency is the point: one fresh colour per edge, where an oblivious
stream pays several edges for each colour it happens to mint.
"""

from streamcolor import (
    BipartiteColorer,
    CompleteGraph,
    UniformRandomPermutation,
    generate,
    recommended_vertex_count,
    run_stream,
    verify,
    worst_case_stream,
)

DELTA, S = 64, 8

n = recommended_vertex_count(DELTA, S)
colorer = BipartiteColorer(n, S, seed=0, expose_randomness=True)
result = worst_case_stream(colorer, DELTA)
report = verify(result.transcript)
degree = {}
for u, v in result.edges:
    degree[u] = degree.get(u, 0) + 1
    degree[v] = degree.get(v, 0) + 1

print(f"adversarial stream against s={S}, degree budget {DELTA}:")
print(f"  {len(result.edges)} edges, stream max degree {max(degree.values())}")
print(f"  forced {result.distinct_colours} distinct colours "
      f"(grid {S} slices x {result.grid_side}^2 pairs; "
      f"floor maxdeg^2/(4s) = {DELTA*DELTA/(4*S):.0f})")
print(f"  transcript proper: {report.proper}")
print(f"  yield: {len(result.edges)/result.distinct_colours:.2f} edges per colour")

# an oblivious stream under the same degree budget: the whole complete graph
# on DELTA+1 vertices, randomly ordered
header, edges = generate(CompleteGraph(DELTA + 1), UniformRandomPermutation(), 0)
oblivious = BipartiteColorer(DELTA + 1, S, seed=0)
ob_report = verify(run_stream(oblivious, edges, header))
print(f"\noblivious complete-graph stream at the same degree budget: "
      f"{ob_report.distinct_triple_colours} distinct colours from {len(edges)} edges, "
      f"{len(edges)/ob_report.distinct_triple_colours:.2f} edges per colour")
