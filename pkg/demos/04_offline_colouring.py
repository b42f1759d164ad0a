"""The offline colourers that power the chunk pipeline.

The fan-and-path colourer never needs more than max_degree + 1 colours; the
greedy pass can need 2*max_degree - 1.  On tiny graphs an exhaustive search
gives the exact optimum, which the constructive colourer can match or exceed
by at most one.
"""

import itertools

from streamcolor import (
    AdjacencyGraph,
    chromatic_index_bruteforce,
    color_greedy,
    color_vizing,
    colours_used,
    is_k_edge_colourable,
    is_proper,
)

SHOWCASE = {
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    "path of 3 edges": (4, [(0, 1), (1, 2), (2, 3)]),
    "star with 6 leaves": (7, [(0, leaf) for leaf in range(1, 7)]),
    "K4": (4, list(itertools.combinations(range(4), 2))),
    "cube graph": (8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7),
                       (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]),
}

print(f"{'graph':<20} {'maxdeg':>6} {'fan+path':>9} {'greedy':>7} {'optimum':>8}")
for name, (n, edges) in SHOWCASE.items():
    g = AdjacencyGraph.from_edges(n, edges)
    vc = color_vizing(g)
    gc = color_greedy(g)
    assert is_proper(g, vc) and is_proper(g, gc)
    exact = chromatic_index_bruteforce(g)
    print(f"{name:<20} {g.max_degree:>6} {colours_used(vc):>9} "
          f"{colours_used(gc):>7} {exact:>8}")

# Petersen: 15 edges is past the bruteforce contract, but a 3-colouring
# search settles optimality directly
petersen = (
    [(i, (i + 1) % 5) for i in range(5)]
    + [(i, i + 5) for i in range(5)]
    + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
)
g = AdjacencyGraph.from_edges(10, petersen)
col = color_vizing(g)
print(f"\nPetersen graph: maxdeg {g.max_degree}, fan+path uses "
      f"{colours_used(col)} colours, proper: {is_proper(g, col)}")
print(f"no 3-colouring exists: {not is_k_edge_colourable(g, 3)} "
      f"(so 4 is optimal: one more than the degree bound)")
