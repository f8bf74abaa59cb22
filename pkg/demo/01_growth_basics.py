"""
Growing a random pentagon cluster
=================================

Start from one regular pentagon and repeatedly glue a new pentagon to a
uniformly chosen free edge.  Every placed tile is a translate of the seed
pentagon or of its point mirror, so all coordinates live in the ring of
cyclotomic integers and every geometric question is answered exactly.

This script grows a small cluster, inspects the resulting structure, and
checks the Euler-style identity  V - E + n + H = 1  that ties vertex,
edge, tile, and hole counts together.
"""

from pentagrow import grow
from pentagrow.subdivision import (build_subdivision, euler_holes,
                                   extract_faces, perimeter)

# ---------------------------------------------------------------
# Grow 500 tiles.  The seed fixes the whole history: same seed, same
# cluster, bit for bit, on any platform.

state = grow(500, seed=2024)
structure = state.to_structure()
print(f"tiles placed:     {structure.n}")
print(f"free edges left:  {state.free_edge_count()}")

# Each tile after the first records which side of which parent it was
# glued to, so the growth history is an attachment tree.
depths = structure.depths()
print(f"attachment tree depth: {max(depths)}")

# ---------------------------------------------------------------
# Build the planar subdivision induced by all pentagon sides.  Sides can
# meet in the middle (a vertex of one tile landing inside a side of
# another), so sides are split at such contacts before counting.

graph = build_subdivision(structure)
extract_faces(graph, structure)
holes = sum(1 for f in graph.faces if f.kind == "hole")

print(f"\nV = {graph.V}, E = {graph.E}, n = {structure.n}, H = {holes}")
print(f"identity V - E + n + H = {graph.V - graph.E + structure.n + holes}"
      "  (always 1)")
assert holes == euler_holes(graph.V, graph.E, structure.n)

# ---------------------------------------------------------------
# The outer rim grows like the cluster diameter, while the total
# boundary (rim plus hole boundaries) keeps pace with the tile count.

outer, total = perimeter(graph)
print(f"\nouter perimeter:  {float(outer):8.2f} side lengths")
print(f"total boundary:   {float(total):8.2f} side lengths")
print(f"boundary per tile: {float(total) / structure.n:.3f}")
