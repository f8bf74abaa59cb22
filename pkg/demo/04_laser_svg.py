"""
Rendering a cluster for laser cutting
=====================================

A grown cluster makes a nice physical object: cut the outline, engrave
the tile edges, and color (or shade) tiles by the stage at which they
arrived.  The SVG has two groups:

  engrave -- per-tile fills colored by attachment stage, interior tile
             edges, and optionally the attachment tree
  cut     -- the outer boundary, plus hole outlines if requested

Cut contours are closed paths whose total length matches the exact
boundary length to relative 1e-9, so a laser cutter's time estimate can
be trusted.
"""

import os

from pentagrow import grow, save, write_svg

OUT = os.path.join(os.path.dirname(__file__), "output")
os.makedirs(OUT, exist_ok=True)

structure = grow(800, seed=5).to_structure()

# The structure file is a portable plain-text record of the whole
# growth history; `pentagrow verify --in ...` re-checks it later.
save(structure, os.path.join(OUT, "cluster_800.penta"))

# 8 mm pentagon sides, holes cut out, attachment tree engraved.
write_svg(structure, os.path.join(OUT, "cluster_800.svg"),
          scale=8.0, holes_as_cut=True, tree=True)

print(f"wrote {OUT}/cluster_800.penta")
print(f"wrote {OUT}/cluster_800.svg  (open in a browser or Inkscape)")

# The same thing is available from the shell:
#   pentagrow grow --n 800 --seed 5 --out cluster.penta
#   pentagrow export --in cluster.penta --svg cluster.svg --holes-as-cut
