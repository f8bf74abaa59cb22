"""
Counting and naming holes
=========================

Because glued pentagons cannot tile the plane, growth pinches off gaps
that can never be covered later.  Every hole is a polygon whose corners
are multiples of 36 degrees; writing the corner angles as 36a_i, an
l-gon hole always satisfies  sum(a_i) = 5(l - 2)  exactly.

Recurring small shapes have names (diamond, ship, crown, ...), each
defined by the closed chain of glued pentagons that surrounds it.  This
script grows a cluster, runs the census, and prints the histogram.
"""

from collections import Counter

from pentagrow import Catalog, census, grow
from pentagrow.holes import _CYCLES, chain_structure

# ---------------------------------------------------------------
# The named shapes can be built directly from their pentagon cycles:
# a signed step +-(k+1) glues the next pentagon across side k.

for name, steps in _CYCLES.items():
    ring = chain_structure(steps)
    print(f"{name:12s} ring of {ring.n:2d} pentagons, "
          f"steps {','.join(f'{s:+d}' for s in steps)}")

# ---------------------------------------------------------------
# Census of a grown cluster.  The catalog starts with the named shapes
# and learns new signatures as they appear (auto-named until someone
# christens them).

structure = grow(3000, seed=11).to_structure()
catalog = Catalog()
result = census(structure, catalog)

print(f"\nholes in a {structure.n}-tile cluster: "
      f"{sum(result.counts.values())}")
print(f"angle-sum violations: {result.angle_violations}  (must be 0)")

named = Counter({k: v for k, v in result.counts.items()
                 if not k.startswith("auto")})
autos = sum(v for k, v in result.counts.items() if k.startswith("auto"))
print("\n  shape          count")
for name, count in named.most_common():
    print(f"  {name:14s} {count:5d}")
print(f"  {'(unnamed)':14s} {autos:5d}")

# ---------------------------------------------------------------
# Triangular holes deserve a closer look.  The common triangle is the
# 36-72-72 one with golden-ratio legs; keep an eye out for the rarer
# 36-36-108 triangle as well.

triangles = {k: v for k, v in result.counts.items() if "triangle" in k}
print(f"\ntriangular holes: {triangles}")
