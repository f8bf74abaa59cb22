"""High-precision floating-point oracle for the overlap predicate.

Independent of the exact integer kernel: pentagons are rebuilt with
130-bit mpmath complex arithmetic and intersected with Sutherland-Hodgman
polygon clipping.  Open interiors overlap iff the clipped region has
strictly positive area; for lattice-reachable placements the smallest
genuine overlap area is far above the 1e-20 threshold, while touching
contacts (shared sides, partial sides, vertices) clip to area ~1e-35.
"""

import mpmath as mp

mp.mp.dps = 40

_ZETA = [mp.e ** (2j * mp.pi * k / 5) for k in range(5)]


def _center(coeffs):
    return sum(a * z for a, z in zip(coeffs, _ZETA[:4]))


def pentagon_mp(coeffs, orientation):
    c = _center(coeffs)
    return [c + orientation * z for z in _ZETA]


def _clip(poly, a, b):
    """Keep the part of poly on the left of directed line a->b."""
    d = b - a
    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        sp = (d.conjugate() * (p - a)).imag
        sq = (d.conjugate() * (q - a)).imag
        if sp >= 0:
            out.append(p)
        if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
            t = sp / (sp - sq)
            out.append(p + t * (q - p))
    return out


def intersection_area(poly1, poly2):
    region = list(poly1)
    n = len(poly2)
    for i in range(n):
        if not region:
            return mp.mpf(0)
        region = _clip(region, poly2[i], poly2[(i + 1) % n])
    if len(region) < 3:
        return mp.mpf(0)
    s = mp.mpf(0)
    for i in range(len(region)):
        p, q = region[i], region[(i + 1) % len(region)]
        s += p.real * q.imag - q.real * p.imag
    return abs(s) / 2


def interiors_overlap_oracle(c1, o1, c2, o2) -> bool:
    area = intersection_area(pentagon_mp(c1, o1), pentagon_mp(c2, o2))
    return area > mp.mpf("1e-20")
