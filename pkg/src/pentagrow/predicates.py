"""Exact geometric predicates for unit-circumradius pentagons.

Orientation convention: an Up pentagon (orientation ``UP = +1``) centered
at c has vertices c + zeta^j; a Down pentagon (``DOWN = -1``) has vertices
c - zeta^j.  Every pentagon in a grown structure is one of these two, so
all predicates reduce to integer sign tests on the center offset.

The overlap test is a separating-axis test over the 5 side-normal
directions (shared by both orientations).  All interval endpoints are
precomputed exact constants; the per-call work is five integer linear
forms in the center-offset coefficients plus sign tests.  Touching
configurations (zero-width projection overlap) count as non-overlapping,
since only open interiors matter for gluing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import NoLabelingFound, NotAGridDirection
from .ring import (CycPoint, PHI, QSqrt5, cross_pair, dot_pair, neg4,
                   sign_pair, sub4, xy_quads)

UP = 1
DOWN = -1


def _as_tuple(p):
    return p.coeffs if isinstance(p, CycPoint) else tuple(p)


def _zeta(k):
    return CycPoint.zeta(k).coeffs


#: side k of an Up pentagon at the origin runs from zeta^k to zeta^{k+1}
EDGE_DIRS = tuple(sub4(_zeta(k + 1), _zeta(k)) for k in range(5))

#: the ten grid directions: class c is at angle 36*c degrees from class 0,
#: class 0 being the direction of the seed pentagon's side 0 (zeta^0 -> zeta^1)
REF_DIRS = [None] * 10
for _k in range(5):
    REF_DIRS[(2 * _k) % 10] = EDGE_DIRS[_k]
    REF_DIRS[(2 * _k + 5) % 10] = neg4(EDGE_DIRS[_k])
REF_DIRS = tuple(REF_DIRS)

_REF_QUADS = tuple(xy_quads(r) for r in REF_DIRS)


def _cross_quads(qu, qv):
    """Cross product from precomputed xy quads, as an integer pair."""
    xa, xb, ya, yb = qu
    wa, wb, za, zb = qv
    return (xa * za + 5 * xb * zb - wa * ya - 5 * wb * yb,
            xa * zb + xb * za - wa * yb - wb * ya)


def pentagon_vertices(center, orientation):
    """The five vertex coefficient tuples c + o*zeta^j, j = 0..4 (CCW)."""
    c = _as_tuple(center)
    out = []
    for j in range(5):
        z = _zeta(j)
        if orientation == UP:
            out.append((c[0] + z[0], c[1] + z[1], c[2] + z[2], c[3] + z[3]))
        else:
            out.append((c[0] - z[0], c[1] - z[1], c[2] - z[2], c[3] - z[3]))
    return out


def orient(a, b, c) -> int:
    """Sign of the cross product (b-a) x (c-a); 0 iff collinear."""
    ta, tb, tc = _as_tuple(a), _as_tuple(b), _as_tuple(c)
    return sign_pair(*cross_pair(sub4(tb, ta), sub4(tc, ta)))


def direction_class(v) -> int:
    """Grid direction class (0..9) of a nonzero vector.

    Raises NotAGridDirection if v is not parallel to any of the ten
    reference directions.
    """
    t = _as_tuple(v)
    if t == (0, 0, 0, 0):
        raise NotAGridDirection("zero vector has no direction")
    q = xy_quads(t)
    for c in range(10):
        rq = _REF_QUADS[c]
        if sign_pair(*_cross_quads(rq, q)) == 0:
            # parallel; pick the ray with positive dot product
            if sign_pair(*dot_pair(REF_DIRS[c], t)) > 0:
                return c
    raise NotAGridDirection(f"{t} is not a 36-degree grid direction")


# ---------------------------------------------------------------------------
# separating-axis overlap test
#
# For axis k use the linear functional f_k(p) = cross(E_k, p) (projection
# onto the side normal, up to a positive factor).  With A = Up pentagon at
# the origin and B at offset d, B's projection interval is f_k(d) + [mB0, MB0]
# where [mB0, MB0] is B's interval at the origin.  Interiors are disjoint
# iff on some axis f_k(d) >= MA - mB0 or f_k(d) <= mA - MB0.


def _minmax(pairs):
    lo = hi = pairs[0]
    for p in pairs[1:]:
        if sign_pair(p[0] - lo[0], p[1] - lo[1]) < 0:
            lo = p
        if sign_pair(p[0] - hi[0], p[1] - hi[1]) > 0:
            hi = p
    return lo, hi


_UNIT = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))

# per axis: 4 coefficient pairs of the linear form f_k, and the four
# threshold pairs (LO_same, HI_same, LO_opp, HI_opp)
_AXIS_COEF = []
_AXIS_THRESH = []
for _e in EDGE_DIRS:
    _AXIS_COEF.append(tuple(cross_pair(_e, u) for u in _UNIT))
    _proj = [cross_pair(_e, _zeta(j)) for j in range(5)]
    (_ma, _mb), (_Ma, _Mb) = _minmax(_proj)
    # same orientation: B0 interval = [mA, MA]; opposite: [-MA, -mA]
    _AXIS_THRESH.append((
        (_ma - _Ma, _mb - _Mb),      # LO same
        (_Ma - _ma, _Mb - _mb),      # HI same
        (2 * _ma, 2 * _mb),          # LO opp
        (2 * _Ma, 2 * _Mb),          # HI opp
    ))
_AXIS_COEF = tuple(_AXIS_COEF)
_AXIS_THRESH = tuple(_AXIS_THRESH)

_overlap_cache: dict = {}


def _overlap_key(c1, o1, c2, o2):
    d = sub4(_as_tuple(c2), _as_tuple(c1))
    if o1 == DOWN:
        # point-reflect through the origin: Down@c1 -> Up@-c1
        d = neg4(d)
    return d, (o1 == o2)


def interiors_overlap(c1, o1, c2, o2) -> bool:
    """True iff the open interiors of the two pentagons intersect."""
    key = _overlap_key(c1, o1, c2, o2)
    v = _overlap_cache.get(key)
    if v is None:
        v = _overlap_cache[key] = _overlap_kernel(*key)
    return v


def _overlap_kernel(d, same: bool) -> bool:
    d0, d1, d2, d3 = d
    for k in range(5):
        (c0, c1), (e0, e1), (f0, f1), (g0, g1) = _AXIS_COEF[k]
        ta = c0 * d0 + e0 * d1 + f0 * d2 + g0 * d3
        tb = c1 * d0 + e1 * d1 + f1 * d2 + g1 * d3
        lo_s, hi_s, lo_o, hi_o = _AXIS_THRESH[k]
        lo, hi = (lo_s, hi_s) if same else (lo_o, hi_o)
        if sign_pair(ta - hi[0], tb - hi[1]) >= 0:
            return False
        if sign_pair(ta - lo[0], tb - lo[1]) <= 0:
            return False
    return True


# ---------------------------------------------------------------------------
# center-displacement basis relations


@dataclass(frozen=True)
class BasisRelationReport:
    labeling: tuple          # indices k such that u_i = w_{labeling[i-1]}
    relations_ok: tuple      # the three golden-ratio relations
    sum_zero: bool
    passed: bool


def center_displacements():
    """The five vectors w_k = zeta^k + zeta^{k+1} from a center to the
    centers of its potential glued neighbors."""
    return [CycPoint.zeta(k) + CycPoint.zeta(k + 1) for k in range(5)]


def _proj_eq(p: CycPoint, qx: QSqrt5, qy: QSqrt5) -> bool:
    x, y = p.project()
    return x == qx and y == qy


def verify_center_basis_relations() -> BasisRelationReport:
    """Search for a labeling (u1..u5) of the displacement vectors under
    which the golden-ratio relations

        u3 = -u1 + phi*u2,  u4 = -phi*u1 - phi*u2,  u5 = phi*u1 - u2

    hold exactly in Q(sqrt5) on the planar projections."""
    ws = center_displacements()
    total = ws[0] + ws[1] + ws[2] + ws[3] + ws[4]
    sum_zero = total.is_zero()
    projs = [w.project() for w in ws]
    for perm in itertools.permutations(range(5)):
        (x1, y1), (x2, y2), (x3, y3), (x4, y4), (x5, y5) = (projs[i] for i in perm)
        r1 = (x3 == -x1 + PHI * x2) and (y3 == -y1 + PHI * y2)
        r2 = (x4 == -PHI * x1 - PHI * x2) and (y4 == -PHI * y1 - PHI * y2)
        r3 = (x5 == PHI * x1 - x2) and (y5 == PHI * y1 - y2)
        if r1 and r2 and r3:
            return BasisRelationReport(labeling=perm,
                                       relations_ok=(r1, r2, r3),
                                       sum_zero=sum_zero, passed=sum_zero)
    raise NoLabelingFound("no labeling satisfies the basis relations")
