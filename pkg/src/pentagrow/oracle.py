"""Brute-force arrangement oracle for small structures.

Rebuilds the planar subdivision from scratch with 60-digit floating point
and no shared code paths with the exact pipeline: vertices are clustered
by rounding, edges are split by a quadratic vertex-against-segment scan,
the rotation system comes from high-precision angles, and faces are walked
with the standard "next edge clockwise" rule.  Intended for n <= 50 as an
independent check of the exact subdivision.
"""

from __future__ import annotations

from mpmath import mp, mpf, atan2, cos, sin, pi

from .predicates import UP

_DPS = 60


def _vertices(structure):
    mp.dps = _DPS
    zs = [(cos(2 * pi * k / 5), sin(2 * pi * k / 5)) for k in range(5)]
    pents = []
    for i in range(structure.n):
        a0, a1, a2, a3 = structure.centers[i]
        cx = a0 + a1 * zs[1][0] + a2 * zs[2][0] + a3 * zs[3][0]
        cy = a1 * zs[1][1] + a2 * zs[2][1] + a3 * zs[3][1]
        o = 1 if structure.orients[i] == UP else -1
        pents.append([(cx + o * zx, cy + o * zy) for zx, zy in zs])
    return pents


def subdivision_oracle(structure):
    """Return (V, E, H) computed independently of the exact pipeline."""
    mp.dps = _DPS
    tol = mpf(10) ** (-30)
    pents = _vertices(structure)

    # cluster coincident corner points by plain quadratic tolerance merge
    raw = [p for vs in pents for p in vs]
    pos: list = []
    ids: list = []
    for p in raw:
        hit = None
        for i, q in enumerate(pos):
            if abs(p[0] - q[0]) < tol and abs(p[1] - q[1]) < tol:
                hit = i
                break
        if hit is None:
            hit = len(pos)
            pos.append(p)
        ids.append(hit)

    sides = set()
    for pi in range(len(pents)):
        ring = ids[5 * pi:5 * pi + 5]
        for k in range(5):
            a, b = ring[k], ring[(k + 1) % 5]
            sides.add((a, b) if a < b else (b, a))

    # split sides at any vertex lying in their open interior
    edges = set()
    for a, b in sides:
        (xa, ya), (xb, yb) = pos[a], pos[b]
        dx, dy = xb - xa, yb - ya
        L2 = dx * dx + dy * dy
        on = []
        for v in range(len(pos)):
            if v == a or v == b:
                continue
            x, y = pos[v]
            if abs(dx * (y - ya) - dy * (x - xa)) > tol:
                continue
            t = (dx * (x - xa) + dy * (y - ya)) / L2
            if tol < t < 1 - tol:
                on.append((t, v))
        on.sort()
        chain = [a] + [v for _, v in on] + [b]
        for u, w in zip(chain, chain[1:]):
            edges.add((u, w) if u < w else (w, u))

    edges = sorted(edges)
    V, E = len(pos), len(edges)

    # rotation system by high-precision angle; walk faces keeping the
    # interior on the left (successor = next half-edge clockwise from the
    # reversed arrival direction)
    out_by_vertex: dict = {}
    for e, (a, b) in enumerate(edges):
        ang_ab = atan2(pos[b][1] - pos[a][1], pos[b][0] - pos[a][0])
        ang_ba = atan2(pos[a][1] - pos[b][1], pos[a][0] - pos[b][0])
        out_by_vertex.setdefault(a, []).append((ang_ab, 2 * e, b))
        out_by_vertex.setdefault(b, []).append((ang_ba, 2 * e + 1, a))
    for v in out_by_vertex:
        out_by_vertex[v].sort()

    def half(h):
        e, fwd = h >> 1, not (h & 1)
        a, b = edges[e]
        return (a, b) if fwd else (b, a)

    face_of = {}
    n_faces = 0
    areas = []
    for h0 in range(2 * E):
        if h0 in face_of:
            continue
        fid = n_faces
        n_faces += 1
        area2 = mpf(0)
        h = h0
        while h not in face_of:
            face_of[h] = fid
            a, b = half(h)
            area2 += pos[a][0] * pos[b][1] - pos[b][0] * pos[a][1]
            # arrive at b; reversed direction is the twin's angle
            rev = atan2(pos[a][1] - pos[b][1], pos[a][0] - pos[b][0])
            outs = out_by_vertex[b]
            # next clockwise: largest angle strictly below rev (cyclically)
            nxt = None
            for ang, hh, _to in reversed(outs):
                if ang < rev - tol:
                    nxt = hh
                    break
            if nxt is None:
                nxt = outs[-1][1]
            h = nxt
        areas.append(area2)
    bounded = sum(1 for a in areas if a > 0)
    H = bounded - structure.n
    return V, E, H
