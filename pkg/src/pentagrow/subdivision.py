"""Planar subdivision of a pentagon structure and its face census.

The graph consists of all pentagon vertices plus every pentagon side,
with sides split at any vertex lying in their open interior (a vertex on
another pentagon's edge turns that edge into two graph edges).  Coincident
sub-segments are merged, so the result is a plane graph with a rotation
system given by the ten 36-degree direction classes.  Faces are traced
through the rotation system and classified as pentagon interiors, holes,
or the single outer face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import floor

from .errors import ClassificationMismatch, InvariantViolation
from .ring import (QSqrt5, cross_pair, dot_pair, norm_pair, sign_pair,
                   sub4, xy_float)
from .predicates import DOWN, REF_DIRS, UP, direction_class, pentagon_vertices

_ZMARGIN = 1e-6  # float cross prefilter; sound because exact zero crosses
                 # evaluate to ~1e-12 at structure scale

#: 32 * |unit side|^2, for exact side-length ratios
_SIDE_NORM = norm_pair(REF_DIRS[0])


@dataclass
class Face:
    half_edges: list            # directed half-edge indices, in walk order
    vertices: list              # vertex ids, one per half-edge origin
    area_pair: tuple            # signed area * 16/sin36 as an integer pair
    kind: str = "hole"          # "pentagon" | "hole" | "outer"
    pentagon_id: int | None = None

    @property
    def area(self) -> QSqrt5:
        """Exact signed area divided by the positive constant sin36."""
        return QSqrt5(self.area_pair[0], self.area_pair[1], 16)


@dataclass
class SubdivisionGraph:
    vertices: list              # coefficient tuples
    edges: list                 # (va, vb) vertex-id pairs
    edge_class: list            # direction class of vb - va
    vertex_out: list            # per vertex: {class: (edge_id, to_vertex)}
    faces: list = field(default_factory=list)
    face_of: list = field(default_factory=list)   # half-edge -> face id
    outer_face: int | None = None

    @property
    def V(self) -> int:
        return len(self.vertices)

    @property
    def E(self) -> int:
        return len(self.edges)


def count_V_E(graph: SubdivisionGraph):
    return graph.V, graph.E


def euler_holes(V: int, E: int, n: int) -> int:
    """Hole count from the structure's Euler relation V - E + n + H = 1."""
    return 1 - V + E - n


def edge_length_units(graph: SubdivisionGraph, e: int) -> QSqrt5:
    """Exact length of edge e in pentagon-side units."""
    va, vb = graph.edges[e]
    d = sub4(graph.vertices[vb], graph.vertices[va])
    ref = REF_DIRS[graph.edge_class[e]]
    num = dot_pair(d, ref)
    return QSqrt5(num[0], num[1]) / QSqrt5(_SIDE_NORM[0], _SIDE_NORM[1])


def build_subdivision(structure) -> SubdivisionGraph:
    """Build the planar subdivision induced by all pentagon sides."""
    vid: dict = {}
    vertices: list = []
    pent_verts = []  # per pentagon: 5 vertex ids in CCW order

    def intern(t):
        i = vid.get(t)
        if i is None:
            i = vid[t] = len(vertices)
            vertices.append(t)
        return i

    for i in range(structure.n):
        vs = pentagon_vertices(structure.centers[i], structure.orients[i])
        pent_verts.append([intern(t) for t in vs])

    # unique sides by unordered endpoint pair (merges full edge-edge contacts)
    sides = set()
    for ids in pent_verts:
        for k in range(5):
            a, b = ids[k], ids[(k + 1) % 5]
            sides.add((a, b) if a < b else (b, a))

    # vertex spatial hash, cell size 1 (a side spans ~1.18)
    xys = [xy_float(t) for t in vertices]
    grid: dict = {}
    for i, (x, y) in enumerate(xys):
        grid.setdefault((floor(x), floor(y)), []).append(i)

    edges: list = []
    edge_ids: dict = {}

    def intern_edge(a, b):
        key = (a, b) if a < b else (b, a)
        e = edge_ids.get(key)
        if e is None:
            e = edge_ids[key] = len(edges)
            edges.append(key)
        return e

    for a, b in sides:
        ta, tb = vertices[a], vertices[b]
        (xa, ya), (xb, yb) = xys[a], xys[b]
        x0, x1 = (xa, xb) if xa < xb else (xb, xa)
        y0, y1 = (ya, yb) if ya < yb else (yb, ya)
        d = sub4(tb, ta)
        interior = []
        for cx in range(floor(x0 - _ZMARGIN), floor(x1 + _ZMARGIN) + 1):
            for cy in range(floor(y0 - _ZMARGIN), floor(y1 + _ZMARGIN) + 1):
                for v in grid.get((cx, cy), ()):
                    if v == a or v == b:
                        continue
                    x, y = xys[v]
                    if (x < x0 - _ZMARGIN or x > x1 + _ZMARGIN
                            or y < y0 - _ZMARGIN or y > y1 + _ZMARGIN):
                        continue
                    # float prefilter: clearly off the supporting line
                    if abs((xb - xa) * (y - ya) - (yb - ya) * (x - xa)) > _ZMARGIN:
                        continue
                    w = sub4(vertices[v], ta)
                    ca, cb = cross_pair(d, w)
                    if ca or cb:
                        continue
                    # strict betweenness along the segment
                    if sign_dot(d, w) <= 0:
                        continue
                    if sign_dot(d, sub4(vertices[v], tb)) >= 0:
                        continue
                    interior.append(v)
        if not interior:
            intern_edge(a, b)
            continue
        if len(interior) > 1:
            interior.sort(key=lambda v: _dot_key(d, sub4(vertices[v], ta)))
        prev = a
        for v in interior:
            intern_edge(prev, v)
            prev = v
        intern_edge(prev, b)

    edge_class = []
    vertex_out: list = [dict() for _ in vertices]
    for e, (a, b) in enumerate(edges):
        c = direction_class(sub4(vertices[b], vertices[a]))
        edge_class.append(c)
        if c in vertex_out[a] or (c + 5) % 10 in vertex_out[b]:
            raise InvariantViolation("two distinct edges share a direction "
                                     f"at a vertex (edge {a}-{b})")
        vertex_out[a][c] = (e, b)
        vertex_out[b][(c + 5) % 10] = (e, a)

    graph = SubdivisionGraph(vertices, edges, edge_class, vertex_out)
    _walk_faces(graph)
    return graph


def sign_dot(u, v) -> int:
    return sign_pair(*dot_pair(u, v))


def _dot_key(d, w):
    a, b = dot_pair(d, w)
    return a + b * 2.23606797749979


def _walk_faces(graph: SubdivisionGraph) -> None:
    """Trace all face cycles through the rotation system.

    Half-edge 2e runs a->b, 2e+1 runs b->a.  The successor of a half-edge
    ending at v is the outgoing half-edge whose direction is the next one
    clockwise from the reversed arrival direction; this keeps each face's
    interior on the left, so bounded faces come out counterclockwise.
    """
    edges = graph.edges
    edge_class = graph.edge_class
    vertex_out = graph.vertex_out
    nh = 2 * len(edges)
    sorted_out = [sorted(d.keys()) for d in vertex_out]
    face_of = [-1] * nh
    faces: list = []
    for h0 in range(nh):
        if face_of[h0] != -1:
            continue
        fid = len(faces)
        cycle = []
        vlist = []
        area = (0, 0)
        h = h0
        while face_of[h] == -1:
            face_of[h] = fid
            e, fwd = h >> 1, not (h & 1)
            a, b = edges[e] if fwd else edges[e][::-1]
            cycle.append(h)
            vlist.append(a)
            pa, pb = graph.vertices[a], graph.vertices[b]
            ca, cb = cross_pair(pa, pb)
            area = (area[0] + ca, area[1] + cb)
            # step to successor at vertex b
            c_in = edge_class[e] if fwd else (edge_class[e] + 5) % 10
            cr = (c_in + 5) % 10
            outs = sorted_out[b]
            # next clockwise from cr: the largest class < cr, else max overall
            nxt = None
            for c in reversed(outs):
                if c < cr:
                    nxt = c
                    break
            if nxt is None:
                nxt = outs[-1]
            e2, _ = vertex_out[b][nxt]
            h = 2 * e2 if edges[e2][0] == b else 2 * e2 + 1
        if h != h0:
            raise InvariantViolation("face walk did not close")
        faces.append(Face(cycle, vlist, area))
    graph.faces = faces
    graph.face_of = face_of


def extract_faces(graph: SubdivisionGraph, structure) -> list:
    """Classify every face as a pentagon interior, a hole, or the outer face."""
    vid = {t: i for i, t in enumerate(graph.vertices)}
    claimed: dict = {}
    for i in range(structure.n):
        v0t = pentagon_vertices(structure.centers[i], structure.orients[i])[0]
        v0 = vid[v0t]
        c0 = 0 if structure.orients[i] == UP else 5
        try:
            e, _ = graph.vertex_out[v0][c0]
        except KeyError:
            raise ClassificationMismatch(
                f"pentagon {i} has no boundary edge of class {c0}")
        h = 2 * e if graph.edges[e][0] == v0 else 2 * e + 1
        fid = graph.face_of[h]
        if fid in claimed:
            raise ClassificationMismatch(
                f"face {fid} claimed by pentagons {claimed[fid]} and {i}")
        claimed[fid] = i
    outer = None
    for fid, face in enumerate(graph.faces):
        if fid in claimed:
            face.kind = "pentagon"
            face.pentagon_id = claimed[fid]
            continue
        s = sign_pair(*face.area_pair)
        if s < 0:
            if outer is not None:
                raise ClassificationMismatch("multiple outer faces")
            face.kind = "outer"
            outer = fid
        elif s > 0:
            face.kind = "hole"
        else:
            raise ClassificationMismatch("zero-area face")
    if outer is None:
        raise ClassificationMismatch("no outer face found")
    graph.outer_face = outer
    return graph.faces


def holes(graph: SubdivisionGraph) -> list:
    return [f for f in graph.faces if f.kind == "hole"]


def perimeter(graph: SubdivisionGraph):
    """(outer, total_boundary) lengths in exact pentagon-side units.

    outer sums the edges of the outer face; total_boundary sums every edge
    incident to at least one non-pentagon face, each counted once.
    """
    if graph.outer_face is None:
        raise InvariantViolation("faces not extracted")
    zero = QSqrt5(0)
    outer = zero
    for h in graph.faces[graph.outer_face].half_edges:
        outer = outer + edge_length_units(graph, h >> 1)
    total = zero
    for e in range(graph.E):
        fa = graph.faces[graph.face_of[2 * e]]
        fb = graph.faces[graph.face_of[2 * e + 1]]
        if fa.kind != "pentagon" or fb.kind != "pentagon":
            total = total + edge_length_units(graph, e)
    return outer, total
