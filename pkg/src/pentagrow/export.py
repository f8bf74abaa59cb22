"""Lossless structure files and layered SVG output.

The structure file is a line-oriented text format holding only integers
(the exact center coefficients), so a save/load round trip is bit-exact.
Loading revalidates the document: parent links must form a tree, glued
placements must be consistent, orientations must alternate with tree
depth, and neighboring pentagons must have disjoint interiors.

The SVG writer emits two named groups for fabrication: ``cut`` with the
closed outline of the union (optionally the hole outlines too), and
``engrave`` with stage-colored pentagon fills, interior edges, and the
attachment tree.
"""

from __future__ import annotations

import colorsys

from .errors import InvariantViolation, StructureFormatError, VersionMismatch
from .growth import Structure, ghost_placement
from .predicates import DOWN, UP, interiors_overlap
from .ring import SIDE_LEN, xy_float
from .subdivision import build_subdivision, extract_faces

FORMAT_NAME = "pentagon-structure"
FORMAT_VERSION = 1


def save(structure: Structure, path) -> None:
    """Write the versioned integer-only text document."""
    lines = [f"{FORMAT_NAME} v{FORMAT_VERSION}",
             f"seed {structure.seed}",
             f"n {structure.n}"]
    for i in range(structure.n):
        c = structure.centers[i]
        o = structure.orients[i]
        p = structure.parents[i]
        s = structure.parent_sides[i]
        lines.append(f"{i} {c[0]} {c[1]} {c[2]} {c[3]} {o} "
                     f"{-1 if p is None else p} {-1 if s is None else s}")
    try:
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as ex:
        raise OSError(f"cannot write structure file {path!r}: {ex}") from ex


def load(path) -> Structure:
    """Read and revalidate a structure document."""
    try:
        with open(path) as fh:
            lines = [ln.rstrip("\n") for ln in fh]
    except OSError as ex:
        raise OSError(f"cannot read structure file {path!r}: {ex}") from ex
    lines = [ln for ln in lines if ln.strip()]
    if not lines:
        raise StructureFormatError(f"{path!r}: empty file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != FORMAT_NAME or not head[1].startswith("v"):
        raise StructureFormatError(f"{path!r}: bad header {lines[0]!r}")
    try:
        version = int(head[1][1:])
    except ValueError:
        raise StructureFormatError(f"{path!r}: bad version {head[1]!r}")
    if version != FORMAT_VERSION:
        raise VersionMismatch(
            f"{path!r}: format version {version}, expected {FORMAT_VERSION}")
    try:
        seed = int(lines[1].split()[1])
        n = int(lines[2].split()[1])
    except (IndexError, ValueError):
        raise StructureFormatError(f"{path!r}: malformed seed/n lines")
    if len(lines) != 3 + n:
        raise StructureFormatError(
            f"{path!r}: expected {n} pentagon lines, found {len(lines) - 3}")
    centers, orients, parents, psides = [], [], [], []
    for i, ln in enumerate(lines[3:]):
        f = ln.split()
        if len(f) != 8:
            raise StructureFormatError(f"{path!r}: bad pentagon line {ln!r}")
        try:
            vals = [int(x) for x in f]
        except ValueError:
            raise StructureFormatError(f"{path!r}: non-integer in {ln!r}")
        if vals[0] != i:
            raise StructureFormatError(
                f"{path!r}: pentagon ids out of order at line {ln!r}")
        centers.append(tuple(vals[1:5]))
        orients.append(vals[5])
        parents.append(None if vals[6] == -1 else vals[6])
        psides.append(None if vals[7] == -1 else vals[7])
    st = Structure(seed, centers, orients, parents, psides)
    _validate(st, path)
    return st


def _validate(st: Structure, path) -> None:
    n = st.n
    if n < 1:
        raise StructureFormatError(f"{path!r}: no pentagons")
    if st.parents[0] is not None or st.parent_sides[0] is not None:
        raise InvariantViolation(f"{path!r}: pentagon 0 must be the root")
    if st.centers[0] != (0, 0, 0, 0) or st.orients[0] != UP:
        raise InvariantViolation(f"{path!r}: root must be Up at the origin")
    for i in range(1, n):
        p, s = st.parents[i], st.parent_sides[i]
        if p is None or s is None or not 0 <= p < i or not 0 <= s < 5:
            raise InvariantViolation(
                f"{path!r}: pentagon {i} has invalid parent link ({p}, {s})")
        gc, go = ghost_placement(st.centers[p], st.orients[p], s)
        if (gc, go) != (st.centers[i], st.orients[i]):
            raise InvariantViolation(
                f"{path!r}: pentagon {i} is not glued to side {s} of {p}")
    # orientation parity along the attachment tree
    for i, d in enumerate(st.depths()):
        want = UP if d % 2 == 0 else DOWN
        if st.orients[i] != want:
            raise InvariantViolation(
                f"{path!r}: pentagon {i} orientation breaks depth parity")
    # interior disjointness of near pairs (full O(n^2) would be wasteful;
    # only pentagons within center distance 2 can overlap)
    cells: dict = {}
    xys = [xy_float(c) for c in st.centers]
    for i, (x, y) in enumerate(xys):
        cells.setdefault((int(x // 2), int(y // 2)), []).append(i)
    for (cx, cy), ids in cells.items():
        near = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                near.extend(cells.get((cx + dx, cy + dy), ()))
        for i in ids:
            xi, yi = xys[i]
            for j in near:
                if j <= i:
                    continue
                xj, yj = xys[j]
                if (xi - xj) ** 2 + (yi - yj) ** 2 > 4.000000001:
                    continue
                if interiors_overlap(st.centers[i], st.orients[i],
                                     st.centers[j], st.orients[j]):
                    raise InvariantViolation(
                        f"{path!r}: pentagons {i} and {j} overlap")


# ---------------------------------------------------------------------------
# SVG


def _hue_color(stage: int, n: int) -> str:
    if stage == 0:
        return "#000000"
    r, g, b = colorsys.hsv_to_rgb((stage / n) % 1.0, 0.85, 0.95)
    return "#{:02x}{:02x}{:02x}".format(int(r * 255), int(g * 255), int(b * 255))


def _fmt(x: float) -> str:
    return format(x, ".9f")


def _path(points, scale) -> str:
    parts = []
    for i, (x, y) in enumerate(points):
        cmd = "M" if i == 0 else "L"
        parts.append(f"{cmd} {_fmt(x * scale)} {_fmt(-y * scale)}")
    parts.append("Z")
    return " ".join(parts)


def _face_points(graph, face):
    return [xy_float(graph.vertices[v]) for v in face.vertices]


def to_svg(structure: Structure, scale: float = None, holes_as_cut: bool = False,
           tree: bool = True, fills: bool = True,
           cut_stroke: float = 0.2, engrave_stroke: float = 0.1) -> str:
    """Render the structure as an SVG document string.

    ``scale`` is millimetres per pentagon side (default 10); the y axis is
    flipped so the mathematical orientation matches screen coordinates.
    """
    if scale is None:
        scale = 10.0 / SIDE_LEN
    else:
        scale = scale / SIDE_LEN
    graph = build_subdivision(structure)
    extract_faces(graph, structure)
    outer = graph.faces[graph.outer_face]
    # walk the outer face in order; its vertices are already cycle-ordered
    cut_paths = [_path(_face_points(graph, outer), scale)]
    if holes_as_cut:
        for f in graph.faces:
            if f.kind == "hole":
                cut_paths.append(_path(_face_points(graph, f), scale))
    xs, ys = [], []
    for t in graph.vertices:
        x, y = xy_float(t)
        xs.append(x * scale)
        ys.append(-y * scale)
    pad = 2.0
    x0, y0 = min(xs) - pad, min(ys) - pad
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(w)}mm" height="{_fmt(h)}mm" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        '<g id="engrave">',
    ]
    n = structure.n
    if fills:
        pfaces = {f.pentagon_id: f for f in graph.faces if f.kind == "pentagon"}
        for i in range(n):
            pts = _face_points(graph, pfaces[i])
            out.append(f'<path d="{_path(pts, scale)}" '
                       f'fill="{_hue_color(i, n)}" stroke="none"/>')
    # interior edges: both sides bounded by pentagon faces
    segs = []
    for e in range(graph.E):
        fa = graph.faces[graph.face_of[2 * e]]
        fb = graph.faces[graph.face_of[2 * e + 1]]
        if fa.kind == "pentagon" and fb.kind == "pentagon":
            a, b = graph.edges[e]
            segs.append((xy_float(graph.vertices[a]),
                         xy_float(graph.vertices[b])))
    for (xa, ya), (xb, yb) in segs:
        out.append(f'<line x1="{_fmt(xa * scale)}" y1="{_fmt(-ya * scale)}" '
                   f'x2="{_fmt(xb * scale)}" y2="{_fmt(-yb * scale)}" '
                   f'stroke="#555555" stroke-width="{engrave_stroke}"/>')
    if tree:
        for i in range(1, n):
            p = structure.parents[i]
            xa, ya = xy_float(structure.centers[p])
            xb, yb = xy_float(structure.centers[i])
            out.append(
                f'<line x1="{_fmt(xa * scale)}" y1="{_fmt(-ya * scale)}" '
                f'x2="{_fmt(xb * scale)}" y2="{_fmt(-yb * scale)}" '
                f'stroke="#000000" stroke-width="{engrave_stroke}"/>')
    out.append('</g>')
    out.append('<g id="cut">')
    for d in cut_paths:
        out.append(f'<path d="{d}" fill="none" stroke="#ff0000" '
                   f'stroke-width="{cut_stroke}"/>')
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"


def write_svg(structure: Structure, path, **options) -> None:
    doc = to_svg(structure, **options)
    try:
        with open(path, "w") as fh:
            fh.write(doc)
    except OSError as ex:
        raise OSError(f"cannot write SVG {path!r}: {ex}") from ex
