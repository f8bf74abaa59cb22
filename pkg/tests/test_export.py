"""Structure files and SVG rendering for laser cutting."""

import math
import re
import xml.etree.ElementTree as ET

import pytest

from pentagrow.errors import (InvariantViolation, StructureFormatError,
                              VersionMismatch)
from pentagrow.export import load, save, to_svg, write_svg
from pentagrow.growth import grow
from pentagrow.ring import SIDE_LEN
from pentagrow.subdivision import build_subdivision, extract_faces, perimeter


@pytest.fixture(scope="module")
def grown():
    return grow(200, seed=3).to_structure()


def test_save_load_roundtrip(tmp_path, grown):
    p = tmp_path / "s.penta"
    save(grown, p)
    back = load(p)
    assert back.seed == grown.seed
    assert back.centers == grown.centers
    assert back.orients == grown.orients
    assert back.parents == grown.parents
    assert back.parent_sides == grown.parent_sides
    # and saving again is byte-identical
    p2 = tmp_path / "t.penta"
    save(back, p2)
    assert p.read_bytes() == p2.read_bytes()


def test_load_rejects_garbage(tmp_path):
    p = tmp_path / "bad"
    p.write_text("not a structure\n")
    with pytest.raises(StructureFormatError):
        load(p)


def test_load_rejects_future_version(tmp_path, grown):
    p = tmp_path / "s.penta"
    save(grown, p)
    text = p.read_text().replace("pentagon-structure v1",
                                 "pentagon-structure v99", 1)
    p.write_text(text)
    with pytest.raises(VersionMismatch):
        load(p)


def test_load_rejects_inconsistent_gluing(tmp_path, grown):
    p = tmp_path / "s.penta"
    save(grown, p)
    lines = p.read_text().splitlines()
    # corrupt one center coefficient on the last tile
    parts = lines[-1].split()
    parts[1] = str(int(parts[1]) + 3)
    lines[-1] = " ".join(parts)
    p.write_text("\n".join(lines) + "\n")
    with pytest.raises(InvariantViolation):
        load(p)


def _cut_paths(svg_text):
    root = ET.fromstring(svg_text)
    ns = {"svg": "http://www.w3.org/2000/svg"}
    groups = {g.get("id"): g for g in root.iter("{http://www.w3.org/2000/svg}g")}
    assert "cut" in groups and "engrave" in groups
    ds = [p.get("d") for p in groups["cut"].iter(
        "{http://www.w3.org/2000/svg}path")]
    return groups, ds


def _path_length(d):
    nums = [float(x) for x in re.findall(r"-?\d+\.?\d*(?:e-?\d+)?", d)]
    pts = list(zip(nums[0::2], nums[1::2]))
    assert d.strip().endswith("Z"), "cut contours must be closed"
    total = 0.0
    for a, b in zip(pts, pts[1:] + pts[:1]):
        total += math.hypot(b[0] - a[0], b[1] - a[1])
    return total


def test_svg_layers_and_cut_length(grown):
    svg = to_svg(grown, holes_as_cut=True)
    groups, ds = _cut_paths(svg)
    graph = build_subdivision(grown)
    extract_faces(graph, grown)
    outer, total = perimeter(graph)
    holes = sum(1 for f in graph.faces if f.kind == "hole")
    assert len(ds) == 1 + holes
    drawn = sum(_path_length(d) for d in ds)
    expected = float(total) * 10.0           # default 10 mm per side
    assert abs(drawn - expected) <= 1e-9 * expected
    # engrave layer carries the per-tile fills
    fills = list(groups["engrave"].iter("{http://www.w3.org/2000/svg}path"))
    assert len(fills) >= grown.n


def test_svg_outer_only_when_holes_not_cut(grown):
    svg = to_svg(grown, holes_as_cut=False)
    _, ds = _cut_paths(svg)
    assert len(ds) == 1
    graph = build_subdivision(grown)
    extract_faces(graph, grown)
    outer, _ = perimeter(graph)
    assert abs(_path_length(ds[0]) - float(outer) * 10.0) <= 1e-8 * float(outer)


def test_svg_scale_option(grown):
    a = to_svg(grown, scale=10.0)
    b = to_svg(grown, scale=20.0)
    _, da = _cut_paths(a)
    _, db = _cut_paths(b)
    assert _path_length(db[0]) == pytest.approx(2 * _path_length(da[0]),
                                                rel=1e-9)


def test_write_svg(tmp_path, grown):
    p = tmp_path / "out.svg"
    write_svg(grown, p)
    text = p.read_text()
    assert text.startswith("<?xml") or text.lstrip().startswith("<svg")
    assert 'id="cut"' in text and 'id="engrave"' in text
