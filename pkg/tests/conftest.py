"""Shared fixtures.

The acceptance batch (20 independent runs to n = 10000) is expensive, so
it is computed once per session and only summary data is kept: per-run
checkpoint metrics plus hole-census aggregates at the final size.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from pentagrow.growth import Structure, ghost_placement, seed_structure
from pentagrow.holes import Catalog, census, signature_of
from pentagrow.predicates import DOWN, UP
from pentagrow.stats import Checkpoint, RunRecord, _measure, geometric_checkpoints
from pentagrow.subdivision import build_subdivision, euler_holes, extract_faces, perimeter

ACCEPTANCE_RUNS = 20
ACCEPTANCE_N = 10000
ACCEPTANCE_BASE_SEED = 1


#: a 10-pentagon glued chain whose last pentagon's vertex lands strictly
#: inside a side of the first (a point-on-edge contact, splitting that side)
TCHAIN = (
    ((0, 0, 0, 0), UP),
    ((0, 0, 1, 1), DOWN),
    ((0, -1, 0, 1), UP),
    ((0, -1, 1, 2), DOWN),
    ((0, -2, 0, 2), UP),
    ((0, -3, -1, 1), DOWN),
    ((0, -3, -2, 0), UP),
    ((1, -2, -2, 0), DOWN),
    ((2, -1, -1, 0), UP),
    ((2, -1, 0, 1), DOWN),
)


def structure_from_chain(chain) -> Structure:
    centers = [c for c, _ in chain]
    orients = [o for _, o in chain]
    parents = [None]
    sides = [None]
    for i in range(1, len(chain)):
        for s in range(5):
            if ghost_placement(centers[i - 1], orients[i - 1], s) == \
                    (centers[i], orients[i]):
                parents.append(i - 1)
                sides.append(s)
                break
        else:
            raise AssertionError(f"chain link {i} is not a gluing")
    return Structure(0, centers, orients, parents, sides)


@pytest.fixture(scope="session")
def tchain():
    return structure_from_chain(TCHAIN)


@dataclass
class AcceptanceRun:
    seed: int
    record: RunRecord
    euler_consistent: bool          # H by faces == H by formula at every checkpoint
    parity_ok: bool                 # orientation == depth parity for all tiles
    hole_count: int
    angle_violations: int
    triangle_angle_types: list      # sorted angle tuple per 3-sided hole
    hole_names: dict                # name -> count at n = ACCEPTANCE_N


def _run_acceptance_seed(seed: int, catalog: Catalog) -> AcceptanceRun:
    schedule = geometric_checkpoints(ACCEPTANCE_N)
    state = seed_structure(seed)
    points = []
    euler_ok = True
    final = None
    for target in schedule:
        while state.n < target:
            state.attach()
        structure = state.to_structure()
        if target < ACCEPTANCE_N:
            points.append(_measure(structure, state.free_edge_count()))
        else:
            final = structure
    graph = build_subdivision(final)
    extract_faces(graph, final)
    h_faces = sum(1 for f in graph.faces if f.kind == "hole")
    h_formula = euler_holes(graph.V, graph.E, final.n)
    euler_ok = euler_ok and (h_faces == h_formula)
    outer, total = perimeter(graph)
    points.append(Checkpoint(final.n, graph.V, graph.E, h_faces,
                             float(outer), float(total),
                             state.free_edge_count()))
    for cp in points:
        if 1 - cp.V + cp.E - cp.n != cp.H:
            euler_ok = False
    parity_ok = all(
        final.orients[i] == (UP if d % 2 == 0 else DOWN)
        for i, d in enumerate(final.depths()))
    triangles = []
    for f in graph.faces:
        if f.kind == "hole":
            sig = signature_of(graph, f)
            if sig.l == 3:
                triangles.append(tuple(sorted(sig.angles)))
    result = census(final, catalog, graph)
    return AcceptanceRun(seed, RunRecord(seed, tuple(points)), euler_ok,
                         parity_ok, h_faces, result.angle_violations,
                         triangles, dict(result.counts))


@pytest.fixture(scope="session")
def acceptance_batch():
    t0 = time.perf_counter()
    catalog = Catalog()
    runs = [_run_acceptance_seed(ACCEPTANCE_BASE_SEED + i, catalog)
            for i in range(ACCEPTANCE_RUNS)]
    return {"runs": runs, "catalog": catalog,
            "elapsed": time.perf_counter() - t0}
