"""End-to-end acceptance suite.

One batch of twenty independent runs to n = 10000 (session fixture in
conftest) backs the statistical checks; the remaining checks build their
own structures.  Tolerances and seed choices are fixed so the suite is
fully reproducible.
"""

import itertools
import random
import resource
import time

import numpy as np
import pytest

from pentagrow.growth import ghost_placement, grow, seed_structure
from pentagrow.holes import (_CYCLES, Catalog, chain_structure,
                             cycle_is_closed, census,
                             enumerate_angle_types)
from pentagrow.predicates import (DOWN, UP, interiors_overlap,
                                  verify_center_basis_relations)
from pentagrow.stats import run_batch, write_csv
from pentagrow.subdivision import (build_subdivision, euler_holes,
                                   extract_faces)
from pentagrow.export import save
from pentagrow.holes import signature_of

from _geom_oracle import interiors_overlap_oracle
from conftest import ACCEPTANCE_N, ACCEPTANCE_RUNS, TCHAIN


# -- exact Euler identity over a grid of sizes ------------------------------

def test_euler_identity_ten_seeds_four_sizes():
    t0 = time.perf_counter()
    for seed in range(10):
        state = seed_structure(seed)
        for target in (10, 100, 1000, 5000):
            while state.n < target:
                state.attach()
            st = state.to_structure()
            graph = build_subdivision(st)
            extract_faces(graph, st)
            h_faces = sum(1 for f in graph.faces if f.kind == "hole")
            assert h_faces == euler_holes(graph.V, graph.E, st.n), \
                (seed, target)
    assert time.perf_counter() - t0 < 120.0


# -- limit constants of the growth curves -----------------------------------

def _final_ratios(batch, field):
    out = []
    for run in batch["runs"]:
        cp = run.record.checkpoints[-1]
        assert cp.n == ACCEPTANCE_N
        out.append(getattr(cp, field) / cp.n)
    return float(np.mean(out))


def test_batch_shape_and_runtime_budget(acceptance_batch):
    assert len(acceptance_batch["runs"]) == ACCEPTANCE_RUNS
    assert acceptance_batch["elapsed"] < 600.0


def test_limit_constant_vertices_per_tile(acceptance_batch):
    assert 2.63 <= _final_ratios(acceptance_batch, "V") <= 2.73


def test_limit_constant_edges_per_tile(acceptance_batch):
    assert 3.97 <= _final_ratios(acceptance_batch, "E") <= 4.07


def test_limit_constant_holes_per_tile(acceptance_batch):
    assert 0.31 <= _final_ratios(acceptance_batch, "H") <= 0.37


# -- linear growth of holes and perimeter -----------------------------------

def _r_squared(xs, ys):
    slope, icpt = np.polyfit(xs, ys, 1)
    res = ys - (icpt + slope * xs)
    tot = ys - ys.mean()
    return 1.0 - float((res ** 2).sum()) / float((tot ** 2).sum())


def _tail_means(batch, field):
    runs = batch["runs"]
    schedule = [c.n for c in runs[0].record.checkpoints]
    idx = [i for i, n in enumerate(schedule) if n >= 1000]
    xs = np.array([schedule[i] for i in idx], dtype=float)
    ys = np.array([np.mean([getattr(r.record.checkpoints[i], field)
                            for r in runs]) for i in idx])
    return xs, ys


def test_hole_count_grows_linearly(acceptance_batch):
    xs, ys = _tail_means(acceptance_batch, "H")
    assert _r_squared(xs, ys) >= 0.99


def test_outer_perimeter_grows_linearly(acceptance_batch):
    xs, ys = _tail_means(acceptance_batch, "outer_perimeter")
    assert _r_squared(xs, ys) >= 0.99


def test_total_boundary_grows_linearly(acceptance_batch):
    # outer boundary plus all hole boundaries; the length that tracks the
    # tile count (the outer rim alone scales like the cluster diameter)
    xs, ys = _tail_means(acceptance_batch, "total_boundary")
    assert _r_squared(xs, ys) >= 0.99


# -- hole angle bookkeeping --------------------------------------------------

def test_no_angle_sum_violations_in_batch(acceptance_batch):
    assert sum(r.angle_violations for r in acceptance_batch["runs"]) == 0


def test_every_triangular_hole_is_36_72_72(acceptance_batch):
    observed = [t for r in acceptance_batch["runs"]
                for t in r.triangle_angle_types]
    assert observed, "expected triangular holes in a batch this large"
    offenders = [t for t in observed if t != (1, 2, 2)]
    assert offenders == [], \
        f"triangular holes with angle types {offenders} observed"


def test_quadrilateral_angle_type_enumeration():
    published = [(1, 1, 1, 7), (1, 1, 2, 6), (1, 2, 1, 6), (1, 1, 4, 4),
                 (1, 4, 1, 4), (1, 2, 3, 4), (1, 2, 4, 3), (1, 3, 2, 4),
                 (2, 2, 2, 4), (2, 4, 2, 4), (2, 2, 3, 3), (2, 3, 2, 3)]

    def canon(t):
        vs = [t[r:] + t[:r] for r in range(4)]
        rt = tuple(reversed(t))
        vs += [rt[r:] + rt[:r] for r in range(4)]
        return min(vs)

    assert {canon(t) for t in published} == set(enumerate_angle_types(4))


# -- all tiles are the two translation classes ------------------------------

def test_orientations_are_depth_parity_everywhere(acceptance_batch):
    assert all(r.parity_ok for r in acceptance_batch["runs"])


def test_every_edge_has_a_grid_direction_class():
    st = grow(2000, seed=6).to_structure()
    graph = build_subdivision(st)
    assert len(graph.edge_class) == graph.E
    assert all(0 <= c <= 9 for c in graph.edge_class)


# -- golden-ratio relations between the five center displacements -----------

def test_center_displacement_basis_relations():
    report = verify_center_basis_relations()
    assert report.passed and report.sum_zero and all(report.relations_ok)


# -- overlap predicate vs high-precision oracle -----------------------------

def test_overlap_predicate_ten_thousand_pairs():
    rng = random.Random(424242)
    pairs = []
    # touching configurations: every gluing, and chained flush contacts
    for o in (UP, DOWN):
        for s in range(5):
            c2, o2 = ghost_placement((0, 0, 0, 0), o, s)
            pairs.append(((0, 0, 0, 0), o, c2, o2))
    for (c1, o1), (c2, o2) in itertools.combinations(TCHAIN, 2):
        pairs.append((c1, o1, c2, o2))
    while len(pairs) < 10000:
        c1 = tuple(rng.randint(-2, 2) for _ in range(4))
        c2 = tuple(rng.randint(-2, 2) for _ in range(4))
        pairs.append((c1, rng.choice((UP, DOWN)),
                      c2, rng.choice((UP, DOWN))))
    disagreements = [p for p in pairs
                     if interiors_overlap(*p) != interiors_overlap_oracle(*p)]
    assert disagreements == []


# -- named cycle words close and canonicalize consistently ------------------

def test_catalog_cycles_close_and_rotations_agree():
    for name, signed in _CYCLES.items():
        assert cycle_is_closed(signed), name
        keysets = []
        for r in range(len(signed)):
            rotated = signed[r:] + signed[:r]
            st = chain_structure(rotated)
            graph = build_subdivision(st)
            extract_faces(graph, st)
            keys = sorted(signature_of(graph, f).key()
                          for f in graph.faces if f.kind == "hole")
            keysets.append(keys)
        assert all(k == keysets[0] for k in keysets), name
        # and the census names the shape after its cycle
        assert census(chain_structure(signed),
                      Catalog()).counts.get(name) == 1


# -- bit-level reproducibility ----------------------------------------------

def test_determinism_structure_files(tmp_path):
    p1, p2 = tmp_path / "a.penta", tmp_path / "b.penta"
    save(grow(10000, seed=77).to_structure(), p1)
    save(grow(10000, seed=77).to_structure(), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_determinism_stats_csv_across_pool_sizes(tmp_path):
    paths = []
    for i, workers in enumerate((1, 1, 2, 3)):
        records = run_batch(800, runs=4, base_seed=50, workers=workers)
        p = tmp_path / f"stats{i}.csv"
        write_csv(records, p)
        paths.append(p.read_bytes())
    assert all(b == paths[0] for b in paths)


# -- throughput and near-linear scaling -------------------------------------

def test_growth_speed_memory_and_scaling():
    checkpoints = (10000, 20000, 40000, 80000, 100000)
    state = seed_structure(123)
    t0 = time.perf_counter()
    elapsed = {}
    for target in checkpoints:
        while state.n < target:
            state.attach()
        elapsed[target] = time.perf_counter() - t0
    assert elapsed[100000] < 60.0
    for a, b in ((10000, 20000), (20000, 40000), (40000, 80000)):
        assert elapsed[b] / elapsed[a] < 2.5, (a, b, elapsed)
    peak_kb = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    assert peak_kb < 1024 * 1024  # < 1 GB
