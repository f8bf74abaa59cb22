"""Batch experiment runner for the growth-curve statistics.

Each run grows one structure to ``n_max``, pausing at a geometric schedule
of checkpoints to build the planar subdivision and record vertex, edge,
hole, and perimeter counts.  Runs with different seeds are independent, so
the batch can execute on a process pool; records are always collected in
seed order, making the output byte-identical regardless of pool size.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import InsufficientData, InvariantViolation
from .growth import seed_structure
from .subdivision import build_subdivision, euler_holes, extract_faces, perimeter


def geometric_checkpoints(n_max: int):
    """The default schedule 10, 20, 50, 100, ... up to and including n_max."""
    if n_max < 10:
        return [n_max]
    out = []
    base = 10
    while True:
        for m in (1, 2, 5):
            n = m * base
            if n >= n_max:
                out.append(n_max)
                return out
            out.append(n)
        base *= 10


@dataclass(frozen=True)
class Checkpoint:
    n: int
    V: int
    E: int
    H: int
    outer_perimeter: float
    total_boundary: float
    free_edges: int


@dataclass(frozen=True)
class RunRecord:
    seed: int
    checkpoints: tuple


@dataclass(frozen=True)
class BatchSummary:
    runs: int
    n_max: int
    schedule: tuple
    mean_V_over_n: tuple
    se_V: tuple
    mean_E_over_n: tuple
    se_E: tuple
    mean_H_over_n: tuple
    se_H: tuple
    slope_V: tuple      # (estimate, 95% half-width), least squares on the tail
    slope_E: tuple
    slope_H: tuple
    slope_perimeter: tuple


def _measure(structure, free_edges: int) -> Checkpoint:
    graph = build_subdivision(structure)
    extract_faces(graph, structure)
    h_faces = sum(1 for f in graph.faces if f.kind == "hole")
    h_euler = euler_holes(graph.V, graph.E, structure.n)
    if h_faces != h_euler:
        raise InvariantViolation(
            f"hole counts disagree at n={structure.n}: "
            f"faces={h_faces} euler={h_euler}")
    outer, total = perimeter(graph)
    return Checkpoint(structure.n, graph.V, graph.E, h_faces,
                      float(outer), float(total), free_edges)


def run_single(n_max: int, seed: int, schedule=None) -> RunRecord:
    """Grow one structure, measuring at each checkpoint."""
    if schedule is None:
        schedule = geometric_checkpoints(n_max)
    schedule = sorted(set(schedule))
    if not schedule or schedule[-1] > n_max or schedule[0] < 1:
        raise ValueError("checkpoint schedule must lie in 1..n_max")
    state = seed_structure(seed)
    points = []
    for target in schedule:
        while state.n < target:
            state.attach()
        points.append(_measure(state.to_structure(), state.free_edge_count()))
    return RunRecord(seed, tuple(points))


def run_batch(n_max: int, runs: int, base_seed: int,
              schedule=None, workers: int = 1):
    """Independent runs with seeds base_seed .. base_seed + runs - 1."""
    if runs < 1 or n_max < 1:
        raise ValueError("runs and n_max must be >= 1")
    if schedule is None:
        schedule = geometric_checkpoints(n_max)
    seeds = [base_seed + i for i in range(runs)]
    if workers <= 1 or runs == 1:
        return [run_single(n_max, s, schedule) for s in seeds]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run_single, n_max, s, schedule) for s in seeds]
        # collect in submission (seed) order, not completion order
        return [f.result() for f in futures]


def _mean_se(xs):
    a = np.asarray(xs, dtype=float)
    m = float(a.mean())
    if a.size < 2:
        return m, 0.0
    return m, float(a.std(ddof=1) / math.sqrt(a.size))


def _tail_slope(ns, ys):
    """Least-squares slope over the last half of the checkpoints, with a
    95% confidence half-width from the residual variance."""
    lo = len(ns) // 2
    xs = np.asarray(ns[lo:], dtype=float)
    zs = np.asarray(ys[lo:], dtype=float)
    sxx = float(((xs - xs.mean()) ** 2).sum())
    if sxx == 0:
        raise InsufficientData("need at least two distinct checkpoint sizes")
    slope, icpt = np.polyfit(xs, zs, 1)
    m = xs.size
    if m <= 2:
        return float(slope), 0.0
    ss_res = float(((zs - (icpt + slope * xs)) ** 2).sum())
    se = math.sqrt(ss_res / (m - 2) / sxx)
    return float(slope), 1.96 * se


def estimate_limits(records) -> BatchSummary:
    """Per-checkpoint ratio means and tail slopes for a finished batch."""
    if not records:
        raise InsufficientData("no records")
    schedule = tuple(c.n for c in records[0].checkpoints)
    if len(schedule) < 2:
        raise InsufficientData("need at least two checkpoints")
    for r in records:
        if tuple(c.n for c in r.checkpoints) != schedule:
            raise ValueError("records do not share a checkpoint schedule")
    mv, sv, me, se_, mh, sh = [], [], [], [], [], []
    for i, n in enumerate(schedule):
        col = [r.checkpoints[i] for r in records]
        m, s = _mean_se([c.V / n for c in col])
        mv.append(m); sv.append(s)
        m, s = _mean_se([c.E / n for c in col])
        me.append(m); se_.append(s)
        m, s = _mean_se([c.H / n for c in col])
        mh.append(m); sh.append(s)
    ns = list(schedule)
    mean_at = lambda attr: [sum(getattr(r.checkpoints[i], attr) for r in records)
                            / len(records) for i in range(len(ns))]
    return BatchSummary(
        runs=len(records), n_max=schedule[-1], schedule=schedule,
        mean_V_over_n=tuple(mv), se_V=tuple(sv),
        mean_E_over_n=tuple(me), se_E=tuple(se_),
        mean_H_over_n=tuple(mh), se_H=tuple(sh),
        slope_V=_tail_slope(ns, mean_at("V")),
        slope_E=_tail_slope(ns, mean_at("E")),
        slope_H=_tail_slope(ns, mean_at("H")),
        slope_perimeter=_tail_slope(ns, mean_at("outer_perimeter")),
    )


def _fmt(x: float) -> str:
    return format(x, ".12g")


RECORD_HEADER = "seed,n,V,E,H,outer_perimeter,total_boundary,free_edges"
SUMMARY_HEADER = "n,mean_V_over_n,se_V,mean_E_over_n,se_E,mean_H_over_n,se_H"


def write_csv(records, path) -> None:
    """One row per (run, checkpoint); floats at 12 significant digits."""
    try:
        with open(path, "w") as fh:
            fh.write(RECORD_HEADER + "\n")
            for r in records:
                for c in r.checkpoints:
                    fh.write(f"{r.seed},{c.n},{c.V},{c.E},{c.H},"
                             f"{_fmt(c.outer_perimeter)},"
                             f"{_fmt(c.total_boundary)},{c.free_edges}\n")
    except OSError as ex:
        raise OSError(f"cannot write records CSV {path!r}: {ex}") from ex


def write_summary_csv(summary: BatchSummary, path) -> None:
    try:
        with open(path, "w") as fh:
            fh.write(SUMMARY_HEADER + "\n")
            for i, n in enumerate(summary.schedule):
                fh.write(",".join([str(n),
                                   _fmt(summary.mean_V_over_n[i]),
                                   _fmt(summary.se_V[i]),
                                   _fmt(summary.mean_E_over_n[i]),
                                   _fmt(summary.se_E[i]),
                                   _fmt(summary.mean_H_over_n[i]),
                                   _fmt(summary.se_H[i])]) + "\n")
    except OSError as ex:
        raise OSError(f"cannot write summary CSV {path!r}: {ex}") from ex


def read_csv(path):
    """Parse a records CSV back into RunRecord objects (printed precision)."""
    try:
        with open(path) as fh:
            lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    except OSError as ex:
        raise OSError(f"cannot read records CSV {path!r}: {ex}") from ex
    if not lines or lines[0] != RECORD_HEADER:
        raise ValueError(f"unexpected CSV header in {path!r}")
    by_seed: dict = {}
    order = []
    for ln in lines[1:]:
        f = ln.split(",")
        seed = int(f[0])
        cp = Checkpoint(int(f[1]), int(f[2]), int(f[3]), int(f[4]),
                        float(f[5]), float(f[6]), int(f[7]))
        if seed not in by_seed:
            by_seed[seed] = []
            order.append(seed)
        by_seed[seed].append(cp)
    return [RunRecord(s, tuple(by_seed[s])) for s in order]
