"""The stochastic pentagon growth process.

Starting from one Up pentagon at the origin, each step picks a free edge
uniformly at random, glues a new pentagon there (the point reflection of
the owner through the chosen side, realized as a lattice translation plus
an orientation flip), and updates the free-edge ledger.

Reproducibility contract: the ledger is an append-ordered array with
swap-with-last removal; eviction candidates are processed in sorted key
order; the RNG is a Mersenne Twister seeded from the 64-bit seed, drawing
64-bit words with rejection sampling for uniform indices.  Any change to
this policy changes the random stream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import floor

from .errors import InvariantViolation, NoFreeEdges
from .predicates import DOWN, UP, interiors_overlap
from .ring import CycPoint, xy_float

_ZETA = tuple(CycPoint.zeta(k).coeffs for k in range(5))
#: displacement from a center to the glued neighbor across side k (Up owner)
_GLUE = tuple(tuple(_ZETA[k][i] + _ZETA[(k + 1) % 5][i] for i in range(4))
              for k in range(5))

_CELL = 0.5  # reciprocal of the 2.0 spatial-hash cell size


class DeterministicRNG:
    """Seedable, cross-platform-stable uniform integer source.

    Draws 64-bit words from a Mersenne Twister and maps them to a range
    by rejection sampling, so there is no modulo bias.
    """

    __slots__ = ("_r",)

    def __init__(self, seed: int):
        self._r = random.Random(seed & 0xFFFFFFFFFFFFFFFF)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n)."""
        bits = self._r.getrandbits
        lim = (1 << 64) - ((1 << 64) % n)
        while True:
            v = bits(64)
            if v < lim:
                return v % n

    def getstate(self):
        return self._r.getstate()

    def setstate(self, st):
        self._r.setstate(st)


@dataclass(frozen=True)
class Pentagon:
    """Read-only view of one tile."""
    id: int
    center: CycPoint
    orientation: int            # UP or DOWN
    stage: int                  # attachment order; equals id
    parent: int | None
    parent_side: int | None


@dataclass(frozen=True)
class FreeEdge:
    owner: int
    side: int
    endpoints: tuple
    ghost_center: CycPoint
    ghost_orientation: int


def ghost_placement(center, orientation, side):
    """Center and orientation of the pentagon glued to the given side.

    Applying it twice across the same side is the identity.
    """
    c = center.coeffs if isinstance(center, CycPoint) else tuple(center)
    g = _GLUE[side]
    if orientation == UP:
        nc = (c[0] + g[0], c[1] + g[1], c[2] + g[2], c[3] + g[3])
    else:
        nc = (c[0] - g[0], c[1] - g[1], c[2] - g[2], c[3] - g[3])
    return nc, -orientation


def side_endpoints(center, orientation, side):
    """Coefficient tuples of the two endpoints of a pentagon side."""
    c = center.coeffs if isinstance(center, CycPoint) else tuple(center)
    za, zb = _ZETA[side], _ZETA[(side + 1) % 5]
    if orientation == UP:
        return (tuple(c[i] + za[i] for i in range(4)),
                tuple(c[i] + zb[i] for i in range(4)))
    return (tuple(c[i] - za[i] for i in range(4)),
            tuple(c[i] - zb[i] for i in range(4)))


class GrowthState:
    """The evolving simulation: tiles, free-edge ledger, spatial hash, RNG.

    Single-owner: mutate from one thread only.  Independent states with
    different seeds can run fully in parallel.
    """

    def __init__(self, seed: int):
        self.seed = seed
        self.rng = DeterministicRNG(seed)
        self.centers: list[tuple] = []
        self.orients: list[int] = []
        self.parents: list[int | None] = []
        self.parent_sides: list[int | None] = []
        self.depths: list[int] = []
        self._xy: list[tuple] = []
        self._grid: dict = {}        # cell -> list of pentagon ids
        self._edges: list = []       # (owner, side, ghost_center, ghost_orient)
        self._edge_pos: dict = {}    # (owner, side) -> index in _edges
        self._ghost_grid: dict = {}  # cell -> set of (owner, side)
        self._endpoints: dict = {}   # unordered endpoint pair -> (owner, side)
        self._add_pentagon((0, 0, 0, 0), UP, None, None)
        for s in range(5):
            gc, go = ghost_placement((0, 0, 0, 0), UP, s)
            self._insert_edge(0, s, gc, go)

    # -- bookkeeping ------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.centers)

    def free_edge_count(self) -> int:
        return len(self._edges)

    def pentagon(self, i: int) -> Pentagon:
        return Pentagon(i, CycPoint.from_tuple(self.centers[i]),
                        self.orients[i], i, self.parents[i],
                        self.parent_sides[i])

    def free_edges(self):
        """Current ledger as FreeEdge views, in ledger order."""
        out = []
        for owner, side, gc, go in self._edges:
            eps = side_endpoints(self.centers[owner], self.orients[owner], side)
            out.append(FreeEdge(owner, side, eps, CycPoint.from_tuple(gc), go))
        return out

    def _cell(self, xy):
        return (floor(xy[0] * _CELL), floor(xy[1] * _CELL))

    def _add_pentagon(self, center, orientation, parent, parent_side):
        i = len(self.centers)
        self.centers.append(center)
        self.orients.append(orientation)
        self.parents.append(parent)
        self.parent_sides.append(parent_side)
        self.depths.append(0 if parent is None else self.depths[parent] + 1)
        xy = xy_float(center)
        self._xy.append(xy)
        self._grid.setdefault(self._cell(xy), []).append(i)
        return i

    def _insert_edge(self, owner, side, ghost_center, ghost_orient):
        key = (owner, side)
        ep = side_endpoints(self.centers[owner], self.orients[owner], side)
        epkey = (ep[0], ep[1]) if ep[0] <= ep[1] else (ep[1], ep[0])
        if epkey in self._endpoints:
            raise InvariantViolation(
                f"duplicate free edge at endpoints {epkey}")
        self._endpoints[epkey] = key
        self._edge_pos[key] = len(self._edges)
        self._edges.append((owner, side, ghost_center, ghost_orient))
        cell = self._cell(xy_float(ghost_center))
        self._ghost_grid.setdefault(cell, set()).add(key)

    def _remove_edge(self, key):
        i = self._edge_pos.pop(key)
        owner, side, gc, go = self._edges[i]
        last = self._edges.pop()
        if i < len(self._edges):
            self._edges[i] = last
            self._edge_pos[(last[0], last[1])] = i
        cell = self._cell(xy_float(gc))
        self._ghost_grid[cell].discard(key)
        ep = side_endpoints(self.centers[owner], self.orients[owner], side)
        epkey = (ep[0], ep[1]) if ep[0] <= ep[1] else (ep[1], ep[0])
        del self._endpoints[epkey]

    def _neighbors(self, xy):
        cx, cy = self._cell(xy)
        grid = self._grid
        out = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                ids = grid.get((cx + dx, cy + dy))
                if ids:
                    out.extend(ids)
        return out

    # -- the model --------------------------------------------------------

    def is_free(self, owner: int, side: int) -> bool:
        """True iff a pentagon can be glued to this side without its
        interior meeting any existing interior."""
        gc, go = ghost_placement(self.centers[owner], self.orients[owner], side)
        return self._ghost_is_free(gc, go)

    def _ghost_is_free(self, gc, go):
        gx, gy = xy_float(gc)
        centers = self.centers
        orients = self.orients
        xys = self._xy
        for j in self._neighbors((gx, gy)):
            x, y = xys[j]
            dx = x - gx
            dy = y - gy
            if dx * dx + dy * dy > 4.000000001:
                continue
            if interiors_overlap(gc, go, centers[j], orients[j]):
                return False
        return True

    def attach(self) -> int:
        """Glue one pentagon to a uniformly chosen free edge; returns its id."""
        m = len(self._edges)
        if m == 0:
            raise NoFreeEdges("free-edge ledger is empty")
        owner, side, gc, go = self._edges[self.rng.below(m)]
        self._remove_edge((owner, side))
        new_id = self._add_pentagon(gc, go, owner, side)
        # the new pentagon's own free sides (its side index `side` is the
        # mirror of the gluing side and is never free)
        for s in range(5):
            if s == side:
                continue
            c2, o2 = ghost_placement(gc, go, s)
            if self._ghost_is_free(c2, o2):
                self._insert_edge(new_id, s, c2, o2)
        # evict ledger entries whose ghost the new pentagon now blocks;
        # only ghosts within distance 2 of the new center are affected
        gx, gy = xy_float(gc)
        cx, cy = self._cell((gx, gy))
        candidates = []
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                ks = self._ghost_grid.get((cx + dx, cy + dy))
                if ks:
                    candidates.extend(k for k in ks if k[0] != new_id)
        for key in sorted(candidates):
            _, _, egc, ego = self._edges[self._edge_pos[key]]
            x, y = xy_float(egc)
            ddx = x - gx
            ddy = y - gy
            if ddx * ddx + ddy * ddy > 4.000000001:
                continue
            if interiors_overlap(egc, ego, gc, go):
                self._remove_edge(key)
        return new_id

    def to_structure(self) -> "Structure":
        return Structure(self.seed, list(self.centers), list(self.orients),
                         list(self.parents), list(self.parent_sides))


@dataclass
class Structure:
    """Immutable snapshot of a grown structure."""
    seed: int
    centers: list
    orients: list
    parents: list
    parent_sides: list

    @property
    def n(self) -> int:
        return len(self.centers)

    def pentagon(self, i: int) -> Pentagon:
        return Pentagon(i, CycPoint.from_tuple(self.centers[i]),
                        self.orients[i], i, self.parents[i],
                        self.parent_sides[i])

    def depths(self) -> list:
        out = [0] * self.n
        for i in range(1, self.n):
            out[i] = out[self.parents[i]] + 1
        return out


def seed_structure(seed: int) -> GrowthState:
    """One Up pentagon at the origin with all five edges free."""
    return GrowthState(seed)


def attach(state: GrowthState) -> int:
    return state.attach()


def grow(n: int, seed: int) -> GrowthState:
    """Grow a structure of n pentagons from the given seed."""
    if n < 1:
        raise ValueError("n must be >= 1")
    state = seed_structure(seed)
    for _ in range(n - 1):
        state.attach()
    return state


def free_edge_count(state: GrowthState) -> int:
    return state.free_edge_count()
