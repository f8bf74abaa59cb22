"""Hole shapes: angle sequences, boundary step words, canonical signatures,
and the named catalog.

A hole boundary is walked counterclockwise.  Consecutive collinear graph
edges are merged into geometric sides; each corner angle is an integer
multiple of 36 degrees, and for an l-gon the multiples satisfy
sum(a_i) = 5*(l - 2).

Holes whose sides are all integer multiples of the pentagon side get a
*step word*: the boundary as a sequence of unit steps along the ten grid
directions, written +U_k / -U_k over the five seed-pentagon edge
directions (U_k = the direction of the side from vertex zeta^k to
zeta^{k+1}).  Words are canonicalized up to cyclic rotation, reflection
(reverse and negate), and the ten global relabelings induced by rotating
the whole structure by multiples of 36 degrees.

Holes with non-unit sides (e.g. the 36-72-72 triangle, whose legs are in
golden ratio to the unit side) are *irregular*: they carry no word and
are keyed by the canonical cyclic sequence of (side length, angle) pairs
instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import InvariantViolation, NonMultipleAngle, NonUnitSide
from .ring import QSqrt5, add4, sign_pair
from .predicates import REF_DIRS
from .subdivision import (SubdivisionGraph, build_subdivision, edge_length_units,
                          extract_faces)


# ---------------------------------------------------------------------------
# step encoding: internally a step is a direction class 0..9; externally
# +-U_k with k = 0..4 (class 2k for +U_k, class (2k+5) % 10 for -U_k)


def step_to_signed(c: int) -> int:
    """Class -> signed 1-based index: +(k+1) for +U_k, -(k+1) for -U_k."""
    if c % 2 == 0:
        return c // 2 + 1
    return -((((c + 5) // 2) % 5) + 1)


def signed_to_step(s: int) -> int:
    """Signed 1-based index -> direction class."""
    k = abs(s) - 1
    if not 0 <= k <= 4 or s == 0:
        raise ValueError(f"bad signed step {s}")
    return (2 * k) % 10 if s > 0 else (2 * k + 5) % 10


def step_str(c: int) -> str:
    s = step_to_signed(c)
    return f"U{abs(s) - 1}" if s > 0 else f"-U{abs(s) - 1}"


@dataclass(frozen=True)
class StepWord:
    """A boundary word over the +-U_k alphabet (stored as classes 0..9)."""
    steps: tuple

    @classmethod
    def from_signed(cls, signed) -> "StepWord":
        return cls(tuple(signed_to_step(s) for s in signed))

    @property
    def signed(self) -> tuple:
        return tuple(step_to_signed(c) for c in self.steps)

    def displacement(self):
        """Exact vector sum of all steps (zero iff the word closes)."""
        t = (0, 0, 0, 0)
        for c in self.steps:
            t = add4(t, REF_DIRS[c])
        return t

    def is_closed(self) -> bool:
        return self.displacement() == (0, 0, 0, 0)

    def reversed(self) -> "StepWord":
        """Clockwise traversal of the same boundary."""
        return StepWord(tuple((c + 5) % 10 for c in reversed(self.steps)))

    def __str__(self):
        return "(" + ", ".join(step_str(c) for c in self.steps) + ")"


def canonical_word(steps) -> tuple:
    """Lexicographically minimal representative over cyclic rotations,
    reflection, and the ten 36-degree relabelings."""
    steps = tuple(steps)
    n = len(steps)
    refl = tuple((c + 5) % 10 for c in reversed(steps))
    best = None
    for w in (steps, refl):
        for shift in range(10):
            ws = tuple((c + shift) % 10 for c in w)
            for r in range(n):
                cand = ws[r:] + ws[:r]
                if best is None or cand < best:
                    best = cand
    return best


# ---------------------------------------------------------------------------
# extracting sides, angles, and words from hole faces


def _boundary_classes(graph: SubdivisionGraph, face):
    out = []
    for h in face.half_edges:
        e = h >> 1
        c = graph.edge_class[e]
        out.append(c if not (h & 1) else (c + 5) % 10)
    return out


def merged_sides(graph: SubdivisionGraph, face):
    """Geometric sides of a face as (direction class, exact length) pairs,
    merging consecutive collinear boundary edges (cyclically)."""
    classes = _boundary_classes(graph, face)
    lengths = [edge_length_units(graph, h >> 1) for h in face.half_edges]
    m = len(classes)
    # rotate so the walk starts at a corner
    start = 0
    while start < m and classes[start] == classes[start - 1]:
        start += 1
    if start == m:
        raise NonMultipleAngle("boundary walk has a single direction")
    classes = classes[start:] + classes[:start]
    lengths = lengths[start:] + lengths[:start]
    sides = []
    cur_c, cur_len = classes[0], lengths[0]
    for c, ln in zip(classes[1:], lengths[1:]):
        if c == cur_c:
            cur_len = cur_len + ln
        else:
            sides.append((cur_c, cur_len))
            cur_c, cur_len = c, ln
    sides.append((cur_c, cur_len))
    return sides


def _angles_from_classes(classes):
    l = len(classes)
    angles = []
    for i in range(l):
        turn = ((classes[(i + 1) % l] - classes[i] + 5) % 10) - 5
        a = 5 - turn
        if not 1 <= a <= 9 or a == 5:
            raise NonMultipleAngle(f"corner angle {a * 36} degrees")
        angles.append(a)
    return angles


def angle_sequence(graph: SubdivisionGraph, face):
    """Interior angles of a hole, CCW, as multiples of 36 degrees.

    angles[i] is the angle at the corner between side i and side i+1.
    """
    return _angles_from_classes([c for c, _ in merged_sides(graph, face)])


def verify_angle_sum(angles) -> bool:
    """Angle-sum condition for an l-gon on the 36-degree grid."""
    return sum(angles) == 5 * (len(angles) - 2)


def step_word(graph: SubdivisionGraph, face) -> StepWord:
    """Unit-step boundary word of a hole (CCW).

    Raises NonUnitSide if some side is not an integer multiple of the
    pentagon side (the hole is then irregular and carries no word).
    """
    steps = []
    for c, ln in merged_sides(graph, face):
        if not ln.is_integer() or ln.sign() <= 0:
            raise NonUnitSide(f"side length {ln} is not a positive integer")
        steps.extend([c] * ln.p)
    w = StepWord(tuple(steps))
    if not w.is_closed():
        raise NonMultipleAngle("boundary word does not close")
    return w


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class HoleSignature:
    """Canonical, congruence-invariant key of a hole shape."""
    l: int                    # number of geometric sides
    angles: tuple             # interior angles as multiples of 36 degrees
    side_lengths: tuple       # exact lengths in side units, as QSqrt5
    word: tuple | None        # canonical step classes; None for irregular

    @classmethod
    def from_word(cls, steps) -> "HoleSignature":
        cw = canonical_word(steps)
        # derive angles/sides from the CCW orientation (total turning +360);
        # the canonical representative itself may run clockwise
        ccw = cw
        turning = sum((((cw[(i + 1) % len(cw)] - cw[i] + 5) % 10) - 5)
                      for i in range(len(cw)))
        if turning < 0:
            ccw = tuple((c + 5) % 10 for c in reversed(cw))
        sides = []
        cur_c, cur_n = ccw[0], 1
        for c in ccw[1:]:
            if c == cur_c:
                cur_n += 1
            else:
                sides.append((cur_c, cur_n))
                cur_c, cur_n = c, 1
        sides.append((cur_c, cur_n))
        if len(sides) > 1 and sides[0][0] == sides[-1][0]:
            sides[0] = (sides[0][0], sides[0][1] + sides.pop()[1])
        classes = [c for c, _ in sides]
        angles = _angles_from_classes(classes)
        return cls(len(sides), tuple(angles),
                   tuple(QSqrt5(n) for _, n in sides), cw)

    @classmethod
    def from_sides(cls, sides) -> "HoleSignature":
        """Signature of an irregular hole from (class, length) sides."""
        classes = [c for c, _ in sides]
        lengths = [ln for _, ln in sides]
        angles = _angles_from_classes(classes)
        l = len(sides)
        # canonical cyclic sequence of (length, following angle) tokens,
        # minimized over rotations and reflection
        def tokens(lens, angs):
            return [((lens[i].p, lens[i].q, lens[i].d), angs[i])
                    for i in range(l)]
        best = None
        for lens, angs in ((lengths, angles),
                           (list(reversed(lengths)),
                            [angles[(l - 2 - i) % l] for i in range(l)])):
            toks = tokens(lens, angs)
            for r in range(l):
                cand = tuple(toks[r:] + toks[:r])
                if best is None or cand < best:
                    best = cand
        lens = [QSqrt5(p, q, d) for (p, q, d), _ in best]
        angs = [a for _, a in best]
        return cls(l, tuple(angs), tuple(lens), None)

    def key(self):
        if self.word is not None:
            return ("w", self.word)
        return ("s", self.angles,
                tuple((s.p, s.q, s.d) for s in self.side_lengths))


def signature_of(graph: SubdivisionGraph, face) -> HoleSignature:
    """Canonical signature of a hole face (regular or irregular)."""
    sides = merged_sides(graph, face)
    lengths_ok = all(ln.is_integer() and ln.sign() > 0 for _, ln in sides)
    if lengths_ok:
        steps = []
        for c, ln in sides:
            steps.extend([c] * ln.p)
        return HoleSignature.from_word(steps)
    return HoleSignature.from_sides(sides)


def canonicalize(word: StepWord) -> HoleSignature:
    """Canonical signature of a closed step word."""
    return HoleSignature.from_word(word.steps)


def enumerate_angle_types(l: int):
    """All angle types of an l-gon hole, up to rotation and reflection.

    A corner angle is 36*a degrees with a in 1..9 and a != 5: collinear
    boundary segments are merged, so no hole polygon has a straight corner.
    """
    if l < 3:
        raise ValueError("need l >= 3")
    target = 5 * (l - 2)
    seen = set()
    out = []
    for t in product((1, 2, 3, 4, 6, 7, 8, 9), repeat=l):
        if sum(t) != target:
            continue
        variants = [t[r:] + t[:r] for r in range(l)]
        rt = tuple(reversed(t))
        variants += [rt[r:] + rt[:r] for r in range(l)]
        canon = min(variants)
        if canon not in seen:
            seen.add(canon)
            out.append(canon)
    return sorted(out)


# ---------------------------------------------------------------------------
# the catalog


#: Named hole shapes, each defined by the closed chain of glued pentagons
#: that surrounds the hole.  A signed step +-(k+1) is the displacement from
#: the current pentagon to the next one across its side k: +w_k from an Up
#: pentagon, -w_k from a Down one (w_k = zeta^k + zeta^{k+1}), so the signs
#: alternate along a glued chain.  The diamond cycle is sign-corrected so it
#: closes (its commonly quoted form ends on a +step that does not).
_CYCLES = {
    "diamond": (5, -3, 1, -5, 3, -1),
    "ship": (3, -1, 4, -2, 1, -3, 2, -4),
    "double ship": (4, -2, 4, -3, 5, -4, 2, -4, 3, -5),
    "crown": (-2, 1, -3, 1, -5, 3, -4, 2, -1, 4, -1, 5),
    "triple ship": (4, -1, 5, -1, 5, -2, 1, -4, 1, -5, 2, -5),
}

#: Open chain fragments naming additional shapes: a hole gets the name if
#: the fragment occurs as a contiguous sub-chain of the glued-pentagon
#: cycle around it (under rotation/reflection/relabeling alignment); the
#: full boundary signature is then learned from that first sighting.
_PATHS = {
    "snake": (-1, 5, -3, 1, -3, 2, -5, 3),
    "fox": (4, -2, 1, -4, 5, -2, 5, -4, 2, -4, 2, -1, 2, -1, 3),
    "bird": (-1, 4, -1, 5, -3, 5, -4, 2, -4),
    "three peaks": (-1, 4, -2, 1, -3, 1, -5),
    "claw": (-3, 5, -4, 1, -4, 3, -5, 3, -1, 4),
    "whale": (-5, 2, -5, 3, -5, 4, -2, 4, -3, 1, -2, 5, -2),
}

#: the 36-72-72 triangle: identified by angle type alone, since its legs
#: are golden-ratio multiples of the unit side (an irregular hole)
_TRIANGLE_ANGLES = (1, 2, 2)


def chain_structure(signed_steps):
    """Build the structure formed by a chain of glued pentagons.

    Each signed step glues the next pentagon across a side of the current
    one; for a closed cycle the last step must return to the start.
    Raises InvariantViolation if the chain self-overlaps or a step sign
    does not match the orientation it departs from.
    """
    from .growth import Structure, _GLUE
    from .predicates import interiors_overlap
    signed_steps = tuple(signed_steps)
    centers = [(0, 0, 0, 0)]
    orients = [1 if signed_steps[0] > 0 else -1]
    for s in signed_steps[:-1]:
        if (s > 0) != (orients[-1] == 1):
            raise InvariantViolation(f"step {s} departs a pentagon of the "
                                     "wrong orientation")
        k = abs(s) - 1
        d = _GLUE[k] if s > 0 else tuple(-x for x in _GLUE[k])
        centers.append(add4(centers[-1], d))
        orients.append(-orients[-1])
    n = len(centers)
    for i in range(n):
        for j in range(i + 1, n):
            if interiors_overlap(centers[i], orients[i],
                                 centers[j], orients[j]):
                raise InvariantViolation("chain pentagons overlap")
    parents = [None] + list(range(n - 1))
    sides = [None] + [abs(s) - 1 for s in signed_steps[:-1]]
    return Structure(0, centers, orients, parents, sides)


def cycle_is_closed(signed_steps) -> bool:
    """True iff the glued chain returns to its starting pentagon."""
    from .growth import _GLUE
    t = (0, 0, 0, 0)
    for s in signed_steps:
        k = abs(s) - 1
        d = _GLUE[k] if s > 0 else tuple(-x for x in _GLUE[k])
        t = add4(t, d)
    return t == (0, 0, 0, 0)


def center_cycle_word(graph, structure, face):
    """The cycle of glued pentagons around a hole, as signed-step classes.

    Returns None when consecutive bounding pentagons are not glued to each
    other (the cycle then has no chain encoding).
    """
    from .growth import _GLUE
    seq = []
    for h in face.half_edges:
        twin_face = graph.faces[graph.face_of[h ^ 1]]
        if twin_face.kind != "pentagon":
            return None
        pid = twin_face.pentagon_id
        if not seq or seq[-1] != pid:
            seq.append(pid)
    if len(seq) > 1 and seq[0] == seq[-1]:
        seq.pop()
    if len(seq) < 3:
        return None
    steps = []
    for i, p in enumerate(seq):
        q = seq[(i + 1) % len(seq)]
        d = tuple(structure.centers[q][m] - structure.centers[p][m]
                  for m in range(4))
        up = structure.orients[p] == 1
        for k in range(5):
            target = _GLUE[k] if up else tuple(-x for x in _GLUE[k])
            if d == target:
                steps.append((2 * k) % 10 if up else (2 * k + 5) % 10)
                break
        else:
            return None
    return tuple(steps)


@dataclass
class CatalogEntry:
    name: str
    signature: HoleSignature
    source: str               # "builtin" | "discovered"


class Catalog:
    """Append-only name registry for hole signatures.

    Seeded by constructing each named pentagon cycle and extracting the
    boundary signature of the hole it encloses.
    """

    def __init__(self, seed_names: bool = True):
        self.entries: list[CatalogEntry] = []
        self._by_key: dict = {}
        self.fragments = {name: tuple(signed_to_step(s) for s in sig)
                          for name, sig in _PATHS.items()}
        if seed_names:
            self._seed_from_cycles()

    def _seed_from_cycles(self):
        for name, signed in _CYCLES.items():
            if not cycle_is_closed(signed):
                raise ValueError(f"catalog cycle {name} does not close")
            st = chain_structure(signed)
            graph = build_subdivision(st)
            extract_faces(graph, st)
            new_sigs = []
            for face in graph.faces:
                if face.kind != "hole":
                    continue
                sig = signature_of(graph, face)
                if sig.key() not in self._by_key and sig not in new_sigs:
                    new_sigs.append(sig)
            if len(new_sigs) != 1:
                raise ValueError(f"cycle {name} encloses {len(new_sigs)} "
                                 "unknown holes; expected exactly 1")
            self.add(name, new_sigs[0], "builtin")

    def add(self, name: str, sig: HoleSignature, source: str) -> CatalogEntry:
        key = sig.key()
        if key in self._by_key:
            raise ValueError(f"duplicate signature for {name}")
        if any(e.name == name for e in self.entries):
            raise ValueError(f"duplicate name {name}")
        entry = CatalogEntry(name, sig, source)
        self.entries.append(entry)
        self._by_key[key] = entry
        return entry

    def _match_fragment(self, cycle_word):
        """Longest path fragment occurring as a contiguous sub-chain of the
        pentagon cycle, under any rotation/reflection/relabeling."""
        n = len(cycle_word)
        doubled = cycle_word + cycle_word
        for name, frag in sorted(self.fragments.items(),
                                 key=lambda kv: (-len(kv[1]), kv[0])):
            m = len(frag)
            if m > n:
                continue
            for base in (frag, tuple((c + 5) % 10 for c in reversed(frag))):
                for shift in range(10):
                    f = tuple((c + shift) % 10 for c in base)
                    if any(doubled[i:i + m] == f for i in range(n)):
                        return name
        return None

    def identify(self, sig: HoleSignature, cycle_word=None) -> str:
        """Name for a signature: known entry, path-fragment promotion, or a
        new auto-named discovered entry."""
        entry = self._by_key.get(sig.key())
        if entry is not None:
            return entry.name
        name = None
        if (sig.word is None and sig.l == 3
                and tuple(sorted(sig.angles)) == _TRIANGLE_ANGLES):
            name = "triangle"
        elif cycle_word is not None:
            name = self._match_fragment(cycle_word)
        if name is None or any(e.name == name for e in self.entries):
            name = _auto_name(sig)
        self.add(name, sig, "discovered")
        return name


def _auto_name(sig: HoleSignature) -> str:
    if sig.word is not None:
        body = ",".join(f"{step_to_signed(c):+d}" for c in sig.word)
        return f"auto[{body}]"
    body = ";".join(f"{s}:{a}" for s, a in zip(sig.side_lengths, sig.angles))
    return f"auto-irregular[{body}]"


def save_catalog(catalog: Catalog, path) -> None:
    """One entry per line: name | boundary steps (or - if irregular) |
    angles | source."""
    with open(path, "w") as f:
        f.write("# pentagrow hole catalog v1\n")
        f.write("# name | steps (+-1..5 for +-U_0..U_4, - if irregular)"
                " | angles | source\n")
        for e in catalog.entries:
            steps = ("-" if e.signature.word is None else
                     ",".join(f"{step_to_signed(c):+d}"
                              for c in e.signature.word))
            angles = ",".join(str(a) for a in e.signature.angles)
            f.write(f"{e.name} | {steps} | {angles} | {e.source}\n")


def load_catalog(path) -> Catalog:
    """Load a catalog file, merging it over the built-in entries."""
    catalog = Catalog()
    with open(path) as f:
        for line in f:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, steps, _angles, source = [p.strip()
                                            for p in line.split("|")]
            if steps == "-":
                continue  # irregular entries are re-derived on sighting
            w = StepWord.from_signed(int(s) for s in steps.split(","))
            sig = canonicalize(w)
            if sig.key() not in catalog._by_key:
                catalog.add(name, sig, source)
    return catalog


# ---------------------------------------------------------------------------
# census


@dataclass
class CensusResult:
    counts: dict = field(default_factory=dict)      # name -> count
    signatures: dict = field(default_factory=dict)  # name -> HoleSignature
    angle_violations: int = 0

    def merge(self, other: "CensusResult") -> None:
        for k, v in other.counts.items():
            self.counts[k] = self.counts.get(k, 0) + v
        self.signatures.update(other.signatures)
        self.angle_violations += other.angle_violations


def census(structure, catalog: Catalog | None = None,
           graph: SubdivisionGraph | None = None) -> CensusResult:
    """Histogram of named hole shapes in a structure."""
    if catalog is None:
        catalog = Catalog()
    if graph is None:
        graph = build_subdivision(structure)
        extract_faces(graph, structure)
    result = CensusResult()
    for face in graph.faces:
        if face.kind != "hole":
            continue
        sig = signature_of(graph, face)
        if not verify_angle_sum(sig.angles):
            result.angle_violations += 1
        cw = center_cycle_word(graph, structure, face)
        name = catalog.identify(sig, cw)
        result.counts[name] = result.counts.get(name, 0) + 1
        result.signatures[name] = sig
    return result
