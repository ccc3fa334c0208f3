"""Permutation groups given by generators.

The workhorse is a deterministic Schreier-Sims stabilizer chain.  A short
random phase with a fixed seed proposes strong generators, then every
Schreier generator of every level is sifted, so the finished chain is always
fully verified and identical from run to run.

Internally elements are plain image tuples of length ``degree``; the public
surface speaks :class:`~skewfact.perm.Permutation`.
"""

from __future__ import annotations

import logging
import math
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .perm import Permutation, cycles

logger = logging.getLogger(__name__)

ENUM_THRESHOLD = 2**21
ORBIT_THRESHOLD = 2_000_000

Tup = tuple  # image tuple


class OverThreshold(Exception):
    """A requested enumeration would exceed the configured size limit."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: {size} exceeds threshold {limit}")
        self.size = size
        self.limit = limit


def _mul(a: Tup, b: Tup) -> Tup:
    return tuple(map(b.__getitem__, a))


def _inv(a: Tup) -> Tup:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _conj(g: Tup, h: Tup) -> Tup:
    out = [0] * len(g)
    for x, gx in enumerate(g):
        out[h[x]] = h[gx]
    return tuple(out)


def _is_id(a: Tup) -> bool:
    return all(i == x for i, x in enumerate(a))


def _elt_order(a: Tup) -> int:
    return Permutation(a, check=False).order()


class Level:
    __slots__ = ("point", "gens", "reps", "inv_reps")

    def __init__(self, point: int):
        self.point = point
        self.gens: list[Tup] = []
        self.reps: dict[int, Tup] = {}
        self.inv_reps: dict[int, Tup] = {}

    def rebuild(self, identity: Tup) -> None:
        reps = {self.point: identity}
        queue = deque([self.point])
        gens = self.gens
        while queue:
            alpha = queue.popleft()
            ra = reps[alpha]
            for s in gens:
                beta = s[alpha]
                if beta not in reps:
                    reps[beta] = _mul(ra, s)
                    queue.append(beta)
        self.reps = reps
        self.inv_reps = {b: _inv(r) for b, r in reps.items()}

    @property
    def orbit(self) -> list[int]:
        return list(self.reps)


class StabilizerChain:
    """Base and strong generating set.

    ``levels[i].reps[beta]`` maps ``base[i]`` to ``beta`` and fixes every
    earlier base point; ``levels[i].gens`` are the strong generators fixing
    ``base[:i]``.
    """

    def __init__(
        self,
        degree: int,
        generators: Sequence[Tup],
        base: Sequence[int] = (),
        seed: int = 0x5EED,
    ):
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[Level] = [Level(p) for p in base]
        for lv in self.levels:
            lv.rebuild(self.identity)
        gens = [g for g in dict.fromkeys(generators) if not _is_id(g)]
        for g in gens:
            self._add_strong(g, 0)
        self._random_phase(gens, seed)
        self._verify()

    @property
    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def order(self) -> int:
        return math.prod(len(lv.reps) for lv in self.levels)

    def transversal_sizes(self) -> list[int]:
        return [len(lv.reps) for lv in self.levels]

    def strong_generators(self) -> list[Tup]:
        return list(self.levels[0].gens) if self.levels else []

    def sift(self, g: Tup, start: int = 0) -> tuple[Tup, int]:
        """Strip ``g`` through the chain from ``start``; return residue and drop-out level."""
        levels = self.levels
        for i in range(start, len(levels)):
            lv = levels[i]
            beta = g[lv.point]
            inv = lv.inv_reps.get(beta)
            if inv is None:
                return g, i
            g = _mul(g, inv)
        return g, len(levels)

    def contains(self, g: Tup) -> bool:
        h, _ = self.sift(g)
        return _is_id(h)

    def _add_strong(self, h: Tup, start: int) -> int:
        """Insert ``h`` (fixing ``base[:start]``) as a strong generator; return its drop level."""
        h, drop = self.sift(h, start)
        if _is_id(h):
            return -1
        if drop == len(self.levels):
            moved = next(i for i, x in enumerate(h) if x != i)
            self.levels.append(Level(moved))
        for j in range(start, drop + 1):
            self.levels[j].gens.append(h)
            self.levels[j].rebuild(self.identity)
        return drop

    def _random_phase(self, gens: list[Tup], seed: int) -> None:
        if not gens:
            return
        rng = random.Random(seed)
        pool = list(gens)
        while len(pool) < 8:
            pool.append(pool[len(pool) % len(gens)])
        acc = self.identity
        quiet = 0
        steps = 0
        while quiet < 24 and steps < 4000:
            steps += 1
            i, j = rng.sample(range(len(pool)), 2)
            pool[i] = _mul(pool[i], pool[j]) if rng.random() < 0.5 else _mul(pool[j], pool[i])
            acc = _mul(acc, pool[i])
            if self._add_strong(acc, 0) < 0:
                quiet += 1
            else:
                quiet = 0

    def _verify(self) -> None:
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = None
            for alpha, ra in list(lv.reps.items()):
                for s in list(lv.gens):
                    beta = s[alpha]
                    sg = _mul(_mul(ra, s), lv.inv_reps[beta])
                    h, drop = self.sift(sg, i + 1)
                    if not _is_id(h):
                        if drop == len(self.levels):
                            moved = next(k for k, x in enumerate(h) if x != k)
                            self.levels.append(Level(moved))
                        for j in range(i + 1, drop + 1):
                            self.levels[j].gens.append(h)
                            self.levels[j].rebuild(self.identity)
                        restart = drop
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1

    def is_verified(self) -> bool:
        """Re-check that every Schreier generator sifts to the identity."""
        for i, lv in enumerate(self.levels):
            for alpha, ra in lv.reps.items():
                for s in lv.gens:
                    sg = _mul(_mul(ra, s), lv.inv_reps[s[alpha]])
                    if not _is_id(self.sift(sg, i + 1)[0]):
                        return False
        return True

    def stabilizer_generators(self, depth: int) -> list[Tup]:
        """Strong generators of the pointwise stabilizer of ``base[:depth]``."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)

    def iter_elements(self):
        """Every group element exactly once, as products of transversal elements."""
        def rec(i, g):
            if i < 0:
                yield g
                return
            for r in self.levels[i].reps.values():
                yield from rec(i - 1, _mul(g, r))

        # g = r_{k-1} ... r_0 covers each element once
        yield from rec(len(self.levels) - 1, self.identity)


class GroupHandle:
    """A permutation group on ``degree`` points, with a lazily built chain."""

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None, label: str = ""):
        gens = list(generators)
        if not gens:
            raise ValueError("a group needs at least one generator")
        top = max(g.degree for g in gens)
        if degree is None:
            degree = top
        self.degree = degree
        self.generators = [g.extend(degree) if g.degree != degree else g for g in gens]
        self.label = label
        self._chain: StabilizerChain | None = None
        self._order: int | None = None
        self._based: dict[tuple[int, ...], StabilizerChain] = {}

    @classmethod
    def from_tuples(cls, tuples: Iterable[Tup], degree: int, label: str = "") -> GroupHandle:
        gens = [Permutation(t, check=False) for t in tuples]
        if not gens:
            gens = [Permutation.identity(degree)]
        return cls(gens, degree, label)

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"<GroupHandle {name} degree={self.degree} gens={len(self.generators)}>"

    @property
    def gen_tuples(self) -> list[Tup]:
        return [g.images for g in self.generators]

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            self._chain = StabilizerChain(self.degree, self.gen_tuples)
            self._order = self._chain.order()
            logger.debug("chain for %s: base %s, order %d", self.label, self._chain.base, self._order)
        return self._chain

    def order(self) -> int:
        if self._order is None:
            self.chain
        return self._order

    def chain_with_base(self, prefix: Sequence[int]) -> StabilizerChain:
        """A chain whose base starts with ``prefix``."""
        key = tuple(prefix)
        if not key:
            return self.chain
        ch = self._based.get(key)
        if ch is None:
            ch = StabilizerChain(self.degree, self.gen_tuples, base=key)
            if self._order is not None and ch.order() != self._order:
                raise AssertionError("chains with different bases disagree on the order")
            self._based[key] = ch
        return ch

    def stabilizer(self, *points: int) -> GroupHandle:
        """Pointwise stabilizer of ``points``."""
        ch = self.chain_with_base(points)
        gens = ch.stabilizer_generators(len(points))
        name = f"{self.label}_{{{','.join(str(p + 1) for p in points)}}}" if self.label else ""
        H = GroupHandle.from_tuples(gens, self.degree, name)
        return H

    def tup(self, g: Permutation) -> Tup:
        return g.padded(self.degree) if g.degree != self.degree else g.images

    def contains(self, g: Permutation) -> bool:
        if g.degree > self.degree:
            if any(g.images[i] != i for i in range(self.degree, g.degree)):
                return False
            g = Permutation(g.images[: self.degree], check=False)
        return self.chain.contains(self.tup(g))

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def is_trivial(self) -> bool:
        return self.order() == 1

    def extend(self, degree: int) -> GroupHandle:
        """The same group viewed on more points."""
        return GroupHandle(self.generators, degree, self.label)


def build_chain(G: GroupHandle) -> StabilizerChain:
    return G.chain


def order(G: GroupHandle) -> int:
    return G.order()


def contains(G: GroupHandle, g: Permutation) -> bool:
    return G.contains(g)


def is_subgroup(H: GroupHandle, G: GroupHandle) -> bool:
    return all(G.contains(h) for h in H.generators)


def equal_groups(G: GroupHandle, H: GroupHandle) -> bool:
    return G.order() == H.order() and is_subgroup(H, G) and is_subgroup(G, H)


class RandomSource:
    """Product-replacement random elements with an accumulator ("rattle")."""

    def __init__(self, seed: int = 42):
        self.seed = seed
        self.rng = random.Random(seed)
        self._states: dict[int, list] = {}

    def spawn(self, tag: str) -> RandomSource:
        """An independent stream derived from this seed and ``tag``."""
        sub = random.Random(f"{self.seed}:{tag}").getrandbits(64)
        return RandomSource(sub)

    def _state(self, G: GroupHandle) -> list:
        key = id(G)
        st = self._states.get(key)
        if st is None or st[0] is not G:
            gens = G.gen_tuples
            pool = [gens[i % len(gens)] for i in range(max(10, 2 * len(gens)))]
            st = [G, pool, tuple(range(G.degree))]
            self._states[key] = st
            for _ in range(60):
                self._step(st)
        return st

    def _step(self, st: list) -> Tup:
        pool = st[1]
        i, j = self.rng.sample(range(len(pool)), 2)
        if self.rng.random() < 0.5:
            pool[i] = _mul(pool[i], pool[j] if self.rng.random() < 0.5 else _inv(pool[j]))
        else:
            pool[i] = _mul(pool[j] if self.rng.random() < 0.5 else _inv(pool[j]), pool[i])
        st[2] = _mul(st[2], pool[i])
        return st[2]

    def random_tuple(self, G: GroupHandle) -> Tup:
        return self._step(self._state(G))

    def random_element(self, G: GroupHandle) -> Permutation:
        return Permutation(self.random_tuple(G), check=False)


def random_element(G: GroupHandle, rng: RandomSource) -> Permutation:
    return rng.random_element(G)


def element_tuples(G: GroupHandle, threshold: int = ENUM_THRESHOLD) -> set[Tup]:
    """Breadth-first closure of the generators, independent of the chain."""
    if G.order() > threshold:
        raise OverThreshold(f"enumeration of {G.label or 'group'}", G.order(), threshold)
    gens = G.gen_tuples
    e = tuple(range(G.degree))
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _mul(x, s)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def enumerate_elements(G: GroupHandle, threshold: int = ENUM_THRESHOLD) -> set[Permutation]:
    return {Permutation(t, check=False) for t in element_tuples(G, threshold)}


def orbit_tuples(x: Tup, gens: Sequence[Tup], threshold: int = ORBIT_THRESHOLD) -> set[Tup]:
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for s in gens:
                z = _conj(y, s)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        if len(seen) > threshold:
            raise OverThreshold("conjugation orbit", len(seen), threshold)
        frontier = nxt
    return seen


def conjugation_orbit(G: GroupHandle, x: Permutation, threshold: int = ORBIT_THRESHOLD) -> set[Permutation]:
    return {Permutation(t, check=False) for t in orbit_tuples(G.tup(x), G.gen_tuples, threshold)}


@dataclass
class ClassInfo:
    rep: Permutation
    size: int
    element_order: int


@dataclass
class ClassReport:
    group_order: int
    classes: list[ClassInfo] = field(default_factory=list)
    skipped_oversized: int = 0

    @property
    def coverage(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def complete(self) -> bool:
        return self.coverage == self.group_order


def _power_ups(g: Tup) -> list[Tup]:
    """Powers ``g^k`` for every divisor ``k`` of the order, identity excluded."""
    p = Permutation(g, check=False)
    n = p.order()
    out = []
    for k in range(1, n):
        if n % k == 0:
            out.append((p ** k).images)
    return out


def discover_classes(
    G: GroupHandle,
    rng: RandomSource,
    budget: int = 1000,
    orbit_threshold: int = ORBIT_THRESHOLD,
    keep_elements: bool = False,
) -> ClassReport | tuple[ClassReport, list[set[Tup]]]:
    """Find conjugacy classes from random elements and their powers.

    Class sizes are exact orbit lengths, so ``coverage == |G|`` certifies
    that every class was found.
    """
    N = G.order()
    report = ClassReport(N)
    e = tuple(range(G.degree))
    known: set[Tup] = {e}
    members: list[set[Tup]] = [{e}]
    report.classes.append(ClassInfo(Permutation(e, check=False), 1, 1))
    gens = G.gen_tuples
    oversized: set[Tup] = set()
    for _ in range(budget):
        if report.coverage == N:
            break
        g = rng.random_tuple(G)
        for h in _power_ups(g):
            if h in known or h in oversized:
                continue
            try:
                orb = orbit_tuples(h, gens, orbit_threshold)
            except OverThreshold:
                oversized.add(h)
                report.skipped_oversized += 1
                continue
            known |= orb
            members.append(orb)
            report.classes.append(ClassInfo(Permutation(h, check=False), len(orb), _elt_order(h)))
    report.classes.sort(key=lambda c: (c.element_order, c.size, c.rep.images))
    if keep_elements:
        members.sort(key=lambda s: (_elt_order(next(iter(s))), len(s), min(s)))
        return report, members
    return report


def conjugacy_classes(G: GroupHandle, threshold: int = ENUM_THRESHOLD) -> list[set[Tup]]:
    """All classes of an enumerable group, by exhausting the element set."""
    remaining = element_tuples(G, threshold)
    gens = G.gen_tuples
    out = []
    for x in sorted(remaining):
        if x in remaining:
            orb = orbit_tuples(x, gens, max(len(remaining), 1))
            remaining -= orb
            out.append(orb)
    return out


def order_spectrum(G: GroupHandle, threshold: int = ENUM_THRESHOLD) -> dict[int, int]:
    """Number of elements of each order, by full enumeration."""
    spec: dict[int, int] = {}
    for t in element_tuples(G, threshold):
        k = _elt_order(t)
        spec[k] = spec.get(k, 0) + 1
    return dict(sorted(spec.items()))


def orbits(G: GroupHandle, points: Iterable[int] | None = None) -> list[list[int]]:
    pts = range(G.degree) if points is None else points
    gens = G.gen_tuples
    seen: set[int] = set()
    out = []
    for p in pts:
        if p in seen:
            continue
        orb = [p]
        seen.add(p)
        k = 0
        while k < len(orb):
            x = orb[k]
            k += 1
            for s in gens:
                y = s[x]
                if y not in seen:
                    seen.add(y)
                    orb.append(y)
        out.append(sorted(orb))
    return out


def cycle_shape(g: Permutation) -> tuple[int, ...]:
    return tuple(sorted(len(c) for c in cycles(g)))
