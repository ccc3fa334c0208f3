"""Cores, intersections, normal closures, normalizers and centralizers."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable

from .group import (
    ENUM_THRESHOLD,
    ORBIT_THRESHOLD,
    GroupHandle,
    OverThreshold,
    RandomSource,
    StabilizerChain,
    Tup,
    _conj,
    _inv,
    _is_id,
    _mul,
    conjugacy_classes,
    _power_ups,
    discover_classes,
    element_tuples,
)
from .perm import Permutation

logger = logging.getLogger(__name__)

SMALL_SUBGROUP = 10**4
COSET_LIMIT = 10**5


@dataclass
class SubgroupRef:
    parent: GroupHandle
    sub: GroupHandle
    containment_checked: bool = False

    def __post_init__(self):
        if not self.containment_checked:
            if not all(self.parent.contains(h) for h in self.sub.generators):
                raise ValueError(f"{self.sub.label or 'subgroup'} is not contained in {self.parent.label or 'parent'}")
            self.containment_checked = True


@dataclass
class CoreResult:
    core: GroupHandle
    iterations: int
    method: str


def _generated(elements: Iterable[Tup], degree: int, label: str = "") -> GroupHandle:
    """A small generating set for the group generated by ``elements``."""
    gens: list[Tup] = []
    chain = StabilizerChain(degree, [])
    for e in elements:
        if _is_id(e) or chain.contains(e):
            continue
        gens.append(e)
        chain = StabilizerChain(degree, gens)
    H = GroupHandle.from_tuples(gens, degree, label)
    H._chain, H._order = chain, chain.order()
    return H


def _small_elements(H: GroupHandle, threshold: int) -> set[Tup]:
    if H.order() > threshold:
        raise OverThreshold(f"elements of {H.label or 'subgroup'}", H.order(), threshold)
    return element_tuples(H, threshold)


def is_normal(X: GroupHandle, H: GroupHandle) -> bool:
    return all(H.chain.contains(_conj(h, x)) for h in H.gen_tuples for x in X.gen_tuples)


def core_small(X: GroupHandle, H: GroupHandle | SubgroupRef, threshold: int = SMALL_SUBGROUP, check: bool = True) -> CoreResult:
    """Largest normal subgroup of ``X`` inside ``H``, by iterated conjugate intersection.

    ``K <- K & K^x`` over the generators ``x`` of ``X`` until a full pass is stable.
    """
    if isinstance(H, SubgroupRef):
        H = H.sub
    H = H if H.degree == X.degree else H.extend(X.degree)
    K = _small_elements(H, threshold)
    gens = X.gen_tuples
    passes = 0
    while True:
        passes += 1
        before = len(K)
        for x in gens:
            K = {k for k in K if _conj(k, x) in K}
        if len(K) == before:
            break
    core = _generated(sorted(K), X.degree, f"core({H.label})")
    if check:
        if not is_normal(X, core) or not all(H.chain.contains(c) for c in core.gen_tuples):
            raise AssertionError("core is not a normal subgroup of the subgroup")
        if X.order() <= ENUM_THRESHOLD and X.order() // H.order() <= COSET_LIMIT:
            brute = core_by_conjugates(X, H, threshold)
            if brute != K:
                raise AssertionError("iterated core disagrees with the intersection of conjugates")
    return CoreResult(core, passes, "iterated-intersection")


def coset_canonical(chain: StabilizerChain, x: Tup) -> Tup:
    """The element of the right coset ``H x`` with lexicographically least base images."""
    c = x
    for lv in chain.levels:
        best = None
        for q, u in lv.reps.items():
            img = c[q]
            if best is None or img < best[0]:
                best = (img, u)
        c = _mul(best[1], c)
    return c


def coset_representatives(X: GroupHandle, H: GroupHandle, limit: int = COSET_LIMIT) -> list[Tup]:
    """One representative per right coset ``H x``; breadth-first from ``H`` itself."""
    index = X.order() // H.order()
    if index > limit:
        raise OverThreshold("coset enumeration", index, limit)
    chain = H.chain
    e = tuple(range(X.degree))
    start = coset_canonical(chain, e)
    reps = [e]
    seen = {start}
    k = 0
    while k < len(reps):
        r = reps[k]
        k += 1
        for s in X.gen_tuples:
            y = _mul(r, s)
            key = coset_canonical(chain, y)
            if key not in seen:
                seen.add(key)
                reps.append(y)
    if len(reps) != index:
        raise AssertionError(f"found {len(reps)} cosets, expected {index}")
    return reps


def core_by_conjugates(X: GroupHandle, H: GroupHandle, threshold: int = SMALL_SUBGROUP) -> set[Tup]:
    """``H_X`` as the intersection of ``H^x`` over right-coset representatives ``x``."""
    K = _small_elements(H, threshold)
    for x in coset_representatives(X, H):
        K = {k for k in K if H.chain.contains(_conj(k, _inv(x)))}
        if len(K) == 1:
            break
    return K


def intersection_small(G: GroupHandle, H: GroupHandle, threshold: int = SMALL_SUBGROUP) -> GroupHandle:
    deg = max(G.degree, H.degree)
    G, H = (G if G.degree == deg else G.extend(deg)), (H if H.degree == deg else H.extend(deg))
    small, big = (G, H) if G.order() <= H.order() else (H, G)
    elems = _small_elements(small, threshold)
    common = sorted(e for e in elems if big.chain.contains(e))
    return _generated(common, deg, f"{G.label} & {H.label}")


def normal_closure(X: GroupHandle, S: Iterable[Permutation], label: str = "") -> GroupHandle:
    gens = [X.tup(s) for s in S if not s.is_identity()]
    if not gens:
        return GroupHandle([X.identity()], X.degree, label)
    chain = StabilizerChain(X.degree, gens)
    full = X.order()
    k = 0
    while k < len(gens) and chain.order() < full:
        n = gens[k]
        k += 1
        for x in X.gen_tuples:
            c = _conj(n, x)
            if not chain.contains(c):
                gens.append(c)
                chain = StabilizerChain(X.degree, gens)
                if chain.order() == full:
                    break
    N = GroupHandle.from_tuples(gens, X.degree, label)
    N._chain, N._order = chain, chain.order()
    return N


def _orbit_stabilizer(
    X: GroupHandle,
    start,
    act: Callable,
    key: Callable[..., Hashable],
    threshold: int,
    label: str,
) -> tuple[GroupHandle, int]:
    """Stabilizer of ``start`` under ``act(obj, x)`` and the orbit length."""
    gens = X.gen_tuples
    e = tuple(range(X.degree))
    reps = {key(start): e}
    objs = [start]
    k = 0
    while k < len(objs):
        o = objs[k]
        r = reps[key(o)]
        k += 1
        for s in gens:
            p = act(o, s)
            kp = key(p)
            if kp not in reps:
                reps[kp] = _mul(r, s)
                objs.append(p)
                if len(objs) > threshold:
                    raise OverThreshold(f"orbit for {label}", len(objs), threshold)
    orbit = len(objs)
    target = X.order() // orbit
    if target * orbit != X.order():
        raise AssertionError("orbit length does not divide the group order")
    stab_gens: list[Tup] = []
    chain = StabilizerChain(X.degree, [])
    if target > 1:
        for o in objs:
            r = reps[key(o)]
            for s in gens:
                rs = _mul(r, s)
                sg = _mul(rs, _inv(reps[key(act(o, s))]))
                if _is_id(sg) or chain.contains(sg):
                    continue
                stab_gens.append(sg)
                chain = StabilizerChain(X.degree, stab_gens)
                if chain.order() == target:
                    break
            if chain.order() == target:
                break
    if chain.order() != target:
        raise AssertionError(f"stabilizer order {chain.order()} != |X|/|orbit| = {target}")
    S = GroupHandle.from_tuples(stab_gens, X.degree, label)
    S._chain, S._order = chain, chain.order()
    return S, orbit


def _cyclic_elements(c: Tup) -> list[Tup]:
    out = []
    e = tuple(range(len(c)))
    x = c
    while x != e:
        out.append(x)
        x = _mul(x, c)
    out.append(e)
    return out


def _cyclic_key(c: Tup) -> bytes:
    return b"".join(bytes(t) if len(t) < 256 else repr(t).encode() for t in sorted(_cyclic_elements(c)))


def normalizer_of_cyclic(X: GroupHandle, a: Permutation, threshold: int = ORBIT_THRESHOLD) -> GroupHandle:
    """``N_X(<a>)`` by orbit-stabilizer on the conjugates of ``<a>``."""
    N, orbit = _orbit_stabilizer(X, X.tup(a), _conj, _cyclic_key, threshold, f"N(<{a}>)")
    N.orbit_length = orbit
    return N


def centralizer_of_element(X: GroupHandle, g: Permutation, threshold: int = ORBIT_THRESHOLD) -> GroupHandle:
    C, orbit = _orbit_stabilizer(X, X.tup(g), _conj, lambda t: t, threshold, f"C({g})")
    C.orbit_length = orbit
    return C


@dataclass
class SimplicityVerdict:
    status: str  # simple | not-simple | inconclusive
    witness: GroupHandle | None = None
    evidence: str = "deterministic"
    classes_checked: int = 0

    def __bool__(self) -> bool:
        return self.status == "simple"


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % q for q in range(2, int(n**0.5) + 1))


LARGE_SAMPLE = 60


def _sampled_representatives(G: GroupHandle, rng: RandomSource, samples: int) -> list[Tup]:
    """Random elements and their powers, one per cycle shape."""
    seen: dict[tuple, Tup] = {}
    for _ in range(samples):
        for h in _power_ups(rng.random_tuple(G)):
            shape = Permutation(h, check=False).cycle_type()
            seen.setdefault(tuple(shape), h)
    return [seen[k] for k in sorted(seen)]


def class_representatives(
    G: GroupHandle, rng: RandomSource | None = None, budget: int = 2000
) -> tuple[list[Tup], bool]:
    """Nontrivial class representatives and whether the list is complete.

    Groups beyond the enumeration threshold only get a sample of
    representatives (one per cycle shape) and the list is marked incomplete.
    """
    rng = rng or RandomSource(0)
    if G.order() > ENUM_THRESHOLD:
        return _sampled_representatives(G, rng, LARGE_SAMPLE), False
    rep = discover_classes(G, rng, budget)
    if rep.complete:
        return [c.rep.images for c in rep.classes if not c.rep.is_identity()], True
    classes = conjugacy_classes(G)
    return [min(c) for c in classes if not _is_id(next(iter(c)))], True


def is_simple(G: GroupHandle, rng: RandomSource | None = None, budget: int = 2000) -> SimplicityVerdict:
    N = G.order()
    if N == 1:
        return SimplicityVerdict("not-simple", GroupHandle([G.identity()], G.degree, "1"))
    if _is_prime(N):
        return SimplicityVerdict("simple")
    reps, complete = class_representatives(G, rng, budget)
    for r in reps:
        C = normal_closure(G, [Permutation(r, check=False)], f"<<{Permutation(r, check=False)}>>")
        if C.order() < N:
            return SimplicityVerdict("not-simple", C, "deterministic", len(reps))
    if complete:
        return SimplicityVerdict("simple", None, "deterministic", len(reps))
    return SimplicityVerdict("inconclusive", None, "randomized", len(reps))
