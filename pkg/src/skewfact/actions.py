"""Orbits, coset actions, transitivity, blocks and quasiprimitivity."""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import ENUM_THRESHOLD, GroupHandle, RandomSource, Tup, _mul, orbits
from .perm import Permutation
from .subgroups import (
    COSET_LIMIT,
    SMALL_SUBGROUP,
    SubgroupRef,
    class_representatives,
    core_small,
    coset_canonical,
    normal_closure,
)


class IndexTooLarge(Exception):
    pass


def is_transitive(G: GroupHandle) -> bool:
    return len(orbits(G)) == 1


def is_regular(G: GroupHandle) -> bool:
    return is_transitive(G) and G.order() == G.degree


def is_2transitive(G: GroupHandle) -> bool:
    if not is_transitive(G):
        return False
    if G.degree <= 2:
        return G.order() == G.degree
    S = G.stabilizer(0)
    return len(orbits(S, range(1, G.degree))) == 1


@dataclass
class CosetAction:
    parent: GroupHandle
    subgroup: GroupHandle
    degree: int
    images: list[Permutation]
    kernel: GroupHandle
    representatives: list[Tup] = field(repr=False, default_factory=list)

    @property
    def image(self) -> GroupHandle:
        return GroupHandle(self.images, self.degree, f"{self.parent.label} on [{self.parent.label}:{self.subgroup.label}]")

    @property
    def faithful(self) -> bool:
        return self.kernel.order() == 1


def coset_action(X: GroupHandle, H: GroupHandle | SubgroupRef, limit: int = COSET_LIMIT) -> CosetAction:
    """Action of ``X`` on the right cosets of ``H`` by right multiplication."""
    if isinstance(H, SubgroupRef):
        H = H.sub
    else:
        SubgroupRef(X, H)
    H = H if H.degree == X.degree else H.extend(X.degree)
    index, rem = divmod(X.order(), H.order())
    if rem:
        raise ValueError("subgroup order does not divide group order")
    if index > limit:
        raise IndexTooLarge(f"index {index} exceeds {limit}")
    chain = H.chain
    e = tuple(range(X.degree))
    reps = [e]
    where = {coset_canonical(chain, e): 0}
    k = 0
    while k < len(reps):
        r = reps[k]
        k += 1
        for s in X.gen_tuples:
            key = coset_canonical(chain, _mul(r, s))
            if key not in where:
                where[key] = len(reps)
                reps.append(_mul(r, s))
    if len(reps) != index:
        raise AssertionError(f"found {len(reps)} cosets, expected {index}")
    images = []
    for s in X.gen_tuples:
        images.append(Permutation([where[coset_canonical(chain, _mul(r, s))] for r in reps], check=False))
    # graph of the homomorphism: kernel = pointwise stabilizer of the coset points
    n = X.degree
    graph = GroupHandle(
        [Permutation(x + tuple(n + i for i in img.images), check=False) for x, img in zip(X.gen_tuples, images)],
        n + index,
    )
    if graph.order() != X.order():
        raise AssertionError("coset images do not define a homomorphism")
    K = graph.stabilizer(*range(n, n + index))
    kernel = GroupHandle([Permutation(g.images[:n], check=False) for g in K.generators], n, "kernel")
    return CosetAction(X, H, index, images, kernel, reps)


def minimal_blocks(G: GroupHandle, pair: tuple[int, int]) -> list[list[int]]:
    """Finest block system in which ``pair`` lies in one block (union-find)."""
    parent = list(range(G.degree))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = G.gen_tuples
    queue = []

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return
        if rx > ry:
            rx, ry = ry, rx
        parent[ry] = rx
        queue.append((rx, ry))

    union(*pair)
    while queue:
        x, y = queue.pop()
        for s in gens:
            union(s[x], s[y])
    blocks: dict[int, list[int]] = {}
    for p in range(G.degree):
        blocks.setdefault(find(p), []).append(p)
    return sorted(blocks.values())


def is_primitive(G: GroupHandle) -> bool:
    if not is_transitive(G):
        return False
    return all(len(minimal_blocks(G, (0, b))) == 1 for b in range(1, G.degree))


@dataclass
class QuasiprimitiveVerdict:
    status: str  # yes | no | inconclusive
    witness: GroupHandle | None = None
    witness_orbits: list[int] = field(default_factory=list)
    evidence: str = "deterministic"
    method: str = "class-closures"

    def __bool__(self) -> bool:
        return self.status == "yes"


def is_quasiprimitive(G: GroupHandle, rng: RandomSource | None = None, budget: int = 2000) -> QuasiprimitiveVerdict:
    """Every nontrivial normal subgroup transitive?

    Tests the normal closure of each class representative.  Any nontrivial
    normal subgroup contains such a closure, and a subgroup containing a
    transitive one is transitive.  With an incomplete class list a missing
    witness is settled by primitivity (primitive groups are quasiprimitive)
    or left inconclusive.
    """
    if not is_transitive(G):
        return QuasiprimitiveVerdict("no", G, [len(o) for o in orbits(G)], method="intransitive")
    if is_primitive(G):
        return QuasiprimitiveVerdict("yes", method="primitive")
    reps, complete = class_representatives(G, rng, budget)
    for r in reps:
        g = Permutation(r, check=False)
        C = normal_closure(G, [g], f"<<{g}>>")
        orbs = orbits(C)
        if len(orbs) > 1:
            return QuasiprimitiveVerdict("no", C, sorted(len(o) for o in orbs))
    if complete:
        return QuasiprimitiveVerdict("yes")
    return QuasiprimitiveVerdict("inconclusive", evidence="randomized")


@dataclass
class ActionReport:
    degree: int
    transitive: bool
    regular: bool
    two_transitive: bool
    primitive: bool
    quasiprimitive: QuasiprimitiveVerdict
    orbit_sizes: list[int]
    blocks: list[list[int]] | None = None

    def check_implications(self) -> None:
        if self.two_transitive and not self.primitive:
            raise AssertionError("2-transitive but imprimitive")
        if self.primitive and self.quasiprimitive.status == "no":
            raise AssertionError("primitive but not quasiprimitive")

    def as_dict(self) -> dict:
        return {
            "degree": self.degree,
            "transitive": self.transitive,
            "regular": self.regular,
            "two_transitive": self.two_transitive,
            "primitive": self.primitive,
            "quasiprimitive": self.quasiprimitive.status,
            "quasiprimitive_method": self.quasiprimitive.method,
            "orbit_sizes": self.orbit_sizes,
            "blocks": None if self.blocks is None else [[p + 1 for p in b] for b in self.blocks],
        }


def analyze_action(G: GroupHandle, rng: RandomSource | None = None) -> ActionReport:
    orbs = orbits(G)
    transitive = len(orbs) == 1
    blocks = None
    primitive = False
    if transitive:
        primitive = True
        for b in range(1, G.degree):
            bl = minimal_blocks(G, (0, b))
            if len(bl) > 1:
                primitive, blocks = False, bl
                break
    rep = ActionReport(
        degree=G.degree,
        transitive=transitive,
        regular=transitive and G.order() == G.degree,
        two_transitive=transitive and is_2transitive(G),
        primitive=primitive,
        quasiprimitive=is_quasiprimitive(G, rng),
        orbit_sizes=sorted(len(o) for o in orbs),
        blocks=blocks,
    )
    rep.check_implications()
    return rep


__all__ = [
    "CosetAction",
    "ActionReport",
    "QuasiprimitiveVerdict",
    "IndexTooLarge",
    "analyze_action",
    "coset_action",
    "is_2transitive",
    "is_primitive",
    "is_quasiprimitive",
    "is_regular",
    "is_transitive",
    "minimal_blocks",
    "orbits",
]
