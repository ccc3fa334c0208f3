"""Factorizations ``X = G D`` with ``D`` dihedral: checks, searches and certificates."""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Callable

from .actions import IndexTooLarge, coset_action, is_2transitive, is_quasiprimitive, is_transitive
from .group import (
    ENUM_THRESHOLD,
    GroupHandle,
    OverThreshold,
    RandomSource,
    Tup,
    _conj,
    _elt_order,
    _inv,
    _is_id,
    _mul,
    conjugacy_classes,
    discover_classes,
    element_tuples,
    orbit_tuples,
)
from .perm import Permutation, cycles, format_cycles
from .subgroups import SMALL_SUBGROUP, core_small, intersection_small, is_simple, normalizer_of_cyclic
from .witness import DihedralWitness, WitnessError

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------- Table 1


@dataclass(frozen=True)
class Table1Row:
    row: int
    X: str
    G: str
    D: str
    quasiprimitive: bool
    domain: str
    orders: Callable[[int], tuple[int, int, int]] = field(repr=False, compare=False)
    parametric: bool = False

    def fits(self, order_X: int, order_G: int, order_D: int) -> int | None:
        """Parameter value reproducing these orders, if any."""
        for m in self._candidates(order_D):
            if self.orders(m) == (order_X, order_G, order_D):
                return m
        return None

    def _candidates(self, order_D: int) -> range:
        return range(2, order_D + 1) if self.parametric else range(1)


def _f(n: int) -> int:
    return math.factorial(n)


TABLE1 = (
    Table1Row(1, "AGL(3,2)", "GL(3,2)", "D_8", True, "", lambda m: (1344, 168, 8)),
    Table1Row(2, "M_12", "M_11", "D_12", True, "", lambda m: (95040, 7920, 12)),
    Table1Row(3, "M_24", "M_23", "D_24", True, "", lambda m: (244823040, 10200960, 24)),
    Table1Row(4, "A_{4m}", "A_{4m-1}", "D_{4m}", True, "m >= 2", lambda m: (_f(4 * m) // 2, _f(4 * m - 1) // 2, 4 * m), parametric=True),
    Table1Row(5, "PGL(2,11)", "A_5", "D_22", False, "", lambda m: (1320, 60, 22)),
    Table1Row(6, "A_{2m+3}:Z_2", "A_{2m+2}", "D_{2(2m+3)}", False, "m >= 2", lambda m: (_f(2 * m + 3), _f(2 * m + 2) // 2, 2 * (2 * m + 3)), parametric=True),
    Table1Row(7, "Aut(M_12)", "M_11", "D_24", False, "", lambda m: (190080, 7920, 24)),
    Table1Row(8, "A_{4m}:Z_2", "A_{4m-1}", "D_{8m}", False, "m >= 2", lambda m: (_f(4 * m), _f(4 * m - 1) // 2, 8 * m), parametric=True),
)

# 2-transitive groups with a regular dihedral subgroup, kept as reference data
PROP21_REFERENCE = (
    ("i", "(A_4, D_4), (S_4, D_4), (AGL(3,2), D_8), (AGL(4,2), D_16), (Z_2^4:A_6, D_16), (Z_2^4:A_7, D_16)"),
    ("ii", "(M_12, D_12, M_11), (M_22.2, D_22, PSL(3,4).2), (M_24, D_24, M_23)"),
    ("iii", "(S_{2m}, D_{2m}, S_{2m-1}), (A_{4m}, D_{4m}, A_{4m-1})"),
    ("iv", "X = PSL(2,p^e).O, G = D_{p^e+1}, X_w >= Z_p^e:Z_{(p^e-1)/2}.O, p^e = 3 mod 4"),
    ("v", "X = PGL(2,p^e)Z_f, G = D_{p^e+1}, X_w = Z_p^e:Z_{p^e-1}, p^e = 1 mod 4, f | e"),
)

QUASIPRIMITIVE_ROWS = (1, 2, 3, 4)


def match_table1(order_X: int, order_G: int, order_D: int, quasiprimitive: bool | None) -> tuple[int, int | None] | None:
    for row in TABLE1:
        m = row.fits(order_X, order_G, order_D)
        if m is None:
            continue
        if quasiprimitive is not None and quasiprimitive != row.quasiprimitive:
            continue
        return row.row, (m if row.parametric else None)
    return None


# ---------------------------------------------------------------- products


@dataclass
class ProductCheck:
    order_X: int
    order_G: int
    order_D: int
    order_meet: int

    @property
    def ok(self) -> bool:
        return self.order_G * self.order_D == self.order_X * self.order_meet

    @property
    def exact(self) -> bool:
        return self.order_meet == 1

    def __bool__(self) -> bool:
        return self.ok


def is_product(X: GroupHandle, G: GroupHandle, D: GroupHandle, threshold: int = SMALL_SUBGROUP) -> ProductCheck:
    """``X = G D`` iff ``|G| |D| = |X| |G & D|`` (both inside ``X``)."""
    meet = intersection_small(G, D, threshold)
    return ProductCheck(X.order(), G.order(), D.order(), meet.order())


# ---------------------------------------------------------------- dihedral recognition


def recognize_dihedral(H: GroupHandle, threshold: int = SMALL_SUBGROUP) -> DihedralWitness | None:
    N = H.order()
    if N < 4 or N % 2:
        return None
    n = N // 2
    elems = sorted(element_tuples(H, threshold))
    invs = [x for x in elems if not _is_id(x) and _is_id(_mul(x, x))]
    for a in elems:
        if _elt_order(a) != n:
            continue
        ainv = _inv(a)
        cyc = set()
        x = a
        while x not in cyc:
            cyc.add(x)
            x = _mul(x, a)
        for b in invs:
            if b not in cyc and _conj(a, b) == ainv:
                w = DihedralWitness(Permutation(a, check=False), Permutation(b, check=False), n, H)
                w.verify()
                return w
        if n > 2:
            # <a> is the unique cyclic subgroup of index 2
            return None
    return None


@dataclass
class SearchResult:
    witness: DihedralWitness | None
    evidence: str  # deterministic | randomized
    method: str
    tried: int = 0
    notes: str = ""

    @property
    def found(self) -> bool:
        return self.witness is not None


def _involutions_from(g: Tup) -> Tup | None:
    o = _elt_order(g)
    if o % 2:
        return None
    return (Permutation(g, check=False) ** (o // 2)).images


def _pair_witness(b: Tup, c: Tup, degree: int) -> DihedralWitness:
    a = _mul(b, c)
    return DihedralWitness.from_pair(Permutation(a, check=False), Permutation(b, check=False), degree)


def find_dihedral(
    X: GroupHandle,
    order: int,
    mode: str = "randomized",
    rng: RandomSource | None = None,
    budget: int = 4000,
    threshold: int = ENUM_THRESHOLD,
) -> SearchResult:
    """Search ``X`` for a dihedral subgroup of the given order.

    ``D_{2n} = <b, c>`` for involutions ``b, c`` with ``o(bc) = n``.
    Exhaustive mode fixes one ``b`` per involution class and runs ``c`` over
    every involution; its negative answers are deterministic.
    """
    if order < 4 or order % 2:
        raise ValueError("dihedral order must be even and at least 4")
    n = order // 2
    if X.order() % order:
        return SearchResult(None, "deterministic", "lagrange", notes=f"{order} does not divide |X|")
    rng = rng or RandomSource(0)
    if mode == "exhaustive":
        return _find_dihedral_exhaustive(X, n, rng, threshold)
    pool: list[Tup] = []
    seen: set[Tup] = set()
    tried = 0
    for _ in range(budget):
        b = _involutions_from(rng.random_tuple(X))
        if b is None or b in seen:
            continue
        seen.add(b)
        for c in pool:
            tried += 1
            if _elt_order(_mul(b, c)) == n:
                return SearchResult(_pair_witness(b, c, X.degree), "deterministic", "random-involution-pairs", tried)
        pool.append(b)
    return SearchResult(None, "randomized", "random-involution-pairs", tried, f"no pair among {len(pool)} involutions")


def _find_dihedral_exhaustive(X: GroupHandle, n: int, rng: RandomSource, threshold: int) -> SearchResult:
    if X.order() <= threshold:
        orders = {_elt_order(t) for t in element_tuples(X, threshold)}
        if n not in orders:
            return SearchResult(
                None, "deterministic", "order-spectrum",
                notes=f"no element of order {n} among all {X.order()} elements",
            )
    rep = discover_classes(X, rng, budget=4000)
    if rep.complete:
        reps = [c.rep.images for c in rep.classes if c.element_order == 2]
        classes = None
    elif X.order() <= threshold:
        classes = [c for c in conjugacy_classes(X, threshold) if _elt_order(next(iter(c))) == 2]
        reps = [min(c) for c in classes]
    else:
        raise OverThreshold("involution classes", X.order(), threshold)
    if classes is None:
        classes = [orbit_tuples(r, X.gen_tuples) for r in reps]
    involutions = sorted(set().union(*classes)) if classes else []
    tried = 0
    for b in reps:
        for c in involutions:
            tried += 1
            if c != b and _elt_order(_mul(b, c)) == n:
                return SearchResult(_pair_witness(b, c, X.degree), "deterministic", "involution-classes", tried)
    return SearchResult(
        None, "deterministic", "involution-classes", tried,
        f"{len(reps)} involution classes, {len(involutions)} involutions",
    )


def _inverters(a: Tup) -> list[Tup]:
    """Every permutation ``b`` with ``b^-1 a b = a^-1`` when ``a`` is semiregular."""
    cyc = cycles(Permutation(a, check=False))
    n = len(cyc[0])
    k = len(cyc)
    if any(len(c) != n for c in cyc) or n * k != len(a):
        return []
    out = []
    from itertools import permutations, product

    for perm in permutations(range(k)):
        for shifts in product(range(n), repeat=k):
            b = [0] * len(a)
            for i, c in enumerate(cyc):
                t = cyc[perm[i]]
                for j, x in enumerate(c):
                    b[x] = t[(shifts[i] - j) % n]
            out.append(tuple(b))
    return out


def find_regular_dihedral(
    X: GroupHandle, rng: RandomSource | None = None, budget: int = 20000
) -> SearchResult:
    """A dihedral subgroup acting regularly on the ``degree`` points of ``X``.

    Random elements are powered down to rotations with two ``k/2``-cycles;
    for each rotation the reflections are enumerated among its inverters in
    the full symmetric group and tested for membership in ``X``.
    """
    k = X.degree
    if k % 2 or k < 4:
        return SearchResult(None, "deterministic", "degree", notes=f"degree {k} is odd or too small")
    n = k // 2
    if X.order() % k:
        return SearchResult(None, "deterministic", "lagrange", notes=f"{k} does not divide |X|")
    rng = rng or RandomSource(0)
    chain = X.chain
    tried = 0
    seen: set[Tup] = set()
    for _ in range(budget):
        g = rng.random_tuple(X)
        o = _elt_order(g)
        if o % n:
            continue
        a = (Permutation(g, check=False) ** (o // n)).images
        if a in seen:
            continue
        seen.add(a)
        if Permutation(a, check=False).cycle_type() != (n, n):
            continue
        for b in _inverters(a):
            tried += 1
            if not _is_id(_mul(b, b)) or _is_id(b) or not chain.contains(b):
                continue
            w = DihedralWitness.from_pair(Permutation(a, check=False), Permutation(b, check=False), k)
            if is_transitive(w.group) and w.group.order() == k:
                return SearchResult(w, "deterministic", "rotation-inverters", tried)
    return SearchResult(None, "randomized", "rotation-inverters", tried, f"budget {budget} exhausted")


# ---------------------------------------------------------------- normalizer argument


@dataclass
class NormalizerVerdict:
    status: str  # no-dihedral | dihedral-exists
    p: int
    rotation: Permutation
    normalizer_order: int
    inverting_involution: Permutation | None
    evidence: str
    notes: str = ""


def find_element_of_order(X: GroupHandle, k: int, rng: RandomSource, budget: int = 20000) -> Permutation | None:
    for _ in range(budget):
        g = rng.random_tuple(X)
        o = _elt_order(g)
        if o % k == 0:
            return Permutation(g, check=False) ** (o // k)
    return None


def no_dihedral_by_normalizer(X: GroupHandle, p: int, rng: RandomSource | None = None) -> NormalizerVerdict:
    """Is there a ``D_{2p}`` in ``X``?  Settled inside ``N_X(<a>)`` for one ``a`` of order ``p``.

    When ``p`` exactly divides ``|X|`` every subgroup of order ``p`` is a
    Sylow subgroup, all of them conjugate, so one normalizer decides it.
    """
    rng = rng or RandomSource(0)
    a = find_element_of_order(X, p, rng)
    if a is None:
        raise LookupError(f"no element of order {p} found")
    N = normalizer_of_cyclic(X, a)
    at = X.tup(a)
    ainv = _inv(at)
    inverter = None
    for t in sorted(element_tuples(N, SMALL_SUBGROUP)):
        if not _is_id(t) and _is_id(_mul(t, t)) and _conj(at, t) == ainv:
            inverter = Permutation(t, check=False)
            break
    sylow = X.order() % p == 0 and X.order() % (p * p) != 0
    return NormalizerVerdict(
        "dihedral-exists" if inverter is not None else "no-dihedral",
        p,
        a,
        N.order(),
        inverter,
        "deterministic" if (sylow or inverter is not None) else "randomized",
        f"|X:N| = {X.order() // N.order()} conjugates of <a>; p^2 {'does not divide' if sylow else 'divides'} |X|",
    )


def no_d46_by_normalizer(X: GroupHandle, p: int = 23, rng: RandomSource | None = None) -> NormalizerVerdict:
    return no_dihedral_by_normalizer(X, p, rng)


# ---------------------------------------------------------------- certificates


@dataclass
class FactorizationCertificate:
    kind: str  # dihedral-skew | dihedral-product | skew
    order_X: int
    order_G: int
    order_D: int
    order_meet: int
    product_ok: bool
    exact: bool
    core_of_D_order: int | None
    core_of_G_order: int | None
    g_simple: str
    quasiprimitive: str
    quasiprimitive_witness_orbits: list[int] = field(default_factory=list)
    quasiprimitive_witness_order: int | None = None
    matched_row: int | None = None
    row_parameter: int | None = None
    evidence: str = "deterministic"
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.product_ok != (self.order_G * self.order_D == self.order_X * self.order_meet):
            raise AssertionError("product flag inconsistent with the orders")

    @property
    def dihedral_skew(self) -> bool:
        return self.product_ok and self.exact and self.core_of_D_order == 1

    def as_dict(self) -> dict:
        d = asdict(self)
        for k in ("order_X", "order_G", "order_D", "order_meet", "quasiprimitive_witness_order"):
            if d[k] is None:
                continue
            d[k] = str(d[k])
        return d


def certify(
    X: GroupHandle,
    G: GroupHandle,
    D: GroupHandle,
    kind: str = "dihedral-skew",
    rng: RandomSource | None = None,
    quasi: bool = True,
) -> FactorizationCertificate:
    rng = rng or RandomSource(0)
    notes: list[str] = []
    evidence = "deterministic"
    pc = is_product(X, G, D)
    core_D = core_small(X, D).core.order()
    core_G = None
    qp = "skipped"
    qp_orbits: list[int] = []
    qp_order = None
    try:
        ca = coset_action(X, G)
        core_G = ca.kernel.order()
        if quasi:
            v = is_quasiprimitive(ca.image, rng)
            qp = v.status
            qp_orbits = v.witness_orbits
            qp_order = v.witness.order() if v.witness is not None else None
            if v.status == "inconclusive":
                evidence = "randomized"
            notes.append(f"quasiprimitivity on [X:G] of degree {ca.degree} by {v.method}")
    except (IndexTooLarge, OverThreshold) as exc:
        notes.append(f"coset action skipped: {exc}")
        evidence = "randomized"
    sv = is_simple(G, rng)
    if sv.status == "inconclusive":
        notes.append("simplicity of G not decided at this size")
    match = None
    if pc.ok and pc.exact and core_D == 1 and qp in ("yes", "no"):
        match = match_table1(pc.order_X, pc.order_G, pc.order_D, qp == "yes")
    return FactorizationCertificate(
        kind=kind,
        order_X=pc.order_X,
        order_G=pc.order_G,
        order_D=pc.order_D,
        order_meet=pc.order_meet,
        product_ok=pc.ok,
        exact=pc.exact,
        core_of_D_order=core_D,
        core_of_G_order=core_G,
        g_simple=sv.status,
        quasiprimitive=qp,
        quasiprimitive_witness_orbits=qp_orbits,
        quasiprimitive_witness_order=qp_order,
        matched_row=match[0] if match else None,
        row_parameter=match[1] if match else None,
        evidence=evidence,
        notes=notes,
    )


def verify_dihedral_skew(
    X: GroupHandle, G: GroupHandle, D: DihedralWitness, rng: RandomSource | None = None
) -> FactorizationCertificate:
    D.verify()
    for H, name in ((G, "G"), (D.group, "D")):
        if not all(X.contains(h) for h in H.generators):
            raise ValueError(f"{name} is not a subgroup of X")
    return certify(X, G, D.group, "dihedral-skew", rng)


def verify_skew_instance(
    X: GroupHandle, G: GroupHandle, c: Permutation, rng: RandomSource | None = None
) -> FactorizationCertificate:
    """``X = G C`` with ``C = <c>`` cyclic, ``G & C = 1`` and ``C`` core-free."""
    C = GroupHandle([c], X.degree, f"C{c.order()}")
    for H, name in ((G, "G"), (C, "C")):
        if not all(X.contains(h) for h in H.generators):
            raise ValueError(f"{name} is not a subgroup of X")
    return certify(X, G, C, "skew", rng, quasi=False)


def prop21_check(X: GroupHandle, rng: RandomSource | None = None) -> dict:
    """Regular dihedral subgroup present, and ``X`` 2-transitive."""
    res = find_regular_dihedral(X, rng)
    return {
        "regular_dihedral": res.found,
        "two_transitive": is_2transitive(X),
        "witness": res.witness.as_dict() if res.witness else None,
    }


__all__ = [
    "TABLE1",
    "PROP21_REFERENCE",
    "Table1Row",
    "ProductCheck",
    "SearchResult",
    "NormalizerVerdict",
    "FactorizationCertificate",
    "DihedralWitness",
    "WitnessError",
    "certify",
    "find_dihedral",
    "find_element_of_order",
    "find_regular_dihedral",
    "is_product",
    "match_table1",
    "no_d46_by_normalizer",
    "no_dihedral_by_normalizer",
    "prop21_check",
    "recognize_dihedral",
    "verify_dihedral_skew",
    "verify_skew_instance",
    "format_cycles",
]
