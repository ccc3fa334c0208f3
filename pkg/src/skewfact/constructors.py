"""Concrete groups: classical families, Mathieu fixtures and the explicit embeddings.

Group specs are small strings::

    A:7  S:5  C:11  D:12  PSL2:11  PGL2:11  AGL32  GL32
    M11  M12  M12.2  M23  M24  file:path/to.json  prod(A:5, C:2)
"""

from __future__ import annotations

import hashlib
import json
import os
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .group import GroupHandle, RandomSource
from .perm import Permutation, from_cycles
from .witness import DihedralWitness


class SpecError(ValueError):
    """Malformed group spec or invalid parameters."""


class FixtureIntegrityError(Exception):
    """A fixture file is malformed or its generators give the wrong order."""


# ---------------------------------------------------------------- fixtures

MATHIEU = {"M11": "M11", "M12": "M12", "M12.2": "M12_2", "M23": "M23", "M24": "M24"}


@dataclass(frozen=True)
class FixtureRecord:
    name: str
    degree: int
    generators: tuple[tuple[int, ...], ...]
    expected_order: int | None
    provenance: str


def fixture_dir() -> Path:
    env = os.environ.get("SKEWFACT_FIXTURES")
    if env:
        return Path(env)
    return Path(str(resources.files("skewfact") / "fixtures"))


def parse_fixture(doc: dict) -> FixtureRecord:
    try:
        name = str(doc["name"])
        degree = int(doc["degree"])
        gens = tuple(tuple(int(x) for x in g) for g in doc["generators"])
        expected = doc.get("expected_order")
        provenance = str(doc.get("provenance", ""))
    except (KeyError, TypeError, ValueError) as exc:
        raise FixtureIntegrityError(f"malformed fixture: {exc}") from None
    if degree < 1 or not gens:
        raise FixtureIntegrityError(f"{name}: empty fixture")
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise FixtureIntegrityError(f"{name}: generator is not a bijection on 0..{degree - 1}")
    if expected is not None:
        if not isinstance(expected, str) or not expected.isdigit():
            raise FixtureIntegrityError(f"{name}: expected_order must be a decimal string")
        expected = int(expected)
    return FixtureRecord(name, degree, gens, expected, provenance)


def group_from_fixture(rec: FixtureRecord) -> GroupHandle:
    G = GroupHandle.from_tuples(rec.generators, rec.degree, rec.name)
    if rec.expected_order is not None and G.order() != rec.expected_order:
        raise FixtureIntegrityError(
            f"{rec.name}: generators give order {G.order()}, fixture says {rec.expected_order}"
        )
    return G


def load_fixture_file(path: str | Path) -> GroupHandle:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise FixtureIntegrityError(f"cannot read fixture {path}: {exc}") from None
    return group_from_fixture(parse_fixture(doc))


def mathieu(name: str) -> GroupHandle:
    if name not in MATHIEU:
        raise SpecError(f"unknown Mathieu group {name}")
    return load_fixture_file(fixture_dir() / f"{MATHIEU[name]}.json")


def m24_spectrum() -> dict:
    return json.loads((fixture_dir() / "M24_spectrum.json").read_text())


def fixture_hash() -> str:
    h = hashlib.sha256()
    d = fixture_dir()
    for p in sorted(d.glob("*.json")):
        h.update(p.name.encode())
        h.update(p.read_bytes())
    return h.hexdigest()[:16]


# ---------------------------------------------------------------- families


def symmetric(n: int) -> GroupHandle:
    if n < 1:
        raise SpecError("S:n needs n >= 1")
    if n < 2:
        return GroupHandle([Permutation.identity(1)], 1, "S1")
    return GroupHandle([from_cycles(n, [[0, 1]]), from_cycles(n, [list(range(n))])], n, f"S{n}")


def alternating(n: int) -> GroupHandle:
    if n < 1:
        raise SpecError("A:n needs n >= 1")
    if n < 3:
        return GroupHandle([Permutation.identity(n)], n, f"A{n}")
    long = list(range(2, n))
    # (3 4 ... n) is even exactly when n is odd
    second = from_cycles(n, [long]) if n % 2 else from_cycles(n, [[0, 1], long])
    gens = [from_cycles(n, [[0, 1, 2]])]
    if n > 3:
        gens.append(second)
    return GroupHandle(gens, n, f"A{n}")


def cyclic(n: int) -> GroupHandle:
    if n < 1:
        raise SpecError("C:n needs n >= 1")
    return GroupHandle([from_cycles(n, [list(range(n))])], n, f"C{n}")


def dihedral_regular(k: int) -> tuple[GroupHandle, DihedralWitness]:
    """Right regular representation of the dihedral group of order ``k``.

    Element ``r^i s^j`` is point ``i + n*j`` with ``n = k/2``.
    """
    if k < 4 or k % 2:
        raise SpecError("D:k needs even k >= 4")
    n = k // 2

    def pt(i, j):
        return (i % n) + n * j

    rot = [0] * k
    ref = [0] * k
    for j in (0, 1):
        for i in range(n):
            rot[pt(i, j)] = pt(i + (1 if j == 0 else -1), j)
            ref[pt(i, j)] = pt(i, 1 - j)
    a, b = Permutation(rot), Permutation(ref)
    w = DihedralWitness.from_pair(a, b, k, f"D{k}")
    w.group.label = f"D{k}"
    return w.group, w


def _is_prime(p: int) -> bool:
    return p > 1 and all(p % q for q in range(2, int(p**0.5) + 1))


def _primitive_root(p: int) -> int:
    for w in range(2, p):
        if all(pow(w, (p - 1) // q, p) != 1 for q in range(2, p) if (p - 1) % q == 0 and _is_prime(q)):
            return w
    return 1


def projective_action(m: tuple[tuple[int, int], tuple[int, int]], p: int) -> Permutation:
    """Row vector action ``(x, y) -> (x, y) M`` on the ``p + 1`` points of the projective line.

    Point ``x < p`` is ``(x : 1)``; point ``p`` is ``(1 : 0)``.
    """
    (a, b), (c, d) = m
    if (a * d - b * c) % p == 0:
        raise SpecError("singular matrix")
    images = []
    for pt in range(p + 1):
        x, y = (pt, 1) if pt < p else (1, 0)
        u, v = (x * a + y * c) % p, (x * b + y * d) % p
        images.append(p if v == 0 else (u * pow(v, -1, p)) % p)
    return Permutation(images)


def _check_odd_prime(p: int) -> None:
    if p < 3 or not _is_prime(p):
        raise SpecError(f"need an odd prime, got {p}")


def pgl2(p: int) -> GroupHandle:
    _check_odd_prime(p)
    w = _primitive_root(p)
    mats = [((1, 1), (0, 1)), ((w, 0), (0, 1)), ((0, 1), (p - 1, 0))]
    return GroupHandle([projective_action(m, p) for m in mats], p + 1, f"PGL(2,{p})")


def psl2(p: int) -> GroupHandle:
    _check_odd_prime(p)
    w = _primitive_root(p)
    winv = pow(w, -1, p)
    mats = [((1, 1), (0, 1)), ((w, 0), (0, winv)), ((0, p - 1), (1, 0))]
    return GroupHandle([projective_action(m, p) for m in mats], p + 1, f"PSL(2,{p})")


def _f2_vec_action(matrix: list[list[int]], shift: int = 0) -> Permutation:
    """``v -> v M + t`` on the 8 vectors of F_2^3, vector ``v`` = bits of its index."""
    images = []
    for v in range(8):
        bits = [(v >> i) & 1 for i in range(3)]
        out = 0
        for j in range(3):
            s = sum(bits[i] * matrix[i][j] for i in range(3)) % 2
            out |= s << j
        images.append(out ^ shift)
    return Permutation(images)


_GL32_GENS = (
    [[1, 1, 0], [0, 1, 0], [0, 0, 1]],
    [[0, 1, 0], [0, 0, 1], [1, 0, 0]],
)
_I3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def gl32() -> GroupHandle:
    return GroupHandle([_f2_vec_action(m) for m in _GL32_GENS], 8, "GL(3,2)")


def agl32() -> GroupHandle:
    gens = [_f2_vec_action(m) for m in _GL32_GENS]
    gens += [_f2_vec_action(_I3, 1 << i) for i in range(3)]
    return GroupHandle(gens, 8, "AGL(3,2)")


def direct_product(G: GroupHandle, H: GroupHandle) -> GroupHandle:
    """``G x H`` on the disjoint union of their points (``H`` shifted up)."""
    n, m = G.degree, H.degree
    gens = [g.extend(n + m) for g in G.generators]
    for h in H.generators:
        hi = h.padded(m)
        gens.append(Permutation(tuple(range(n)) + tuple(n + x for x in hi), check=False))
    label = f"{G.label or 'G'} x {H.label or 'H'}"
    out = GroupHandle(gens, n + m, label)
    return out


# ---------------------------------------------------------------- spec parser

_ATOM = re.compile(r"(A|S|C|D|PSL2|PGL2):(\d+)$")


def _split_args(body: str) -> list[str]:
    depth = 0
    parts, cur = [], []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return parts


def make(spec: str) -> GroupHandle:
    spec = spec.strip()
    if spec.startswith("prod(") and spec.endswith(")"):
        args = _split_args(spec[5:-1])
        if len(args) != 2 or not all(args):
            raise SpecError(f"prod takes two specs: {spec!r}")
        return direct_product(make(args[0]), make(args[1]))
    if spec.startswith("file:"):
        return load_fixture_file(spec[5:])
    if spec in MATHIEU:
        return mathieu(spec)
    if spec == "AGL32":
        return agl32()
    if spec == "GL32":
        return gl32()
    m = _ATOM.match(spec)
    if not m:
        raise SpecError(f"cannot parse group spec {spec!r}")
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        return alternating(n)
    if kind == "S":
        return symmetric(n)
    if kind == "C":
        return cyclic(n)
    if kind == "D":
        return dihedral_regular(n)[0]
    if kind == "PSL2":
        return psl2(n)
    return pgl2(n)


# ---------------------------------------------------------------- embeddings


@dataclass
class Embedding:
    X: GroupHandle
    G: GroupHandle
    D: DihedralWitness
    note: str = ""


def _alt_on(points: list[int], degree: int) -> list[Permutation]:
    """Generators of the alternating group on ``points`` inside ``S_degree``."""
    k = len(points)
    return [
        Permutation(_lift(g.images, points, degree), check=False)
        for g in alternating(k).generators
    ]


def _lift(images, points, degree):
    out = list(range(degree))
    for i, x in enumerate(images):
        out[points[i]] = points[x]
    return tuple(out)


def _reflection(n: int) -> list[list[int]]:
    """Transpositions of ``i -> n + 1 - i`` on 1..n, as 0-based pairs."""
    return [[i, n - 1 - i] for i in range(n // 2)]


def lemma31_embedding(m: int) -> Embedding:
    """``A_{m+1} x| <b>`` inside ``S_{m+3}`` with ``D = <a, b>`` of order ``2(m+1)``.

    ``a = (1 2 ... m+1)`` and ``b`` is the reversal ``i -> m+2-i`` of
    1..m+1 times ``(m+2 m+3)``.
    """
    if m < 6 or m % 2:
        raise SpecError("lemma31_embedding needs even m >= 6")
    deg = m + 3
    a = from_cycles(deg, [list(range(m + 1))])
    b = from_cycles(deg, _reflection(m + 1) + [[m + 1, m + 2]])
    alt = _alt_on(list(range(m + 1)), deg)
    X = GroupHandle(alt + [b], deg, f"A{m + 1}:2")
    G = GroupHandle(_alt_on(list(range(m)), deg), deg, f"A{m}")
    D = DihedralWitness.from_pair(a, b, deg, f"D{2 * (m + 1)}")
    return Embedding(X, G, D, f"m={m}")


def lemma32_embedding(m: int) -> Embedding:
    """``A_{4m} x Z_2`` inside ``S_{4m+2}`` with ``D`` of order ``8m``.

    ``a = (1 ... 4m)(4m+1 4m+2)``, ``b = (1 4m)(2 4m-1)...(2m 2m+1)``.
    """
    if m < 2:
        raise SpecError("lemma32_embedding needs m >= 2")
    n = 4 * m
    deg = n + 2
    a = from_cycles(deg, [list(range(n)), [n, n + 1]])
    b = from_cycles(deg, _reflection(n))
    X = GroupHandle(_alt_on(list(range(n)), deg) + [a, b], deg, f"A{n}:2")
    G = GroupHandle(_alt_on(list(range(n - 1)), deg), deg, f"A{n - 1}")
    D = DihedralWitness.from_pair(a, b, deg, f"D{8 * m}")
    return Embedding(X, G, D, f"m={m}")


def theorem2_embedding(m: int, doubled: bool = False) -> Embedding:
    """``(A_{m+1}, A_m, D_{2(m+1)})`` or, doubled, ``(A_{m+1} x Z_2, A_m, D_{4(m+1)})``.

    Requires ``m/2`` even and at least 4, so the reflection is an even permutation.
    """
    if m % 4 or m < 8:
        raise SpecError("theorem2_embedding needs m/2 even and m/2 >= 4")
    n = m + 1
    deg = n + 2 if doubled else n
    a = from_cycles(deg, [list(range(n))])
    b = from_cycles(deg, _reflection(n))
    gens = _alt_on(list(range(n)), deg)
    G = GroupHandle(_alt_on(list(range(m)), deg), deg, f"A{m}")
    if not doubled:
        Y = GroupHandle(gens, deg, f"A{n}")
        D = DihedralWitness.from_pair(a, b, deg, f"D{2 * n}")
    else:
        z = from_cycles(deg, [[n, n + 1]])
        Y = GroupHandle(gens + [z], deg, f"A{n} x 2")
        D = DihedralWitness.from_pair(a * z, b, deg, f"D{4 * n}")
    return Embedding(Y, G, D, f"m={m}{', doubled' if doubled else ''}")


def pgl211_dihedral() -> DihedralWitness:
    """``<x -> x+1, x -> -x>`` in PGL(2,11); the reflection lies outside PSL(2,11)."""
    a = projective_action(((1, 1), (0, 1)), 11)
    b = projective_action(((10, 0), (0, 1)), 11)
    return DihedralWitness.from_pair(a, b, 12, "D22")


@lru_cache(maxsize=None)
def _a5_in_psl211_gens(seed: int) -> tuple[tuple[int, ...], ...]:
    L = psl2(11)
    rng = RandomSource(seed)
    invs: list[Permutation] = []
    threes: list[Permutation] = []
    while True:
        g = rng.random_element(L)
        o = g.order()
        if o % 2 == 0:
            invs.append(g ** (o // 2))
        if o % 3 == 0:
            threes.append(g ** (o // 3))
        for x in invs[-4:]:
            for y in threes[-4:]:
                if (x * y).order() == 5 and GroupHandle([x, y], 12).order() == 60:
                    return (x.images, y.images)


def a5_in_psl211(seed: int = 11) -> GroupHandle:
    """An ``A_5`` subgroup of PSL(2,11) from a (2,3,5) generating pair."""
    return GroupHandle.from_tuples(_a5_in_psl211_gens(seed), 12, "A5")


def theorem2_12_embedding(seed: int = 11) -> Embedding:
    """``Y = Z_3 x| PGL(2,11)``: PSL(2,11) commutes with ``z = (13 14 15)``
    and the outer reflection ``b' = b (14 15)`` inverts it.

    ``D = <a z, b'>`` has order 66 and its core in ``Y`` is ``<z>``.
    """
    deg = 15
    w = pgl211_dihedral()
    z = from_cycles(deg, [[12, 13, 14]])
    b2 = w.reflection.extend(deg) * from_cycles(deg, [[13, 14]])
    psl = [g.extend(deg) for g in psl2(11).generators]
    Y = GroupHandle(psl + [z, b2], deg, "3:PGL(2,11)")
    G = a5_in_psl211(seed).extend(deg)
    G.label = "A5"
    D = DihedralWitness.from_pair(w.rotation.extend(deg) * z, b2, deg, "D66")
    return Embedding(Y, G, D, "Z3 x| PGL(2,11)")
