"""Exact permutation arithmetic on the points {0, ..., degree-1}.

Products act on the right: ``(g * h)(x) == h(g(x))``, so ``g ** h`` is the
conjugate ``h^-1 g h``.  Points are 0-based in memory and 1-based whenever a
permutation is printed or parsed in cycle notation.
"""

from __future__ import annotations

import math
import re
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "compose",
    "inverse",
    "power",
    "order",
    "parity",
    "cycles",
    "from_cycles",
    "conjugate",
    "parse_cycles",
    "format_cycles",
]


def _trim(images: tuple[int, ...]) -> tuple[int, ...]:
    n = len(images)
    while n > 1 and images[n - 1] == n - 1:
        n -= 1
    return images[:n]


class Permutation:
    """An immutable bijection of ``range(degree)``.

    Permutations of different degree compare equal when they agree after
    padding the shorter one with fixed points.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int], check: bool = True):
        images = tuple(images)
        if not images:
            images = (0,)
        if check:
            n = len(images)
            if sorted(images) != list(range(n)):
                raise ValueError(f"not a permutation of 0..{n - 1}: {images}")
        self.images = images
        self._hash = None

    @classmethod
    def identity(cls, degree: int = 1) -> Permutation:
        return cls(range(degree), check=False)

    @property
    def degree(self) -> int:
        return len(self.images)

    def padded(self, degree: int) -> tuple[int, ...]:
        """Image tuple extended with fixed points up to ``degree``."""
        n = len(self.images)
        if degree < n:
            if any(self.images[i] != i for i in range(degree, n)):
                raise ValueError("cannot shrink a permutation that moves high points")
            return self.images[:degree]
        if degree == n:
            return self.images
        return self.images + tuple(range(n, degree))

    def extend(self, degree: int) -> Permutation:
        return Permutation(self.padded(degree), check=False)

    def __call__(self, x: int) -> int:
        return self.images[x] if x < len(self.images) else x

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) == len(other.images):
            return self.images == other.images
        return _trim(self.images) == _trim(other.images)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(_trim(self.images))
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, k):
        if isinstance(k, Permutation):
            return conjugate(self, k)
        return power(self, k)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycle_type(self) -> tuple[int, ...]:
        """Sorted lengths of the nontrivial cycles."""
        return tuple(sorted(len(c) for c in cycles(self)))

    def order(self) -> int:
        return order(self)

    def parity(self) -> str:
        return parity(self)

    def __repr__(self) -> str:
        return f"Permutation('{format_cycles(self)}')"

    def __str__(self) -> str:
        return format_cycles(self)


def compose(g: Permutation, h: Permutation) -> Permutation:
    """Apply ``g`` first, then ``h``."""
    n = max(len(g.images), len(h.images))
    gi, hi = g.padded(n), h.padded(n)
    return Permutation(tuple(hi[x] for x in gi), check=False)


def inverse(g: Permutation) -> Permutation:
    inv = [0] * len(g.images)
    for i, x in enumerate(g.images):
        inv[x] = i
    return Permutation(inv, check=False)


def power(g: Permutation, k: int) -> Permutation:
    if k < 0:
        g, k = inverse(g), -k
    result = Permutation.identity(len(g.images))
    base = g
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def cycles(g: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles (0-based), each starting at its smallest point."""
    seen = [False] * len(g.images)
    out = []
    for start in range(len(g.images)):
        if seen[start] or g.images[start] == start:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = g.images[x]
        out.append(tuple(cyc))
    return out


def order(g: Permutation) -> int:
    return reduce(math.lcm, (len(c) for c in cycles(g)), 1)


def parity(g: Permutation) -> str:
    transpositions = sum(len(c) - 1 for c in cycles(g))
    return "odd" if transpositions % 2 else "even"


def from_cycles(degree: int, cycle_list: Iterable[Sequence[int]]) -> Permutation:
    """Build a permutation from disjoint 0-based cycles."""
    images = list(range(degree))
    used = set()
    for cyc in cycle_list:
        for x in cyc:
            if not 0 <= x < degree:
                raise ValueError(f"point {x + 1} outside degree {degree}")
            if x in used:
                raise ValueError(f"point {x + 1} appears in more than one cycle")
            used.add(x)
        for i, x in enumerate(cyc):
            images[x] = cyc[(i + 1) % len(cyc)]
    return Permutation(images, check=False)


def conjugate(g: Permutation, h: Permutation) -> Permutation:
    """``h^-1 g h``: the permutation mapping ``h(x)`` to ``h(g(x))``."""
    n = max(len(g.images), len(h.images))
    gi, hi = g.padded(n), h.padded(n)
    out = [0] * n
    for x in range(n):
        out[hi[x]] = hi[gi[x]]
    return Permutation(out, check=False)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int | None = None) -> Permutation:
    """Parse 1-based cycle notation such as ``"(1 2 3)(4 5)"``; ``"()"`` is the identity."""
    text = text.strip()
    if not text:
        raise ValueError("empty cycle string")
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle string: {text!r}")
    cycle_list = []
    for body in _CYCLE_RE.findall(text):
        tokens = body.replace(",", " ").split()
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            raise ValueError(f"non-integer point in {text!r}") from None
        if any(p < 0 for p in pts):
            raise ValueError(f"points are 1-based: {text!r}")
        if len(pts) > 1:
            cycle_list.append(pts)
    top = max((max(c) + 1 for c in cycle_list), default=1)
    if degree is None:
        degree = top
    elif top > degree:
        raise ValueError(f"point {top} outside degree {degree}")
    return from_cycles(degree, cycle_list)


def format_cycles(g: Permutation) -> str:
    cs = cycles(g)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cs)
