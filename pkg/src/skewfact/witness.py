from __future__ import annotations

from dataclasses import dataclass, field

from .group import GroupHandle
from .perm import Permutation, format_cycles


class WitnessError(AssertionError):
    pass


@dataclass
class DihedralWitness:
    """``D = <a> x| <b>`` of order ``2n`` with ``a^b = a^-1``.

    ``n == 2`` is the Klein four-group and is flagged ``degenerate``.
    """

    rotation: Permutation
    reflection: Permutation
    n: int
    group: GroupHandle = field(repr=False)

    @classmethod
    def from_pair(cls, a: Permutation, b: Permutation, degree: int | None = None, label: str = "D") -> DihedralWitness:
        deg = degree or max(a.degree, b.degree)
        a, b = a.extend(deg), b.extend(deg)
        w = cls(a, b, a.order(), GroupHandle([a, b], deg, label))
        w.verify()
        return w

    @property
    def order(self) -> int:
        return 2 * self.n

    @property
    def degenerate(self) -> bool:
        return self.n == 2

    def relations(self) -> dict[str, bool]:
        a, b = self.rotation, self.reflection
        return {
            "o(a) = n": a.order() == self.n,
            "b^2 = 1": (b * b).is_identity() and not b.is_identity(),
            "b not in <a>": all(not (a**i) == b for i in range(self.n)),
            "a^b = a^-1": a**b == ~a,
            "|<a,b>| = 2n": self.group.order() == 2 * self.n,
        }

    def verify(self) -> None:
        failed = [k for k, ok in self.relations().items() if not ok]
        if failed:
            raise WitnessError(f"dihedral relations fail: {', '.join(failed)}")

    def as_dict(self) -> dict[str, str]:
        return {"a": format_cycles(self.rotation), "b": format_cycles(self.reflection)}
