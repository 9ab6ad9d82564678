"""Numerical semigroup arithmetic: membership, gaps, conductor, indexed elements."""

from __future__ import annotations

from functools import reduce
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyGenerators, GcdNotOne


class NumericalSemigroup:
    """Smallest subset of the non-negative integers containing the given
    generators, closed under addition, and containing 0.

    Membership below the conductor is held in a bit vector; every integer
    at or above the conductor is a member. Elements are indexed in
    increasing order, ``element(0) == 0``. Instances are immutable.
    """

    __slots__ = ("generators", "conductor", "genus", "gaps", "_membership", "_below")

    def __init__(self, generators: Iterable[int]):
        gens = tuple(sorted(set(int(a) for a in generators)))
        if not gens:
            raise EmptyGenerators("at least one generator is required")
        if gens[0] < 1:
            raise ValueError(f"generators must be positive, got {gens[0]}")
        if reduce(gcd, gens) != 1:
            raise GcdNotOne(
                f"gcd({', '.join(map(str, gens))}) != 1: complement would be infinite"
            )
        # Closure by dynamic programming. min*max always exceeds the largest
        # gap of the generated semigroup, so the conductor lands inside the
        # table.
        bound = gens[0] * gens[-1]
        member = bytearray(bound + 1)
        member[0] = 1
        for n in range(gens[0], bound + 1):
            for a in gens:
                if a > n:
                    break
                if member[n - a]:
                    member[n] = 1
                    break
        frobenius = next((n for n in range(bound, -1, -1) if not member[n]), None)
        conductor = 0 if frobenius is None else frobenius + 1

        self.generators = gens
        self.conductor = conductor
        self.gaps = tuple(n for n in range(conductor) if not member[n])
        self.genus = len(self.gaps)
        self._membership = bytes(member)
        self._below = tuple(n for n in range(conductor) if member[n])

    def contains(self, n: int) -> bool:
        """True iff n is an element; negative n are never elements."""
        if n < 0:
            return False
        if n >= self.conductor:
            return True
        return bool(self._membership[n])

    __contains__ = contains

    def element(self, i: int) -> int:
        """The i-th smallest element (0-indexed); element(0) == 0."""
        if i < 0:
            raise ValueError("element index must be non-negative")
        if i < len(self._below):
            return self._below[i]
        return self.conductor + (i - len(self._below))

    def index_of(self, value: int) -> int:
        """Inverse of element(); raises ValueError if value is not an element."""
        if not self.contains(value):
            raise ValueError(f"{value} is not an element of {self!r}")
        if value >= self.conductor:
            return len(self._below) + (value - self.conductor)
        lo, hi = 0, len(self._below)
        while lo < hi:
            mid = (lo + hi) // 2
            if self._below[mid] < value:
                lo = mid + 1
            else:
                hi = mid
        return lo

    def members(self, bound: int) -> list[int]:
        """All elements <= bound, in increasing order."""
        return [n for n in range(max(bound, -1) + 1) if self.contains(n)]

    def iter_elements(self) -> Iterator[int]:
        i = 0
        while True:
            yield self.element(i)
            i += 1

    @property
    def frobenius(self) -> int:
        """Largest integer not in the semigroup (-1 when there are no gaps)."""
        return self.conductor - 1 if self.genus else -1

    @property
    def multiplicity(self) -> int:
        """Smallest non-zero element."""
        return self.element(1)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "conductor": self.conductor,
            "genus": self.genus,
        }

    @classmethod
    def from_json(cls, data: dict) -> "NumericalSemigroup":
        sg = cls(data["generators"])
        if list(sg.gaps) != list(data.get("gaps", sg.gaps)):
            raise ValueError("gap list in JSON does not match the generators")
        return sg

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        return f"NumericalSemigroup({list(self.generators)})"
