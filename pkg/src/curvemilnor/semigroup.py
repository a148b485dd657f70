"""Numerical semigroups stored as (members below the conductor, conductor)."""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .errors import ConductorNotCertified, NotClosed, NotNumerical


@dataclass(frozen=True)
class NumericalSemigroup:
    small_values: tuple
    conductor: int

    def __post_init__(self):
        sv = tuple(sorted(set(self.small_values)))
        object.__setattr__(self, "small_values", sv)
        if self.conductor < 0:
            raise ValueError("negative conductor")
        if self.conductor > 0 and (not sv or sv[0] != 0):
            raise ValueError("0 must be a member")
        if sv and sv[-1] >= self.conductor:
            raise ValueError("small values must lie below the conductor")
        if self.conductor > 0 and self.conductor - 1 in sv:
            raise ValueError("conductor is not minimal")
        object.__setattr__(self, "_set", frozenset(sv))

    @classmethod
    def from_generators(cls, gens: Iterable[int]) -> "NumericalSemigroup":
        gens = sorted({int(g) for g in gens if int(g) > 0})
        if not gens:
            raise NotNumerical("no positive generators")
        if reduce(math.gcd, gens) != 1:
            raise NotNumerical(f"gcd of {gens} is not 1")
        m = gens[0]
        member = [True]
        run = 1
        n = 0
        while run < m:
            n += 1
            ok = any(n >= g and member[n - g] for g in gens)
            member.append(ok)
            run = run + 1 if ok else 0
        conductor = n - m + 1
        return cls(tuple(k for k in range(conductor) if member[k]), conductor)

    @classmethod
    def from_value_set(cls, values: Iterable[int], certified_through: int) -> "NumericalSemigroup":
        vals = {int(v) for v in values}
        if any(v < 0 or v > certified_through for v in vals):
            raise ValueError("values outside the certified range")
        if 0 not in vals:
            raise NotClosed("0 is not a member")
        c = certified_through + 1
        while c - 1 >= 0 and c - 1 in vals:
            c -= 1
        small = sorted(v for v in vals if v < c)
        positive = [v for v in small if v > 0]
        m = positive[0] if positive else 1
        run = certified_through - c + 1
        if c > 0 and run < max(m, 1):
            raise ConductorNotCertified(
                f"tail run of length {run} from {c} is shorter than multiplicity {m}")
        sset = set(small)
        for i, a in enumerate(small):
            for b in small[i:]:
                s = a + b
                if s < c and s not in sset:
                    raise NotClosed(f"{a} + {b} = {s} is missing")
        return cls(tuple(small), c)

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        return cls((), 0)

    def contains(self, n: int) -> bool:
        return n >= self.conductor or n in self._set

    __contains__ = contains

    def min_nonzero(self) -> int:
        for v in self.small_values:
            if v > 0:
                return v
        return max(self.conductor, 1)

    def gaps(self) -> list:
        return [n for n in range(self.conductor) if n not in self._set]

    @property
    def genus(self) -> int:
        return self.conductor - len(self.small_values)

    def is_symmetric(self) -> bool:
        c = self.conductor
        return all((s in self._set) != ((c - 1 - s) in self._set) for s in range(c))

    def equals(self, other: "NumericalSemigroup") -> bool:
        return self.small_values == other.small_values and self.conductor == other.conductor

    def minimal_generators(self) -> list:
        """Members that are not sums of two nonzero members."""
        bound = self.conductor + self.min_nonzero() + 1
        mem = [self.contains(n) for n in range(bound)]
        out = []
        for n in range(1, bound):
            if mem[n] and not any(mem[a] and mem[n - a] for a in range(1, n // 2 + 1)):
                out.append(n)
        return out

    def to_text(self) -> str:
        return "gamma = {" + ",".join(str(v) for v in self.small_values) + "} + " + f"{self.conductor}•N"

    def to_json_obj(self) -> list:
        return list(self.small_values) + [self.conductor]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "NumericalSemigroup":
        *small, c = obj
        return cls(tuple(small), c)

    def __str__(self):
        return self.to_text()
