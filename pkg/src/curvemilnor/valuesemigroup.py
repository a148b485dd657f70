"""Value semigroups in N^r encoded by a conductor vector and the members of
the box [0, gamma]; membership of any vector is decided after clamping it
componentwise to gamma."""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ConductorMismatch, DimensionMismatch, NotUnique
from .semigroup import NumericalSemigroup


def _box(bounds: Sequence[int]):
    return itertools.product(*(range(b + 1) for b in bounds))


@dataclass(frozen=True)
class DeltaSet:
    """Delta_axis(base) = {w : w_axis = base_axis, w_j > base_j for j != axis}."""

    base: tuple
    axis: int

    def meets(self, V: "ValueSemigroup") -> bool:
        i = self.axis
        if self.base[i] < 0:
            return False
        for u in V.box_members:
            if u[i] != self.base[i]:
                continue
            if all(u[j] >= self.base[j] + 1 for j in range(V.r) if j != i):
                return True
        return False


@dataclass(frozen=True)
class ValueSemigroup:
    r: int
    gamma: tuple
    box_members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(g) for g in self.gamma))
        object.__setattr__(self, "box_members", frozenset(tuple(int(x) for x in m) for m in self.box_members))
        if len(self.gamma) != self.r:
            raise DimensionMismatch(f"gamma has {len(self.gamma)} entries for r={self.r}")
        for m in self.box_members:
            if len(m) != self.r or any(not 0 <= x <= g for x, g in zip(m, self.gamma)):
                raise DimensionMismatch(f"box member {m} outside [0, {self.gamma}]")

    @classmethod
    def from_predicate(cls, r: int, bound: Sequence[int], pred: Callable[[tuple], bool]) -> "ValueSemigroup":
        """Build from a membership test that is already stable beyond *bound*
        (i.e. pred(v) == pred(min(v, bound))); the conductor is then shrunk
        to the minimal vector."""
        gamma = list(bound)
        members = {v for v in _box(gamma) if pred(v)}

        def tail_ok(c):
            ranges = [range(c[j], gamma[j] + 1) for j in range(r)]
            return all(v in members for v in itertools.product(*ranges))

        changed = True
        while changed:
            changed = False
            for i in range(r):
                if gamma[i] == 0:
                    continue
                cand = list(gamma)
                cand[i] -= 1
                if tail_ok(cand):
                    # points of the old box beyond cand clamp to a member
                    gamma = cand
                    members = {v for v in members if all(x <= g for x, g in zip(v, gamma))}
                    changed = True
        return cls(r, tuple(gamma), frozenset(members))

    @classmethod
    def from_numerical(cls, S: NumericalSemigroup) -> "ValueSemigroup":
        c = S.conductor
        return cls(1, (c,), frozenset((n,) for n in range(c + 1) if S.contains(n)))

    def _check(self, v):
        if len(v) != self.r:
            raise DimensionMismatch(f"vector of length {len(v)} for r={self.r}")

    def contains(self, v: Sequence[int]) -> bool:
        self._check(v)
        return tuple(min(int(x), g) for x, g in zip(v, self.gamma)) in self.box_members

    __contains__ = contains

    def minimal_nonzero(self) -> tuple:
        bounds = [max(g, 1) for g in self.gamma]
        nonzero = [v for v in _box(bounds) if any(v) and self.contains(v)]
        minimal = [v for v in nonzero if not any(w != v and all(a <= b for a, b in zip(w, v)) for w in nonzero)]
        if len(minimal) != 1:
            raise NotUnique(f"minimal nonzero elements: {sorted(minimal)}")
        return minimal[0]

    def project(self, keep: Iterable[int]) -> "ValueSemigroup":
        keep = list(keep)
        if not keep or any(not 0 <= k < self.r for k in keep) or len(set(keep)) != len(keep):
            raise DimensionMismatch(f"bad index set {keep} for r={self.r}")
        image = {tuple(u[k] for k in keep) for u in self.box_members}
        bound = [self.gamma[k] for k in keep]
        return ValueSemigroup.from_predicate(len(keep), bound, lambda w: w in image)

    def sum_image(self) -> NumericalSemigroup:
        top = sum(self.gamma)
        values = set(range(top, 2 * top + 2))
        for u in self.box_members:
            s = sum(u)
            if any(x == g for x, g in zip(u, self.gamma)):
                values.update(range(s, top))
            else:
                values.add(s)
        return NumericalSemigroup.from_value_set({v for v in values if v <= 2 * top + 1}, 2 * top + 1)

    def permuted(self, perm: Sequence[int]) -> "ValueSemigroup":
        """Coordinate k of the result is coordinate perm[k] of self."""
        return ValueSemigroup(self.r, tuple(self.gamma[p] for p in perm),
                              frozenset(tuple(u[p] for p in perm) for u in self.box_members))

    def equals(self, other: "ValueSemigroup", up_to_permutation: bool = False) -> bool:
        if self.r != other.r:
            return False
        if not up_to_permutation:
            return self.gamma == other.gamma and self.box_members == other.box_members
        if sorted(self.gamma) != sorted(other.gamma):
            return False
        return any(self.permuted(p).equals(other) for p in itertools.permutations(range(self.r)))

    def canonical(self) -> "ValueSemigroup":
        """Representative with the smallest serialization among all branch orders."""
        if self.r == 1:
            return self
        best = None
        for p in itertools.permutations(range(self.r)):
            cand = self.permuted(p)
            key = cand.to_json()
            if best is None or key < best[0]:
                best = (key, cand)
        return best[1]

    def gorenstein_symmetry(self, mu_vec: Sequence[int]) -> bool:
        mu_vec = tuple(mu_vec)
        if mu_vec != self.gamma:
            raise ConductorMismatch(f"mu vector {mu_vec} differs from conductor {self.gamma}")
        for v in _box(self.gamma):
            base = tuple(m - 1 - x for m, x in zip(mu_vec, v))
            dual = not any(DeltaSet(base, i).meets(self) for i in range(self.r))
            if (v in self.box_members) != dual:
                return False
        return True

    def validate(self) -> list:
        issues = []
        zero = (0,) * self.r
        if zero not in self.box_members:
            issues.append("closure: zero vector missing")
        if self.gamma not in self.box_members:
            issues.append(f"conductor: gamma {self.gamma} is not a member")
        members = sorted(self.box_members)
        for a_idx, u in enumerate(members):
            for w in members[a_idx:]:
                s = tuple(min(a + b, g) for a, b, g in zip(u, w, self.gamma))
                if s not in self.box_members:
                    issues.append(f"closure: {u} + {w} not a member")
        if self.r > 1:
            for u in members:
                if any(x == 0 for x in u) and any(u):
                    issues.append(f"axis: {u} has a zero coordinate")
        for i in range(self.r):
            if self.gamma[i] > 0:
                c = list(self.gamma)
                c[i] -= 1
                if tuple(c) in self.box_members:
                    issues.append(f"conductor: not minimal in coordinate {i}")
        return issues

    def to_json_obj(self) -> dict:
        return {"gamma": list(self.gamma), "members": [list(m) for m in sorted(self.box_members)], "r": self.r}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> "ValueSemigroup":
        return cls(int(obj["r"]), tuple(obj["gamma"]), frozenset(tuple(m) for m in obj["members"]))

    def __str__(self):
        mem = ",".join("(" + ",".join(map(str, m)) + ")" for m in sorted(self.box_members))
        return f"nu: gamma=({','.join(map(str, self.gamma))}) box members {{{mem}}}"
