"""The ADE catalog of simple plane curve singularities and the classifier.

Catalog parametrizations are rational normal forms, listed per branch as
(x, y):

    A_2n    (t^(2n+1), t^2)
    A_2n+1  (t^(n+1), t), (-t^(n+1), t)
    D_2n    (0, t), (t, t^(n-1)), (t, -t^(n-1))
    D_2n+1  (0, t), (t^2, t^(2n-1))
    E_6     (t^4, t^3)
    E_7     (0, t), (t^3, t^2)
    E_8     (t^5, t^3)

They differ from the textbook equations by sign changes of the variables,
which preserve every invariant and the value semigroup.
"""
from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass

from . import engine
from .curve import CurveSpec, curve_from_lists
from .errors import UnsupportedCharacteristic, ValidationError
from .semigroup import NumericalSemigroup
from .series import RATIONALS, FieldSpec
from .valuesemigroup import ValueSemigroup


@dataclass(frozen=True, order=True)
class ADEClass:
    family: str
    index: int

    def __post_init__(self):
        f, k = self.family, self.index
        if f not in ("A", "D", "E") or not isinstance(k, int):
            raise ValidationError(f"unknown ADE family {f!r}")
        if (f == "A" and k < 1) or (f == "D" and k < 4) or (f == "E" and k not in (6, 7, 8)):
            raise ValidationError(f"inadmissible index {f}{k}")

    @classmethod
    def parse(cls, text: str) -> "ADEClass":
        m = re.fullmatch(r"\s*([ADEade])_?(\d+)\s*", text)
        if not m:
            raise ValidationError(f"cannot parse ADE class {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self):
        return f"{self.family}{self.index}"

    @property
    def r(self) -> int:
        f, k = self.family, self.index
        if f == "A":
            return 1 if k % 2 == 0 else 2
        if f == "D":
            return 3 if k % 2 == 0 else 2
        return 2 if k == 7 else 1


ENGINE_DERIVED = "EngineDerived"


def catalog_classes(max_a: int = 8, max_d: int = 8) -> list:
    out = [ADEClass("A", k) for k in range(1, max_a + 1)]
    out += [ADEClass("D", k) for k in range(4, max_d + 1)]
    out += [ADEClass("E", k) for k in (6, 7, 8)]
    return out


def _branches(cls: ADEClass):
    f, k = cls.family, cls.index
    if f == "A":
        if k % 2 == 0:
            n = k // 2
            return [[{2 * n + 1: 1}, {2: 1}]]
        n = (k - 1) // 2
        return [[{n + 1: 1}, {1: 1}], [{n + 1: -1}, {1: 1}]]
    if f == "D":
        if k % 2 == 0:
            n = k // 2
            return [[{}, {1: 1}], [{1: 1}, {n - 1: 1}], [{1: 1}, {n - 1: -1}]]
        n = (k - 1) // 2
        return [[{}, {1: 1}], [{2: 1}, {2 * n - 1: 1}]]
    if k == 6:
        return [[{4: 1}, {3: 1}]]
    if k == 7:
        return [[{}, {1: 1}], [{3: 1}, {2: 1}]]
    return [[{5: 1}, {3: 1}]]


def catalog_curve(cls: ADEClass, field: FieldSpec = RATIONALS) -> CurveSpec:
    if field.characteristic == 2:
        raise UnsupportedCharacteristic("characteristic 2 is not supported")
    if cls.family == "E" and field.characteristic in (3, 5):
        raise UnsupportedCharacteristic("E-type normal forms need characteristic other than 3 and 5")
    return curve_from_lists(field, _branches(cls), names=("x", "y"))


def expected_invariants(cls: ADEClass) -> dict:
    f, k = cls.family, cls.index
    if f == "A":
        n = k // 2 if k % 2 == 0 else (k - 1) // 2
        mu_vec = (k,) if k % 2 == 0 else (n + 1, n + 1)
        mult = 2
    elif f == "D":
        if k % 2 == 0:
            n = k // 2
            mu_vec = (2, n, n)
        else:
            n = (k - 1) // 2
            mu_vec = (2, 2 * n)
        mult = 3
    else:
        mu_vec = {6: (6,), 7: (3, 5), 8: (8,)}[k]
        mult = 3
    return {"mu": k, "r": cls.r, "mult": mult, "mu_vec": mu_vec}


def closed_form_value_semigroup(cls: ADEClass):
    f, k = cls.family, cls.index
    if f == "A":
        if k % 2 == 0:
            return ValueSemigroup.from_numerical(NumericalSemigroup.from_generators([2, k + 1]))
        n = (k - 1) // 2
        g = (n + 1, n + 1)
        return ValueSemigroup.from_predicate(2, g, lambda v: v[0] == v[1] or (v[0] >= g[0] and v[1] >= g[1]))
    if f == "E":
        if k == 6:
            return ValueSemigroup.from_numerical(NumericalSemigroup.from_generators([3, 4]))
        if k == 8:
            return ValueSemigroup.from_numerical(NumericalSemigroup.from_generators([3, 5]))
        return ValueSemigroup.from_predicate(
            2, (3, 5), lambda v: v[1] == 2 * v[0] or (v[0] > 1 and v[1] == 3) or (v[0] >= 3 and v[1] >= 5))
    return ENGINE_DERIVED


def printed_d_membership(cls: ADEClass):
    """Membership test and conductor of the D-family sets as printed in the
    source, used only to report differences against the engine."""
    k = cls.index
    if cls.family != "D":
        raise ValueError("only D classes have printed closed forms to compare")
    if k % 2 == 0:
        n = k // 2

        def pred(v):
            a, b, c = v
            if b == c and b < n - 2 and a <= b * (n - 1):
                return True
            if v == (1, n - 1, n - 1):
                return True
            return a >= 2 and b >= n - 1 and c >= n - 1

        return pred, (2, n - 1, n - 1)
    n = (k - 1) // 2

    def pred(v):
        a, b = v
        if a >= 2 and b >= 1 and b % 2 == 0:
            return True
        if a == 1 and b % 2 == 0 and 2 <= b <= 2 * n - 1:
            return True
        if v == (1, 2 * n - 1):
            return True
        return a >= 2 and b >= 2 * n

    return pred, (2, 2 * n)


def d_form_diff(cls: ADEClass, nu: ValueSemigroup) -> list:
    """Points of the box where the printed D-family form and *nu* disagree."""
    pred, g = printed_d_membership(cls)
    bound = [max(a, b) + 1 for a, b in zip(g, nu.gamma)]
    diff = []
    for v in itertools.product(*(range(b + 1) for b in bound)):
        if not any(v):
            continue
        if pred(v) != nu.contains(v):
            diff.append((v, nu.contains(v)))
    return diff


_REFERENCE: dict = {}


def reference_value_semigroup(cls: ADEClass) -> ValueSemigroup:
    """nu of the class: the closed form when one exists, else computed once
    from the rational catalog curve."""
    hit = _REFERENCE.get(cls)
    if hit is None:
        cf = closed_form_value_semigroup(cls)
        hit = cf if cf != ENGINE_DERIVED else engine.value_semigroup(catalog_curve(cls, RATIONALS))
        _REFERENCE[cls] = hit
    return hit


def fingerprint(nu: ValueSemigroup) -> str:
    return hashlib.sha256(nu.canonical().to_json().encode("utf-8")).hexdigest()[:16]


def equisingular(c1: CurveSpec, c2: CurveSpec) -> bool:
    return engine.value_semigroup(c1).equals(engine.value_semigroup(c2), up_to_permutation=True)


def candidate_classes(mult: int, r: int, mu: int) -> list:
    """Classes compatible with (mult, r, mu).  E_7 and D_7 share all three,
    so both are returned for mult 3, r 2, mu 7."""
    out = []
    if mult == 2 and mu >= 1:
        out.append(ADEClass("A", mu))
    elif mult == 3:
        if r == 1 and mu in (6, 8):
            out.append(ADEClass("E", mu))
        elif r == 2:
            if mu == 7:
                out.append(ADEClass("E", 7))
            if mu % 2 == 1 and mu >= 5:
                out.append(ADEClass("D", mu))
        elif r == 3 and mu % 2 == 0 and mu >= 4:
            out.append(ADEClass("D", mu))
    return [c for c in out if c.r == r]


def classify(c: CurveSpec):
    """The ADE class c is equisingular to, or None."""
    cands = candidate_classes(engine.multiplicity(c), c.r, engine.milnor_number(c))
    if not cands:
        return None
    nu = engine.value_semigroup(c)
    for cand in cands:
        if nu.equals(reference_value_semigroup(cand), up_to_permutation=True):
            return cand
    return None


def fcm_classification_check(c: CurveSpec) -> dict:
    """Finite CM type against the classifier.  A regular ring has finite CM
    type but no ADE class; it is reported as ``regular``."""
    fcm = engine.has_finite_cm_type(c)
    cls = classify(c)
    if fcm and cls is None:
        status = "regular" if engine.delta(c) == 0 else "VIOLATION"
    else:
        status = "ok"
    return {"ade": None if cls is None else str(cls), "finite_cm_type": fcm, "status": status}
