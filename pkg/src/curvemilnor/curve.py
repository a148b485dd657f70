"""Curve specifications and the JSON document format they are read from."""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .errors import MalformedScalar, SchemaError, ZeroDenominator
from .series import BranchElement, FieldSpec, TruncatedSeries, parse_scalar


@dataclass(frozen=True)
class CurveSpec:
    """A curve given by generator parametrizations on r branches.

    ``generators[j].components[i]`` is the image of generator j on branch i.
    """

    field: FieldSpec
    generator_names: tuple
    generators: tuple
    branch_names: tuple = ()
    truncation_hint: int | None = dc_field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generator_names", tuple(self.generator_names))
        object.__setattr__(self, "generators", tuple(self.generators))
        if not self.generators:
            raise SchemaError("a curve needs at least one generator")
        if len(self.generator_names) != len(self.generators):
            raise SchemaError("one name per generator is required")
        r = self.generators[0].r
        for g in self.generators:
            if g.r != r:
                raise SchemaError("generators disagree on the branch count")
            if g.field != self.field:
                raise SchemaError("generator over a different field")
        names = tuple(self.branch_names) or tuple(f"b{i + 1}" for i in range(r))
        if len(names) != r:
            raise SchemaError("one name per branch is required")
        object.__setattr__(self, "branch_names", names)

    @property
    def r(self) -> int:
        return self.generators[0].r

    @property
    def m(self) -> int:
        return len(self.generators)

    @property
    def is_exact(self) -> bool:
        return all(s.is_exact for g in self.generators for s in g.components)

    def branch_series(self, i: int) -> list:
        return [g.components[i] for g in self.generators]

    def subcurve(self, keep: Sequence[int]) -> "CurveSpec":
        keep = list(keep)
        if not keep or len(set(keep)) != len(keep) or any(not 0 <= k < self.r for k in keep):
            raise ValueError(f"bad branch index set {keep}")
        return CurveSpec(self.field, self.generator_names,
                         tuple(g.restrict(keep) for g in self.generators),
                         tuple(self.branch_names[k] for k in keep), self.truncation_hint)

    def branch_curve(self, i: int) -> "CurveSpec":
        return self.subcurve([i])

    def with_generators(self, names, gens) -> "CurveSpec":
        return CurveSpec(self.field, tuple(names), tuple(gens), self.branch_names, self.truncation_hint)

    def to_document(self) -> dict:
        fld = {"kind": "rational"} if self.field.is_rational else {"kind": "prime", "p": self.field.p}
        branches = []
        for i, name in enumerate(self.branch_names):
            series = {}
            for gname, g in zip(self.generator_names, self.generators):
                s = g.components[i]
                series[gname] = [[e, str(v)] for e, v in s.terms]
            branches.append({"name": name, "series": series})
        doc = {"branches": branches, "field": fld, "variables": list(self.generator_names)}
        if self.truncation_hint is not None:
            doc["truncation"] = self.truncation_hint
        return doc


def _field_from_doc(obj) -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("field must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "rational":
        return FieldSpec(None)
    if kind == "prime":
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise SchemaError("prime field needs an integer 'p'")
        try:
            return FieldSpec(p)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    raise SchemaError(f"unknown field kind {kind!r}")


def parse_document(doc) -> CurveSpec:
    """Schema-check a curve document and build the (unvalidated) CurveSpec."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SchemaError("document must be a JSON object")
    for key in ("field", "variables", "branches"):
        if key not in doc:
            raise SchemaError(f"missing key {key!r}")
    fld = _field_from_doc(doc["field"])
    variables = doc["variables"]
    if (not isinstance(variables, list) or not variables
            or not all(isinstance(v, str) for v in variables) or len(set(variables)) != len(variables)):
        raise SchemaError("variables must be a nonempty list of distinct names")
    branches = doc["branches"]
    if not isinstance(branches, list) or not branches:
        raise SchemaError("branches must be a nonempty list")
    trunc = doc.get("truncation")
    if trunc is not None and (not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 1):
        raise SchemaError("truncation must be a positive integer")
    per_var = {v: [] for v in variables}
    names = []
    for bi, br in enumerate(branches):
        if not isinstance(br, dict) or not isinstance(br.get("series"), dict):
            raise SchemaError(f"branch {bi} must be an object with 'series'")
        name = br.get("name", f"b{bi + 1}")
        if not isinstance(name, str):
            raise SchemaError(f"branch {bi} name must be a string")
        names.append(name)
        series = br["series"]
        extra = set(series) - set(variables)
        if extra:
            raise SchemaError(f"branch {name!r} uses unknown variables {sorted(extra)}")
        for v in variables:
            if v not in series:
                raise SchemaError(f"variable {v!r} missing on branch {name!r}")
            terms = series[v]
            if not isinstance(terms, list):
                raise SchemaError(f"series of {v!r} on {name!r} must be a list")
            coeffs = {}
            last = -1
            for t in terms:
                if (not isinstance(t, list) or len(t) != 2 or not isinstance(t[0], int)
                        or isinstance(t[0], bool) or not isinstance(t[1], str)):
                    raise SchemaError(f"term {t!r} must be [exponent, \"coefficient\"]")
                e, cs = t
                if e < 0 or e <= last:
                    raise SchemaError(f"exponents of {v!r} on {name!r} must be strictly increasing naturals")
                last = e
                try:
                    coeffs[e] = parse_scalar(cs, fld)
                except (MalformedScalar, ZeroDenominator) as exc:
                    raise SchemaError(str(exc)) from exc
            per_var[v].append(TruncatedSeries.from_dict(fld, coeffs))
    gens = tuple(BranchElement(per_var[v]) for v in variables)
    if len(set(names)) != len(names):
        raise SchemaError("branch names must be distinct")
    return CurveSpec(fld, tuple(variables), gens, tuple(names), trunc)


def curve_from_lists(field: FieldSpec, branches: Sequence[Sequence[dict]], names=None,
                     branch_names=None) -> CurveSpec:
    """Build a curve from per-branch lists of {exponent: coefficient} dicts,
    one dict per generator."""
    m = len(branches[0])
    names = tuple(names) if names else tuple("xyzwuv"[j] if m <= 6 else f"g{j + 1}" for j in range(m))
    gens = []
    for j in range(m):
        comps = [TruncatedSeries.from_dict(field, br[j]) for br in branches]
        gens.append(BranchElement(comps))
    return CurveSpec(field, names, tuple(gens), tuple(branch_names) if branch_names else ())
