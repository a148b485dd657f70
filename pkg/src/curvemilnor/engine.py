"""Truncated algebra models of curve rings and the invariants read off them.

A curve ring R is the k-algebra generated by the branch parametrizations
inside the product of power series rings.  Modulo t^T on every branch its
image is a finite dimensional subspace V, computed here by exact
elimination.  Coordinates are flattened branch-major, exponent-minor, and a
row's pivot is its first nonzero coordinate, so pivots on a single branch
are exactly the orders of the elements of R.

Conductor exponents are certified by requiring T_i >= 2*gamma_i + (largest
generator order on branch i); below that bound the model is enlarged by
doubling, up to a cap read from ``CURVEMILNOR_PRECISION_CAP``.
"""
from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from math import gcd, lcm

from .curve import CurveSpec, parse_document
from .errors import (
    CoincidentBranches,
    DegenerateBranch,
    InvariantViolation,
    NoSuperficialFound,
    NotLocal,
    NotLocalChain,
    NotNZD,
    PrecisionExhausted,
)
from .linalg import integral, make_echelon
from .semigroup import NumericalSemigroup
from .series import BranchElement, PolyExpr, TruncatedSeries, poly_evaluate, series_divide
from .valuesemigroup import ValueSemigroup

DEFAULT_PRECISION_CAP = 1 << 14
DEFAULT_PROBE_BOUND = 64


def precision_cap() -> int:
    raw = os.environ.get("CURVEMILNOR_PRECISION_CAP")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return DEFAULT_PRECISION_CAP


# ---------------------------------------------------------------- model


def _generator_orders(c: CurveSpec):
    """orders[i][j]: finite order of generator j on branch i, or None."""
    out = []
    for i in range(c.r):
        row = []
        for g in c.generators:
            s = g.components[i]
            row.append(s.terms[0][0] if s.terms else None)
        out.append(row)
    return out


def branch_multiplicities(c: CurveSpec) -> tuple:
    mults = []
    for row in _generator_orders(c):
        finite = [o for o in row if o is not None]
        mults.append(min(finite) if finite else 0)
    return tuple(mults)


def _max_orders(c: CurveSpec) -> list:
    return [max((o for o in row if o is not None), default=0) for row in _generator_orders(c)]


class AlgebraModel:
    """The image of R in prod_i k[t]/(t^T_i), in fully reduced echelon form.

    ``monomials``/``images`` list the generator monomials kept during the
    span closure (the first one is 1); their images form a basis of V.
    """

    def __init__(self, curve: CurveSpec, T):
        self.curve = curve
        self.T = tuple(int(t) for t in T)
        if len(self.T) != curve.r or any(t < 1 for t in self.T):
            raise ValueError(f"bad truncation vector {T}")
        self.p = curve.field.p
        self.offsets = []
        acc = 0
        for t in self.T:
            self.offsets.append(acc)
            acc += t
        self.ncols = acc
        self._gens = self._integral_generators()
        self._build()

    def pos(self, i: int, e: int) -> int:
        return self.offsets[i] + e

    def _integral_generators(self):
        """Per generator and branch, sparse integer terms below T_i.  Over Q a
        generator is rescaled by a constant; this does not change the algebra."""
        out = []
        for g in self.curve.generators:
            for i, s in enumerate(g.components):
                if s.precision is not None and s.precision < self.T[i]:
                    raise PrecisionExhausted(
                        f"generator known to t^{s.precision} on branch {i + 1}, model needs t^{self.T[i]}")
            if self.p is None:
                dens = [v.denominator for s in g.components for e, v in s.terms]
                scale = lcm(*dens) if dens else 1
                comps = [[(e, int(v * scale)) for e, v in s.terms if e < self.T[i]]
                         for i, s in enumerate(g.components)]
            else:
                comps = [[(e, int(v)) for e, v in s.terms if e < self.T[i]] for i, s in enumerate(g.components)]
            out.append(comps)
        return out

    def multiply(self, vec, j: int) -> list:
        """Image of (element with coordinates vec) times generator j."""
        out = [0] * self.ncols
        p = self.p
        for i, terms in enumerate(self._gens[j]):
            if not terms:
                continue
            off, T = self.offsets[i], self.T[i]
            for a in range(T):
                va = vec[off + a]
                if not va:
                    continue
                for e, c in terms:
                    k = a + e
                    if k >= T:
                        break
                    out[off + k] += va * c
        if p is not None:
            out = [x % p for x in out]
        return out

    def _build(self):
        one = [0] * self.ncols
        for o in self.offsets:
            one[o] = 1
        ech = make_echelon(self.ncols, self.p)
        ech.insert(one)
        m = self.curve.m
        self.monomials = [(0,) * m]
        self.images = [one]
        idx = 0
        while idx < len(self.images):
            exps, vec = self.monomials[idx], self.images[idx]
            idx += 1
            for j in range(m):
                w = self.multiply(vec, j)
                if any(w) and ech.insert(w):
                    e2 = list(exps)
                    e2[j] += 1
                    self.monomials.append(tuple(e2))
                    self.images.append(w)
        self.rref = ech.rref()
        self.dim = len(self.rref)
        self.pivots = [pv for pv, _ in self.rref]
        self.units = {pv for pv, row in self.rref if sum(1 for x in row if x) == 1}

    def is_unit_vector(self, i: int, e: int) -> bool:
        return self.pos(i, e) in self.units

    def conductor(self) -> tuple:
        gamma = []
        for i, T in enumerate(self.T):
            c = T
            while c > 0 and self.is_unit_vector(i, c - 1):
                c -= 1
            gamma.append(c)
        return tuple(gamma)

    def pivot_orders(self, i: int) -> list:
        lo, hi = self.offsets[i], self.offsets[i] + self.T[i]
        return [pv - lo for pv in self.pivots if lo <= pv < hi]

    def delta(self) -> int:
        return self.ncols - self.dim

    def rows(self):
        return [row for _, row in self.rref]


def build_model(c: CurveSpec, T) -> AlgebraModel:
    return AlgebraModel(c, T)


@dataclass
class Analysis:
    curve: CurveSpec
    model: AlgebraModel
    gamma: tuple
    delta: int
    certified: bool


def _requirements(c: CurveSpec, gamma, mults, maxv):
    return [max(2 * g + mv, 2 * max(g, e, 1)) for g, e, mv in zip(gamma, mults, maxv)]


_ANALYSES: dict = {}


def clear_cache():
    _ANALYSES.clear()
    _NU.clear()


def analyse(c: CurveSpec, cap: int | None = None) -> Analysis:
    """Certified model of *c*; raises PrecisionExhausted at the cap."""
    hit = _ANALYSES.get(c)
    if hit is not None:
        return hit
    cap = precision_cap() if cap is None else cap
    mults = branch_multiplicities(c)
    maxv = _max_orders(c)
    limits = []
    for i in range(c.r):
        precs = [g.components[i].precision for g in c.generators if g.components[i].precision is not None]
        limits.append(min([cap] + precs))
    if c.truncation_hint:
        T = [max(2, c.truncation_hint) for _ in range(c.r)]
    else:
        T = [max(4, 2 * mv + 2) for mv in maxv]
    T = [min(t, lim) for t, lim in zip(T, limits)]
    while True:
        model = AlgebraModel(c, T)
        gamma = model.conductor()
        need = _requirements(c, gamma, mults, maxv)
        if all(t >= n for t, n in zip(T, need)):
            a = Analysis(c, model, gamma, model.delta(), True)
            _ANALYSES[c] = a
            return a
        new_T = []
        for t, n, lim in zip(T, need, limits):
            if t >= n:
                new_T.append(t)
            else:
                new_T.append(min(max(2 * t, n), lim))
        if new_T == T:
            raise PrecisionExhausted(
                f"conductor not certified at truncation {tuple(T)} (need {tuple(need)}, limit {tuple(limits)})")
        T = new_T


def conductor_exponents(c: CurveSpec) -> tuple:
    a = analyse(c)
    return a.gamma, a.certified


def delta(c: CurveSpec) -> int:
    return analyse(c).delta


# ---------------------------------------------------------------- loading


def _branch_semigroup_gcd(c: CurveSpec, i: int, T: int) -> int:
    b = c.branch_curve(i)
    limit = min([T] + [g.components[0].precision for g in b.generators
                       if g.components[0].precision is not None])
    model = AlgebraModel(b, (limit,))
    g = 0
    for o in model.pivot_orders(0):
        g = gcd(g, o)
    return g


def validate_curve(c: CurveSpec, probe_bound: int | None = None) -> CurveSpec:
    if probe_bound is None:
        raw = os.environ.get("CURVEMILNOR_PROBE_BOUND")
        probe_bound = int(raw) if raw and raw.isdigit() else DEFAULT_PROBE_BOUND
    for j, g in enumerate(c.generators):
        for i, s in enumerate(g.components):
            if s.terms and s.terms[0][0] == 0:
                raise NotLocal(f"generator {c.generator_names[j]} is a unit on branch {c.branch_names[i]}")
    maxdeg = max((s.terms[-1][0] for g in c.generators for s in g.components if s.terms), default=1)
    probe = max(probe_bound, 4 * maxdeg)
    for i in range(c.r):
        g = _branch_semigroup_gcd(c, i, probe)
        if g != 1:
            raise DegenerateBranch(
                f"branch {c.branch_names[i]} has value semigroup gcd {g} (not a parametrization of degree 1)")
    comps = [tuple(g.components[i] for g in c.generators) for i in range(c.r)]
    for i, j in itertools.combinations(range(c.r), 2):
        if comps[i] == comps[j]:
            raise CoincidentBranches(f"branches {c.branch_names[i]} and {c.branch_names[j]} coincide")
    pair_cap = max(probe_bound, 8 * maxdeg)
    for i, j in itertools.combinations(range(c.r), 2):
        try:
            analyse(c.subcurve([i, j]), cap=pair_cap)
        except PrecisionExhausted as exc:
            raise CoincidentBranches(
                f"branches {c.branch_names[i]} and {c.branch_names[j]}: intersection probe exceeded "
                f"truncation {pair_cap}") from exc
    return c


def load_curve(document, probe_bound: int | None = None) -> CurveSpec:
    """Parse and validate a curve document (dict, JSON text or bytes)."""
    return validate_curve(parse_document(document), probe_bound)


# ---------------------------------------------------------------- semigroups


_NU: dict = {}


def _w_basis(rows, forbidden, ncols, p):
    """Basis of {w in span(rows) : w vanishes on the forbidden columns}."""
    fset = set(forbidden)
    order = list(forbidden) + [k for k in range(ncols) if k not in fset]
    nf = len(forbidden)
    ech = make_echelon(ncols, p)
    for r in rows:
        ech.insert([r[k] for k in order])
    out = []
    for pv, row in zip(ech.pivots, ech.rows):
        if pv >= nf:
            out.append(list(row))
    return out, order


def _count_exponent_nonzero(wrows, targets, p) -> bool:
    """True iff some vector of span(wrows) is nonzero at every target column."""
    if not wrows:
        return False
    if p is None:
        return all(any(r[t] for r in wrows) for t in targets)
    dim = len(wrows)
    total = 0
    for size in range(len(targets) + 1):
        for S in itertools.combinations(targets, size):
            if S:
                ech = make_echelon(len(S), p)
                for r in wrows:
                    ech.insert([r[t] for t in S])
                rk = ech.rank
            else:
                rk = 0
            total += (-1) ** size * p ** (dim - rk)
    return total != 0


def value_semigroup(c: CurveSpec) -> ValueSemigroup:
    hit = _NU.get(c)
    if hit is not None:
        return hit
    a = analyse(c)
    model, gamma = a.model, a.gamma
    p = model.p
    cols = []
    for i in range(c.r):
        for e in range(gamma[i] + 1):
            cols.append(model.pos(i, e))
    local = {}
    k = 0
    for i in range(c.r):
        for e in range(gamma[i] + 1):
            local[(i, e)] = k
            k += 1
    rows = []
    for row in model.rows():
        pr = [row[x] for x in cols]
        if any(pr):
            rows.append(pr)
    ncols = len(cols)
    members = set()
    for v in itertools.product(*(range(g + 1) for g in gamma)):
        forbidden = [local[(i, e)] for i in range(c.r) for e in range(v[i])]
        wrows, order = _w_basis(rows, forbidden, ncols, p)
        where = {col: idx for idx, col in enumerate(order)}
        targets = [where[local[(i, v[i])]] for i in range(c.r)]
        if _count_exponent_nonzero(wrows, targets, p):
            members.add(v)
    nu = ValueSemigroup(c.r, gamma, frozenset(members))
    _NU[c] = nu
    return nu


def gamma_semigroup(c: CurveSpec) -> NumericalSemigroup:
    return value_semigroup(c).sum_image()


def branch_gamma_from_pivots(c: CurveSpec, i: int = 0) -> NumericalSemigroup:
    """Gamma of branch i read directly off the pivot orders of its model."""
    a = analyse(c.branch_curve(i))
    T = a.model.T[0]
    return NumericalSemigroup.from_value_set(set(a.model.pivot_orders(0)), T - 1)


# ---------------------------------------------------------------- invariants


def intersection_multiplicity(c: CurveSpec, i: int, j: int) -> int:
    if i == j:
        raise ValueError("intersection multiplicity needs two distinct branches")
    pair = delta(c.subcurve(sorted((i, j))))
    return pair - delta(c.branch_curve(i)) - delta(c.branch_curve(j))


def embedding_dimension(c: CurveSpec) -> int:
    a = analyse(c)
    model = a.model
    basis = model.images[1:]
    ech = make_echelon(model.ncols, model.p)
    for b in basis:
        for j in range(c.m):
            w = model.multiply(b, j)
            if any(w):
                ech.insert(w)
    return len(basis) - ech.rank


def is_gorenstein(c: CurveSpec) -> bool:
    a = analyse(c)
    s = sum(a.gamma)
    return 2 * (s - a.delta) == s


def _rank_outside_box(model: AlgebraModel, bounds) -> int:
    keep = [model.pos(i, k) for i in range(model.curve.r) for k in range(min(bounds[i], model.T[i]))]
    ech = make_echelon(len(keep), model.p)
    for row in model.rows():
        pr = [row[x] for x in keep]
        if any(pr):
            ech.insert(pr)
    return ech.rank


def drozd_roiter_cyclicity(c: CurveSpec) -> int:
    """dim of M/mM for M = (m Rbar + R)/R."""
    a = analyse(c)
    model = a.model
    e = branch_multiplicities(c)
    e2 = tuple(2 * x for x in e)

    def dim_plus_box(bounds):
        box = sum(T - min(b, T) for T, b in zip(model.T, bounds))
        return box + _rank_outside_box(model, bounds)

    return dim_plus_box(e) - dim_plus_box(e2)


@dataclass(frozen=True)
class CurveInvariants:
    delta: int
    milnor: int
    r: int
    mult: int
    branch_mults: tuple
    edim: int
    mu_vec: tuple
    conductor: tuple
    gorenstein: bool
    local_type: str
    certified: bool
    branch_deltas: tuple = ()
    intersections: tuple = ()  # ((i, j, i_ij), ...) 0-based

    def to_json_obj(self) -> dict:
        return {
            "branch_deltas": list(self.branch_deltas),
            "branch_mults": list(self.branch_mults),
            "certified": self.certified,
            "conductor": list(self.conductor),
            "delta": self.delta,
            "edim": self.edim,
            "gorenstein": self.gorenstein,
            "intersections": [[i + 1, j + 1, v] for i, j, v in self.intersections],
            "local_type": self.local_type,
            "milnor": self.milnor,
            "mu_vec": list(self.mu_vec),
            "mult": self.mult,
            "r": self.r,
        }


def relative_milnor_vector(c: CurveSpec) -> tuple:
    r = c.r
    if r == 1:
        return (2 * delta(c),)
    bd = [delta(c.branch_curve(i)) for i in range(r)]
    inter = {}
    for i, j in itertools.combinations(range(r), 2):
        inter[(i, j)] = inter[(j, i)] = intersection_multiplicity(c, i, j)
    return tuple(2 * bd[i] + sum(inter[(i, j)] for j in range(r) if j != i) for i in range(r))


def classify_local_type(c: CurveSpec) -> str:
    mu = milnor_number(c)
    if mu == 0:
        return "Regular"
    if mu == 1:
        return "DoublePoint"
    if c.r >= 2 and all(delta(c.branch_curve(i)) == 0 for i in range(c.r)) and all(
            intersection_multiplicity(c, i, j) == 1 for i, j in itertools.combinations(range(c.r), 2)):
        return "OrdinaryMultiplePoint"
    return "Other"


def milnor_number(c: CurveSpec) -> int:
    return 2 * delta(c) - c.r + 1


def multiplicity(c: CurveSpec) -> int:
    return sum(branch_multiplicities(c))


def invariants(c: CurveSpec) -> CurveInvariants:
    a = analyse(c)
    d = a.delta
    r = c.r
    bm = branch_multiplicities(c)
    mult = sum(bm)
    gam = gamma_semigroup(c)
    if gam.min_nonzero() != mult:
        raise InvariantViolation(f"multiplicity {mult} differs from min nonzero of Gamma {gam.min_nonzero()}")
    if r == 1:
        bd = (d,)
        inter = ()
    else:
        bd = tuple(delta(c.branch_curve(i)) for i in range(r))
        inter = tuple((i, j, intersection_multiplicity(c, i, j)) for i, j in itertools.combinations(range(r), 2))
    return CurveInvariants(
        delta=d,
        milnor=2 * d - r + 1,
        r=r,
        mult=mult,
        branch_mults=bm,
        edim=embedding_dimension(c),
        mu_vec=relative_milnor_vector(c),
        conductor=a.gamma,
        gorenstein=is_gorenstein(c),
        local_type=classify_local_type(c),
        certified=a.certified,
        branch_deltas=bd,
        intersections=inter,
    )


# ---------------------------------------------------------------- elements


def _ordered_values(bound: int, p: int | None):
    vals = [0]
    for k in range(1, bound + 1):
        vals += [k, -k]
    if p is not None:
        seen, out = set(), []
        for v in vals:
            if v % p not in seen:
                seen.add(v % p)
                out.append(v)
        vals = out
    return vals


def superficial_element(c: CurveSpec, max_norm: int | None = None) -> PolyExpr:
    """Linear combination of the generators with minimal order on every branch."""
    e = branch_multiplicities(c)
    p = c.field.p
    if max_norm is None:
        max_norm = max(3, c.r * max(1, max(_max_orders(c))))
        if p is not None:
            max_norm = min(max_norm, (p - 1) // 2)
    vals = _ordered_values(max_norm, p)
    for norm in range(1, max_norm + 1):
        for coeffs in itertools.product(vals, repeat=c.m):
            if max(abs(x) for x in coeffs) != norm:
                continue
            poly = PolyExpr.linear(c.field, coeffs)
            image = poly_evaluate(poly, c.generators)
            ords = [s.terms[0][0] if s.terms else None for s in image.components]
            if all(o == ei for o, ei in zip(ords, e)):
                return poly
    raise NoSuperficialFound(f"no combination with coefficients up to {max_norm} reaches orders {e}")


def length_of(c: CurveSpec, g: PolyExpr):
    """Sum of branch orders of g, or None when g is a zero divisor."""
    image = poly_evaluate(g, c.generators)
    total = 0
    for s in image.components:
        o = s.order()
        if o.is_exact_zero:
            return None
        if o.is_unknown:
            raise PrecisionExhausted(f"order unknown beyond t^{o.value}")
        total += int(o.value)
    return total


def value_of(c: CurveSpec, g: PolyExpr):
    """Order vector of g (``None`` entries for exactly zero components)."""
    image = poly_evaluate(g, c.generators)
    out = []
    for s in image.components:
        o = s.order()
        if o.is_unknown:
            raise PrecisionExhausted(f"order unknown beyond t^{o.value}")
        out.append(None if o.is_exact_zero else int(o.value))
    return tuple(out)


def noether_check(c: CurveSpec, g: PolyExpr, h: PolyExpr) -> str:
    vg, vh = value_of(c, g), value_of(c, h)
    if None in vg or None in vh:
        raise NotNZD("both elements must be non-zero-divisors")
    mu_vec = relative_milnor_vector(c)
    if all(b >= a + m for a, b, m in zip(vg, vh, mu_vec)):
        return "MembershipInNormalization"
    if sum(vh) == sum(vg) + milnor_number(c) - c.r:
        return "LengthObstruction"
    return "Neither"


# ---------------------------------------------------------------- blow-ups


@dataclass(frozen=True)
class BlowupStep:
    components: tuple  # local pieces of the first neighbourhood
    rho: int
    mult_before: int
    delta_before: int
    delta_after: int
    superficial: PolyExpr

    @property
    def curve(self) -> CurveSpec:
        if len(self.components) != 1:
            raise NotLocalChain(f"first neighbourhood has {len(self.components)} local pieces")
        return self.components[0]


def _poly_name(c: CurveSpec, poly: PolyExpr) -> str:
    parts = []
    for exps, v in poly.terms:
        j = exps.index(1)
        name = c.generator_names[j]
        if v == 1:
            parts.append(name)
        else:
            parts.append(f"{v}*{name}")
    return "+".join(parts)


def first_neighbourhood(c: CurveSpec, quotient_precision: int = 64) -> tuple:
    """Local pieces of R[g/x] and the superficial x used."""
    x = superficial_element(c)
    X = poly_evaluate(x, c.generators)
    xname = _poly_name(c, x)
    f = c.field
    quotients = []
    for j, g in enumerate(c.generators):
        comps = []
        for i in range(c.r):
            comps.append(series_divide(g.components[i], X.components[i], precision=quotient_precision))
        quotients.append(comps)
    const = []
    for i in range(c.r):
        key = []
        for j in range(c.m):
            q = quotients[j][i]
            if q.precision is not None and q.precision < 1:
                raise PrecisionExhausted("quotient precision exhausted")
            key.append(q.coeff(0))
        const.append(tuple(key))
    groups: dict = {}
    for i, key in enumerate(const):
        groups.setdefault(key, []).append(i)
    pieces = []
    for key, idx in sorted(groups.items(), key=lambda kv: kv[1][0]):
        names = [xname]
        gens = [X.restrict(idx)]
        for j in range(c.m):
            comps = [quotients[j][i] - TruncatedSeries.constant(f, key[j]) for i in idx]
            if all(s.is_exact and not s.terms for s in comps):
                continue
            names.append(f"{c.generator_names[j]}/({xname})")
            gens.append(BranchElement(comps))
        pieces.append(CurveSpec(f, tuple(names), tuple(gens), tuple(c.branch_names[i] for i in idx)))
    return tuple(pieces), x


def blowup(c: CurveSpec, quotient_precision: int | None = None) -> BlowupStep:
    P = quotient_precision or 64
    cap = precision_cap()
    while True:
        try:
            pieces, x = first_neighbourhood(c, P)
            after = sum(delta(pc) for pc in pieces)
            break
        except PrecisionExhausted:
            if c.is_exact and P < cap:
                P = min(2 * P, cap)
                continue
            raise
    before = delta(c)
    rho = before - after
    if rho < 0:
        raise InvariantViolation(f"negative reduction number {rho}")
    return BlowupStep(pieces, rho, multiplicity(c), before, after, x)


def blowup_chain(c: CurveSpec, max_steps: int | None = None) -> list:
    """Successive first neighbourhoods of a one-branch curve until regular."""
    if c.r != 1:
        raise NotLocalChain(f"blow-up chain needs one branch, got {c.r}")
    P = 64
    cap = precision_cap()
    while True:
        try:
            steps = []
            cur = c
            while delta(cur) > 0 and (max_steps is None or len(steps) < max_steps):
                step = blowup(cur, P)
                steps.append(step)
                cur = step.curve
            return steps
        except PrecisionExhausted:
            if P >= cap:
                raise
            P = min(2 * P, cap)


def multiplicity_sequence(c: CurveSpec) -> list:
    return [s.mult_before for s in blowup_chain(c)]


def rho_sequence(c: CurveSpec) -> list:
    return [s.rho for s in blowup_chain(c)]


def has_finite_cm_type(c: CurveSpec) -> bool:
    return multiplicity(c) <= 3 and drozd_roiter_cyclicity(c) <= 1


# ---------------------------------------------------------------- colengths


def _mul_vectors(model: AlgebraModel, u, w) -> list:
    out = [0] * model.ncols
    for i, T in enumerate(model.T):
        off = model.offsets[i]
        wt = [(e, w[off + e]) for e in range(T) if w[off + e]]
        for a in range(T):
            ua = u[off + a]
            if not ua:
                continue
            for e, c in wt:
                if a + e >= T:
                    break
                out[off + a + e] += ua * c
    if model.p is not None:
        out = [x % model.p for x in out]
    return out


def _vector_orders(model: AlgebraModel, w) -> tuple:
    out = []
    for i, T in enumerate(model.T):
        off = model.offsets[i]
        out.append(next((e for e in range(T) if w[off + e]), None))
    return tuple(out)


def colength_of_vector(c: CurveSpec, w, model: AlgebraModel) -> int:
    """dim_k R/wR for the element with coordinates w in *model*.

    The model must satisfy T_i >= gamma_i + ord_i(w), so that t^T lies in wR.
    """
    ech = make_echelon(model.ncols, model.p)
    for b in model.images:
        prod = _mul_vectors(model, b, w)
        if any(prod):
            ech.insert(prod)
    return model.dim - ech.rank


def colength(c: CurveSpec, g: PolyExpr) -> int:
    """Ring-theoretic length of R/gR, computed without reading off orders."""
    vals = value_of(c, g)
    if None in vals:
        raise NotNZD("colength of a zero divisor is infinite")
    a = analyse(c)
    T = tuple(max(t, gm + v + 1) for t, gm, v in zip(a.model.T, a.gamma, vals))
    model = AlgebraModel(c, T)
    image = poly_evaluate(g, c.generators)
    w = []
    for i, s in enumerate(image.components):
        w.extend(s.dense(T[i]) if s.precision is None or s.precision >= T[i] else s.dense(s.precision))
    return colength_of_vector(c, integral(w, model.p), model)


def witness_vector(c: CurveSpec, v, model: AlgebraModel | None = None):
    """Coordinates of an element of R whose order vector is exactly v, or None."""
    if model is None:
        model = analyse(c).model
    rows = model.rows()
    forbidden = [model.pos(i, e) for i in range(c.r) for e in range(min(v[i], model.T[i]))]
    wrows, order = _w_basis(rows, forbidden, model.ncols, model.p)
    inverse = [0] * model.ncols
    for idx, col in enumerate(order):
        inverse[col] = idx
    basis = [[row[inverse[k]] for k in range(model.ncols)] for row in wrows]
    targets = [model.pos(i, v[i]) for i in range(c.r)]
    if not basis:
        return None
    p = model.p

    def combine(coeffs):
        w = [0] * model.ncols
        for cf, row in zip(coeffs, basis):
            if cf:
                for k, x in enumerate(row):
                    if x:
                        w[k] += cf * x
        return [x % p for x in w] if p is not None else w

    # each target coordinate of sum s^k row_k is a nonzero polynomial in s of
    # degree < len(basis), so r*len(basis)+1 distinct values of s suffice over Q
    n = len(basis)
    limit = c.r * n + 1 if p is None else min(p - 1, c.r * n + 1)
    for s in range(1, limit + 1):
        w = combine([s ** k if p is None else pow(s, k, p) for k in range(n)])
        if all(w[t] for t in targets):
            return w
    if p is not None:
        # small fields: combinations of at most r rows with arbitrary units
        for size in range(1, min(c.r, n) + 1):
            for idx in itertools.combinations(range(n), size):
                for units in itertools.product(range(1, p), repeat=size):
                    coeffs = [0] * n
                    for k, u in zip(idx, units):
                        coeffs[k] = u
                    w = combine(coeffs)
                    if all(w[t] for t in targets):
                        return w
    return None


def intersection_colength(c: CurveSpec, i: int, j: int) -> int:
    """dim_k R/(p_i + p_j) for the pair subcurve, from projection ranks."""
    pair = c.subcurve(sorted((i, j)))
    model = analyse(pair).model
    ranks = []
    for b in range(2):
        lo, hi = model.offsets[b], model.offsets[b] + model.T[b]
        ech = make_echelon(hi - lo, model.p)
        for row in model.rows():
            pr = row[lo:hi]
            if any(pr):
                ech.insert(pr)
        ranks.append(ech.rank)
    return ranks[0] + ranks[1] - model.dim
