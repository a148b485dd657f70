"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 precision cap reached without a
certified conductor, 4 internal invariant violation or failed verification.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from . import ade, engine, verify
from .curve import CurveSpec
from .errors import CurveMilnorError, InvariantViolation, PrecisionExhausted, ValidationError
from .series import FieldSpec

EXIT_OK, EXIT_INPUT, EXIT_PRECISION, EXIT_INTERNAL = 0, 2, 3, 4


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ": "), indent=2)


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc


def _load(path: str, truncation: int | None) -> CurveSpec:
    c = engine.load_curve(_read(path))
    if truncation is not None:
        c = dataclasses.replace(c, truncation_hint=truncation)
    return c


def build_report(c: CurveSpec) -> dict:
    inv = engine.invariants(c)
    gam = engine.gamma_semigroup(c)
    nu = engine.value_semigroup(c)
    cls = ade.classify(c)
    diagnostics = [f"conductor certified at truncation {list(engine.analyse(c).model.T)}"]
    if inv.edim > 2 and c.r > 2:
        pred = sum(inv.branch_deltas) + sum(v for _, _, v in inv.intersections)
        if pred != inv.delta:
            diagnostics.append(
                f"non-plane curve: delta {inv.delta} differs from the pairwise expansion {pred}")
    if c.r >= 2 and sum(inv.mu_vec) != 2 * inv.delta:
        diagnostics.append(f"sum of relative Milnor numbers {sum(inv.mu_vec)} differs from 2*delta {2 * inv.delta}")
    fcm = ade.fcm_classification_check(c)
    if fcm["status"] == "VIOLATION":
        diagnostics.append("finite CM type (Drozd-Roiter conditions hold) but no ADE class")
    return {
        "ade": None if cls is None else str(cls),
        "diagnostics": diagnostics,
        "gamma": gam.to_json_obj(),
        "invariants": inv.to_json_obj(),
        "nu": nu.to_json_obj(),
    }


def gap_diagram(gam) -> str:
    """One character per integer up to the conductor: '#' member, '.' gap."""
    top = gam.conductor + max(gam.min_nonzero(), 1)
    row = "".join("#" if gam.contains(k) else "." for k in range(top))
    return f"{row}  (0..{top - 1}, conductor {gam.conductor})"


def _table(report: dict) -> str:
    inv = report["invariants"]
    lines = [
        f"delta            {inv['delta']}",
        f"milnor           {inv['milnor']}",
        f"branches         {inv['r']}",
        f"multiplicity     {inv['mult']}  (branches {inv['branch_mults']})",
        f"embedding dim    {inv['edim']}",
        f"mu vector        {inv['mu_vec']}",
        f"conductor        {inv['conductor']}",
        f"gorenstein       {str(inv['gorenstein']).lower()}",
        f"local type       {inv['local_type']}",
        f"ade              {report['ade'] or 'NotADE'}",
        f"gamma            {report['gamma']}",
    ]
    for i, j, v in inv["intersections"]:
        lines.append(f"i({i},{j})           {v}")
    lines += [f"note             {d}" for d in report["diagnostics"]]
    return "\n".join(lines)


def cmd_invariants(args) -> int:
    c = _load(args.file, args.truncation)
    report = build_report(c)
    print(dumps(report) if args.json else _table(report))
    return EXIT_OK


def cmd_semigroup(args) -> int:
    c = _load(args.file, args.truncation)
    if args.numerical:
        gam = engine.gamma_semigroup(c)
        if args.json:
            print(dumps(gam.to_json_obj()))
        else:
            print(gam.to_text())
            print(gap_diagram(gam))
    else:
        nu = engine.value_semigroup(c)
        if args.json:
            print(dumps(nu.to_json_obj()))
        else:
            print(f"r = {nu.r}, conductor = {list(nu.gamma)}")
            print("box members: " + " ".join("(" + ",".join(map(str, v)) + ")" for v in sorted(nu.box_members)))
    return EXIT_OK


def cmd_classify(args) -> int:
    c = _load(args.file, args.truncation)
    cls = ade.classify(c)
    name = "NotADE" if cls is None else str(cls)
    if args.json:
        nu = engine.value_semigroup(c)
        print(dumps({"ade": None if cls is None else name, "fingerprint": ade.fingerprint(nu)}))
    else:
        print(name)
    return EXIT_OK


def cmd_equisingular(args) -> int:
    a = _load(args.file_a, args.truncation)
    b = _load(args.file_b, args.truncation)
    same = ade.equisingular(a, b)
    print(dumps({"equisingular": same}) if args.json else str(same).lower())
    return EXIT_OK


def cmd_blowup_chain(args) -> int:
    c = _load(args.file, args.truncation)
    steps = engine.blowup_chain(c, args.max_steps)
    rows = [{"delta": s.delta_before, "delta_after": s.delta_after, "mult": s.mult_before, "rho": s.rho,
             "step": k + 1, "superficial": engine._poly_name(c if k == 0 else steps[k - 1].curve, s.superficial)}
            for k, s in enumerate(steps)]
    for row in rows:
        if row["delta"] != row["rho"] + row["delta_after"]:
            raise InvariantViolation(f"step {row['step']}: delta {row['delta']} != rho + next delta")
    if args.json:
        print(dumps({"multiplicities": [s.mult_before for s in steps], "rho": [s.rho for s in steps],
                     "steps": rows}))
    else:
        print("step  mult  delta  rho  superficial")
        for row in rows:
            print(f"{row['step']:>4}  {row['mult']:>4}  {row['delta']:>5}  {row['rho']:>3}  {row['superficial']}")
        print(f"multiplicities {[s.mult_before for s in steps]}, rho {[s.rho for s in steps]}")
    return EXIT_OK


def cmd_catalog(args) -> int:
    family = args.type.strip().upper()
    if len(family) > 1:
        cls = ade.ADEClass.parse(family)
    else:
        if args.param is None:
            raise ValidationError("--param is required with a bare family letter")
        cls = ade.ADEClass(family, args.param)
    try:
        field = FieldSpec.from_text(args.field)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc
    c = ade.catalog_curve(cls, field)
    print(dumps(c.to_document()))
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    results = verify.run(args.filter)
    sys.stdout.write(verify.render(results))
    return EXIT_INTERNAL if any(r.status == verify.FAIL for r in results) else EXIT_OK


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="curvemilnor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--truncation", type=_positive, metavar="N", help="initial model truncation")

    p = sub.add_parser("invariants", help="full invariant report")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("semigroup", help="value semigroup or its numerical image")
    p.add_argument("file")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--value", action="store_true", help="value semigroup in N^r (default)")
    kind.add_argument("--numerical", action="store_true", help="numerical semigroup of sums")
    common(p)
    p.set_defaults(func=cmd_semigroup)

    p = sub.add_parser("classify", help="ADE class or NotADE")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equisingular", help="compare value semigroups up to branch order")
    p.add_argument("file_a")
    p.add_argument("file_b")
    common(p)
    p.set_defaults(func=cmd_equisingular)

    p = sub.add_parser("blowup-chain", help="multiplicity and reduction sequence of one branch")
    p.add_argument("file")
    p.add_argument("--max-steps", type=_positive, metavar="N")
    common(p)
    p.set_defaults(func=cmd_blowup_chain)

    p = sub.add_parser("catalog", help="emit the document of an ADE normal form")
    p.add_argument("type", help="A, D or E (or a full name such as E7)")
    p.add_argument("--param", type=int, metavar="n")
    p.add_argument("--field", default="rational", help="rational or prime:p")
    p.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", help="run the reproduction suite")
    p.add_argument("--filter", metavar="NAME", help="substring of a group or check name")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PrecisionExhausted as exc:
        print(f"error: precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except InvariantViolation as exc:
        print(f"error: invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except CurveMilnorError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
