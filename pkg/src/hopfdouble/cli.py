"""Batch command-line interface.

Subcommands: verify, pairing, double, classify, extend, table1, export,
import.  Every run emits a JSON report whose payload is deterministic
for identical arguments (the timestamp lives outside the payload).
Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage
or input error.
"""

import argparse
import csv
import datetime
import json
import os
import sys

try:
    from gmpy2 import mpq
except ImportError:  # pragma: no cover
    from fractions import Fraction as mpq

from .cyclotomic import CycloNum, root_of_unity
from . import catalog, serialize
from .pairing import catalog_pairing
from .double import build_double, matches_paper_presentation
from .modalg import classify_actions, extend_to_double, verify_action, is_inner_faithful

USAGE_ERROR = 2
CHECK_FAILED = 1


def worker_count():
    """Internal parallelism cap from HOPFDOUBLE_THREADS (default 1)."""
    try:
        return max(1, int(os.environ.get("HOPFDOUBLE_THREADS", "1")))
    except ValueError:
        return 1


class UsageError(Exception):
    pass


def _algebra(algebra_id):
    try:
        return catalog.algebra_from_id(algebra_id)
    except (ValueError, KeyError) as exc:
        raise UsageError(str(exc))


def _report(command, payload, passed):
    return {
        "command": command,
        "timestamp": datetime.datetime.now(datetime.timezone.utc).isoformat(),
        "payload": payload,
        "passed": passed,
    }


def _emit(report, args):
    text = json.dumps(report, indent=2, sort_keys=True)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if getattr(args, "pretty", False):
        _pretty_print(report)
    else:
        print(text)
    return 0 if report["passed"] else CHECK_FAILED


def _pretty_print(report):
    print("# %s  [%s]" % (" ".join(report["command"]), "PASS" if report["passed"] else "FAIL"))
    payload = report["payload"]
    if "rows" in payload:
        cols = ["algebra", "actions", "extensions", "parameters", "expected", "match"]
        widths = {c: len(c) for c in cols}
        rows = payload["rows"]
        for row in rows:
            for c in cols:
                widths[c] = max(widths[c], len(str(row.get(c, ""))))
        line = "  ".join(c.ljust(widths[c]) for c in cols)
        print(line)
        print("-" * len(line))
        for row in rows:
            print("  ".join(str(row.get(c, "")).ljust(widths[c]) for c in cols))
        return
    if "families" in payload:
        print("families: %d" % payload["family_count"])
        for i, fam in enumerate(payload["families"]):
            bits = []
            for gen in sorted(fam["shifts"]):
                e = fam["shifts"][gen]
                target = "1" if e == 0 else ("u" if e == 1 else "u^%d" % e)
                if gen in fam["values"]:
                    coeff = _scalar_text(fam["values"][gen])
                    bits.append("%s.u = (%s)%s" % (gen, coeff, target))
                elif gen in fam["symbolic"]:
                    bits.append("%s.u = (%s)%s" % (gen, fam["symbolic"][gen], target))
                else:
                    flag = " != 0" if any(
                        f["name"] == gen and f["nonzero"] for f in fam["free"]
                    ) else ""
                    bits.append("%s.u = %s %s%s" % (gen, gen, target, flag))
            print("  [%d] %s" % (i + 1, ",  ".join(bits)))
            for con in fam["constraints"]:
                print("      constraint: %s = 0" % con["text"])
            print("      free parameters: %d" % fam["parameter_dimension"])
        for cert in payload.get("certificates", []):
            print("  contradiction: %s = 0 under %s" % (
                cert["equation"], cert["assumptions"]["assigned"]))
        return
    if "items" in payload:
        for item in payload["items"]:
            print("  [%s] %s %s" % ("ok" if item["passed"] else "FAIL",
                                    item["check"], item.get("detail", "")))
        return
    print(json.dumps(payload, indent=2, sort_keys=True))


def _scalar_text(data):
    z = "z%d" % data["conductor"]
    parts = []
    for i, c in enumerate(data["coeffs"]):
        if c in ("0", 0):
            continue
        if i == 0:
            parts.append(str(c))
        else:
            var = z if i == 1 else "%s^%d" % (z, i)
            parts.append(var if c in ("1", 1) else "%s*%s" % (c, var))
    return (" + ".join(parts) if parts else "0").replace("+ -", "- ")


def _parse_scalar(text, conductor):
    """Rational or comma-separated power-basis coefficients."""
    parts = text.split(",")
    try:
        coeffs = [mpq(p.strip()) for p in parts]
    except (ValueError, ZeroDivisionError):
        raise UsageError("cannot parse scalar %r" % text)
    z = root_of_unity(conductor, 1)
    total = CycloNum.zero(conductor)
    power = CycloNum.one(conductor)
    for c in coeffs:
        total = total + CycloNum.rational(c, conductor) * power
        power = power * z
    return total


def cmd_verify(args):
    A = _algebra(args.algebra)
    rep = A.verify_hopf_axioms(seed=args.seed)
    payload = {"algebra": args.algebra, "name": A.name, "dimension": A.dimension,
               "items": rep.items}
    return _emit(_report(["verify", args.algebra], payload, rep.passed), args)


def _pairing_for(left_id, right_id):
    if left_id != right_id + ":dual":
        raise UsageError(
            "pairing expects --left to be --right with the :dual suffix "
            "(catalog pairings only)"
        )
    A = _algebra(right_id)
    dual = _algebra(left_id)
    return catalog_pairing(A, dual)


def cmd_pairing(args):
    P = _pairing_for(args.left, args.right)
    payload = {"left": args.left, "right": args.right}
    passed = True
    if args.check_axioms:
        rep = P.verify_duality_axioms()
        payload["items"] = rep.items
        passed = passed and rep.passed
    if args.check_perfect:
        det = P.gram_determinant()
        perfect = P.is_perfect()
        payload["gram_determinant"] = det.to_json()
        payload["perfect"] = perfect
        passed = passed and perfect
    return _emit(_report(["pairing", args.left, args.right], payload, passed), args)


def cmd_double(args):
    H = _algebra(args.algebra)
    dual = catalog.dual_of(H)
    P = catalog_pairing(H, dual)
    result = build_double(H, dual, P)
    payload = {
        "algebra": args.algebra,
        "double": result.double.name,
        "dimension": result.double.dimension,
        "cross_relations": {
            "%s*%s" % key: result.double.format_element(el.terms)
            for key, el in sorted(result.cross.items())
        },
    }
    passed = True
    if args.check_paper:
        fixture = catalog.double_fixture(H)
        rep = matches_paper_presentation(result, fixture)
        payload["items"] = rep.items
        passed = rep.passed
    if args.emit_presentation:
        with open(args.emit_presentation, "w") as fh:
            json.dump(serialize.export_presentation(result.double), fh, indent=2, sort_keys=True)
            fh.write("\n")
        payload["emitted"] = args.emit_presentation
    return _emit(_report(["double", args.algebra], payload, passed), args)


def cmd_classify(args):
    H = _algebra(args.algebra)
    rep = classify_actions(H)
    payload = rep.to_json()
    payload["algebra"] = args.algebra
    return _emit(_report(["classify", args.algebra], payload, True), args)


def _default_gamma(A):
    # a scalar satisfying the classification constraint, where one exists
    fam = A.params.get("family")
    if fam == "t421":
        # gamma^2 = 2*zeta has the cyclotomic solution 1+i (resp. 1-i)
        z = CycloNum.from_json(A.params["root"])
        return CycloNum.one(A.conductor) + z
    return CycloNum.one(A.conductor)


def cmd_extend(args):
    H = _algebra(args.algebra)
    crep = classify_actions(H)
    if not crep.families:
        payload = crep.to_json()
        payload["algebra"] = args.algebra
        payload["note"] = "no inner-faithful actions exist; nothing to extend"
        return _emit(_report(["extend", args.algebra], payload, False), args)
    family = crep.families[0]
    gamma = _parse_scalar(args.gamma, H.conductor) if args.gamma else _default_gamma(H)
    primary = "F" if "F" in family.free else sorted(family.free)[-1] if family.free else None
    try:
        values = family.solve_free({primary: gamma} if primary else {})
        act = family.instantiate(values)
    except ValueError as exc:
        raise UsageError(str(exc))
    dual = catalog.dual_of(H)
    P = catalog_pairing(H, dual)
    result = build_double(H, dual, P)
    erep = extend_to_double(H, act, result)
    payload = erep.to_json()
    payload["algebra"] = args.algebra
    payload["gamma"] = gamma.to_json()
    return _emit(_report(["extend", args.algebra], payload, True), args)


TABLE1_ROWS = [
    ("T_3(q)", "taft:3:1", 1, 0),
    ("T_5(q)", "taft:5:1", 1, 0),
    ("T_2(-1)", "taft:2:1", 1, 1),
    ("H_12(z,4,2)", "hnzmt:12:1:4:2", 2, 0),
    ("H_4(i,2,1)", "hnzmt:4:1:2:1", 1, 1),
    ("T(4,2,1)", "t421:1", 0, 0),
    ("u_q(sl2), n=3", "uq:3:1", 2, 0),
]


def table1_row(label, algebra_id, expect_count, expect_params):
    H = _algebra(algebra_id)
    dual = catalog.dual_of(H)
    P = catalog_pairing(H, dual)
    perfect = P.is_perfect()
    result = build_double(H, dual, P)
    fixture = catalog.double_fixture(H)
    match_paper = matches_paper_presentation(result, fixture).passed
    crep = classify_actions(H)
    family = crep.families[0]
    gamma = _default_gamma(H)
    primary = "F" if "F" in family.free else sorted(family.free)[-1]
    values = family.solve_free({primary: gamma})
    act = family.instantiate(values)
    faithful = is_inner_faithful(act)[0] and verify_action(act).passed
    erep = extend_to_double(H, act, result)
    params = max([f.parameter_dimension for f in erep.families], default=0)
    got = (erep.count, params)
    return {
        "algebra": label,
        "id": algebra_id,
        "dimension": H.dimension,
        "pairing_perfect": perfect,
        "double_matches_paper": match_paper,
        "actions": "%d family(ies), %d parameter(s)" % (
            crep.count, max(f.parameter_dimension for f in crep.families)
        ),
        "base_action_valid": faithful,
        "extensions": erep.count,
        "parameters": params,
        "expected": "%d/%d" % (expect_count, expect_params),
        "match": got == (expect_count, expect_params),
        "families": [f.to_json() for f in erep.families],
        "certificates": erep.certificates if not erep.families else [],
    }


def cmd_table1(args):
    rows = []
    jobs = TABLE1_ROWS
    threads = worker_count()
    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(lambda job: table1_row(*job), jobs))
    else:
        rows = [table1_row(*job) for job in jobs]
    passed = all(
        r["match"] and r["pairing_perfect"] and r["double_matches_paper"]
        and r["base_action_valid"] for r in rows
    )
    payload = {"rows": rows}
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["algebra", "id", "dimension", "actions",
                             "extensions", "parameters", "expected", "match"])
            for r in rows:
                writer.writerow([r["algebra"], r["id"], r["dimension"], r["actions"],
                                 r["extensions"], r["parameters"], r["expected"], r["match"]])
        payload["csv"] = args.csv
    if args.figure:
        _render_table_figure(rows, args.figure)
        payload["figure"] = args.figure
    return _emit(_report(["table1"], payload, passed), args)


def _render_table_figure(rows, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    cols = ["algebra", "dimension", "extensions", "parameters", "expected", "match"]
    cells = [[str(r[c]) for c in cols] for r in rows]
    fig, ax = plt.subplots(figsize=(8.5, 0.5 + 0.4 * len(rows)))
    ax.axis("off")
    table = ax.table(cellText=cells, colLabels=cols, loc="center", cellLoc="center")
    table.auto_set_font_size(False)
    table.set_fontsize(9)
    table.scale(1, 1.4)
    ax.set_title("Extension counts of module-algebra actions to the double")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def cmd_export(args):
    A = _algebra(args.algebra)
    data = serialize.export_presentation(A)
    with open(args.out, "w") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")
    payload = {"algebra": args.algebra, "out": args.out, "dimension": A.dimension}
    args.out = None  # the report goes to stdout; --out holds the presentation
    return _emit(_report(["export", args.algebra], payload, True), args)


def cmd_import(args):
    try:
        with open(args.infile) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError("cannot read %s: %s" % (args.infile, exc))
    try:
        A = serialize.import_presentation(data)
    except serialize.SchemaError as exc:
        raise UsageError("schema violation at %s" % exc)
    payload = {"infile": args.infile, "name": A.name, "dimension": A.dimension,
               "generators": A.names}
    passed = True
    if args.verify:
        rep = A.verify_hopf_axioms()
        payload["items"] = rep.items
        passed = rep.passed
    return _emit(_report(["import", args.infile], payload, passed), args)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hopfdouble",
        description="Exact computations with pointed Hopf algebras, their "
                    "Drinfel'd doubles, and module-algebra actions.",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--out", help="write the JSON report to a file")
        p.add_argument("--pretty", action="store_true", help="render a human table")

    p = sub.add_parser("verify", help="run the Hopf-axiom suite on an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--seed", type=int, default=0,
                   help="seed for the sampled associativity triples")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pairing", help="check a catalog dual pairing")
    p.add_argument("--left", required=True, help="dual-side algebra id (…:dual)")
    p.add_argument("--right", required=True, help="primal algebra id")
    p.add_argument("--check-axioms", action="store_true")
    p.add_argument("--check-perfect", action="store_true")
    common(p)
    p.set_defaults(func=cmd_pairing)

    p = sub.add_parser("double", help="build the Drinfel'd double")
    p.add_argument("--algebra", required=True)
    p.add_argument("--emit-presentation", metavar="FILE")
    p.add_argument("--check-paper", action="store_true",
                   help="compare against the printed double presentation")
    common(p)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("classify", help="classify module-algebra actions")
    p.add_argument("--algebra", required=True)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("extend", help="extend an action to the double")
    p.add_argument("--algebra", required=True)
    p.add_argument("--gamma", help="scalar for the skew-primitive action "
                                   "(rational or comma-separated power-basis coefficients)")
    common(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("table1", help="reproduce the summary table end to end")
    p.add_argument("--csv", metavar="FILE", help="also write a delimited summary")
    p.add_argument("--figure", metavar="FILE", help="also render the table to an image")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("export", help="write a presentation JSON file")
    p.add_argument("--algebra", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("import", help="read and optionally verify a presentation")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--verify", action="store_true")
    common(p)
    p.set_defaults(func=cmd_import)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        # unsupported catalog combinations surface as input errors
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
