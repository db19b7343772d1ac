"""Command line front end.

Every subcommand is deterministic: identical argv and input files give
byte-identical output.  Results go to stdout, diagnostics to stderr.
Exit codes: 0 success or all checks passed, 1 a verification or
classification failed, 2 usage or input parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import (
    classify_surfaces,
    classify_threefolds,
    load_builtin_catalog,
    load_catalog,
    multidegree_of_verdict,
    rational_json,
    scan_exclusion,
)
from .congruence import (
    GenericityError,
    LinearCongruence,
    determinant_vanishes_identically,
    foci_check,
    load_congruence,
    order_check,
    pfaffian_polynomial,
    random_determinantal_congruence,
    random_linear_congruence,
    save_congruence,
)
from .formulas import (
    SurfaceInvariants,
    ThreefoldInvariants,
    apparent_triple_points,
    curve_foursecants,
    determinantal_invariants,
    four_secants_through_point,
    foursecant_constraint_residual,
    foursecant_scroll_degree,
    h_k_squared,
    k_cubed,
    linear_focal_degree,
    quadruple_points,
)
from .schubert import (
    Multidegree,
    linear_congruence_multidegree,
    plucker_degree,
    sigma1_power_closed,
    sigma1_power_iterative,
)


def _emit(args, text_lines, json_obj, tsv_lines=None):
    fmt = getattr(args, "format", "text")
    if fmt == "json":
        print(json.dumps(json_obj))
    elif fmt == "tsv":
        for line in tsv_lines if tsv_lines is not None else text_lines:
            print(line)
    else:
        for line in text_lines:
            print(line)


def _emit_rational(args, value):
    _emit(args, [str(value)], rational_json(value))


# ----- schubert -----


def _cmd_schubert_pow(args):
    if args.closed:
        result = sigma1_power_closed(args.n, args.l)
    else:
        result = sigma1_power_iterative(args.n, args.l)
    terms = result._sorted_terms()
    _emit(
        args,
        [str(result)],
        {
            "n": args.n,
            "l": args.l,
            "terms": [{"a": a, "b": b, "coeff": int(c)} for (a, b), c in terms],
        },
        ["%d\t%d\t%d" % (a, b, c) for (a, b), c in terms],
    )
    return 0


def _cmd_schubert_lincong(args):
    md = linear_congruence_multidegree(args.n)
    degree = plucker_degree(md)
    _emit(
        args,
        ["%s, degree %d" % (md, degree)],
        {"multidegree": list(md), "degree": degree},
        ["\t".join(str(a) for a in md) + "\t%d" % degree],
    )
    return 0


def _cmd_schubert_degree(args):
    parts = tuple(int(tok) for tok in args.multidegree.split(","))
    degree = plucker_degree(Multidegree(args.n, parts))
    _emit(args, [str(degree)], {"degree": degree})
    return 0


# ----- formulas -----


def _cmd_formulas_q(args):
    value = quadruple_points(
        ThreefoldInvariants(args.d, args.pi, args.chiS, args.chiX)
    )
    _emit_rational(args, value)
    return 0


def _cmd_formulas_h(args):
    _emit_rational(args, four_secants_through_point(args.d, args.pi, args.chi))
    return 0


def _cmd_formulas_a1(args):
    _emit_rational(args, foursecant_scroll_degree(args.d, args.pi, args.chi))
    return 0


def _cmd_formulas_a2(args):
    _emit_rational(args, curve_foursecants(args.d, args.pi))
    return 0


def _cmd_formulas_residual(args):
    _emit_rational(args, foursecant_constraint_residual(args.d, args.pi, args.chi))
    return 0


def _cmd_formulas_triple(args):
    value = apparent_triple_points(
        SurfaceInvariants(args.d, args.pi, args.chi, args.k2)
    )
    _emit_rational(args, value)
    return 0


def _cmd_formulas_double(args):
    t = ThreefoldInvariants(args.d, args.pi, args.chiS, args.chiX)
    k3, hk2 = k_cubed(t), h_k_squared(t)
    _emit(
        args,
        ["K3 = %d" % k3, "HK2 = %d" % hk2],
        {"K3": k3, "HK2": hk2},
        ["K3\t%d" % k3, "HK2\t%d" % hk2],
    )
    return 0


def _cmd_formulas_focal_degree(args):
    if args.kind == "linear":
        degree = linear_focal_degree(args.n)
        _emit(args, [str(degree)], {"degree": degree})
    else:
        inv = determinantal_invariants(args.n)
        _emit(
            args,
            [
                "degree = %d" % inv.degree,
                "genus = %d" % inv.sectional_genus,
                "dim = %d" % inv.dim,
            ],
            {"degree": inv.degree, "genus": inv.sectional_genus, "dim": inv.dim},
            [
                "degree\t%d" % inv.degree,
                "genus\t%d" % inv.sectional_genus,
                "dim\t%d" % inv.dim,
            ],
        )
    return 0


# ----- constructions and verification -----


def _cmd_construct(args):
    if args.kind == "linear":
        c = random_linear_congruence(args.n, args.seed, args.bound)
    else:
        c = random_determinantal_congruence(args.n, args.seed, args.bound)
    text = save_congruence(c)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _load_input(path):
    with open(path, "r", encoding="utf-8") as handle:
        return load_congruence(handle.read())


def _cmd_verify_order(args):
    c = _load_input(args.infile)
    rep = order_check(c, args.trials, args.seed, args.bound)
    verdict = "pass" if rep.passed else "fail"
    text = [
        "trials = %d" % rep.trials,
        "successes = %d" % rep.successes,
        "focal skips = %d" % rep.focal_skips,
        "unique lines = %d" % rep.unique_lines,
    ]
    text += ["failure: %s" % f for f in rep.failures]
    text.append("result = %s" % verdict)
    _emit(
        args,
        text,
        {
            "trials": rep.trials,
            "successes": rep.successes,
            "focal_skips": rep.focal_skips,
            "unique_lines": rep.unique_lines,
            "failures": list(rep.failures),
            "pass": rep.passed,
        },
        [
            "trials\t%d" % rep.trials,
            "successes\t%d" % rep.successes,
            "focal_skips\t%d" % rep.focal_skips,
            "unique_lines\t%d" % rep.unique_lines,
            "pass\t%s" % verdict,
        ],
    )
    return 0 if rep.passed else 1


def _cmd_verify_foci(args):
    c = _load_input(args.infile)
    trials = foci_check(c, args.trials, args.seed, args.bound)
    ok = all(t.ok for t in trials)
    text = []
    tsv = []
    for i, t in enumerate(trials):
        if t.focal_probe:
            text.append("trial %d: focal probe skipped" % i)
            tsv.append("%d\tfocal\t" % i)
        else:
            state = "ok" if t.ok else "MISMATCH"
            text.append(
                "trial %d: gcd degree %d (expected %d) %s"
                % (i, t.gcd_degree, t.expected, state)
            )
            tsv.append("%d\t%d\t%s" % (i, t.gcd_degree, state))
    text.append("result = %s" % ("pass" if ok else "fail"))
    _emit(
        args,
        text,
        {
            "expected": c.n - 1,
            "trials": [
                {
                    "point": list(t.point),
                    "focal_probe": t.focal_probe,
                    "gcd_degree": t.gcd_degree,
                    "ok": t.ok,
                }
                for t in trials
            ],
            "pass": ok,
        },
        tsv,
    )
    return 0 if ok else 1


def _cmd_pfaffian(args):
    c = _load_input(args.infile)
    if not isinstance(c, LinearCongruence):
        raise ValueError("pfaffian needs a linear congruence file")
    if c.n % 2 == 0:
        vanishes = determinant_vanishes_identically(c)
        _emit(
            args,
            [
                "n even: no pfaffian; determinant vanishes identically = %s"
                % ("true" if vanishes else "false")
            ],
            {"even_n": True, "determinant_vanishes": vanishes},
            ["determinant_vanishes\t%s" % ("true" if vanishes else "false")],
        )
        return 0 if vanishes else 1
    pf = pfaffian_polynomial(c)
    names = ["l%d" % (i + 1) for i in range(c.n - 1)]
    rendered = pf.render(names)
    degree = pf.total_degree()
    _emit(
        args,
        ["pf = %s" % rendered, "degree = %d" % degree],
        {"pf": rendered, "degree": degree},
        ["pf\t%s" % rendered, "degree\t%d" % degree],
    )
    return 0


# ----- catalog -----


def _cmd_classify(args):
    if args.catalog == "builtin":
        records = load_builtin_catalog()
    else:
        records = load_catalog(args.catalog)
    entries = []
    threefold_names = set()
    if args.dim in (None, 3):
        selected = [r for r in records if r.dim == 3 and r.n == 5]
        report = classify_threefolds(selected, args.multiplicity)
        entries.extend(report.entries)
        threefold_names = {e.name for e in report.entries}
    if args.dim in (None, 2):
        selected = [r for r in records if r.dim == 2 and r.n == 4]
        entries.extend(classify_surfaces(selected).entries)
    all_pass = all(e.passed for e in entries)
    text = []
    tsv = []
    for e in entries:
        failed = [k for k, v in e.verdicts.items() if not v]
        if e.passed and e.name in threefold_names:
            md = multidegree_of_verdict(e)
            text.append(
                "%s: pass multidegree (%s)" % (e.name, ",".join(str(a) for a in md))
            )
        elif e.passed:
            text.append("%s: pass" % e.name)
        else:
            text.append("%s: fail [%s]" % (e.name, ", ".join(failed)))
        tsv.append("%s\t%s\t%s" % (e.name, "pass" if e.passed else "fail", ",".join(failed)))
    text.append("result = %s" % ("pass" if all_pass else "fail"))
    _emit(args, text, [e.jsonable() for e in entries], tsv)
    return 0 if all_pass else 1


def _cmd_scan(args):
    survivors = scan_exclusion(
        args.d, (0, args.pi_max), (-args.chi_max, args.chi_max)
    )
    _emit(
        args,
        [str(s) for s in survivors],
        [{"pi": pi, "chi_S": cs, "chi_X": cx} for pi, cs, cx in survivors],
        ["%d\t%d\t%d" % s for s in survivors],
    )
    return 0


# ----- parser -----


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("text", "json", "tsv"), default="text",
        help="output format (default text)",
    )

    parser = argparse.ArgumentParser(
        prog="quadpoint",
        description="Exact enumerative checks for first-order line congruences",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sch = sub.add_parser("schubert", help="Schubert cycle computations on G(1,n)")
    sch = p_sch.add_subparsers(dest="subcommand", required=True)
    p_pow = sch.add_parser("pow", parents=[fmt], help="expand sigma_1^l")
    p_pow.add_argument("--n", type=int, required=True)
    p_pow.add_argument("--l", type=int, required=True)
    route = p_pow.add_mutually_exclusive_group()
    route.add_argument(
        "--closed", action="store_true",
        help="use the closed form (needs 1 <= l <= n-1)",
    )
    route.add_argument(
        "--iterative", action="store_true", help="iterate the Pieri rule (default)"
    )
    p_pow.set_defaults(handler=_cmd_schubert_pow)
    p_lin = sch.add_parser(
        "lincong", parents=[fmt], help="multidegree of the general linear congruence"
    )
    p_lin.add_argument("--n", type=int, required=True)
    p_lin.set_defaults(handler=_cmd_schubert_lincong)
    p_deg = sch.add_parser(
        "degree", parents=[fmt], help="Plucker degree of a multidegree"
    )
    p_deg.add_argument("--n", type=int, required=True)
    p_deg.add_argument(
        "--multidegree", required=True, help="comma separated, e.g. 1,3,2"
    )
    p_deg.set_defaults(handler=_cmd_schubert_degree)

    p_for = sub.add_parser("formulas", help="closed-form enumerative counts")
    fsub = p_for.add_subparsers(dest="subcommand", required=True)

    p_q = fsub.add_parser("q", parents=[fmt], help="apparent quadruple points")
    for flag in ("--d", "--pi", "--chiS", "--chiX"):
        p_q.add_argument(flag, type=int, required=True)
    p_q.set_defaults(handler=_cmd_formulas_q)

    p_h = fsub.add_parser("h", parents=[fmt], help="4-secants through a point")
    for flag in ("--d", "--pi", "--chi"):
        p_h.add_argument(flag, type=int, required=True)
    p_h.set_defaults(handler=_cmd_formulas_h)

    p_a1 = fsub.add_parser("a1", parents=[fmt], help="4-secant hypersurface degree")
    for flag in ("--d", "--pi", "--chi"):
        p_a1.add_argument(flag, type=int, required=True)
    p_a1.set_defaults(handler=_cmd_formulas_a1)

    p_a2 = fsub.add_parser("a2", parents=[fmt], help="4-secants of a space curve")
    for flag in ("--d", "--pi"):
        p_a2.add_argument(flag, type=int, required=True)
    p_a2.set_defaults(handler=_cmd_formulas_a2)

    p_res = fsub.add_parser(
        "residual", parents=[fmt], help="4-secant constraint residual"
    )
    for flag in ("--d", "--pi", "--chi"):
        p_res.add_argument(flag, type=int, required=True)
    p_res.set_defaults(handler=_cmd_formulas_residual)

    p_tri = fsub.add_parser("triple", parents=[fmt], help="apparent triple points")
    for flag in ("--d", "--pi", "--chi"):
        p_tri.add_argument(flag, type=int, required=True)
    p_tri.add_argument("--K2", dest="k2", type=int, required=True)
    p_tri.set_defaults(handler=_cmd_formulas_triple)

    p_dbl = fsub.add_parser(
        "double", parents=[fmt], help="K^3 and H.K^2 from the double point formulas"
    )
    for flag in ("--d", "--pi", "--chiS", "--chiX"):
        p_dbl.add_argument(flag, type=int, required=True)
    p_dbl.set_defaults(handler=_cmd_formulas_double)

    p_foc = fsub.add_parser(
        "focal-degree", parents=[fmt], help="focal locus degree closed forms"
    )
    p_foc.add_argument(
        "--kind", choices=("linear", "determinantal"), required=True
    )
    p_foc.add_argument("--n", type=int, required=True)
    p_foc.set_defaults(handler=_cmd_formulas_focal_degree)

    p_con = sub.add_parser("construct", help="draw a random congruence")
    p_con.add_argument("--kind", choices=("linear", "determinantal"), required=True)
    p_con.add_argument("--n", type=int, required=True)
    p_con.add_argument("--seed", type=int, required=True)
    p_con.add_argument("--bound", type=int, default=9)
    p_con.add_argument("--out", help="write to file instead of stdout")
    p_con.set_defaults(handler=_cmd_construct)

    p_ver = sub.add_parser("verify", help="probe a stored congruence")
    vsub = p_ver.add_subparsers(dest="subcommand", required=True)
    for name, handler, description in (
        ("order", _cmd_verify_order, "unique line through random points"),
        ("foci", _cmd_verify_foci, "gcd degree n-1 on probe lines"),
    ):
        p = vsub.add_parser(name, parents=[fmt], help=description)
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--trials", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--bound", type=int, default=9)
        p.set_defaults(handler=handler)

    p_pf = sub.add_parser(
        "pfaffian", parents=[fmt], help="pfaffian of the lambda family"
    )
    p_pf.add_argument("--in", dest="infile", required=True)
    p_pf.set_defaults(handler=_cmd_pfaffian)

    p_cls = sub.add_parser(
        "classify", parents=[fmt],
        help="run the classification filter over a catalog "
        "(exit 0 only if every classified record passes)",
    )
    p_cls.add_argument(
        "--catalog", required=True,
        help="TSV file, or the literal 'builtin' for the bundled dataset",
    )
    p_cls.add_argument("--dim", type=int, choices=(2, 3))
    p_cls.add_argument(
        "--multiplicity", type=int, default=1,
        help="geometric multiplicity k in the focal degree bound",
    )
    p_cls.set_defaults(handler=_cmd_classify)

    p_scan = sub.add_parser(
        "scan", parents=[fmt], help="survivors of the quadruple-point filter"
    )
    p_scan.add_argument("--d", type=int, required=True)
    p_scan.add_argument("--pi-max", dest="pi_max", type=int, required=True)
    p_scan.add_argument("--chi-max", dest="chi_max", type=int, required=True)
    p_scan.set_defaults(handler=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.handler(args)
    except GenericityError as err:
        print("error: %s" % err, file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
