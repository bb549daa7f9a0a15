"""Command-line driver: ``qaskey eval | verify | limits | ortho | report``.

Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from fractions import Fraction

from .core import QaskeyError, fmt
from .suites import SUITES, ConfigError, build_report, expand, load_config, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}") from None


def _common(sp):
    sp.add_argument("--config", help="TOML config file")
    sp.add_argument("--params", help="parameter set name (preset or from the config)")
    sp.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qaskey", description="Exact verification of Askey-Wilson dualities and limits.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    e = sub.add_parser("eval", help="evaluate a family at a point")
    _common(e)
    e.add_argument("--family", required=True, help="aw, cdqh, asc, bqj, lqj")
    e.add_argument("--n", type=int, required=True)
    pt = e.add_mutually_exclusive_group(required=True)
    pt.add_argument("--z", type=_rational)
    pt.add_argument("--x", type=_rational)
    e.add_argument("--kind", choices=("poly", "nonsym", "vector", "eigenvalue"), default="poly")

    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("--suite", action="append", help=f"suite id (repeatable): all, {', '.join(SUITES)}")
    v.add_argument("--max-deg", type=int)
    v.add_argument("--max-n", type=int)
    v.add_argument("--out", help="write the JSON report here")
    v.add_argument("--timestamp", help="fixed timestamp for the report")

    li = sub.add_parser("limits", help="run the limit-transition suites")
    _common(li)
    li.add_argument("--transition", action="append", help="transition id (repeatable)")
    li.add_argument("--n", type=int, action="append", help="degree (repeatable)")
    li.add_argument("--list", action="store_true", help="list transitions and exit")
    li.add_argument("--out")

    o = sub.add_parser("ortho", help="run the orthogonality suite or export a Gram matrix")
    _common(o)
    o.add_argument("--nodes", type=int)
    o.add_argument("--gram", choices=("scalar-AW", "vector-E", "matrix-E"))
    o.add_argument("--N", type=int, default=5)
    o.add_argument("--csv", help="write the Gram matrix as CSV")
    o.add_argument("--out")

    r = sub.add_parser("report", help="summarize a JSON report, or list suites / operators")
    r.add_argument("path", nargs="?")
    r.add_argument("--suites", action="store_true", help="list suite ids")
    r.add_argument("--catalog", action="store_true", help="dump the operator catalog as JSON")
    r.add_argument("-v", "--verbose", action="store_true")
    return ap


def _write(report: dict, path):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)


def _summary_lines(reports):
    for r in reports:
        yield f"{r.status.upper():4}  {r.suite:34} {r.checked:7d} checks"
        for f in r.failures()[:5]:
            yield f"        {f.suite}: {f.relation}  {json.dumps(f.witness, sort_keys=True, default=str)}"


def _cmd_eval(args, cfg) -> int:
    from . import families as fam
    family = fam.family_name(args.family)
    base = cfg.params.get(args.params or "P2")
    if base is None:
        raise ConfigError(f"unknown parameter set {args.params!r}")
    p = fam.make_params(family, base.q, base.a, base.b, base.c, base.d)
    point = args.z if args.z is not None else args.x
    if args.kind == "eigenvalue":
        out = fam.eigenvalue(p, args.n)
    elif args.kind == "nonsym":
        out = fam.eval_nonsym_E(p, args.n, point)
    elif args.kind == "vector":
        v = fam.eval_vector_E(p, args.n, point)
        out = f"({fmt(v.x)}, {fmt(v.y)})"
    else:
        if args.n < 0:
            raise ConfigError("--n must be >= 0 for --kind poly")
        out = fam.eval_family(p, args.n, point)
    print(out if isinstance(out, str) else fmt(out))
    return EXIT_OK


def _finish(cfg, reports, out, timestamp=None) -> int:
    for line in _summary_lines(reports):
        print(line)
    report = build_report(cfg, reports, timestamp)
    s = report["summary"]
    print(f"{s['identities_passed']} identities passed, {s['identities_failed']} failed, {s['checks']} checks")
    _write(report, out)
    return EXIT_OK if s["passed"] else EXIT_FAIL


def _cmd_verify(args, cfg) -> int:
    suites = tuple(args.suite) if args.suite else cfg.suites
    expand(suites)
    kw = {"suites": suites, "primary": args.params}
    if args.max_deg is not None:
        kw["max_deg"] = args.max_deg
    if args.max_n is not None:
        kw["max_n"] = args.max_n
    cfg = replace(cfg, **kw)
    if args.params is not None:
        cfg.param(args.params)
    return _finish(cfg, run_suites(cfg), args.out, args.timestamp)


def _cmd_limits(args, cfg) -> int:
    from . import limits
    from .core import combine
    if args.list:
        for t in limits.TRANSITIONS.values():
            print(f"{t.id:24} {t.source:>5} -> {t.target:<5} order {t.order}  {t.description}")
        return EXIT_OK
    tids = args.transition or list(limits.TRANSITIONS)
    for t in tids:
        if t not in limits.TRANSITIONS:
            raise ConfigError(f"unknown transition {t!r}")
    reps = []
    for tid in tids:
        p, point = limits.default_case(tid)
        if args.params:
            p = cfg.params[args.params] if args.params in cfg.params else None
            if p is None:
                raise ConfigError(f"unknown parameter set {args.params!r}")
        ns = args.n or range(cfg.max_n + 1)
        reps.append(combine("limits", tid, [limits.check_limit(tid, p, n, point, cfg.lambdas) for n in ns]))
    if not args.transition:
        reps.extend(run_suites(replace(cfg, suites=("qbessel",))))
    return _finish(replace(cfg, suites=("limits",)), reps, args.out)


def _cmd_ortho(args, cfg) -> int:
    from . import ortho
    if args.nodes is not None:
        if args.nodes < 2 or args.nodes & (args.nodes - 1):
            raise ConfigError("--nodes must be a power of two")
        cfg = replace(cfg, ortho_nodes=args.nodes)
    cfg = replace(cfg, primary=args.params, suites=("ortho",))
    fp = cfg.fparam("P3")
    if args.gram:
        G = ortho.gram(fp, args.gram, args.N, cfg.ortho_nodes)
        labels = ortho.gram_labels(args.gram, args.N)
        if args.csv:
            ortho.gram_to_csv(G, args.csv, labels)
        else:
            ortho.gram_to_csv(G, sys.stdout, labels)
        return EXIT_OK
    return _finish(cfg, run_suites(cfg), args.out)


def _cmd_report(args) -> int:
    if args.suites:
        print("\n".join(["all", *SUITES]))
        return EXIT_OK
    if args.catalog:
        from .operators import catalog
        print(json.dumps(catalog(), indent=2, sort_keys=True))
        return EXIT_OK
    if not args.path:
        raise ConfigError("give a report path, --suites or --catalog")
    try:
        with open(args.path) as fh:
            rep = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read report {args.path}: {exc}") from None
    for s in rep.get("suites", []):
        print(f"{s['status'].upper():4}  {s['suite']:34} {s['checked']:7d} checks")
    s = rep.get("summary", {})
    print(f"{s.get('identities_passed', 0)} identities passed, {s.get('identities_failed', 0)} failed")
    return EXIT_OK if s.get("passed") else EXIT_FAIL


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.cmd == "report":
            return _cmd_report(args)
        cfg = load_config(args.config)
        return {"eval": _cmd_eval, "verify": _cmd_verify, "limits": _cmd_limits, "ortho": _cmd_ortho}[args.cmd](
            args, cfg)
    except (ConfigError, ValueError) as exc:
        print(f"qaskey: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QaskeyError as exc:
        print(f"qaskey: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
