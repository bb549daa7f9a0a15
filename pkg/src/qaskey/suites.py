"""Named verification suites, their configuration, and a deterministic report."""
from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from fractions import Fraction

from . import algebra, duality, eigen, limits, ortho
from .core import QaskeyError, VerificationReport, combine
from .families import P1, P2, P2_PAIR, P2_TRIPLE, ParamSet, family_name, make_params

log = logging.getLogger("qaskey")

REPORT_SCHEMA = "qaskey-report/1"


class ConfigError(QaskeyError):
    """Bad suite id, parameter set or config file."""


def _default_params():
    return {"P1": P1, "P2": P2, "P2_TRIPLE": P2_TRIPLE, "P2_PAIR": P2_PAIR,
            "TERWILLIGER": algebra.TERWILLIGER_PARAMS}


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple = ("all",)
    params: dict = field(default_factory=_default_params)
    float_params: dict = field(default_factory=lambda: {"P3": ortho.P3})
    primary: str | None = None  # overrides the main parameter set of a suite
    max_deg: int = 8
    max_n: int = 4
    grid: int = 6
    nonsym_grid: int = 5
    lambdas: tuple = limits.DEFAULT_LAMBDAS
    ortho_tol: float = ortho.DEFAULT_TOL
    ortho_nodes: int = ortho.DEFAULT_NODES
    qbessel_tol: float = 1e-10

    def param(self, name: str) -> ParamSet:
        name = self.primary or name
        try:
            return self.params[name]
        except KeyError:
            raise ConfigError(f"unknown parameter set {name!r}") from None

    def fparam(self, name: str = "P3") -> ortho.FloatParams:
        try:
            return self.float_params[self.primary or name]
        except KeyError:
            raise ConfigError(f"unknown float parameter set {self.primary or name!r}") from None

    def to_json(self):
        return {
            "suites": list(self.suites),
            "params": {k: v.to_json() for k, v in sorted(self.params.items())},
            "float_params": {k: [v.q, v.a, v.b, v.c, v.d] for k, v in sorted(self.float_params.items())},
            "primary": self.primary, "max_deg": self.max_deg, "max_n": self.max_n, "grid": self.grid,
            "nonsym_grid": self.nonsym_grid, "lambdas": [str(x) for x in self.lambdas],
            "ortho_tol": self.ortho_tol, "ortho_nodes": self.ortho_nodes, "qbessel_tol": self.qbessel_tol,
        }


def _as(p: ParamSet, family: str) -> ParamSet:
    return make_params(family, p.q, p.a, p.b, p.c, p.d, validate=False)


# ---------------------------------------------------------------------------
# suite bodies; each takes a SuiteConfig and returns one report


def _eigen(cfg):
    fams = {"AW": "P2", "CDqH": "P2_TRIPLE", "ASC": "P2_PAIR", "BqJ": "P2_TRIPLE", "LqJ": "P2_PAIR"}
    return combine("eigen", "L R_n = lambda_n R_n",
                   [eigen.check_eigen(_as(cfg.param(s), f), cfg.max_deg) for f, s in fams.items()])


def _recurrence(cfg):
    fams = {"AW": "P2", "CDqH": "P2_TRIPLE", "ASC": "P2_PAIR", "BqJ": "P2_TRIPLE", "LqJ": "P2_PAIR"}
    return combine("recurrence", "three-term recurrences",
                   [eigen.check_recurrence(_as(cfg.param(s), f), cfg.max_deg) for f, s in fams.items()])


def _nonsym(cfg):
    p2, tri, pair = cfg.param("P2"), cfg.param("P2_TRIPLE"), cfg.param("P2_PAIR")
    n = min(cfg.max_deg, 6)
    return combine("nonsym", "non-symmetric eigenvalues and recurrences", [
        eigen.check_nonsym_eigen(p2, n),
        eigen.check_cdqh_eigen(_as(tri, "CDqH"), n),
        eigen.check_bqj_vector_eigen(_as(tri, "BqJ"), n),
        eigen.check_bqj_vector_eigen(_as(pair, "LqJ"), n),
        eigen.check_nonsym_recurrence(p2, cfg.nonsym_grid),
        eigen.check_bqj_recurrence(_as(tri, "BqJ"), cfg.nonsym_grid),
    ])


def _operators(cfg):
    return eigen.check_operator_invariants(cfg.param("P2"), cfg.max_deg)


def _zhedanov(cfg):
    fams = {"AW": "P2", "CDqH": "P2_TRIPLE", "ASC": "P2_PAIR", "BqJ": "P2_TRIPLE", "LqJ": "P2_PAIR"}
    reps = []
    for f, s in fams.items():
        p = _as(cfg.param(s), f)
        reps.append(algebra.check_family_zhedanov(f, p, cfg.max_deg))
        reps.append(algebra.check_family_zhedanov(f, p, cfg.max_deg, dual=True))
    return combine("zhedanov", "Zhedanov relations and Casimir", reps)


def _terwilliger(cfg):
    return algebra.check_terwilliger(cfg.param("TERWILLIGER"), cfg.max_deg)


_PRESENTATION_PARAMS = {"AW": ("P2", "AW"), "CDqH": ("P2_TRIPLE", "CDqH"), "AWqB": ("P2_TRIPLE", "CDqH"),
                        "BqJ": ("P2_TRIPLE", "BqJ"), "ASC": ("P2_PAIR", "ASC"), "LqJ": ("P2_PAIR", "LqJ")}


def _daha(cfg):
    reps = []
    for pr in algebra.PRESENTATIONS:
        src, fam = _PRESENTATION_PARAMS[pr.split("-")[0]]
        reps.append(algebra.check_daha(pr, _as(cfg.param(src), fam), max_deg=cfg.max_deg))
    reps.append(algebra.check_daha_identities(cfg.param("P1"), cfg.max_deg))
    reps.append(algebra.check_daha_identities(cfg.param("P2"), cfg.max_deg))
    return combine("daha", "DAHA presentations and identities", reps)


def _algebra_duality(cfg):
    return combine("algebra-duality", "algebra-level dualities", [
        algebra.check_algebra_duality("AW", cfg.param("P1")),
        algebra.check_algebra_duality("AW", cfg.param("TERWILLIGER")),
        algebra.check_algebra_duality("CDqH-BqJ", cfg.param("P2_TRIPLE")),
        algebra.check_algebra_duality("ASC-LqJ", cfg.param("P2_PAIR")),
        algebra.check_algebra_duality("q-inverse", cfg.param("P2")),
    ])


def _poly(case, pname, grid_attr="grid"):
    def run(cfg):
        return duality.check_poly_duality(case, cfg.param(pname), getattr(cfg, grid_attr))
    return run


def _operator_duality(cfg):
    reps = []
    for case in duality.OPERATOR_CASES:
        if case in ("CDqH-L", "BqJ-L"):
            p = cfg.param("P2_TRIPLE")
        elif case in ("ASC-L", "LqJ-L"):
            p = cfg.param("P2_PAIR")
        elif case == "DAHA-Y":
            # P1 makes the dual recurrence 0/0 at n = 0
            p = cfg.param("TERWILLIGER")
        else:
            p = cfg.param("P1")
        reps.append(duality.check_operator_duality(case, p, min(cfg.max_deg, 6), cfg.grid))
    sq = cfg.param("TERWILLIGER")
    for case in ("DAHA-Z", "DAHA-T1", "AW-L", "AW-Lambda"):
        reps.append(duality.check_operator_duality(case, sq, min(cfg.max_deg, 6), 4))
    reps.append(duality.check_c0_consistency(cfg.param("P2_PAIR")))
    reps.append(duality.check_hat_functoriality(cfg.param("P1")))
    return combine("operator-duality", "operator dualities", reps)


def _limits(cfg):
    reps = []
    for tid in limits.TRANSITIONS:
        p, point = limits.default_case(tid)
        ns = (range(-cfg.max_n, cfg.max_n + 1) if tid in ("nonsymAW-nonsymCDqH", "vecAW-vecBqJ")
              else range(cfg.max_n + 1))
        reps.extend(limits.check_limit(tid, p, n, point, cfg.lambdas) for n in ns)
    reps.append(limits.check_lqj_routes(cfg.param("P2_PAIR"), cfg.max_n))
    reps.append(limits.check_printed_Ztilde(_as(cfg.param("P2_TRIPLE"), "BqJ"), cfg.lambdas))
    return combine("limits", "limit transitions", reps)


def _qbessel(cfg):
    reps = [limits.check_qbessel_limit(limits.QBESSEL_PARAMS, n, Fraction(3, 2), Fraction(1, 20),
                                       tol=cfg.qbessel_tol) for n in range(-2, cfg.max_n + 1)]
    return combine("qbessel", "q-Bessel limit", reps)


def _ortho(cfg):
    return ortho.run_all(cfg.fparam("P3"), cfg.ortho_nodes, cfg.ortho_tol)


SUITES = {
    "eigen": _eigen,
    "recurrence": _recurrence,
    "nonsym": _nonsym,
    "operators": _operators,
    "zhedanov": _zhedanov,
    "terwilliger": _terwilliger,
    "daha": _daha,
    "algebra-duality": _algebra_duality,
    "duality-aw": _poly("AW", "P1"),
    "duality-cdqh-bqj": _poly("CDqH-BqJ", "P2_TRIPLE"),
    "duality-asc-lqj": _poly("ASC-LqJ", "P2_PAIR"),
    "duality-nonsym": _poly("nonsym-AW", "P1", "nonsym_grid"),
    "duality-mixed": _poly("mixed-2D", "P1", "nonsym_grid"),
    "duality-degenerate": _poly("degenerate-nonsym", "P2_TRIPLE", "nonsym_grid"),
    "duality-awqb": _poly("AWqB-LqJ", "P2_PAIR", "nonsym_grid"),
    "operator-duality": _operator_duality,
    "limits": _limits,
    "qbessel": _qbessel,
    "ortho": _ortho,
}


def expand(suite_ids) -> list[str]:
    out = []
    for s in suite_ids:
        if s == "all":
            out.extend(SUITES)
        elif s in SUITES:
            out.append(s)
        else:
            raise ConfigError(f"unknown suite {s!r}; known: all, {', '.join(SUITES)}")
    return list(dict.fromkeys(out))


def run_suite(suite_id: str, cfg: SuiteConfig) -> VerificationReport:
    try:
        return SUITES[suite_id](cfg)
    except QaskeyError as exc:
        if isinstance(exc, ConfigError):
            raise
        return VerificationReport(suite_id, "suite raised", False, 0,
                                  {"error": type(exc).__name__, "message": str(exc)})


def workers() -> int:
    env = os.environ.get("QASKEY_THREADS")
    if env is None:
        return os.cpu_count() or 1
    try:
        n = int(env)
    except ValueError:
        raise ConfigError(f"QASKEY_THREADS must be an integer, got {env!r}") from None
    if n < 1:
        raise ConfigError("QASKEY_THREADS must be >= 1")
    return n


def run_suites(cfg: SuiteConfig) -> list[VerificationReport]:
    """Run the configured suites, in a process pool when more than one worker is allowed.

    Results keep the order of the suite list, so the report does not depend on scheduling.
    """
    ids = expand(cfg.suites)
    n = min(workers(), len(ids))
    if n <= 1:
        out = []
        for s in ids:
            log.info("running %s", s)
            out.append(run_suite(s, cfg))
        return out
    with ProcessPoolExecutor(max_workers=n) as pool:
        futs = [pool.submit(run_suite, s, cfg) for s in ids]
        return [f.result() for f in futs]


def build_report(cfg: SuiteConfig, reports, timestamp: str | None = None) -> dict:
    leaves = [leaf for r in reports for leaf in r.leaves()]
    passed = [leaf for leaf in leaves if leaf.passed]
    return {
        "schema": REPORT_SCHEMA,
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
        "config": cfg.to_json(),
        "summary": {
            "suites": len(reports),
            "suites_passed": sum(r.passed for r in reports),
            "identities_passed": len(passed),
            "identities_failed": len(leaves) - len(passed),
            "checks": sum(r.checked for r in reports),
            "passed": all(r.passed for r in reports),
        },
        "suites": [r.to_json() for r in reports],
    }


# ---------------------------------------------------------------------------
# TOML config


def _load_toml(path):
    try:
        import tomllib
    except ModuleNotFoundError:  # Python < 3.11
        import tomli as tomllib
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from None


def _exact(v, where):
    if isinstance(v, float):
        raise ConfigError(f"{where}: give exact parameters as strings like \"1/4\", not floats")
    try:
        return Fraction(v)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ConfigError(f"{where}: not a rational: {v!r}") from None


_KNOWN_KEYS = {"suites", "params", "float_params", "max_deg", "max_n", "grid", "nonsym_grid", "lambdas",
               "tolerances", "ortho_nodes"}


def load_config(path=None, base: SuiteConfig | None = None) -> SuiteConfig:
    """Read a TOML config on top of the defaults.

    Exact parameter sets are tables of rational strings, e.g.
    ``[params.P1] family = "AW"  q = "1/4"  a = "1/2" ...``; float sets for the
    orthogonality suite go under ``[float_params.NAME]``.
    """
    cfg = base or SuiteConfig()
    if path is None:
        return cfg
    data = _load_toml(path)
    unknown = set(data) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    kw = {}
    if "suites" in data:
        suites = data["suites"]
        if isinstance(suites, str):
            suites = [suites]
        expand(suites)
        kw["suites"] = tuple(suites)
    params = dict(cfg.params)
    for name, tbl in data.get("params", {}).items():
        try:
            fam = family_name(tbl.get("family", "AW"))
        except ValueError as exc:
            raise ConfigError(f"params.{name}: {exc}") from None
        vals = {k: _exact(tbl.get(k, 0), f"params.{name}.{k}") for k in "qabcd"}
        try:
            params[name] = make_params(fam, **vals)
        except QaskeyError as exc:
            raise ConfigError(f"params.{name}: {exc}") from None
    kw["params"] = params
    fparams = dict(cfg.float_params)
    for name, tbl in data.get("float_params", {}).items():
        try:
            fp = ortho.FloatParams(*(float(tbl[k]) for k in "qabcd"))
        except (KeyError, TypeError, ValueError):
            raise ConfigError(f"float_params.{name}: needs numeric q, a, b, c, d") from None
        fparams[name] = fp
    kw["float_params"] = fparams
    for key in ("max_deg", "max_n", "grid", "nonsym_grid", "ortho_nodes"):
        if key in data:
            if not isinstance(data[key], int) or data[key] < 0:
                raise ConfigError(f"{key} must be a non-negative integer")
            kw[key] = data[key]
    if "lambdas" in data:
        kw["lambdas"] = tuple(_exact(v, "lambdas") for v in data["lambdas"])
    tols = data.get("tolerances", {})
    for key, attr in (("ortho", "ortho_tol"), ("qbessel", "qbessel_tol")):
        if key in tols:
            kw[attr] = float(tols[key])
    return replace(cfg, **kw)
