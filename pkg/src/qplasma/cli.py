"""Command-line front end: point evaluation, parameter sweeps, verification.

Exit codes: 0 success / all checks pass, 1 verification failure,
2 argument or domain error, 3 numerical (quadrature) failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import DomainError, QuadratureFailure
from .quadrature import DEFAULT_CONFIG, QuadratureConfig
from .response import (METHODS, PlasmaPoint, ResponseResult, epsilon_bgk,
                       epsilon_bgk_alt, epsilon_classical, epsilon_lindhard,
                       epsilon_mermin, sigma_bgk)
from .verify import GRIDS, format_report, run_verify

__version__ = "0.1.0"

CSV_HEADER = "alpha,q,x,y,xp,method,re_eps,im_eps,re_sigma,im_sigma,err_est"
_COLUMNS = CSV_HEADER.split(",")

_METHOD_FUNCS = {
    "BGK": epsilon_bgk,
    "BGK_ALT": epsilon_bgk_alt,
    "MERMIN": epsilon_mermin,
    "LINDHARD": epsilon_lindhard,
    "CLASSICAL": epsilon_classical,
}

_SWEEP_FIELDS = ("alpha", "q", "x", "y")


@dataclass(frozen=True)
class SweepSpec:
    """One-dimensional sweep: vary one PlasmaPoint field over a range."""

    vary: str
    start: float
    stop: float
    steps: int
    scale: str
    fixed: dict
    methods: tuple

    def __post_init__(self):
        if self.vary not in _SWEEP_FIELDS:
            raise DomainError("vary must be one of %s" % (_SWEEP_FIELDS,))
        if self.steps < 2:
            raise DomainError("steps must be >= 2")
        if self.scale not in ("linear", "log"):
            raise DomainError("scale must be linear or log")
        if self.scale == "log" and (self.start <= 0.0 or self.stop <= 0.0):
            raise DomainError("log scale requires start, stop > 0")
        for m in self.methods:
            if m not in _METHOD_FUNCS:
                raise DomainError("unknown method %r" % (m,))

    def values(self):
        import numpy as np
        if self.scale == "log":
            import math
            grid = np.logspace(math.log10(self.start), math.log10(self.stop),
                               self.steps)
        else:
            grid = np.linspace(self.start, self.stop, self.steps)
        return [float(v) for v in grid]

    def points(self):
        """(PlasmaPoint, method) rows ordered by varied value then method."""
        rows = []
        for v in self.values():
            kw = dict(self.fixed)
            kw[self.vary] = v
            point = PlasmaPoint(**kw)
            for m in self.methods:
                rows.append((point, m))
        return rows


@dataclass
class RunReport:
    rows: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)


def _fmt(v) -> str:
    # repr of a Python float is the shortest round-trip representation
    return repr(float(v))


def _row_record(point: PlasmaPoint, method: str, res: ResponseResult) -> dict:
    sig = res.sigma_ratio
    return {
        "alpha": point.alpha, "q": point.q, "x": point.x, "y": point.y,
        "xp": point.xp, "method": method,
        "re_eps": res.epsilon.real, "im_eps": res.epsilon.imag,
        "re_sigma": None if sig is None else sig.real,
        "im_sigma": None if sig is None else sig.imag,
        "err_est": res.err_estimate,
    }


def _record_to_csv(rec: dict) -> str:
    out = []
    for col in _COLUMNS:
        v = rec[col]
        if v is None:
            out.append("")
        elif col == "method":
            out.append(v)
        else:
            out.append(_fmt(v))
    return ",".join(out)


def _canonical_methods(raw: str):
    wanted = {m.strip().upper() for m in raw.split(",") if m.strip()}
    unknown = wanted - set(_METHOD_FUNCS)
    if unknown:
        raise DomainError("unknown method(s): %s" % ", ".join(sorted(unknown)))
    return tuple(m for m in METHODS if m in wanted)


def _load_config(path):
    if path is None:
        return {}
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise DomainError("config file must hold a JSON object")
    return data


def _merged(args, config, key, default=None):
    cli = getattr(args, key, None)
    if cli is not None:
        return cli
    if key in config:
        return config[key]
    return default


def _quad_config(args, config) -> QuadratureConfig:
    rel = float(_merged(args, config, "rel_tol", DEFAULT_CONFIG.rel_tol))
    abt = float(_merged(args, config, "abs_tol", DEFAULT_CONFIG.abs_tol))
    return QuadratureConfig(rel_tol=rel, abs_tol=abt)


def _point_from(args, config, require=("alpha", "q", "x", "y", "xp")) -> PlasmaPoint:
    kw = {}
    for name in ("alpha", "q", "x", "y", "xp"):
        v = _merged(args, config, name)
        if v is None:
            if name in require:
                raise DomainError("missing required parameter --%s" % name)
            continue
        kw[name] = float(v)
    return PlasmaPoint(**kw)


def cmd_eval(args) -> int:
    config = _load_config(args.config)
    cfg = _quad_config(args, config)
    point = _point_from(args, config)
    method = str(_merged(args, config, "method", "BGK")).upper()
    if method not in _METHOD_FUNCS:
        raise DomainError("unknown method %r" % (method,))
    want = _merged(args, config, "want", "both")
    if want not in ("eps", "sigma", "both"):
        raise DomainError("--want must be eps, sigma or both")
    if want == "sigma":
        if method == "LINDHARD":
            raise DomainError("sigma_l/sigma_0 is undefined on the "
                              "collisionless branch (y = 0)")
        res = sigma_bgk(point, cfg) if method == "BGK" else _METHOD_FUNCS[method](point, cfg)
        if res.sigma_ratio is None:
            raise DomainError("sigma_l/sigma_0 is undefined at x = 0")
    else:
        res = _METHOD_FUNCS[method](point, cfg)
    rec = _row_record(point, method, res)
    fmt = _merged(args, config, "format", "human")
    if fmt == "json":
        sys.stdout.write(json.dumps(rec, separators=(",", ":")) + "\n")
    else:
        for col in _COLUMNS:
            v = rec[col]
            shown = "" if v is None else (v if col == "method" else _fmt(v))
            sys.stdout.write("%-9s %s\n" % (col, shown))
    return 0


def _eval_row(item):
    point, method, cfg = item
    return _METHOD_FUNCS[method](point, cfg)


def cmd_sweep(args) -> int:
    config = _load_config(args.config)
    cfg = _quad_config(args, config)
    methods = _canonical_methods(str(_merged(args, config, "methods", "BGK")))
    if not methods:
        raise DomainError("no methods selected")
    vary = str(_merged(args, config, "vary", ""))
    fixed = {}
    for name in ("alpha", "q", "x", "y", "xp"):
        if name == vary:
            continue
        v = _merged(args, config, name)
        if v is None:
            raise DomainError("missing fixed parameter --%s" % name)
        fixed[name] = float(v)
    if "LINDHARD" in methods:
        if len(methods) > 1:
            raise DomainError("LINDHARD (y = 0) cannot share a sweep with "
                              "collisional methods (y > 0)")
        if vary == "y":
            raise DomainError("cannot vary y on the collisionless branch")
    spec = SweepSpec(
        vary=vary,
        start=float(_merged(args, config, "start")),
        stop=float(_merged(args, config, "stop")),
        steps=int(_merged(args, config, "steps", 0)),
        scale=str(_merged(args, config, "scale", "linear")),
        fixed=fixed,
        methods=methods,
    )
    out_path = _merged(args, config, "out")
    if out_path is None:
        raise DomainError("missing --out path")
    fmt = str(_merged(args, config, "format", "csv"))
    if fmt not in ("csv", "json"):
        raise DomainError("--format must be csv or json")
    jobs = int(_merged(args, config, "jobs", os.cpu_count() or 1))
    if jobs < 1:
        raise DomainError("--jobs must be >= 1")

    work = spec.points()
    if jobs == 1:
        results = [_eval_row((p, m, cfg)) for (p, m) in work]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_eval_row, [(p, m, cfg) for (p, m) in work]))

    report = RunReport()
    for (point, method), res in zip(work, results):
        report.rows.append((point, method, res))
    cfg_key = json.dumps({"rel_tol": cfg.rel_tol, "abs_tol": cfg.abs_tol,
                          "vary": spec.vary, "scale": spec.scale},
                         sort_keys=True)
    report.metadata = {
        "version": __version__,
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "rel_tol": cfg.rel_tol,
        "abs_tol": cfg.abs_tol,
        "config_hash": hashlib.sha256(cfg_key.encode()).hexdigest()[:12],
        "rows": len(report.rows),
    }

    records = [_row_record(p, m, r) for (p, m, r) in report.rows]
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            if fmt == "csv":
                fh.write(CSV_HEADER + "\n")
                for rec in records:
                    fh.write(_record_to_csv(rec) + "\n")
            else:
                fh.write(json.dumps(records, indent=2) + "\n")
    except Exception:
        if os.path.exists(out_path):
            os.remove(out_path)
        raise
    sys.stdout.write("wrote %d rows to %s\n" % (len(records), out_path))
    return 0


def cmd_verify(args) -> int:
    config = _load_config(args.config)
    cfg = _quad_config(args, config)
    grid = str(_merged(args, config, "grid", "small"))
    if grid not in GRIDS:
        raise DomainError("unknown grid preset %r" % (grid,))
    tol_scale = float(_merged(args, config, "tol_scale", 1.0))
    if tol_scale <= 0.0:
        raise DomainError("--tol-scale must be > 0")
    report = run_verify(grid, cfg, tol_scale)
    sys.stdout.write(format_report(report) + "\n")
    return 0 if report.all_passed else 1


def _add_common(sub):
    sub.add_argument("--alpha", type=float, help="degeneracy parameter mu/kB T")
    sub.add_argument("--q", type=float, help="wave number k/k0 (> 0)")
    sub.add_argument("--x", type=float, help="frequency omega/(k0 v0) (>= 0)")
    sub.add_argument("--y", type=float, help="collision rate nu/(k0 v0)")
    sub.add_argument("--xp", type=float, help="plasma frequency omega_p/(k0 v0)")
    sub.add_argument("--rel-tol", dest="rel_tol", type=float,
                     help="quadrature relative tolerance")
    sub.add_argument("--abs-tol", dest="abs_tol", type=float,
                     help="quadrature absolute tolerance")
    sub.add_argument("--config", help="JSON file with default flag values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qplasma",
        description="Longitudinal dielectric response of collisional quantum "
                    "plasma at arbitrary degeneracy")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    p_eval = subs.add_parser("eval", help="evaluate one point")
    _add_common(p_eval)
    p_eval.add_argument("--method", help="bgk | bgk_alt | mermin | lindhard | classical")
    p_eval.add_argument("--want", choices=("eps", "sigma", "both"),
                        help="which quantity must be defined (default both)")
    p_eval.add_argument("--format", choices=("human", "json"),
                        help="output format (default human)")
    p_eval.set_defaults(func=cmd_eval)

    p_sweep = subs.add_parser("sweep", help="sweep one parameter to CSV/JSON")
    _add_common(p_sweep)
    p_sweep.add_argument("--vary", choices=_SWEEP_FIELDS)
    p_sweep.add_argument("--start", type=float)
    p_sweep.add_argument("--stop", type=float)
    p_sweep.add_argument("--steps", type=int)
    p_sweep.add_argument("--scale", choices=("linear", "log"))
    p_sweep.add_argument("--methods", help="comma list, e.g. bgk,classical")
    p_sweep.add_argument("--out", help="output path")
    p_sweep.add_argument("--format", choices=("csv", "json"))
    p_sweep.add_argument("--jobs", type=int, help="parallel workers (default: cpu count)")
    p_sweep.set_defaults(func=cmd_sweep)

    p_verify = subs.add_parser("verify", help="run the identity suite")
    _add_common(p_verify)
    p_verify.add_argument("--grid", choices=tuple(sorted(GRIDS)))
    p_verify.add_argument("--tol-scale", dest="tol_scale", type=float,
                          help="multiply every identity tolerance (0.01 = 100x tighter)")
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2
    except QuadratureFailure as exc:
        sys.stderr.write("numerical failure: %s\n" % exc)
        return 3
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
