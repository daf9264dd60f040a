"""Configuration parsing, data emitters and the command-line front end.

A run is described by one JSON document::

    {
      "mode": "case-study",              # ar-scan | simulate | case-study | sweep
      "grid": {"I": 10, "R": 10},
      "params": {"alpha_tilde": 0.1, "beta": 0.3, "gamma_tilde": 0.9,
                 "eta": [1, 1, 1], "mu_rate": [[0, 1, 1], [1, 0, 0], [1, 0, 0]]},
      "integration": {"dt": 0.01, "t_end": 10, "method": "rk4", "sample_every": 1},
      "case": "I",                       # case-study only
      "variant": "strong_ruler",         # case V only
      "profiles": {"ruler": {"u": "strong", "nu": "strong"},
                   "citizens": {"table": [[...], ...]}, ...},   # simulate only
      "ar": {"gamma": 2, "alpha": 1.1, "mu_lo": 1e-4, "mu_hi": 1, "step": 1e-4,
             "tol": 1e-6, "raster": {"mu": [0.005, 1], "gamma": [1.1, 5],
                                     "n_mu": 200, "n_gamma": 40}},
      "sweep": {"base": {...}, "grid": {"params.beta": [0.1, 0.3]},
                "configs": [{...}], "workers": 1},
      "output": {"path": "out.csv", "format": "csv"}
    }

Every section is optional except ``mode``; missing keys take defaults.
"""

from __future__ import annotations

import argparse
import copy
import csv
import io
import itertools
import json
import logging
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

import numpy as np

from . import ar_baseline
from .errors import ConfigError, IntegrationDiagnosticError, InvalidArgumentError
from .integrator import IntegrationSettings, Method, Trajectory, integrate
from .kinetic_core import ActivityGrid, KineticParams, SubsystemId
from .scenarios import (
    CASE_IDS,
    CASE_V_VARIANTS,
    MarginalPair,
    Profile,
    ProfileSpec,
    build_initial,
    case_profile,
    run_case_study,
)

__all__ = [
    "MODES",
    "TRAJECTORY_COLUMNS",
    "ARScan",
    "SweepSpec",
    "RunConfig",
    "parse_config",
    "config_from_dict",
    "apply_override",
    "format_number",
    "emit_trajectory",
    "emit_raster",
    "run",
    "main",
    "EXIT_OK",
    "EXIT_VALIDATION",
    "EXIT_INTEGRATION",
    "EXIT_IO",
]

log = logging.getLogger("political_kinetics")

MODES = ("ar-scan", "simulate", "case-study", "sweep")
FORMATS = ("csv", "json")
TRAJECTORY_COLUMNS = ("t", "E1_u", "E1_nu", "E2_u", "E2_nu", "E3_u", "E3_nu", "F", "G")

EXIT_OK, EXIT_VALIDATION, EXIT_INTEGRATION, EXIT_IO = 0, 1, 2, 3

_SECTIONS = {
    "mode", "grid", "params", "integration", "case", "variant",
    "profiles", "ar", "sweep", "output",
}
_SUBSYSTEM_KEYS = ("ruler", "citizens", "competing")


@dataclass(frozen=True)
class ARScan:
    gamma: float = 2.0
    alpha: float = 1.1
    mu_lo: float = 1e-4
    mu_hi: float = 1.0
    step: float = 1e-4
    tol: float = 1e-6
    raster_mu: tuple[float, float] = (0.005, 1.0)
    raster_gamma: tuple[float, float] = (1.1, 5.0)
    n_mu: int = 200
    n_gamma: int = 40


@dataclass(frozen=True)
class SweepSpec:
    base: dict
    grid: dict = field(default_factory=dict)
    configs: tuple = ()
    workers: int = 1

    def points(self) -> list[tuple[dict, dict]]:
        """``(overrides, raw config)`` for every sweep point, in a fixed order."""
        out = []
        for i, raw in enumerate(self.configs):
            out.append(({"config": i}, raw))
        if self.grid:
            keys = list(self.grid)
            for combo in itertools.product(*(self.grid[k] for k in keys)):
                raw = copy.deepcopy(self.base)
                overrides = dict(zip(keys, combo))
                for k, v in overrides.items():
                    apply_override(raw, k, v)
                out.append((overrides, raw))
        return out


@dataclass(frozen=True)
class RunConfig:
    mode: str
    grid: ActivityGrid = field(default_factory=ActivityGrid)
    params: KineticParams = field(default_factory=KineticParams)
    settings: IntegrationSettings = field(default_factory=IntegrationSettings)
    case: Optional[str] = None
    variant: Optional[str] = None
    profiles: Optional[ProfileSpec] = None
    ar: ARScan = field(default_factory=ARScan)
    sweep: Optional[SweepSpec] = None
    out: Optional[str] = None
    format: str = "csv"

    def profile_spec(self) -> ProfileSpec:
        if self.mode == "simulate":
            return self.profiles
        return case_profile(self.case, self.variant)


# --- parsing ---------------------------------------------------------------


def _section(raw, key, allowed):
    sec = raw.get(key, {})
    if sec is None:
        sec = {}
    if not isinstance(sec, dict):
        raise ConfigError(key, "must be an object")
    for k in sec:
        if k not in allowed:
            raise ConfigError(f"{key}.{k}", "unknown key")
    return sec


def _number(path, v, *, integer=False):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(path, f"expected a number, got {v!r}")
    if not math.isfinite(v):
        raise ConfigError(path, "must be finite")
    if integer and int(v) != v:
        raise ConfigError(path, f"expected an integer, got {v!r}")
    return int(v) if integer else float(v)


def _ranged(path, v, lo, hi):
    v = _number(path, v)
    if not lo <= v <= hi:
        raise ConfigError(path, f"{v} outside [{lo}, {hi}]")
    return v


def _parse_params(raw):
    sec = _section(raw, "params", {"alpha_tilde", "beta", "gamma_tilde", "eta", "mu_rate"})
    kw = {}
    for name in ("alpha_tilde", "beta", "gamma_tilde"):
        if name in sec:
            kw[name] = _ranged(f"params.{name}", sec[name], 0.0, 1.0)
    if "eta" in sec:
        eta = sec["eta"]
        if not isinstance(eta, list) or len(eta) != 3:
            raise ConfigError("params.eta", "expected a list of three rates")
        kw["eta"] = tuple(_ranged(f"params.eta[{k}]", x, 0.0, math.inf) for k, x in enumerate(eta))
    if "mu_rate" in sec:
        rate = sec["mu_rate"]
        if not isinstance(rate, list) or len(rate) != 3 or any(
            not isinstance(row, list) or len(row) != 3 for row in rate
        ):
            raise ConfigError("params.mu_rate", "expected a 3x3 list")
        kw["mu_rate"] = tuple(
            tuple(_ranged(f"params.mu_rate[{a}][{b}]", x, 0.0, math.inf) for b, x in enumerate(row))
            for a, row in enumerate(rate)
        )
    try:
        return KineticParams(**kw)
    except InvalidArgumentError as exc:
        raise ConfigError("params", str(exc)) from exc


def _parse_settings(raw):
    sec = _section(raw, "integration", {"dt", "t_end", "method", "sample_every"})
    kw = {}
    if "dt" in sec:
        kw["dt"] = _number("integration.dt", sec["dt"])
    if "t_end" in sec:
        kw["t_end"] = _number("integration.t_end", sec["t_end"])
    if "sample_every" in sec:
        kw["sample_every"] = _number("integration.sample_every", sec["sample_every"], integer=True)
    if "method" in sec:
        m = str(sec["method"]).lower()
        if m not in {x.value for x in Method}:
            raise ConfigError("integration.method", f"expected 'euler' or 'rk4', got {sec['method']!r}")
        kw["method"] = Method(m)
    try:
        return IntegrationSettings(**kw)
    except InvalidArgumentError as exc:
        raise ConfigError("integration", str(exc)) from exc


def _parse_profiles(raw, grid):
    sec = _section(raw, "profiles", set(_SUBSYSTEM_KEYS))
    out = {}
    for name in _SUBSYSTEM_KEYS:
        entry = sec.get(name, {"u": "uniform", "nu": "uniform"})
        path = f"profiles.{name}"
        if not isinstance(entry, dict):
            raise ConfigError(path, "must be an object")
        if "table" in entry:
            if set(entry) != {"table"}:
                raise ConfigError(path, "an explicit table excludes 'u'/'nu'")
            table = np.asarray(entry["table"], dtype=float)
            if table.shape != grid.shape:
                raise ConfigError(f"{path}.table", f"shape {table.shape} != {grid.shape}")
            out[name] = table
            continue
        for k in entry:
            if k not in ("u", "nu"):
                raise ConfigError(f"{path}.{k}", "unknown key")
        try:
            out[name] = MarginalPair(entry.get("u", "uniform"), entry.get("nu", "uniform"))
        except ValueError as exc:
            raise ConfigError(path, f"unknown profile ({exc}); expected one of "
                              f"{[p.value for p in Profile]}") from exc
    spec = ProfileSpec(**out)
    try:
        build_initial(spec, grid)
    except InvalidArgumentError as exc:
        raise ConfigError("profiles", str(exc)) from exc
    return spec


def _parse_ar(raw):
    sec = _section(raw, "ar", {"gamma", "alpha", "mu_lo", "mu_hi", "step", "tol", "raster"})
    kw = {}
    for name in ("gamma", "alpha", "mu_lo", "mu_hi", "step", "tol"):
        if name in sec:
            kw[name] = _number(f"ar.{name}", sec[name])
    if "raster" in sec:
        r = sec["raster"]
        if not isinstance(r, dict):
            raise ConfigError("ar.raster", "must be an object")
        for k in r:
            if k not in ("mu", "gamma", "n_mu", "n_gamma"):
                raise ConfigError(f"ar.raster.{k}", "unknown key")
        for k in ("mu", "gamma"):
            if k in r:
                v = r[k]
                if not isinstance(v, list) or len(v) != 2:
                    raise ConfigError(f"ar.raster.{k}", "expected [lo, hi]")
                kw[f"raster_{k}"] = tuple(_number(f"ar.raster.{k}", x) for x in v)
        for k in ("n_mu", "n_gamma"):
            if k in r:
                kw[k] = _number(f"ar.raster.{k}", r[k], integer=True)
    ar = ARScan(**kw)
    if ar.gamma <= 1:
        raise ConfigError("ar.gamma", "must be > 1")
    if ar.alpha < 1:
        raise ConfigError("ar.alpha", "must be >= 1")
    if not 0 < ar.mu_lo < ar.mu_hi:
        raise ConfigError("ar.mu_lo", "need 0 < mu_lo < mu_hi")
    if ar.step <= 0 or ar.tol <= 0:
        raise ConfigError("ar.step", "step and tol must be > 0")
    if ar.raster_mu[0] <= 0 or ar.raster_gamma[0] <= 1:
        raise ConfigError("ar.raster", "raster must lie in mu > 0, gamma > 1")
    if ar.n_mu < 1 or ar.n_gamma < 1:
        raise ConfigError("ar.raster", "n_mu and n_gamma must be >= 1")
    return ar


def _parse_sweep(raw):
    sec = _section(raw, "sweep", {"base", "grid", "configs", "workers"})
    base = sec.get("base", {})
    grid = sec.get("grid", {})
    configs = sec.get("configs", [])
    if not isinstance(base, dict) or not isinstance(grid, dict) or not isinstance(configs, list):
        raise ConfigError("sweep", "base/grid must be objects and configs a list")
    if not grid and not configs:
        raise ConfigError("sweep", "needs a non-empty 'grid' or 'configs'")
    for k, vals in grid.items():
        if not isinstance(vals, list) or not vals:
            raise ConfigError(f"sweep.grid.{k}", "expected a non-empty list")
    workers = _number("sweep.workers", sec.get("workers", 1), integer=True)
    if workers < 1:
        raise ConfigError("sweep.workers", "must be >= 1")
    spec = SweepSpec(base=base, grid=grid, configs=tuple(configs), workers=workers)
    # validate every point up front so a bad point fails before any work
    for i, (_, point) in enumerate(spec.points()):
        if point.get("mode") == "sweep":
            raise ConfigError(f"sweep.point[{i}].mode", "nested sweeps are not supported")
        try:
            config_from_dict(point)
        except ConfigError as exc:
            raise ConfigError(f"sweep.point[{i}].{exc.key}", str(exc).split(": ", 1)[-1]) from exc
    return spec


def config_from_dict(raw: dict) -> RunConfig:
    if not isinstance(raw, dict):
        raise ConfigError("", "configuration must be a JSON object")
    for k in raw:
        if k not in _SECTIONS:
            raise ConfigError(k, "unknown key")
    mode = raw.get("mode")
    if mode is None:
        raise ConfigError("mode", "missing")
    if mode not in MODES:
        raise ConfigError("mode", f"expected one of {MODES}, got {mode!r}")

    gsec = _section(raw, "grid", {"I", "R"})
    grid_kw = {k: _number(f"grid.{k}", v, integer=True) for k, v in gsec.items()}
    for k, v in grid_kw.items():
        if v < 1:
            raise ConfigError(f"grid.{k}", "must be >= 1")
    grid = ActivityGrid(**grid_kw)

    params = _parse_params(raw)
    settings = _parse_settings(raw)
    try:
        settings.check_rates(params)
    except InvalidArgumentError as exc:
        raise ConfigError("integration.dt", str(exc)) from exc

    osec = _section(raw, "output", {"path", "format"})
    fmt = osec.get("format", "csv")
    if fmt not in FORMATS:
        raise ConfigError("output.format", f"expected one of {FORMATS}, got {fmt!r}")
    out = osec.get("path")
    if out is not None and not isinstance(out, str):
        raise ConfigError("output.path", "must be a string")

    kw: dict[str, Any] = dict(mode=mode, grid=grid, params=params, settings=settings, out=out, format=fmt)
    if mode == "case-study":
        case = raw.get("case")
        if case is None:
            raise ConfigError("case", "required for mode 'case-study'")
        if case not in CASE_IDS:
            raise ConfigError("case", f"expected one of {CASE_IDS}, got {case!r}")
        variant = raw.get("variant")
        if variant is not None and (case != "V" or variant not in CASE_V_VARIANTS):
            raise ConfigError("variant", f"only case V takes a variant, one of {list(CASE_V_VARIANTS)}")
        kw.update(case=case, variant=variant)
    elif "case" in raw or "variant" in raw:
        raise ConfigError("case", f"not used in mode {mode!r}")
    if mode == "simulate":
        if "profiles" not in raw:
            raise ConfigError("profiles", "required for mode 'simulate'")
        kw["profiles"] = _parse_profiles(raw, grid)
    elif "profiles" in raw:
        raise ConfigError("profiles", f"not used in mode {mode!r}")
    if mode == "ar-scan" or "ar" in raw:
        kw["ar"] = _parse_ar(raw)
    if mode == "sweep":
        if "sweep" not in raw:
            raise ConfigError("sweep", "required for mode 'sweep'")
        kw["sweep"] = _parse_sweep(raw)
    elif "sweep" in raw:
        raise ConfigError("sweep", f"not used in mode {mode!r}")
    return RunConfig(**kw)


def parse_config(text: str, overrides: Optional[dict] = None) -> RunConfig:
    """Parse and validate a JSON configuration; ``overrides`` maps dotted keys to values."""
    try:
        raw = json.loads(text) if text.strip() else {}
    except json.JSONDecodeError as exc:
        raise ConfigError("", f"invalid JSON: {exc}") from exc
    for k, v in (overrides or {}).items():
        apply_override(raw, k, v)
    return config_from_dict(raw)


def apply_override(raw: dict, dotted: str, value) -> None:
    keys = dotted.split(".")
    node = raw
    for k in keys[:-1]:
        nxt = node.setdefault(k, {})
        if not isinstance(nxt, dict):
            raise ConfigError(dotted, f"cannot descend into {k!r}")
        node = nxt
    node[keys[-1]] = value


# --- emitters ----------------------------------------------------------------


def format_number(x) -> str:
    return format(float(x), ".12g")


def _rounded(x):
    return None if x is None else float(format_number(x))


def trajectory_rows(traj: Trajectory) -> list[dict]:
    rows = []
    for s in traj.samples:
        m = s.moments
        rows.append({
            "t": s.t,
            "E1_u": m[0].e_u, "E1_nu": m[0].e_nu,
            "E2_u": m[1].e_u, "E2_nu": m[1].e_nu,
            "E3_u": m[2].e_u, "E3_nu": m[2].e_nu,
            "F": s.F, "G": s.G,
        })
    return rows


def _write(text, sink):
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        Path(sink).write_text(text, encoding="utf-8")


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow(["" if row[c] is None else format_number(row[c]) for c in header])
    return buf.getvalue()


def _json_text(doc):
    return json.dumps(doc, indent=1) + "\n"


def emit_trajectory(traj: Trajectory, format: str = "csv", sink=sys.stdout) -> None:
    """Write sampled moments and the F/G ratios to ``sink`` (path or text stream)."""
    rows = trajectory_rows(traj)
    if format == "csv":
        text = _csv_text(TRAJECTORY_COLUMNS, rows)
    elif format == "json":
        text = _json_text([{k: _rounded(v) for k, v in r.items()} for r in rows])
    else:
        raise InvalidArgumentError(f"unknown format {format!r}")
    _write(text, sink)


def emit_raster(grid, format: str = "csv", sink=sys.stdout) -> None:
    """Write ``(mu, gamma, F)`` triples row-major; ``grid`` is a Raster or triples."""
    triples = grid.triples() if isinstance(grid, ar_baseline.Raster) else list(grid)
    rows = [{"mu": m, "gamma": g, "F": v} for m, g, v in triples]
    if format == "csv":
        text = _csv_text(("mu", "gamma", "F"), rows)
    elif format == "json":
        text = _json_text([{k: _rounded(v) for k, v in r.items()} for r in rows])
    else:
        raise InvalidArgumentError(f"unknown format {format!r}")
    _write(text, sink)


# --- dispatch ------------------------------------------------------------------


def _ar_summary(ar: ARScan) -> dict:
    intervals = ar_baseline.blocking_intervals(ar.gamma, ar.alpha, ar.mu_lo, ar.mu_hi, ar.step)
    try:
        nonneg = ar_baseline.nonnegative_threshold_report(ar.gamma, ar.mu_lo, ar.mu_hi, ar.tol)
    except ar_baseline.BracketError as exc:
        nonneg = {"error": str(exc)}
    return {
        "gamma": ar.gamma,
        "alpha": ar.alpha,
        "mu_lo": ar.mu_lo,
        "mu_hi": ar.mu_hi,
        "blocking_intervals": [[_rounded(iv.lo), _rounded(iv.hi)] for iv in intervals],
        "min_alpha_nonnegative": {k: (_rounded(v) if isinstance(v, float) else v) for k, v in nonneg.items()},
        "min_alpha_linear": _rounded(ar_baseline.min_alpha_linear(ar.gamma, ar.mu_lo, ar.mu_hi, ar.tol)),
    }


def _run_ar(cfg: RunConfig, out):
    ar = cfg.ar
    r = ar_baseline.raster(ar.raster_mu, ar.raster_gamma, ar.alpha, ar.n_mu, ar.n_gamma)
    summary = _ar_summary(ar)
    nonneg = summary["min_alpha_nonnegative"]
    if "computed" in nonneg and not nonneg["agrees"]:
        log.info(
            "non-negativity threshold: computed %s, published %s (difference %s)",
            nonneg["computed"], nonneg["published"], nonneg["difference"],
        )
    if cfg.format == "json":
        doc = dict(summary)
        doc["raster"] = [{"mu": _rounded(m), "gamma": _rounded(g), "F": _rounded(v)} for m, g, v in r.triples()]
        _write(_json_text(doc), out)
        return
    emit_raster(r, "csv", out)
    if not hasattr(out, "write"):
        path = Path(out)
        _write(_json_text(summary), path.with_name(path.stem + ".summary.json"))


def _run_one(cfg: RunConfig, out) -> None:
    if cfg.mode == "ar-scan":
        _run_ar(cfg, out)
        return
    if cfg.mode == "case-study":
        log.info("case study %s%s", cfg.case, f" ({cfg.variant})" if cfg.variant else "")
        traj = run_case_study(cfg.case, cfg.params, cfg.settings, cfg.grid, variant=cfg.variant).trajectory
    else:
        traj = integrate(build_initial(cfg.profiles, cfg.grid), cfg.params, cfg.settings)
    for c in traj.crossings:
        log.info("regime switch: E%d_%s crossed 1/2 at t=%g", c.subsystem, c.moment[2:], c.t)
    emit_trajectory(traj, cfg.format, out)


def _sweep_point(args):
    index, raw, path = args
    cfg = config_from_dict(raw)
    _run_one(cfg, path)
    return index


def _run_sweep(cfg: RunConfig, out_dir) -> None:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    jobs, manifest = [], []
    for i, (overrides, raw) in enumerate(cfg.sweep.points()):
        fmt = raw.get("output", {}).get("format", "csv")
        path = out_dir / f"point_{i:04d}.{fmt}"
        jobs.append((i, raw, str(path)))
        manifest.append({"index": i, "overrides": overrides, "mode": raw.get("mode"), "path": path.name})
    if cfg.sweep.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.sweep.workers) as pool:
            for i in pool.map(_sweep_point, jobs):
                log.info("sweep point %d done", i)
    else:
        for job in jobs:
            log.info("sweep point %d done", _sweep_point(job))
    (out_dir / "manifest.json").write_text(_json_text(manifest), encoding="utf-8")


def run(config: RunConfig, out=None) -> int:
    """Execute ``config``; returns the process exit code.

    0 success, 1 validation error, 2 integration diagnostic, 3 I/O error.
    Diagnostics go to the logger (stderr); data goes only to the output sink.
    """
    out = out if out is not None else (config.out if config.out is not None else sys.stdout)
    try:
        if config.mode == "sweep":
            if hasattr(out, "write"):
                log.error("sweep mode needs an output directory (--out)")
                return EXIT_VALIDATION
            _run_sweep(config, out)
        else:
            _run_one(config, out)
    except (ConfigError, InvalidArgumentError) as exc:
        log.error("invalid configuration: %s", exc)
        return EXIT_VALIDATION
    except IntegrationDiagnosticError as exc:
        log.error("integration diagnostic: %s", exc)
        return EXIT_INTEGRATION
    except OSError as exc:
        log.error("I/O error: %s", exc)
        return EXIT_IO
    return EXIT_OK


def _parse_value(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _collect_overrides(extra):
    overrides = {}
    it = iter(extra)
    for tok in it:
        if not tok.startswith("--") or "." not in tok:
            raise ConfigError(tok, "unrecognised argument")
        key, sep, val = tok[2:].partition("=")
        if not sep:
            try:
                val = next(it)
            except StopIteration:
                raise ConfigError(key, "override needs a value") from None
        overrides[key] = _parse_value(val)
    return overrides


def build_arg_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="political-kinetics",
        description="Kinetic model of political competition and innovation blocking.",
        epilog="Dotted overrides such as --params.beta=0.2 or --integration.dt 0.005 "
        "replace keys of the JSON configuration.",
    )
    ap.add_argument("--mode", choices=MODES)
    ap.add_argument("--config", help="JSON configuration file")
    ap.add_argument("--out", help="output file (directory for sweeps); default stdout")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--case", choices=CASE_IDS)
    ap.add_argument("--variant", choices=list(CASE_V_VARIANTS), help="cluster variant for case V")
    ap.add_argument("-v", "--verbose", action="store_true")
    return ap


def main(argv=None) -> int:
    ap = build_arg_parser()
    args, extra = ap.parse_known_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        overrides = _collect_overrides(extra)
        for flag, key in (("mode", "mode"), ("out", "output.path"), ("format", "output.format"), ("case", "case"),
                          ("variant", "variant")):
            if getattr(args, flag) is not None:
                overrides[key] = getattr(args, flag)
        text = "{}"
        if args.config:
            try:
                text = Path(args.config).read_text(encoding="utf-8")
            except OSError as exc:
                log.error("cannot read config: %s", exc)
                return EXIT_IO
        cfg = parse_config(text, overrides)
    except ConfigError as exc:
        log.error("invalid configuration: %s", exc)
        return EXIT_VALIDATION
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
