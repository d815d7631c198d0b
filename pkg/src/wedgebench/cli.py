"""Command-line orchestration: TOML run configuration, JSON reports, word
parsing for the symbolic algebra and suite execution with deterministic
seeding.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 usage or
configuration error, 3 numeric error (non-convergent quadrature or solve).
``WEDGEBENCH_THREADS`` bounds the worker pool used by multi-suite runs;
reports are assembled by the single main thread regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

try:
    import tomllib
except ModuleNotFoundError:  # python < 3.11
    import tomli as tomllib

from . import __version__
from .errors import ConfigError, NumericError, WedgebenchError
from .suites import SUITE_ALIASES, SUITES, run_checks
from .zf import ZFGenerator, annihilator, creator

__all__ = ["RunConfig", "Report", "run_suite", "parse_word", "main"]

_KNOWN_TOP_KEYS = {"suite", "seed", "out_dir", "tolerances"}
_KNOWN_TABLES = {
    "dpi": {"m", "lambda", "mu", "grid_n", "p_max"},
    "model": {"model", "B", "poles"},
    "zf": {"break_s", "confluence_seeds"},
    "entropy": {"R", "dR_min", "dR_max", "points"},
    "kms": {"variant"},
    "crossing": {"model", "k", "samples"},
    "unitarize": {"order", "dims", "seeds"},
}
_SUITE_PARAM_TABLE = {
    "bootstrap": "model",
    "zf": "zf",
    "crossing": "crossing",
    "kms": "kms",
    "entropy": "entropy",
    "dpi": "dpi",
    "unitarize": "unitarize",
}


@dataclass
class RunConfig:
    """Validated run configuration.

    ``tolerances`` maps ``"<suite>.<check>"`` to an override; ``params``
    holds the per-module tables.  Unknown keys anywhere are rejected at
    parse time with the offending key named.
    """

    suites: list
    seed: int = 7
    out_dir: str | None = None
    tolerances: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        expanded = []
        for s in self.suites:
            if s in SUITE_ALIASES:
                expanded.extend(SUITE_ALIASES[s])
            elif s in SUITES:
                expanded.append(s)
            else:
                raise ConfigError(f"unknown suite '{s}'")
        if not expanded:
            raise ConfigError("empty suite list")
        seen = []
        for s in expanded:
            if s not in seen:
                seen.append(s)
        self.suites = seen
        for key, tol in self.tolerances.items():
            if not isinstance(tol, (int, float)) or tol <= 0:
                raise ConfigError(f"tolerance override '{key}' must be positive")

    def echo(self) -> dict:
        return {
            "suite": list(self.suites),
            "seed": self.seed,
            "tolerances": dict(sorted(self.tolerances.items())),
            "params": {k: dict(sorted(v.items())) for k, v in sorted(self.params.items())},
        }

    @classmethod
    def from_toml(cls, path, suites=None, seed=None, out_dir=None) -> "RunConfig":
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)
        return cls.from_mapping(raw, suites=suites, seed=seed, out_dir=out_dir)

    @classmethod
    def from_mapping(cls, raw: dict, suites=None, seed=None, out_dir=None) -> "RunConfig":
        params = {}
        tolerances = {}
        cfg_suites = None
        cfg_seed = 7
        cfg_out = None
        for key, value in raw.items():
            if key in _KNOWN_TABLES:
                unknown = set(value) - _KNOWN_TABLES[key]
                if unknown:
                    raise ConfigError(
                        f"unknown key '{key}.{sorted(unknown)[0]}' in configuration"
                    )
                params[key] = dict(value)
            elif key == "suite":
                cfg_suites = [value] if isinstance(value, str) else list(value)
            elif key == "seed":
                cfg_seed = int(value)
            elif key == "out_dir":
                cfg_out = str(value)
            elif key == "tolerances":
                tolerances = {str(k): float(v) for k, v in value.items()}
            elif key not in _KNOWN_TOP_KEYS:
                raise ConfigError(f"unknown key '{key}' in configuration")
        return cls(
            suites=suites or cfg_suites or [],
            seed=cfg_seed if seed is None else seed,
            out_dir=out_dir or cfg_out,
            tolerances=tolerances,
            params=params,
        )


@dataclass
class Report:
    """Self-contained run record: every check with residual, tolerance and
    verdict, plus the config echo the run can be repeated from.  The wall
    time field is the only part excluded from byte-for-byte determinism."""

    suite: str
    checks: list
    config: dict
    wall_time_s: float
    version: str = __version__

    @property
    def passed(self) -> bool:
        return all(c["pass"] for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "version": self.version,
            "config": self.config,
            "checks": self.checks,
            "all_pass": self.passed,
            "wall_time_s": self.wall_time_s,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _apply_tolerance_overrides(suite: str, checks, overrides: dict) -> list:
    out = []
    for c in checks:
        tol = overrides.get(f"{suite}.{c.name}", c.tolerance)
        d = c.as_dict()
        d["tolerance"] = float(tol)
        d["pass"] = d["residual"] <= float(tol)
        out.append(d)
    return out


def _run_single(suite: str, config: RunConfig):
    rng = np.random.default_rng(config.seed)
    params = config.params.get(_SUITE_PARAM_TABLE.get(suite, suite), {})
    t0 = time.perf_counter()
    checks, artifacts = run_checks(suite, params, rng)
    elapsed = time.perf_counter() - t0
    dicts = _apply_tolerance_overrides(suite, checks, config.tolerances)
    return Report(suite, dicts, config.echo(), elapsed), artifacts


def run_suite(config: RunConfig) -> list:
    """Execute every configured suite; returns the list of `Report`s.

    Suites run as independent work items over a bounded thread pool
    (``WEDGEBENCH_THREADS``, default 1); reports and artifacts are written
    by the calling thread only.
    """
    workers = max(1, int(os.environ.get("WEDGEBENCH_THREADS", "1")))
    results = {}
    artifacts_all = {}
    if workers == 1 or len(config.suites) == 1:
        for s in config.suites:
            results[s], artifacts_all[s] = _run_single(s, config)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = {s: pool.submit(_run_single, s, config) for s in config.suites}
            for s, fut in futures.items():
                results[s], artifacts_all[s] = fut.result()
    reports = [results[s] for s in config.suites]
    if config.out_dir:
        out = Path(config.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            (out / f"report_{rep.suite}.json").write_text(rep.to_json())
        for s, artifacts in artifacts_all.items():
            for name, text in artifacts.items():
                (out / name).write_text(text)
    return reports


# ---------------------------------------------------------------------------
# word parser (front end to the symbolic algebra)
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"Z(\*)?\(")
_NUMBER = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def parse_word(text: str) -> list:
    """Parse ``word := term+``, ``term := "Z*(" num ")" | "Z(" num ")"``.

    Whitespace between terms is ignored.  Raises `ConfigError` carrying the
    1-based column of the first offending character.  Round-trips with the
    expression printer.
    """
    out: list[ZFGenerator] = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ConfigError(f"syntax error at column {pos + 1}: expected Z( or Z*(")
        is_creator = m.group(1) is not None
        pos = m.end()
        num = _NUMBER.match(text, pos)
        if not num:
            raise ConfigError(f"syntax error at column {pos + 1}: expected a number")
        value = float(num.group(0))
        pos = num.end()
        if pos >= n or text[pos] != ")":
            raise ConfigError(f"syntax error at column {pos + 1}: expected ')'")
        pos += 1
        out.append(creator(value) if is_creator else annihilator(value))
    return out


# ---------------------------------------------------------------------------
# argparse front end
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="TOML run configuration")
    common.add_argument(
        "--out-dir", default=argparse.SUPPRESS, help="directory for JSON reports and CSV artifacts"
    )
    common.add_argument(
        "--seed", type=int, default=argparse.SUPPRESS, help="seed for every randomised fixture"
    )
    p = argparse.ArgumentParser(
        prog="wedgebench",
        description="verification suites for causality, scattering and wedge localization checks",
        parents=[common],
    )
    sub = p.add_subparsers(dest="command")

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    for name in ("kk", "causality", "bootstrap", "dispersion", "verify-all"):
        add(name)
    zp = add("zf")
    zp.add_argument("--word", help="normal-order a Z/Z* word instead of running checks")
    zp.add_argument("--model", default="ising", help="scattering model for --word")
    zp.add_argument("--break-s", action="store_true", help="negative control: run with a broken model")
    cp = add("crossing")
    cp.add_argument("--model", default="ising-energy")
    cp.add_argument("--k", type=int, default=1)
    cp.add_argument("--samples", type=int, default=50)
    kp = add("kms")
    kp.add_argument("--variant", choices=["free", "unruh", "all"], default="all")
    ep = add("entropy")
    ep.add_argument("--R", type=float, default=1.0)
    ep.add_argument("--dR-min", type=float, default=1e-4)
    ep.add_argument("--dR-max", type=float, default=1e-2)
    ep.add_argument("--points", type=int, default=9)
    dp = add("dpi")
    dp.add_argument("--m", type=float, default=1.0)
    dp.add_argument("--lambda", dest="lam", type=float, default=0.5)
    dp.add_argument("--mu", type=float, default=1.0)
    dp.add_argument("--grid-n", type=int, default=200)
    dp.add_argument("--p-max", type=float, default=8.0)
    up = add("unitarize")
    up.add_argument("--order", type=int, default=4)
    up.add_argument("--dim", type=int, default=3)
    return p


def _params_from_args(args) -> dict:
    params = {}
    cmd = args.command
    if cmd == "zf" and getattr(args, "break_s", False):
        params.setdefault("zf", {})["break_s"] = True
    if cmd == "crossing":
        params["crossing"] = {"model": args.model, "k": args.k, "samples": args.samples}
    if cmd == "kms":
        params["kms"] = {"variant": args.variant}
    if cmd == "entropy":
        params["entropy"] = {
            "R": args.R,
            "dR_min": args.dR_min,
            "dR_max": args.dR_max,
            "points": args.points,
        }
    if cmd == "dpi":
        params["dpi"] = {
            "m": args.m,
            "lambda": args.lam,
            "mu": args.mu,
            "grid_n": args.grid_n,
            "p_max": args.p_max,
        }
    if cmd == "unitarize":
        params["unitarize"] = {"order": args.order, "dims": [args.dim]}
    return params


def _print_word(args) -> int:
    from . import scatfunc, zf

    models = {
        "ising": scatfunc.ising,
        "free": scatfunc.free,
        "sinh-gordon": lambda: scatfunc.sinh_gordon(0.4),
    }
    if args.model not in models:
        raise ConfigError(f"unknown model '{args.model}' for --word")
    word = parse_word(args.word)
    expr = zf.normal_order(word, models[args.model]())
    print(expr)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command is None:
            raise ConfigError("no suite given; try 'wedgebench verify-all'")
        if args.command == "zf" and getattr(args, "word", None):
            return _print_word(args)
        cli_params = _params_from_args(args)
        cfg_path = getattr(args, "config", None)
        out_dir = getattr(args, "out_dir", None)
        seed = getattr(args, "seed", None)
        if cfg_path:
            config = RunConfig.from_toml(
                cfg_path,
                suites=[args.command],
                seed=seed,
                out_dir=out_dir,
            )
        else:
            config = RunConfig(
                suites=[args.command],
                seed=7 if seed is None else seed,
                out_dir=out_dir,
            )
        for table, values in cli_params.items():
            config.params.setdefault(table, {}).update(values)
        reports = run_suite(config)
    except ConfigError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except NumericError as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    except WedgebenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ok = True
    for rep in reports:
        for c in rep.checks:
            status = "pass" if c["pass"] else "FAIL"
            print(f"[{rep.suite}] {c['name']}: residual={c['residual']:.3e} "
                  f"tol={c['tolerance']:.3e} {status}")
        ok = ok and rep.passed
    return 0 if ok else 1


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
