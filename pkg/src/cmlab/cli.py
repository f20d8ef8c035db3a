"""Command line runner for the verification suites.

    cmlab <suite> [--config FILE] [--n INT] [--kmax INT] [--depth INT] [--json OUT] [--jobs INT]

Exit status is 0 when every check passes, 1 when some check fails and 2 on a
configuration error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence

from .suites import SUITES, Check, SuiteConfig, execute, expand

log = logging.getLogger("cmlab")

CONFIG_KEYS = {"B", "cycle", "suite", "bounds", "path"}
BOUND_KEYS = {"n_min", "n_max", "kmax", "depth", "paths", "random_matrices", "seed"}


class ConfigError(ValueError):
    pass


def _int_matrix(B: Any) -> tuple:
    if not isinstance(B, list) or not B or any(not isinstance(r, list) or len(r) != len(B) for r in B):
        raise ConfigError("B must be a square list of integer rows")
    if any(not isinstance(x, int) or isinstance(x, bool) for r in B for x in r):
        raise ConfigError("B entries must be integers")
    n = len(B)
    for i in range(n):
        if B[i][i] != 0:
            raise ConfigError("B must have zero diagonal")
        for j in range(n):
            if (B[i][j] > 0) != (B[j][i] < 0) and B[i][j] != 0:
                raise ConfigError("B must be sign-skew-symmetric")
    return tuple(tuple(r) for r in B)


def load_config(suite: str, path: Optional[str], args: argparse.Namespace) -> SuiteConfig:
    data: Dict[str, Any] = {}
    if path:
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read config: {e}") from e
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)}")
        if data.get("suite", suite) != suite:
            raise ConfigError(f"config is for suite {data['suite']!r}, not {suite!r}")
    bounds = data.get("bounds", {})
    if not isinstance(bounds, dict) or set(bounds) - BOUND_KEYS:
        raise ConfigError(f"bounds must be an object with keys among {sorted(BOUND_KEYS)}")
    for k, v in bounds.items():
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ConfigError(f"bound {k} must be a nonnegative integer")
    cfg = SuiteConfig(suite, **bounds)
    if "B" in data:
        cfg.B = _int_matrix(data["B"])
        from .cartan import cartan_companion
        try:
            cartan_companion(cfg.B)
        except ValueError as e:
            raise ConfigError(str(e)) from e
    if "cycle" in data:
        from .quiver import CycleQuiver
        try:
            cfg.cycle = CycleQuiver.from_string(data["cycle"]).render()
        except (ValueError, TypeError) as e:
            raise ConfigError(f"bad cycle orientation: {e}") from e
    if "path" in data:
        p = data["path"]
        if cfg.B is None or not isinstance(p, list) or not all(isinstance(k, int) and 1 <= k <= len(cfg.B) for k in p):
            raise ConfigError("path needs B and must list mutation directions 1..n")
        cfg.path = tuple(p)
    # --n pins the rank range to a single value
    if args.n is not None:
        if args.n < 2:
            raise ConfigError("--n must be at least 2")
        cfg.n_min = cfg.n_max = args.n
    for k in ("kmax", "depth"):
        v = getattr(args, k)
        if v is not None:
            if v < 0:
                raise ConfigError(f"--{k} must be nonnegative")
            setattr(cfg, k, v)
    return cfg


def _run_one(check: Check) -> Dict[str, Any]:
    t = time.perf_counter()
    try:
        ok, info = execute(check)
        status = "pass" if ok else "fail"
    except Exception as e:  # a crash is a failure with its message as witness
        status, info = "fail", {"error": f"{type(e).__name__}: {e}"}
    witness = dict(check.replay)
    if status == "fail" and info:
        witness["detail"] = info
    return {"id": check.id, "anchor": check.anchor, "status": status, "witness": witness,
            "wall_time": round(time.perf_counter() - t, 4)}


def run_checks(checks: Sequence[Check], jobs: int = 1) -> List[Dict[str, Any]]:
    if jobs > 1 and len(checks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            records = list(ex.map(_run_one, checks, chunksize=max(1, len(checks) // (4 * jobs))))
    else:
        records = [_run_one(c) for c in checks]
    return sorted(records, key=lambda r: r["id"])


def summarize(suite: str, records: Sequence[Dict[str, Any]]) -> str:
    failed = [r for r in records if r["status"] != "pass"]
    total = sum(r["wall_time"] for r in records)
    lines = [f"{suite}: {len(records) - len(failed)}/{len(records)} passed in {total:.2f}s"]
    for r in failed:
        lines.append(f"  FAIL {r['id']} ({r['anchor']})")
        lines.append(f"       witness: {json.dumps(r['witness'])}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cmlab", description="Run cluster/minor verification suites.")
    p.add_argument("suite", help="one of: " + ", ".join(SUITES))
    p.add_argument("--config", help="JSON file with keys B, cycle, suite, bounds, path")
    p.add_argument("--n", type=int, help="restrict to rank n")
    p.add_argument("--kmax", type=int, help="largest Coxeter power checked")
    p.add_argument("--depth", type=int, help="mutation depth bound")
    p.add_argument("--json", dest="json_out", help="write records to this file")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        if args.suite not in SUITES:
            raise ConfigError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
        if args.jobs < 1:
            raise ConfigError("--jobs must be positive")
        cfg = load_config(args.suite, args.config, args)
        checks = expand(cfg)
    except (ConfigError, ValueError, KeyError) as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    log.info("running %d checks", len(checks))
    records = run_checks(checks, args.jobs)
    print(summarize(args.suite, records))
    if args.json_out:
        with open(args.json_out, "w") as fh:
            json.dump(records, fh, indent=1)
    return 0 if all(r["status"] == "pass" for r in records) else 1


if __name__ == "__main__":
    sys.exit(main())
