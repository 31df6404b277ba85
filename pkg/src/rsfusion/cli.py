"""Command-line entry point.

Exit codes: 0 all checks pass, 1 some check failed, 2 invalid input.
Defaults are r = 2, s = 3; every golden value in the test-suite uses them.
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .exactring import Params, ParamsError, rational
from .fusion import DEFAULT_MAX_M, fused_idempotent, verify_fusion_equals_jm
from .hecke import jm_idempotent, longest_square_holds, relation_checks
from .qalgebra import (
    braid_checks,
    defining_rep,
    rcheck_at,
    relation_suite,
    spectral_ybe,
    special_point_identification,
    tensor_rep,
    two_parameter_ybe,
)
from .schurweyl import module_of, schur_weyl_audit
from .tableaux import Partition, StandardTableau

log = logging.getLogger("rsfusion")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    params: Params
    n: int = 2
    m: int | None = None
    lam: Partition | None = None
    tableau: StandardTableau | None = None
    method: str = "fusion"
    format: str = "text"
    seed: int = 0
    max_m: int = DEFAULT_MAX_M

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        try:
            params = Params(rational(args.r), rational(args.s))
        except ParamsError as exc:
            raise UsageError(str(exc)) from exc
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        lam = T = None
        try:
            if getattr(args, "lam", None):
                lam = Partition.parse(args.lam)
            if getattr(args, "tableau", None):
                T = StandardTableau.parse(args.tableau)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if lam is not None and T is not None and T.shape != lam:
            raise UsageError(f"tableau {T} has shape {T.shape}, not {lam}")
        m = args.m
        if m is not None and lam is not None and lam.weight != m:
            raise UsageError(f"partition {lam} is not a partition of m={m}")
        if m is None and lam is not None:
            m = lam.weight
        if args.n < 2:
            raise UsageError("n must be at least 2")
        if m is not None and m < 1:
            raise UsageError("m must be positive")
        max_m = args.max_m_override if args.max_m_override is not None else DEFAULT_MAX_M
        return cls(params, args.n, m, lam, T, args.method, args.format, args.seed, max_m)


def random_points(rng: random.Random, count: int, arity: int) -> list[tuple[mpq, ...]]:
    """Seeded small nonzero rationals, pairwise distinct within each tuple."""
    out = []
    while len(out) < count:
        pt = tuple(mpq(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 9)) for _ in range(arity))
        if len(set(pt)) == arity:
            out.append(pt)
    return out


def _emit(config: RunConfig, text_lines: list[str], payload) -> None:
    if config.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        for line in text_lines:
            print(line)


def _status_lines(results: dict[str, bool], prefix: str = "") -> list[str]:
    return [f"{prefix}{'PASS' if ok else 'FAIL'}  {name}" for name, ok in results.items()]


def cmd_relations(config: RunConfig) -> int:
    n, p = config.n, config.params
    m = config.m or 3
    results: dict[str, bool] = {}
    for k, ok in relation_suite(defining_rep(n, p), n, p).items():
        results[f"defining rep {k}"] = ok
    for k, ok in relation_suite(tensor_rep(n, m, p), n, p).items():
        results[f"V^{m} {k}"] = ok
    if m >= 2:
        for k, ok in braid_checks(n, m, p).items():
            results[f"R-check {k} on V^{m}"] = ok
        ops = tensor_rep(n, m, p).values()
        results[f"R-check commutes with U on V^{m}"] = all(
            rcheck_at(i, n, m, p) @ g == g @ rcheck_at(i, n, m, p) for i in range(1, m) for g in ops
        )
        for k, ok in relation_checks(m, p).items():
            results[f"H_{m} {k}"] = ok
    notes = []
    if m >= 3:
        linear = longest_square_holds(m, m, p, exponent=lambda k: k - 1)
        bad = [k for k, ok in linear.items() if not ok]
        notes.append("T_wk^2 = (r/s)^(k-1) y_1..y_k: "
                     + ("holds" if not bad else f"fails for k={','.join(map(str, bad))}"))
    rng = random.Random(config.seed)
    results["spectral YBE at 5 seeded points"] = all(
        spectral_ybe(n, z, w, p) for z, w in random_points(rng, 5, 2))
    results["two-parameter YBE at 5 seeded triples"] = all(
        two_parameter_ybe(n, x, y, z, p) for x, y, z in random_points(rng, 5, 3))
    ident = special_point_identification(n, p)
    results["special-point images = {S2, L2}"] = ident["as set"]
    results["image at one point = kernel at the other"] = (
        ident["image(1,s/r) == kernel(1,r/s)"] and ident["image(1,r/s) == kernel(1,s/r)"])
    results["S2 and L2 are U-invariant"] = ident["S2 invariant"] and ident["L2 invariant"]
    lines = [f"relations n={n} m={m} ({p})"] + _status_lines(results)
    lines += [f"note: {t}" for t in notes]
    lines.append(f"note: image(1,s/r) = {ident['image(1,s/r)']}, image(1,r/s) = {ident['image(1,r/s)']}")
    payload = {"n": n, "m": m, "r": str(p.r), "s": str(p.s), "results": results,
               "special_points": {k: v for k, v in ident.items()}, "notes": notes}
    _emit(config, lines, payload)
    return EXIT_OK if all(results.values()) else EXIT_FAIL


def _need_tableau(config: RunConfig):
    if config.lam is None or config.tableau is None:
        raise UsageError("--lambda and --tableau are required")
    if config.lam.weight > config.max_m and config.method in ("fusion", "both"):
        raise UsageError(
            f"fusion is capped at m={config.max_m}; pass --max-m-override to raise it")


def cmd_idempotent(config: RunConfig) -> int:
    _need_tableau(config)
    lam, T, p = config.lam, config.tableau, config.params
    payload: dict = {"lambda": str(lam), "tableau": str(T), "r": str(p.r), "s": str(p.s)}
    lines = []
    status = EXIT_OK
    elems = {}
    if config.method in ("fusion", "both"):
        elems["fusion"] = fused_idempotent(lam, T, p, max_m=config.max_m)
    if config.method in ("jm", "both"):
        elems["jm"] = jm_idempotent(lam, T, p)
    for name, e in elems.items():
        payload[name] = e.to_dict()
        lines.append(f"{name}: {json.dumps(e.to_dict())}")
    if config.method == "both":
        equal = elems["fusion"] == elems["jm"]
        payload["equal"] = equal
        lines.append(f"equal={'true' if equal else 'false'}")
        status = EXIT_OK if equal else EXIT_FAIL
    if config.format == "json":
        print(json.dumps(payload if config.method == "both" else next(iter(elems.values())).to_dict()))
    else:
        for line in lines:
            print(line)
    return status


def cmd_module(config: RunConfig) -> int:
    if config.lam is None or config.tableau is None:
        raise UsageError("--lambda and --tableau are required")
    method = "jm" if config.method == "both" else config.method
    rep = module_of(config.lam, config.tableau, config.n, config.params, method)
    lines = [
        f"module lambda={rep.lam} tableau={rep.tableau} n={rep.n}",
        f"rank {rep.rank} (predicted {rep.predicted_dim})",
        "hw " + ("none" if rep.highest_weight is None else "(" + ",".join(map(str, rep.highest_weight)) + ")"),
    ]
    if rep.hw_eigenvalues:
        lines.append("omega eigenvalues " + " ".join(f"({a},{b})" for a, b in rep.hw_eigenvalues))
    lines.append("weights " + " ".join(f"{','.join(map(str, mu))}:{k}" for mu, k in rep.weight_multiplicities.items()))
    lines += _status_lines(rep.flags)
    _emit(config, lines, rep.to_dict(with_vectors=True))
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_audit(config: RunConfig) -> int:
    if config.m is None:
        raise UsageError("--m is required")
    method = "jm" if config.method == "both" else config.method
    if method == "fusion" and config.m > config.max_m:
        raise UsageError(f"fusion is capped at m={config.max_m}; pass --max-m-override to raise it")
    rep = schur_weyl_audit(config.n, config.m, config.params, method)
    lines = [f"audit n={config.n} m={config.m} ({config.params}) method={method}"]
    for name, item in rep.items.items():
        extra = f" {item['value']} (expected {item['expected']})" if "value" in item else ""
        lines.append(f"{'PASS' if item['ok'] else 'FAIL'}  {name}{extra}")
    for mod in rep.modules:
        lines.append(
            f"{'PASS' if mod.ok else 'FAIL'}  module {mod.lam} [{mod.tableau}] rank {mod.rank}"
            f" = {mod.predicted_dim}")
    _emit(config, lines, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_fusion_check(config: RunConfig) -> int:
    if config.m is None:
        raise UsageError("--m is required")
    if config.m > config.max_m:
        raise UsageError(f"fusion is capped at m={config.max_m}; pass --max-m-override to raise it")
    shapes = {config.lam} if config.lam is not None else None
    results = verify_fusion_equals_jm(config.m, config.params, config.max_m, shapes)
    lines = [f"{'PASS' if c.equal else 'FAIL'}  {c.lam} [{c.tableau}] {c.millis:.1f} ms"
             + (f"  {c.error}" if c.error else "") for c in results]
    _emit(config, lines, [c.to_dict() for c in results])
    return EXIT_OK if all(c.equal for c in results) else EXIT_FAIL


def cmd_ybe(config: RunConfig) -> int:
    n, p = config.n, config.params
    rng = random.Random(config.seed)
    rows = []
    for z, w in random_points(rng, 5, 2):
        rows.append({"kind": "spectral", "point": [str(z), str(w)], "ok": spectral_ybe(n, z, w, p)})
    for x, y, z in random_points(rng, 5, 3):
        rows.append({"kind": "two-parameter", "point": [str(x), str(y), str(z)],
                     "ok": two_parameter_ybe(n, x, y, z, p)})
    lines = [f"{'PASS' if r['ok'] else 'FAIL'}  {r['kind']} YBE at ({', '.join(r['point'])})" for r in rows]
    _emit(config, lines, rows)
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAIL


COMMANDS = {
    "relations": cmd_relations,
    "idempotent": cmd_idempotent,
    "module": cmd_module,
    "audit": cmd_audit,
    "fusion-check": cmd_fusion_check,
    "ybe": cmd_ybe,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", default="2", help="parameter r as p/q (default 2)")
    common.add_argument("--s", default="3", help="parameter s as p/q (default 3)")
    common.add_argument("--n", type=int, default=2, help="dimension of V")
    common.add_argument("--m", type=int, default=None, help="tensor degree / Hecke rank")
    common.add_argument("--lambda", dest="lam", default=None, help='partition, e.g. "2,1"')
    common.add_argument("--tableau", default=None, help='standard tableau, e.g. "1,3;2"')
    common.add_argument("--method", choices=["fusion", "jm", "both"], default="fusion")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-m-override", type=int, default=None,
                        help=f"raise the fusion size cap (default m <= {DEFAULT_MAX_M})")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="rsfusion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    t0 = time.perf_counter()
    try:
        config = RunConfig.from_args(args)
        status = COMMANDS[args.command](config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    log.debug("%s finished in %.3f s", args.command, time.perf_counter() - t0)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
