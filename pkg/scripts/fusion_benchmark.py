#!/usr/bin/env python3
"""Time the fused idempotent against the inductive one for every tableau of size m.

Writes one JSON line per (lambda, T) to stdout:

    python scripts/fusion_benchmark.py --m 5 --r 1/2 --s 5
"""
from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from rsfusion.exactring import Params, rational
from rsfusion.fusion import DEFAULT_MAX_M, fused_idempotent, psi
from rsfusion.hecke import jm_idempotent
from rsfusion.tableaux import all_standard_tableaux


@dataclass(frozen=True)
class BenchConfig:
    m: int = 4
    r: str = "2"
    s: str = "3"
    max_m: int = DEFAULT_MAX_M


def run(cfg: BenchConfig) -> list[dict]:
    params = Params(rational(cfg.r), rational(cfg.s))
    t0 = time.perf_counter()
    psi(cfg.m, params)
    build = time.perf_counter() - t0
    rows = []
    for lam, T in all_standard_tableaux(cfg.m):
        t1 = time.perf_counter()
        fused = fused_idempotent(lam, T, params, cfg.max_m)
        t2 = time.perf_counter()
        inductive = jm_idempotent(lam, T, params)
        t3 = time.perf_counter()
        rows.append({
            "lambda": str(lam),
            "tableau": str(T),
            "equal": fused == inductive,
            "terms": len(fused.terms),
            "fusion_ms": round(1000 * (t2 - t1), 2),
            "inductive_ms": round(1000 * (t3 - t2), 2),
        })
    rows.insert(0, {"config": asdict(cfg), "psi_build_ms": round(1000 * build, 2)})
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=BenchConfig.m)
    ap.add_argument("--r", default=BenchConfig.r)
    ap.add_argument("--s", default=BenchConfig.s)
    ap.add_argument("--max-m", type=int, default=BenchConfig.max_m)
    a = ap.parse_args()
    for row in run(BenchConfig(a.m, a.r, a.s, a.max_m)):
        print(json.dumps(row))


if __name__ == "__main__":
    main()
