#!/usr/bin/env python3
"""Run the Schur-Weyl audit over a grid of (n, m) and parameter pairs.

Prints a compact table, or JSON with --json. Exits 1 if any audit fails.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

from rsfusion.exactring import Params, rational
from rsfusion.schurweyl import schur_weyl_audit


@dataclass
class AuditGrid:
    pairs: list[tuple[int, int]] = field(
        default_factory=lambda: [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4)])
    params: list[tuple[str, str]] = field(
        default_factory=lambda: [("2", "3"), ("1/2", "5"), ("-3", "7")])
    method: str = "jm"


def run(grid: AuditGrid) -> list[dict]:
    out = []
    for r, s in grid.params:
        P = Params(rational(r), rational(s))
        for n, m in grid.pairs:
            t0 = time.perf_counter()
            rep = schur_weyl_audit(n, m, P, grid.method)
            out.append({
                "r": r, "s": s, "n": n, "m": m, "ok": rep.ok,
                "seconds": round(time.perf_counter() - t0, 3),
                "failed": [k for k, v in rep.items.items() if not v["ok"]]
                + [f"{x.lam} {x.tableau}" for x in rep.modules if not x.ok],
            })
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--method", choices=["jm", "fusion"], default="jm")
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    rows = run(AuditGrid(method=a.method))
    if a.json:
        print(json.dumps(rows, indent=2))
    else:
        for row in rows:
            status = "ok  " if row["ok"] else "FAIL"
            print(f"{status} r={row['r']:>4} s={row['s']:>2} n={row['n']} m={row['m']}"
                  f"  {row['seconds']:7.3f}s  {', '.join(row['failed'])}")
    return 0 if all(row["ok"] for row in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
