#!/usr/bin/env python3
"""Sweep both volume formulas against the cubature oracle.

Writes one CSV row per (curvature, kind, alpha, beta) cell with the closed
form, the oracle value and their relative discrepancy, and prints the worst
cell at the end.

Usage: python scripts/volume_sweep.py [--grid 4] [--tol 1e-8] [--out sweep.csv]
"""

import argparse
import math
import sys
import time

import numpy as np

from dualtet import ideal_volume, lightlike_volume, volume_quadrature


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", type=int, default=4)
    ap.add_argument("--amin", type=float, default=0.2)
    ap.add_argument("--amax", type=float, default=1.1)
    ap.add_argument("--tol", type=float, default=1e-8)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    values = np.linspace(args.amin, args.amax, args.grid)
    rows = ["lambda,kind,alpha,beta,closed_form,oracle,rel_discrepancy"]
    worst = (0.0, None)
    t0 = time.time()
    for lam in (-1, 0, 1):
        for kind, closed in (("ideal", ideal_volume), ("lightlike", lightlike_volume)):
            for a in values:
                for b in values:
                    if lam == 1 and a + b >= math.pi - 1e-6:
                        continue
                    cf = closed(lam, float(a), float(b))
                    val, _err = volume_quadrature(kind, lam, float(a), float(b),
                                                  tol=args.tol)
                    rel = abs(cf - val) / max(abs(cf), 1e-12)
                    rows.append(f"{lam},{kind},{float(a)!r},{float(b)!r},"
                                f"{cf!r},{val!r},{rel!r}")
                    if rel > worst[0]:
                        worst = (rel, (lam, kind, float(a), float(b)))
    text = "\n".join(rows) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    sys.stderr.write(f"{len(rows) - 1} cells in {time.time() - t0:.1f}s; "
                     f"worst rel discrepancy {worst[0]:.3e} at {worst[1]}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
