#!/usr/bin/env python3
"""Convergence of the curvature power series for the lightlike volume.

For each curvature sign and a few edge-length pairs, prints the absolute
error of the truncated series against the closed form as the order grows,
plus the flat-limit drift at tiny curvature.

Usage: python scripts/series_convergence.py [--kmax 24]
"""

import argparse
import sys

from dualtet import lightlike_volume, lightlike_volume_series


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmax", type=int, default=24)
    ap.add_argument("--pairs", default="0.2:0.2,0.4:0.3,0.6:0.5")
    args = ap.parse_args()

    pairs = [tuple(float(x) for x in tok.split(":")) for tok in args.pairs.split(",")]
    print("lambda,alpha,beta,order,abs_error")
    for lam in (-1, 1):
        for a, b in pairs:
            closed = lightlike_volume(lam, a, b)
            for k in range(1, args.kmax + 1):
                err = abs(lightlike_volume_series(lam, a, b, k) - closed)
                print(f"{lam},{a},{b},{k},{err!r}")
    for eps in (1e-4, 1e-6, 1e-8):
        drift = abs(lightlike_volume_series(eps, 1.0, 1.0, 10)
                    - lightlike_volume(0, 1.0, 1.0))
        sys.stderr.write(f"flat-limit drift at lambda={eps:g}: {drift:.3e}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
