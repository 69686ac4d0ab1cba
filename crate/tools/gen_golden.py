#!/usr/bin/env python3
"""Generate the committed golden-value file data/golden.csv.

Evaluates zeta, zeta', zeta'', Gamma, LogGamma (continuous branch) and
digamma at 25 fixed verification points with mpmath at 40 significant
digits, then writes one CSV row per (point, quantity) pair.  The engine
test suite compares double-precision evaluations against these rows.
"""

import csv
import os
import sys

from mpmath import mp

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
import refmath  # noqa: E402

mp.dps = 40

# 25 fixed verification points (sigma, rho).  Coverage: the critical line
# including a near-zero ordinate and a high ordinate, the full sweep-grid
# sigma range, near-edge-of-strip values, points outside the strip, and
# small rho.
POINTS = [
    ("0.5", "14.134725"),   # just off the first zero ordinate
    ("0.5", "0.5"),
    ("0.5", "6"),
    ("0.5", "14"),
    ("0.5", "25"),
    ("0.5", "33"),
    ("0.5", "50"),
    ("0.5", "100"),
    ("0.1", "2"),
    ("0.1", "47"),
    ("0.25", "12"),
    ("0.25", "40.9187"),
    ("0.3", "50"),
    ("0.4", "8"),
    ("0.4", "21"),
    ("0.6", "14.2"),
    ("0.6", "21"),
    ("0.7", "30"),
    ("0.75", "2"),
    ("0.75", "33"),
    ("0.9", "5"),
    ("0.9", "47"),
    ("0.05", "10"),
    ("0.95", "60"),
    ("1.5", "10"),
]

assert len(POINTS) == 25


def fmt(x):
    """Format an mpmath real as a double-round-trippable decimal."""
    return "%.17e" % float(x)


def main():
    out_path = os.path.join(os.path.dirname(os.path.abspath(__file__)),
                            os.pardir, "data", "golden.csv")
    out_path = os.path.normpath(out_path)
    os.makedirs(os.path.dirname(out_path), exist_ok=True)
    rows = []
    for sig_s, rho_s in POINTS:
        sigma = mp.mpf(sig_s)
        rho = mp.mpf(rho_s)
        s = mp.mpc(sigma, rho)
        z0, z1, z2 = refmath.zeta_jet(s)
        values = [
            ("zeta", z0),
            ("zeta_d1", z1),
            ("zeta_d2", z2),
            ("gamma", mp.gamma(s)),
            ("loggamma", mp.loggamma(s)),
            ("digamma", mp.digamma(s)),
        ]
        for name, v in values:
            rows.append((sig_s, rho_s, fmt(mp.re(v)), fmt(mp.im(v)), name))
    with open(out_path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["sigma", "rho", "re", "im", "quantity"])
        w.writerows(rows)
    print(f"wrote {out_path}: {len(rows)} rows")


if __name__ == "__main__":
    main()
