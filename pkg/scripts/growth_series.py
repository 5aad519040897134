"""Sphere sizes |{g : l(g) = n}| for a list of Coxeter matrices.

    python scripts/growth_series.py --radius 8 A3 B3 tri236
"""

import argparse
import csv
import sys

from coxref.config import GrowthConfig
from coxref.core import CoxeterGroup, resolve_matrix
from coxref.errors import BallTooLarge


def growth(spec, radius, cap):
    group = CoxeterGroup(resolve_matrix(spec), ball_cap=cap)
    try:
        return group.sphere_sizes(radius)
    except BallTooLarge:
        return None


def main(argv=None):
    cfg = GrowthConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("matrices", nargs="*", default=list(cfg.matrices))
    ap.add_argument("--radius", type=int, default=cfg.radius)
    ap.add_argument("--cap", type=int, default=cfg.limits.ball_elements)
    args = ap.parse_args(argv)

    out = csv.writer(sys.stdout)
    out.writerow(["matrix"] + [f"n={k}" for k in range(args.radius + 1)] + ["total"])
    for spec in args.matrices:
        sizes = growth(spec, args.radius, args.cap)
        if sizes is None:
            out.writerow([spec, f"exceeds cap {args.cap}"])
            continue
        out.writerow([spec] + sizes + [sum(sizes)])


if __name__ == "__main__":
    main()
