"""Run every verification report on every shipped model and print a summary table.

Exit status is 1 if any report has a violation.

    python scripts/verify_models.py
    python scripts/verify_models.py --models line cayley:B3 --checks 1 6 --json report.json
"""

import argparse
import json
import sys
import time

from coxref.config import VerifyConfig
from coxref.spaces import make_model, run_check


def sweep(cfg):
    rows = []
    for spec in cfg.models:
        model = make_model(spec)
        for check in cfg.checks:
            start = time.perf_counter()
            report = run_check(model, check, cfg.radius_for(spec))
            rows.append({"model": model.name, "elapsed": round(time.perf_counter() - start, 3),
                         **report.to_json()})
    return rows


def main(argv=None):
    base = VerifyConfig()
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--models", nargs="+", default=list(base.models))
    ap.add_argument("--checks", nargs="+", default=list(base.checks))
    ap.add_argument("--radius", type=int, default=base.radius)
    ap.add_argument("--line-radius", type=int, default=base.line_radius)
    ap.add_argument("--json", metavar="PATH", help="also dump the full reports")
    args = ap.parse_args(argv)
    cfg = VerifyConfig(tuple(args.models), tuple(args.checks), args.radius, args.line_radius)

    rows = sweep(cfg)
    print(f"{'model':<16}{'check':<12}{'radius':>7}{'checks':>9}{'violations':>12}{'seconds':>9}")
    for r in rows:
        print(f"{r['model']:<16}{r['check']:<12}{r['radius']:>7}{r['checks']:>9}"
              f"{len(r['violations']):>12}{r['elapsed']:>9.2f}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
    return 0 if all(r["ok"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
