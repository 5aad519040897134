"""Recognizer sweep: shipped permutation files plus left-regular actions of small finite Coxeter groups.

    python scripts/recognize_suite.py --max-entry 5 --max-order 200
"""

import argparse
import sys
from itertools import product
from pathlib import Path

from coxref.core import CoxeterGroup, dihedral, triangle, validate_matrix
from coxref.errors import CoxrefError, OrderExceedsCap
from coxref.recognizer import certify_coxeter, close_group, load_generators, regular_realization

PERMS = Path(__file__).resolve().parents[1] / "data" / "perms"


def finite_matrices(max_entry, max_order):
    yield validate_matrix([[1]])
    for m in range(2, max_entry + 1):
        yield dihedral(m)
    for p, q, r in product(range(2, max_entry + 1), repeat=3):
        m = triangle(p, q, r)
        try:
            CoxeterGroup(m).order(max_order)
        except OrderExceedsCap:
            continue
        yield m


def describe(v):
    matrix = "-" if v.matrix is None else str(v.matrix.to_json())
    return f"{v.status:<12} |G|={v.group_order:<5} m={matrix}"


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-entry", type=int, default=5)
    ap.add_argument("--max-order", type=int, default=200)
    ap.add_argument("--perms-dir", default=str(PERMS))
    args = ap.parse_args(argv)

    failures = 0
    print("# permutation files")
    for path in sorted(Path(args.perms_dir).glob("*.txt")):
        try:
            v = certify_coxeter(close_group(load_generators(path)))
            print(f"{path.name:<22} {describe(v)}")
        except CoxrefError as exc:
            print(f"{path.name:<22} rejected: {exc}")
    print("# regular realizations")
    for m in finite_matrices(args.max_entry, args.max_order):
        v = certify_coxeter(close_group(regular_realization(m)))
        ok = v.certified and v.matrix == m
        failures += not ok
        print(f"{str(m.to_json()):<36} {describe(v)}{'' if ok else '  <-- MISMATCH'}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
