"""Subgroup census of D_2n: counts per kind against tau(n) + sigma(n) - 2.

    python scripts/census.py --max-n 60
"""
import argparse
from collections import Counter

from dihedral_graphs.group_core import enumerate_subgroups, sigma, tau


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=3)
    ap.add_argument("--max-n", type=int, default=60)
    args = ap.parse_args()

    print(f"{'n':>4} {'rot':>5} {'refl':>5} {'dih':>5} {'total':>6} {'expected':>9}")
    bad = 0
    for n in range(args.min_n, args.max_n + 1):
        subs = enumerate_subgroups(n)
        kinds = Counter(type(s.kind).__name__ for s in subs)
        want = tau(n) + sigma(n) - 2
        bad += len(subs) != want
        print(f"{n:>4} {kinds['RotationCyclic']:>5} {kinds['Reflection']:>5} {kinds['DihedralSub']:>5} "
              f"{len(subs):>6} {want:>9}")
    print(f"mismatches: {bad}")
    return int(bad > 0)


if __name__ == "__main__":
    raise SystemExit(main())
