"""Brute-force resolving-set counts against each reading of the closed-form coefficients.

    python scripts/resolving_report.py --p 2 3 --json report.json
"""
import argparse
import json

from dihedral_graphs import resolving as rs


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--json", help="also write the full comparison here")
    args = ap.parse_args()

    dump = {}
    for p in args.p:
        cmp = rs.compare_resolving(p)
        dump[str(p)] = cmp.to_dict()
        labels = [i.label for i in rs.INTERPRETATIONS]
        print(f"p={p}")
        print("  size  brute  " + "  ".join(f"{k:>22}" for k in labels))
        for row in cmp.rows:
            cells = [f"{row.formula[k]}{'' if row.agree[k] else '*'}" for k in labels]
            print(f"  {row.size:>4} {row.brute_force:>6}  " + "  ".join(f"{c:>22}" for c in cells))
        for k, v in cmp.agreement_counts().items():
            print(f"  {k}: {v}/{len(cmp.rows)} sizes agree")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(dump, fh, indent=2, sort_keys=True)


if __name__ == "__main__":
    main()
