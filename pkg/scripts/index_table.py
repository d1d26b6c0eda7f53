"""Tabulate every index for p in a list of primes: oracle, closed form, and class-count form.

    python scripts/index_table.py --primes 2 3 5 7
"""
import argparse

from dihedral_graphs import indices as ix
from dihedral_graphs.graph_core import build_graph


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    args = ap.parse_args()

    for p in args.primes:
        g = build_graph(p * p)
        print(f"p={p}  N={g.order}")
        print(f"  {'index':<22} {'oracle':>8} {'closed':>8} {'census':>8}  gap")
        for name in ix.IndexName:
            got = ix.oracle(name, g)
            stated = ix.closed_form(name, p)
            census = ix.class_count_form(name, p)
            gap = got - stated
            print(f"  {name.value:<22} {got:>8} {str(stated):>8} {str(census):>8}  {gap if gap else ''}")
        # the two Schultz-type gaps, as polynomials: p^3 + 4p^2 and p^3
        print(f"  p^3+4p^2 = {p**3 + 4 * p * p}, p^3 = {p**3}")


if __name__ == "__main__":
    main()
