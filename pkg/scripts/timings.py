"""Wall-clock timings for the expensive routines at each p.

    python scripts/timings.py
"""
import argparse
import time

from dihedral_graphs import graph_core as gc
from dihedral_graphs import resolving as rs


def timed(fn, *a, **kw):
    t0 = time.perf_counter()
    out = fn(*a, **kw)
    return out, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5, 7])
    args = ap.parse_args()
    for p in args.primes:
        g = gc.build_graph(p * p)
        alpha, t_a = timed(gc.independence_number, g, max_vertices=g.order)
        omega, t_w = timed(gc.clique_number, g, max_vertices=g.order)
        cert, t_b = timed(rs.metric_dimension_certificate, g)
        line = (f"p={p} N={g.order}: alpha={alpha} ({t_a:.3f}s) omega={omega} ({t_w:.3f}s) "
                f"beta={cert.beta} via {cert.method} ({t_b:.3f}s)")
        if g.order <= rs.DEFAULT_MAX_ENUM_BITS:
            prof, t_r = timed(rs.resolving_polynomial, g)
            line += f" respoly ({t_r:.2f}s)"
        print(line)


if __name__ == "__main__":
    main()
