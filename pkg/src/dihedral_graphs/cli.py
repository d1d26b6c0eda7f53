"""Command-line interface.

    dihedral-graphs graph     (--p P | --n N) [--format json|dot|csv|text]
    dihedral-graphs indices   (--p P | --n N) [--format json|csv|text]
    dihedral-graphs metric-dim (--p P | --n N) [--format json|text]
    dihedral-graphs respoly   (--p P | --n N) [--format json|csv|text]
    dihedral-graphs verify    --p P [--format json|csv|text]

Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 budget refusal.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import graph_core as gc
from . import indices as ix
from . import resolving as rs
from .errors import (
    BudgetExceededError,
    DisconnectedGraphError,
    InvalidParameterError,
    UnsupportedParameterError,
)
from .group_core import is_prime

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

FORMATS = {
    "graph": ("json", "dot", "csv", "text"),
    "indices": ("json", "csv", "text"),
    "metric-dim": ("json", "text"),
    "respoly": ("json", "csv", "text"),
    "verify": ("json", "csv", "text"),
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    p: int | None
    output_format: str = "text"
    output_path: str | None = None
    max_vertices: int = gc.DEFAULT_MAX_VERTICES
    max_enum_bits: int = rs.DEFAULT_MAX_ENUM_BITS
    max_n: int = ix.DEFAULT_MAX_N

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        if args.p is not None:
            if not is_prime(args.p):
                raise InvalidParameterError(f"--p must be prime, got {args.p}")
            n, p = args.p * args.p, args.p
        else:
            if args.n < 3:
                raise InvalidParameterError(f"--n must be at least 3, got {args.n}")
            n = args.n
            p = gc.prime_square_root(n)
        fmt = args.format or ("json" if args.command == "graph" else "text")
        if fmt not in FORMATS[args.command]:
            raise InvalidParameterError(f"{args.command} does not support --format {fmt}")
        return cls(
            command=args.command,
            n=n,
            p=p,
            output_format=fmt,
            output_path=args.out,
            max_vertices=args.max_vertices,
            max_enum_bits=args.max_enum_bits,
        )


# ---------------------------------------------------------------------------
# serialization


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _num(x: Fraction | int | None):
    if x is None:
        return None
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def graph_to_dict(g: gc.IntersectionGraph) -> dict:
    vertices = []
    for v, sub in enumerate(g.vertices):
        tag = g.vertex_class[v]
        vertices.append(
            {
                "id": v,
                "label": sub.label,
                "kind": sub.kind.name(),
                "class": tag.cls.value if tag else None,
                "class_index": tag.index if tag else None,
            }
        )
    return {
        "n": g.n,
        "p": g.p,
        "vertices": vertices,
        "edges": [[u, v] for u, v in g.edges()],
    }


def graph_from_dict(data: dict) -> gc.Graph:
    """Rebuild the plain graph from :func:`graph_to_dict` output."""
    return gc.Graph.from_edges(len(data["vertices"]), [tuple(e) for e in data["edges"]])


def graph_to_dot(g: gc.IntersectionGraph) -> str:
    labels = g.labels()
    lines = [f'graph "D_{2 * g.n}" {{']
    for v, label in enumerate(labels):
        tag = g.vertex_class[v]
        attrs = f' [class="{tag.cls.value}"]' if tag else ""
        lines.append(f'  "{label}"{attrs};')
    for u, v in g.edges():
        lines.append(f'  "{labels[u]}" -- "{labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_graph(cfg: RunConfig, g: gc.IntersectionGraph) -> str:
    if cfg.output_format == "json":
        return _dump_json(graph_to_dict(g))
    if cfg.output_format == "dot":
        return graph_to_dot(g)
    labels = g.labels()
    if cfg.output_format == "csv":
        return _csv([["source", "target"]] + [[labels[u], labels[v]] for u, v in g.edges()])
    out = [f"n = {g.n}, p = {g.p}, {g.order} vertices, {len(g.edges())} edges"]
    for v, label in enumerate(labels):
        tag = g.vertex_class[v]
        nbrs = ", ".join(labels[u] for u in g.neighbors(v))
        out.append(f"{v:3d} {label:<16} {str(tag) if tag else '-':<8} deg {gc.degree(g, v)}: {nbrs}")
    return "\n".join(out) + "\n"


def _render_reports(cfg: RunConfig, reports: list[ix.IndexReport]) -> str:
    if cfg.output_format == "json":
        return _dump_json(
            {
                "n": cfg.n,
                "p": cfg.p,
                "indices": [
                    {
                        "quantity": r.index_name.value,
                        "oracle": _num(r.oracle_value),
                        "formula": _num(r.formula_value),
                        "match": r.matches,
                    }
                    for r in reports
                ],
            }
        )
    rows = [
        [
            r.index_name.value,
            _num(r.oracle_value),
            "" if r.formula_value is None else _num(r.formula_value),
            "" if r.matches is None else str(r.matches).lower(),
        ]
        for r in reports
    ]
    if cfg.output_format == "csv":
        return _csv([["quantity", "oracle", "formula", "match"]] + rows)
    return "\n".join(f"{q:<22} {o:>10} {f!s:>10} {m}" for q, o, f, m in rows) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_graph(cfg: RunConfig) -> tuple[int, str]:
    return EXIT_OK, _render_graph(cfg, gc.build_graph(cfg.n))


def cmd_indices(cfg: RunConfig) -> tuple[int, str]:
    g = gc.build_graph(cfg.n)
    if cfg.p is not None:
        reports = ix.verify_indices(cfg.p, max_n=cfg.max_n, graph=g)
        status = EXIT_OK if all(r.matches for r in reports) else EXIT_FAILED
    else:
        reports = ix.oracle_reports(g)
        status = EXIT_OK
    return status, _render_reports(cfg, reports)


def cmd_metric_dim(cfg: RunConfig) -> tuple[int, str]:
    g = gc.build_graph(cfg.n)
    cert = rs.metric_dimension_certificate(g, cfg.max_enum_bits)
    labels = g.labels()
    if cfg.output_format == "json":
        return EXIT_OK, _dump_json(
            {
                "n": cfg.n,
                "p": cfg.p,
                "beta": cert.beta,
                "lower_bound": cert.lower_bound,
                "method": cert.method,
                "basis": [labels[v] for v in cert.basis],
            }
        )
    return EXIT_OK, f"{cert.beta}\n{cert.describe(labels)}\n"


def cmd_respoly(cfg: RunConfig) -> tuple[int, str]:
    g = gc.build_graph(cfg.n)
    prof = rs.resolving_polynomial(g, cfg.max_enum_bits)
    if cfg.output_format == "json":
        return EXIT_OK, _dump_json(
            {
                "n": cfg.n,
                "p": cfg.p,
                "beta": prof.beta,
                "coefficients": {str(i): c for i, c in sorted(prof.coefficients.items())},
            }
        )
    if cfg.output_format == "csv":
        return EXIT_OK, _csv([["size", "count"]] + sorted(prof.coefficients.items()))
    terms = " + ".join(f"{c} x^{i}" for i, c in sorted(prof.coefficients.items()))
    return EXIT_OK, f"beta = {prof.beta}\n{terms}\n"


@dataclass
class Row:
    check: str
    expected: object
    observed: object
    status: str  # pass | fail | info | skipped
    mandatory: bool = True


def _cmp(check: str, expected, observed) -> Row:
    return Row(check, expected, observed, "pass" if expected == observed else "fail")


def _guarded(rows: list[Row], check: str, fn: Callable[[], list[Row]], mandatory=True) -> None:
    try:
        rows.extend(fn())
    except BudgetExceededError as exc:
        rows.append(Row(check, None, None, f"skipped: budget ({exc})", mandatory))


def verify_rows(cfg: RunConfig) -> list[Row]:
    p = cfg.p
    if p is None:
        raise UnsupportedParameterError("verify needs n = p^2 with p prime")
    g = gc.build_graph(cfg.n)
    labels = g.labels()
    N = g.order
    rows = [
        _cmp("vertex count", p * p + p + 2, N),
        _cmp("edge count", int(ix.closed_form(ix.IndexName.EDGE_COUNT, p)), len(g.edges())),
    ]

    def expected_degree(v):
        cls = g.vertex_class[v].cls
        return {gc.VertexClass.REFLECTION: 1, gc.VertexClass.DIHEDRAL: 2 * p + 1}.get(cls, p + 1)

    def expected_distance(u, v):
        if u == v:
            return 0
        a, b = g.vertex_class[u], g.vertex_class[v]
        ra = a.cls is gc.VertexClass.REFLECTION
        rb = b.cls is gc.VertexClass.REFLECTION
        if ra and rb:
            return 2 if a.index == b.index else 3
        if ra or rb:
            refl, other = (a, b) if ra else (b, a)
            return 1 if other.cls is gc.VertexClass.DIHEDRAL and other.index == refl.index else 2
        return 1

    bad_deg = [labels[v] for v in range(N) if gc.degree(g, v) != expected_degree(v)]
    rows.append(Row("degree spectrum", "per class", f"{len(bad_deg)} mismatches", "pass" if not bad_deg else "fail"))
    dist = gc.distance_matrix(g).dist
    bad_dist = sum(dist[u][v] != expected_distance(u, v) for u in range(N) for v in range(N))
    rows.append(Row("distance trichotomy", "per class", f"{bad_dist} mismatches", "pass" if not bad_dist else "fail"))
    rows.append(_cmp("diameter", 3, gc.diameter(g)))
    bad_ecc = sum(
        gc.eccentricity(g, v) != (3 if g.vertex_class[v].cls is gc.VertexClass.REFLECTION else 2)
        for v in range(N)
    )
    rows.append(Row("eccentricities", "per class", f"{bad_ecc} mismatches", "pass" if not bad_ecc else "fail"))
    _guarded(rows, "independence number", lambda: [_cmp("independence number", p * p + 1, gc.independence_number(g, cfg.max_vertices))])
    _guarded(rows, "clique number", lambda: [_cmp("clique number", p + 2, gc.clique_number(g, cfg.max_vertices))])
    try:
        clique_part, indep_part = gc.split_partition(g)
        rows.append(_cmp("split partition sizes", [p + 2, p * p], [len(clique_part), len(indep_part)]))
    except AssertionError as exc:
        rows.append(Row("split partition sizes", [p + 2, p * p], str(exc), "fail"))
    stars = [gc.star_check(g, i) for i in range(1, p + 1)]
    rows.append(_cmp("star checks", p, sum(stars)))

    def index_rows():
        out = []
        for r in ix.verify_indices(p, max_n=cfg.max_n, graph=g):
            if r.index_name is ix.IndexName.EDGE_COUNT:
                continue
            out.append(
                Row(f"index {r.index_name.value}", _num(r.formula_value), _num(r.oracle_value), "pass" if r.matches else "fail")
            )
        return out

    _guarded(rows, "indices", index_rows)

    def beta_rows():
        cert = rs.metric_dimension_certificate(g, cfg.max_enum_bits)
        return [
            _cmp("twin lower bound", p * p - p + 1, cert.lower_bound),
            _cmp("metric dimension", p * p - p + 1, cert.beta),
            _cmp("construction resolves", True, rs.is_resolving(g, rs.standard_resolving_set(g))),
        ]

    _guarded(rows, "metric dimension", beta_rows)

    def respoly_rows():
        cmp = rs.compare_resolving(p, cfg.max_enum_bits, graph=g)
        prof = cmp.brute_force
        out = [
            _cmp("respoly r_N", 1, prof.coefficients[N]),
            _cmp("respoly r_(N-1)", N, prof.coefficients[N - 1]),
            _cmp("respoly r_beta", 2 * p**p, prof.coefficients[prof.beta]),
        ]
        for row in cmp.rows:
            for label, value in row.formula.items():
                agree = "agree" if value == row.brute_force else "disagree"
                out.append(Row(f"respoly r_{row.size} [{label}]", value, row.brute_force, f"info: {agree}", False))
        return out

    _guarded(rows, "resolving polynomial", respoly_rows, mandatory=False)
    return rows


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    rows = verify_rows(cfg)
    mandatory = [r for r in rows if r.mandatory]
    if any(r.status == "fail" for r in mandatory):
        status = EXIT_FAILED
    elif any(r.status.startswith("skipped") for r in mandatory):
        status = EXIT_BUDGET
    else:
        status = EXIT_OK

    def plain(x):
        return x if x is None or isinstance(x, (int, str, bool, list)) else str(x)

    if cfg.output_format == "json":
        text = _dump_json(
            {
                "n": cfg.n,
                "p": cfg.p,
                "passed": status == EXIT_OK,
                "rows": [
                    {
                        "check": r.check,
                        "expected": plain(r.expected),
                        "observed": plain(r.observed),
                        "status": r.status,
                        "mandatory": r.mandatory,
                    }
                    for r in rows
                ],
            }
        )
    elif cfg.output_format == "csv":
        text = _csv(
            [["check", "expected", "observed", "status"]]
            + [[r.check, r.expected, r.observed, r.status] for r in rows]
        )
    else:
        width = max(len(r.check) for r in rows)
        text = "\n".join(
            f"{r.check:<{width}}  {r.status:<14} expected {r.expected!s:<12} observed {r.observed}"
            for r in rows
        ) + "\n"
    return status, text


COMMANDS = {
    "graph": cmd_graph,
    "indices": cmd_indices,
    "metric-dim": cmd_metric_dim,
    "respoly": cmd_respoly,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    which = common.add_mutually_exclusive_group(required=True)
    which.add_argument("--p", type=int, help="prime p; uses n = p^2")
    which.add_argument("--n", type=int, help="rotation order n >= 3 of D_2n")
    common.add_argument("--format", choices=("json", "csv", "dot", "text"))
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--max-vertices", type=int, default=gc.DEFAULT_MAX_VERTICES,
                        help="vertex budget for exact clique/independence search")
    common.add_argument("--max-enum-bits", type=int, default=rs.DEFAULT_MAX_ENUM_BITS,
                        help="log2 budget for subset enumeration")
    parser = argparse.ArgumentParser(
        prog="dihedral-graphs",
        description="Intersection graphs of subgroups of D_2n: invariants, indices, resolving sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        cfg = RunConfig.from_args(args)
        status, text = COMMANDS[cfg.command](cfg)
    except (InvalidParameterError, UnsupportedParameterError, DisconnectedGraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except BudgetExceededError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="ascii", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return EXIT_INVALID
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
