"""Command-line interface.

Exit codes: 0 success (or separation verdict inside), 1 violated point,
2 input error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import catalog as cat
from .dd import DEFAULT_RAY_CAP
from .errors import BudgetError, DomainError, StabpolyError
from .graphs import load_graph, to_graph6
from .linsys import format_rational
from .modular import find_modules
from .polytope import HULL_BUDGET, full_facets, has_clique_cutset, is_facet_inducing, stab_facets
from .recognition import (
    contains_induced_path,
    find_paw,
    find_triangle,
    is_p6_paw_free,
    is_p6_triangle_free,
)
from .separation import SeparationOracle, parse_point
from .verify import CRITERIA, VerifyContext, run_suite

ENV_CATALOG = "STABPOLY_CATALOG"


@dataclass
class Config:
    budget_vertices: int = HULL_BUDGET
    dd_ray_cap: int = DEFAULT_RAY_CAP
    workers: int = 1
    catalog_path: str | None = None
    seed: int = 20250811
    fmt: str = "table"

    @staticmethod
    def from_args(args):
        return Config(
            budget_vertices=args.budget_vertices,
            dd_ray_cap=args.dd_ray_cap,
            workers=args.workers,
            catalog_path=args.catalog or os.environ.get(ENV_CATALOG),
            seed=args.seed,
            fmt=args.format,
        )


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as exc:
        raise DomainError(f"cannot read {path}: {exc}") from exc


def _emit(cfg, payload, table_lines):
    if cfg.fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in table_lines:
            print(line)


def cmd_facets(cfg, args):
    g = load_graph(_read_text(args.graph))
    sys_ = stab_facets(g, budget_vertices=cfg.budget_vertices, ray_cap=cfg.dd_ray_cap)
    full = [r for r in sys_.full_rows()]
    payload = {
        "n": g.n,
        "facets": len(sys_),
        "full_facets": len(full),
        "system": json.loads(sys_.to_json()),
    }
    lines = [f"graph: n={g.n} m={g.edge_count()}", f"facets: {len(sys_)} (full: {len(full)})"]
    for r in sys_.rows:
        terms = " + ".join(
            f"{c}*x{v}" for v, c in enumerate(r.coeffs) if c
        )
        lines.append(f"  [{r.kind:>13}] {terms} <= {r.rhs}")
    _emit(cfg, payload, lines)
    return 0


def cmd_classify(cfg, args):
    g = load_graph(_read_text(args.graph))
    report = {
        "n": g.n,
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "prime": find_modules(g).is_prime,
        "triangle_free": find_triangle(g) is None,
        "paw_free": find_paw(g) is None,
        "p6_free": not contains_induced_path(g, 6),
        "p6_triangle_free": is_p6_triangle_free(g),
        "p6_paw_free": is_p6_paw_free(g),
    }
    cut = has_clique_cutset(g)
    report["clique_cutset"] = sorted(v for v in range(g.n) if cut >> v & 1) if cut else None
    if g.n <= cfg.budget_vertices:
        cert = is_facet_inducing(g, budget_vertices=cfg.budget_vertices, ray_cap=cfg.dd_ray_cap)
        report["facet_inducing"] = cert is not None
        if cert is not None:
            report["certificate"] = {
                "rows": [sorted(v for v in range(g.n) if m >> v & 1) for m in cert.row_masks],
                "coeffs": [format_rational(c) for c in cert.coeffs],
                "rhs": format_rational(cert.rhs),
            }
    else:
        report["facet_inducing"] = None
    lines = [f"{k}: {v}" for k, v in report.items() if k != "certificate"]
    if "certificate" in report:
        lines.append(f"certificate rows: {report['certificate']['rows']}")
        lines.append(
            "certificate coeffs: "
            + " ".join(report["certificate"]["coeffs"])
            + " ; rhs "
            + report["certificate"]["rhs"]
        )
    _emit(cfg, report, lines)
    return 0


def _default_catalog_path(cfg):
    return cfg.catalog_path or "stabpoly-catalog.json"


def cmd_catalog(cfg, args):
    path = _default_catalog_path(cfg)
    if args.action == "build":
        entries = cat.build_catalog(
            budget_vertices=cfg.budget_vertices, ray_cap=cfg.dd_ray_cap
        )
        cat.save_catalog(entries, path)
        report = cat.map_named_deletions(entries)
        payload = {
            "path": path,
            "classes": len(entries),
            "names": [e.name for e in entries],
            "named_deletions": {k: v for k, v in report.items()},
        }
        _emit(cfg, payload, [f"built {len(entries)} classes -> {path}"]
              + [f"  {k} = {v}" for k, v in report.items()])
        return 0
    entries = cat.load_catalog(path)
    if args.action == "verify":
        for e in entries:
            e.validate()
        report = cat.map_named_deletions(entries)
        ok = len(entries) == 26 and report["h3-deletion-sizes-ok"]
        payload = {"classes": len(entries), "named_deletions": report, "ok": ok}
        _emit(cfg, payload, [f"classes: {len(entries)} (expected 26)"]
              + [f"  {k} = {v}" for k, v in report.items()])
        return 0 if ok else 2
    payload = [
        {
            "name": e.name,
            "n": e.graph.n,
            "edges": e.graph.edge_count(),
            "full_facets": len(e.phi),
            "source": e.source,
            "graph6": to_graph6(e.graph),
        }
        for e in entries
    ]
    lines = [
        f"{e.name:>4}: n={e.graph.n:2d} m={e.graph.edge_count():2d} "
        f"|Phi|={len(e.phi):3d} from {e.source}"
        for e in entries
    ]
    _emit(cfg, payload, lines)
    return 0


def cmd_separate(cfg, args):
    g = load_graph(_read_text(args.graph))
    data = json.loads(_read_text(args.point))
    if isinstance(data, dict):
        data = data["point"]
    y = parse_point(data, g.n)
    entries = cat.load_catalog(_default_catalog_path(cfg))
    oracle = SeparationOracle(g, entries)
    res = oracle.separate(y)
    payload = res.to_dict()
    lines = [f"verdict: {res.verdict}"]
    if res.verdict == "violated":
        terms = " + ".join(f"{c}*x{v}" for v, c in enumerate(res.inequality.coeffs) if c)
        lines.append(f"violated: {terms} <= {res.inequality.rhs} (amount {format_rational(res.amount)})")
        if res.support:
            lines.append(
                f"support: {res.support.name} core={sorted(v for v in range(g.n) if res.support.core >> v & 1)}"
            )
    _emit(cfg, payload, lines)
    return 1 if res.verdict == "violated" else 0


def cmd_verify(cfg, args):
    names = args.suites or None
    catalog = None
    if cfg.catalog_path and os.path.exists(cfg.catalog_path):
        catalog = cat.load_catalog(cfg.catalog_path)
    ctx = VerifyContext(seed=cfg.seed, workers=cfg.workers, catalog=catalog)
    results = run_suite(names, ctx)
    return 0 if all(results.values()) else 2


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="stabpoly",
        description="Exact stable set polytopes of (P6,triangle)-free graphs",
    )
    parser.add_argument("--budget-vertices", type=int, default=HULL_BUDGET)
    parser.add_argument("--dd-ray-cap", type=int, default=DEFAULT_RAY_CAP)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--catalog", help=f"catalog path (default ${ENV_CATALOG})")
    parser.add_argument("--seed", type=int, default=20250811)
    parser.add_argument("--format", choices=("table", "json"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("facets", help="print the minimal defining system of STAB(G)")
    p.add_argument("graph", help="graph file (graph6 or JSON edge list), - for stdin")
    p.set_defaults(func=cmd_facets)

    p = sub.add_parser("classify", help="structural and facet-inducing report")
    p.add_argument("graph")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("catalog", help="build, verify, or list the catalog")
    p.add_argument("action", choices=("build", "verify", "show"))
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("separate", help="run the separation oracle on a point")
    p.add_argument("graph")
    p.add_argument("point", help="JSON list of rationals, or {'point': [...]}")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("verify", help="run acceptance suites")
    p.add_argument("suites", nargs="*", metavar="suite",
                   help=f"suites to run (default all): {', '.join(CRITERIA)}")
    p.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    cfg = Config.from_args(args)
    try:
        return args.func(cfg, args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (DomainError, StabpolyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
