"""Command-line front end.

Every verdict-bearing command builds one JSON document; ``--format text``
only re-renders that document. Exit codes: 0 verified/success, 1 refuted,
2 unknown or budget exhausted, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .arrowing import Arrow, arrows
from .cocritical import SCHEMA, Verdict, audit_structure, coloring_json, is_Kt_saturated, verify_cocritical
from .coloring import (
    PairParams,
    SearchBudget,
    Status,
    count_critical,
    enumerate_critical,
    find_critical,
    max_red_critical,
)
from .constructions import (
    ConstructionError,
    JParams,
    build,
    build_J,
    lower_bound_edges,
    upper_edge_count,
)
from .graph import Graph
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .search import ENUMERATION_CAP, enumerate_small_cocritical, local_search_cocritical, summarize

EXIT_OK, EXIT_REFUTED, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 64
BUDGET_ENV = "COCRIT_BUDGET_NODES"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str
    t: int | None = None
    k: int | None = None
    n: int | None = None
    infile: str | None = None
    out_dir: str | None = None
    nodes: int | None = None
    seconds: float | None = None
    seed: int = 0
    fmt: str = "json"
    no_meta: bool = False
    jobs: int = 1

    @property
    def budget(self) -> SearchBudget:
        return SearchBudget(self.nodes, self.seconds)


def _default_nodes() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV} must be a non-negative integer, got {raw!r}")
    if value < 0:
        raise UsageError(f"{BUDGET_ENV} must be a non-negative integer, got {raw!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cocrit", description="(K_t, K_1,k)-co-critical graph toolkit")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
        p.add_argument("--no-meta", action="store_true", help="omit timestamps and runtimes")
        p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        p.add_argument("--nodes", type=int, default=None, help=f"node budget per search (env {BUDGET_ENV})")
        p.add_argument("--seconds", type=float, default=None, help="wall-clock budget per search")

    def pair(p: argparse.ArgumentParser) -> None:
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--k", type=int, required=True)

    def graph_in(p: argparse.ArgumentParser) -> None:
        p.add_argument("--in", dest="infile", default=None, help="graph6 file (default stdin)")

    p = sub.add_parser("construct", help="build the extremal graph and its colouring")
    pair(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out-dir", default=None, help="also write graph.g6, coloring.txt, plan.json")
    common(p)

    p = sub.add_parser("arrows", help="decide G -> (K_t, K_1,k)")
    pair(p)
    graph_in(p)
    common(p)

    p = sub.add_parser("colorings", help="critical colourings of G")
    pair(p)
    graph_in(p)
    p.add_argument("--mode", choices=("exists", "count", "enumerate", "max-red"), default="exists")
    p.add_argument("--limit", type=int, default=None, help="cap for --mode enumerate")
    common(p)

    p = sub.add_parser("verify", help="co-criticality report")
    pair(p)
    graph_in(p)
    common(p)

    p = sub.add_parser("audit", help="structural audit of the maximum-red colouring")
    pair(p)
    graph_in(p)
    p.add_argument("--all-optima", action="store_true")
    common(p)

    p = sub.add_parser("saturated", help="is G K_t-saturated")
    p.add_argument("--t", type=int, required=True)
    graph_in(p)
    common(p)

    p = sub.add_parser("build-j", help="emit the two-hub graph J")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--c", type=int, default=0)
    common(p)

    p = sub.add_parser("search", help="local search for sparse co-critical graphs")
    pair(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="total engine nodes")
    p.add_argument("--moves", type=int, default=None)
    common(p)

    p = sub.add_parser("enumerate", help="all co-critical graphs on n <= 8 vertices")
    p.add_argument("--n", type=int, required=True)
    pair(p)
    p.add_argument("--out", default=None, help="write graph6 lines here")
    common(p)
    return parser


def _validate(parser: argparse.ArgumentParser, a: argparse.Namespace) -> None:
    def need(cond: bool, msg: str) -> None:
        if not cond:
            parser.error(msg)

    if hasattr(a, "t") and a.t is not None:
        need(a.t >= 3, f"--t must be >= 3 (got {a.t})")
    if hasattr(a, "k") and a.k is not None:
        need(a.k >= 3, f"--k must be >= 3 (got {a.k})")
    need(a.jobs >= 1, f"--jobs must be >= 1 (got {a.jobs})")
    if a.nodes is not None:
        need(a.nodes >= 0, f"--nodes must be >= 0 (got {a.nodes})")
    if a.seconds is not None:
        need(a.seconds >= 0, f"--seconds must be >= 0 (got {a.seconds})")
    if a.command == "construct":
        need(a.t in (3, 4, 5), f"--t must be 3, 4 or 5 for construct (got {a.t})")
        lo = (2 * a.t - 2) * a.k + 1
        need(a.n >= lo, f"--n must be >= (2t-2)k+1 = {lo} (got {a.n})")
    if a.command == "enumerate":
        need(1 <= a.n <= ENUMERATION_CAP, f"--n must lie in 1..{ENUMERATION_CAP} (got {a.n})")
    if a.command == "search":
        lo = (a.t - 1) * a.k + 1
        need(a.n >= lo, f"--n must be >= (t-1)k+1 = {lo} (got {a.n})")
        if a.budget is not None:
            need(a.budget >= 0, f"--budget must be >= 0 (got {a.budget})")
    if a.command == "build-j":
        need(a.a >= 1, f"--a must be >= 1 (got {a.a})")
        need(a.b >= 0 and a.c >= 0, "--b and --c must be >= 0")
        need((a.b == 0) == (a.c == 0), "--b and --c must be both zero or both positive")
    if a.command == "colorings" and a.limit is not None:
        need(a.limit >= 1, f"--limit must be >= 1 (got {a.limit})")


def _read_graphs(path: str | None) -> list[Graph]:
    text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    graphs = [parse_graph6(line) for line in text.splitlines() if line.strip()]
    if not graphs:
        raise UsageError("no graph6 input")
    return graphs


# --- commands: each returns (payload, exit code) -----------------------------


def _arrow_code(s: Arrow) -> int:
    return {Arrow.ARROWS: EXIT_OK, Arrow.NOT_ARROWS: EXIT_REFUTED, Arrow.UNKNOWN: EXIT_UNKNOWN}[s]


def cmd_construct(a, cfg: RunConfig):
    g, sigma, plan = build(a.t, a.k, a.n)
    payload = {
        "graph6": emit_graph6(g),
        "n": g.n,
        "edges": g.num_edges,
        "formula_edges": upper_edge_count(a.t, a.k, a.n),
        "plan": plan.to_json(),
        "coloring": sigma.to_text().splitlines(),
    }
    if a.t == 3:
        payload["lower_bound"] = str(lower_bound_edges(3, a.k, a.n))
    if cfg.out_dir:
        out = Path(cfg.out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "graph.g6").write_text(emit_graph6(g) + "\n")
        (out / "coloring.txt").write_text(sigma.to_text())
        (out / "plan.json").write_text(json.dumps(plan.to_json(), indent=2, sort_keys=True) + "\n")
    return payload, EXIT_OK


def cmd_arrows(a, cfg: RunConfig):
    p = PairParams(a.t, a.k)
    results, codes = [], []
    for g in _read_graphs(cfg.infile):
        v = arrows(g, p, cfg.budget)
        results.append(
            {
                "graph6": emit_graph6(g),
                "status": v.status.value,
                "nodes": v.nodes,
                "witness_coloring": coloring_json(v.witness) if v.witness else None,
            }
        )
        codes.append(_arrow_code(v.status))
    return {"results": results}, _worst(codes)


def cmd_colorings(a, cfg: RunConfig):
    p = PairParams(a.t, a.k)
    results, codes = [], []
    for g in _read_graphs(cfg.infile):
        row: dict[str, Any] = {"graph6": emit_graph6(g), "mode": a.mode}
        if a.mode in ("exists", "max-red"):
            out = (find_critical if a.mode == "exists" else max_red_critical)(g, p, cfg.budget)
            row.update(status=out.status.value, nodes=out.nodes)
            row["witness_coloring"] = coloring_json(out.witness) if out.witness else None
            if out.witness is not None:
                row["red_edges"] = len(out.witness.red)
            code = {Status.FOUND: EXIT_OK, Status.NONE_EXISTS: EXIT_REFUTED}.get(out.status, EXIT_UNKNOWN)
            if a.mode == "max-red" and out.status is Status.EXHAUSTED:
                code = EXIT_UNKNOWN
        elif a.mode == "count":
            count, complete, nodes = count_critical(g, p, cfg.budget)
            row.update(count=count, complete=complete, nodes=nodes)
            code = EXIT_OK if complete else EXIT_UNKNOWN
        else:
            en = enumerate_critical(g, p, a.limit, cfg.budget)
            row.update(count=len(en.colorings), complete=en.complete, nodes=en.nodes)
            row["colorings"] = [coloring_json(c) for c in en.colorings]
            code = EXIT_OK if en.complete else EXIT_UNKNOWN
        results.append(row)
        codes.append(code)
    return {"results": results}, _worst(codes)


_VERDICT_CODE = {Verdict.COCRITICAL: EXIT_OK, Verdict.NOT_COCRITICAL: EXIT_REFUTED, Verdict.UNVERIFIED: EXIT_UNKNOWN}


def cmd_verify(a, cfg: RunConfig):
    p = PairParams(a.t, a.k)
    results, codes = [], []
    for g in _read_graphs(cfg.infile):
        rep = verify_cocritical(g, p, cfg.budget, jobs=cfg.jobs)
        doc = rep.to_json()
        doc.pop("schema")
        results.append(doc)
        codes.append(_VERDICT_CODE[rep.verdict])
    return {"results": results}, _worst(codes)


def cmd_audit(a, cfg: RunConfig):
    p = PairParams(a.t, a.k)
    results, codes = [], []
    for g in _read_graphs(cfg.infile):
        audits = audit_structure(g, p, cfg.budget, all_optima=a.all_optima)
        if not isinstance(audits, list):
            audits = [audits]
        for au in audits:
            results.append({"graph6": emit_graph6(g), **au.to_json()})
            codes.append(EXIT_UNKNOWN if not au.complete else EXIT_OK if au.passed else EXIT_REFUTED)
    return {"results": results}, _worst(codes)


def cmd_saturated(a, cfg: RunConfig):
    results, codes = [], []
    for g in _read_graphs(cfg.infile):
        sat = is_Kt_saturated(g, a.t)
        results.append({"graph6": emit_graph6(g), "t": a.t, "saturated": sat})
        codes.append(EXIT_OK if sat else EXIT_REFUTED)
    return {"results": results}, _worst(codes)


def cmd_build_j(a, cfg: RunConfig):
    jp = JParams(a.a, a.b, a.c)
    g = build_J(jp)
    return {
        "graph6": emit_graph6(g),
        "n": g.n,
        "edges": g.num_edges,
        "formula_edges": jp.edge_count(),
        "saturated": is_Kt_saturated(g, 3) if g.n >= 3 else False,
    }, EXIT_OK


def cmd_search(a, cfg: RunConfig):
    p = PairParams(a.t, a.k)
    nodes = a.budget if a.budget is not None else cfg.nodes
    res = local_search_cocritical(p, a.n, a.seed, SearchBudget(nodes, cfg.seconds), a.moves)
    if res is None:
        return {"found": False, "seed": a.seed}, EXIT_UNKNOWN
    payload = {
        "found": True,
        "seed": a.seed,
        "graph6": emit_graph6(res.graph),
        "edges": res.edges,
        "start_edges": res.start_edges,
        "verdict": res.verdict.value,
        "moves": res.moves,
        "accepted": res.accepted,
        "nodes": res.nodes,
        "history": res.history,
    }
    if a.t == 3:
        payload["lower_bound"] = str(lower_bound_edges(3, a.k, a.n))
    return payload, _VERDICT_CODE[res.verdict]


def cmd_enumerate(a, cfg: RunConfig):
    graphs = enumerate_small_cocritical(a.n, PairParams(a.t, a.k), jobs=cfg.jobs)
    lines = [emit_graph6(g) for g in graphs]
    if a.out:
        Path(a.out).write_text("".join(line + "\n" for line in lines))
    return {"n": a.n, **summarize(graphs), "graphs": lines}, EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "arrows": cmd_arrows,
    "colorings": cmd_colorings,
    "verify": cmd_verify,
    "audit": cmd_audit,
    "saturated": cmd_saturated,
    "build-j": cmd_build_j,
    "search": cmd_search,
    "enumerate": cmd_enumerate,
}


def _worst(codes: list[int]) -> int:
    if EXIT_UNKNOWN in codes:
        return EXIT_UNKNOWN
    if EXIT_REFUTED in codes:
        return EXIT_REFUTED
    return EXIT_OK


def render_text(doc: Any, indent: int = 0) -> str:
    """Plain-text rendering of a JSON document."""
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for key, val in doc.items():
            if isinstance(val, (dict, list)) and val:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        if all(not isinstance(x, (dict, list)) for x in doc):
            return "\n".join(f"{pad}- {x}" for x in doc)
        if all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in doc):
            return "\n".join(pad + " ".join(str(y) for y in x) for x in doc)
        return "\n".join(f"{pad}-\n{render_text(x, indent + 1)}" for x in doc)
    return f"{pad}{json.dumps(doc)}"


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    _validate(parser, a)
    try:
        nodes = a.nodes if a.nodes is not None else _default_nodes()
    except UsageError as exc:
        parser.error(str(exc))
    cfg = RunConfig(
        command=a.command,
        t=getattr(a, "t", None),
        k=getattr(a, "k", None),
        n=getattr(a, "n", None),
        infile=getattr(a, "infile", None),
        out_dir=getattr(a, "out_dir", None),
        nodes=nodes,
        seconds=a.seconds,
        seed=getattr(a, "seed", 0),
        fmt=a.fmt,
        no_meta=a.no_meta,
        jobs=a.jobs,
    )
    started = time.perf_counter()
    try:
        payload, code = COMMANDS[a.command](a, cfg)
    except (Graph6Error, UsageError, ConstructionError) as exc:
        parser.error(str(exc))
    doc = {"schema": SCHEMA, "command": a.command, **payload}
    if not cfg.no_meta:
        doc["meta"] = {
            "version": __version__,
            "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "runtime_seconds": round(time.perf_counter() - started, 3),
            "budget": {"nodes": cfg.nodes, "seconds": cfg.seconds},
        }
    doc["exit_code"] = code
    if cfg.fmt == "json":
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        sys.stdout.write(render_text(doc) + "\n")
    return code


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
