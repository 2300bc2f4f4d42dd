"""Command-line surface: analyze, hicom, verify, oracle, gen, bench.

Output is JSON on stdout with sorted keys, so fixed inputs and seeds give
byte-identical bytes across runs (bench wall-clock fields excepted).
Exit codes: 0 success, 1 usage/parse problems, 2 infeasible (no team / no
optimum exists), 3 internal errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import corpus as corpus_mod
from .criteria import as_fraction, check_hc
from .generators import connected_gnp, generate
from .graphs import (
    EdgeListParseError,
    Graph,
    all_pairs_distances,
    connected_components,
    eccentricity_profile,
    induced_subgraph,
    parse_edge_list,
    serialize_edge_list,
    to_dot,
)
from .hicom import HicomError, extend_to_max, hicom, verify_k_bound
from .oracle import (
    bound_sweep,
    exact_max_team,
    exact_min_cds,
    exact_min_team,
    ratio_experiment,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_INTERNAL = 3


@dataclass(frozen=True)
class RunConfig:
    """Normalized invocation: one input source, exact rational l, seed."""

    command: str
    source: str | None
    l: Fraction | None
    seed: int
    output_format: str

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        l_text = getattr(args, "l", None)
        return cls(
            command=args.command,
            source=getattr(args, "graph", None),
            l=_parse_l(l_text) if l_text is not None else None,
            seed=getattr(args, "seed", 0),
            output_format=getattr(args, "format", "json"),
        )


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors by default; remap to exit 1 so
    code 2 stays reserved for 'no team exists'."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _emit_error(code: str, message: str, exit_code: int) -> int:
    _emit({"error": {"code": code, "message": message}})
    return exit_code


def _load_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_edge_list(text)


def _read_team(path: str, g: Graph) -> frozenset[int]:
    """Team file: one vertex label (or 0-based index) per line, '#' comments."""
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    members = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        token = line.split()[0]
        try:
            members.append(g.vertex_for_label(token))
            continue
        except KeyError:
            pass
        try:
            index = int(token)
        except ValueError:
            raise ValueError(f"team file line {lineno}: unknown vertex {token!r}") from None
        if not (0 <= index < g.n):
            raise ValueError(f"team file line {lineno}: index {index} out of range 0..{g.n - 1}")
        members.append(index)
    if not members:
        raise ValueError("team file lists no vertices")
    return frozenset(members)


def _parse_l(text: str) -> Fraction:
    try:
        frac = as_fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot parse l={text!r} as a rational") from None
    if frac <= 1:
        raise ValueError(f"reduction factor l must be > 1, got {frac}")
    return frac


def _component_graphs(g: Graph):
    """Induced subgraph per component, labels preserved."""
    return [induced_subgraph(g, part) for part in connected_components(g)]


# --- commands ---------------------------------------------------------------

def cmd_analyze(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    entries = []
    for sub, hosts, _ in _component_graphs(g):
        profile = eccentricity_profile(sub)
        entries.append(
            {
                "vertices": [g.labels[v] for v in hosts],
                **profile.to_json_dict(sub.labels),
            }
        )
    payload = {
        "n": g.n,
        "m": g.m,
        "connected": len(entries) == 1,
        "components": entries,
    }
    if config.output_format == "text":
        for i, entry in enumerate(payload["components"]):
            print(
                f"component {i}: n={len(entry['vertices'])} radius={entry['radius']} "
                f"diameter={entry['diameter']} class={entry['class']} "
                f"center={','.join(entry['center'])}"
            )
    elif config.output_format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _emit(payload)
    return EXIT_OK


def _hicom_payload(sub: Graph, args, l: Fraction) -> dict:
    start = None
    if args.start is not None:
        try:
            start = sub.vertex_for_label(args.start)
        except KeyError:
            start = int(args.start)
    result = hicom(sub, l, start=start, allow_large_l=args.allow_large_l)
    payload = result.to_json_dict()
    payload["bounds"] = [b.to_json_dict() for b in verify_k_bound(result, sub)]
    if args.max:
        biggest = extend_to_max(sub, result, result.l)
        payload["max_team"] = [sub.labels[v] for v in sorted(biggest.members)]
    if args.dot:
        Path(args.dot).write_text(to_dot(sub, team=result.team.members))
    return payload


def cmd_hicom(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    if g.is_connected():
        _emit(_hicom_payload(g, args, config.l))
        return EXIT_OK
    # top-level decomposition: the run applies to each component
    entries = []
    successes = 0
    for sub, hosts, _ in _component_graphs(g):
        entry = {"vertices": [g.labels[v] for v in hosts]}
        try:
            entry["result"] = _hicom_payload(sub, args, config.l)
            successes += 1
        except (HicomError, ValueError) as exc:
            entry["error"] = str(exc)
        entries.append(entry)
    _emit({"connected": False, "components": entries})
    return EXIT_OK if successes else EXIT_INFEASIBLE


def cmd_verify(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    members = _read_team(args.team, g)
    if not g.is_connected():
        # a team lives inside one component; evaluate it there
        for sub, hosts, host_index in _component_graphs(g):
            if members <= set(hosts):
                g = sub
                members = frozenset(host_index[v] for v in members)
                break
        else:
            return _emit_error(
                "infeasible", "team spans multiple components", EXIT_INFEASIBLE
            )
    report = check_hc(g, members, config.l)
    _emit(report.to_json_dict(g.labels))
    return EXIT_OK if report.verdict != "none" else EXIT_INFEASIBLE


def cmd_oracle_min(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    l = config.l if args.kind in ("bc", "hc") else None
    entries = []
    found = 0
    for sub, hosts, _ in _component_graphs(g):
        answer = exact_min_team(sub, args.kind, l, cap=args.cap)
        found += answer.optimum is not None
        entries.append(
            {"vertices": [g.labels[v] for v in hosts], **answer.to_json_dict(sub.labels)}
        )
    if len(entries) == 1:
        _emit(entries[0])
    else:
        _emit({"connected": False, "components": entries})
    return EXIT_OK if found == len(entries) else EXIT_INFEASIBLE


def cmd_oracle_max(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    entries = []
    found = 0
    for sub, hosts, _ in _component_graphs(g):
        answer = exact_max_team(sub, config.l, cap=args.cap)
        found += answer.optimum is not None
        entries.append(
            {"vertices": [g.labels[v] for v in hosts], **answer.to_json_dict(sub.labels)}
        )
    if len(entries) == 1:
        _emit(entries[0])
    else:
        _emit({"connected": False, "components": entries})
    return EXIT_OK if found == len(entries) else EXIT_INFEASIBLE


def cmd_oracle_cds(args, config: RunConfig) -> int:
    g = _load_graph(args.graph)
    entries = []
    for sub, hosts, _ in _component_graphs(g):
        answer = exact_min_cds(sub, cap=args.cap)
        entries.append(
            {"vertices": [g.labels[v] for v in hosts], **answer.to_json_dict(sub.labels)}
        )
    _emit(entries[0] if len(entries) == 1 else {"connected": False, "components": entries})
    return EXIT_OK


def cmd_oracle_ratio(args, config: RunConfig) -> int:
    graphs = corpus_mod.parse_corpus_spec(args.corpus)
    records, summary, skipped = ratio_experiment(graphs, config.l, cap=args.cap)
    _emit(
        {
            "l": args.l,
            "records": [r.to_json_dict() for r in records],
            "summary": summary,
            "skipped": skipped,
        }
    )
    return EXIT_OK


def cmd_oracle_bounds(args, config: RunConfig) -> int:
    graphs = corpus_mod.parse_corpus_spec(args.corpus)
    checks, skipped = bound_sweep(graphs, config.l, cap=args.cap)
    _emit(
        {
            "l": args.l,
            "checks": [c.to_json_dict() for c in checks],
            "all_hold": all(c.holds for c in checks),
            "skipped": skipped,
        }
    )
    return EXIT_OK


def cmd_gen(args, config: RunConfig) -> int:
    g = generate(
        args.kind,
        args.n,
        p=args.p,
        seed=config.seed,
        require_connected=args.connected,
    )
    text = f"# connected: {str(g.is_connected()).lower()}\n" + serialize_edge_list(g)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _time_best_of(fn, repeats: int = 3) -> float:
    best = math.inf
    for _ in range(repeats):
        begin = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - begin)
    return best


def cmd_bench(args, config: RunConfig) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    if not sizes:
        raise ValueError("bench needs at least one size")
    runs = []
    for n in sizes:
        p = 2.5 * math.log(n) / n if args.p is None else args.p
        g = connected_gnp(n, p, seed=config.seed)
        apsp_seconds = _time_best_of(lambda: all_pairs_distances(g))
        fresh = Graph(g.n, g.edges)  # cold distance cache: timing covers BFS too
        begin = time.perf_counter()
        hicom(fresh, config.l)
        hicom_seconds = time.perf_counter() - begin
        runs.append(
            {
                "n": n,
                "m": g.m,
                "p": p,
                "apsp_seconds": apsp_seconds,
                "hicom_seconds": hicom_seconds,
                "total_seconds": apsp_seconds + hicom_seconds,
            }
        )
    slopes = {}
    if len(sizes) >= 2:
        logs = np.log([run["n"] for run in runs])
        for key in ("apsp_seconds", "hicom_seconds", "total_seconds"):
            slopes[key.replace("_seconds", "")] = float(
                np.polyfit(logs, np.log([max(run[key], 1e-9) for run in runs]), 1)[0]
            )
    _emit({"l": args.l, "seed": config.seed, "runs": runs, "slopes": slopes})
    return EXIT_OK


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="comfnet", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", nargs="?", default="-", help="edge-list file ('-' = stdin)")

    p = sub.add_parser("analyze", help="eccentricity profile per component")
    add_graph_arg(p)
    p.add_argument("--format", choices=("json", "text", "dot"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("hicom", help="construct a highly comfortable team")
    add_graph_arg(p)
    p.add_argument("--l", default="3/2", help="reduction factor, e.g. 3/2 or 1.6")
    p.add_argument("--start", default=None, help="central start vertex label")
    p.add_argument("--max", action="store_true", help="also grow a maximal team")
    p.add_argument("--allow-large-l", action="store_true", help="permit l > 2")
    p.add_argument("--dot", default=None, help="write DOT with the team highlighted")
    p.set_defaults(func=cmd_hicom)

    p = sub.add_parser("verify", help="evaluate a team file against every condition")
    add_graph_arg(p)
    p.add_argument("--l", default="3/2")
    p.add_argument("--team", required=True, help="file with one vertex label per line")
    p.set_defaults(func=cmd_verify)

    oracle = sub.add_parser("oracle", help="exhaustive exact answers on small graphs")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)

    p = osub.add_parser("min", help="minimum team of a kind")
    add_graph_arg(p)
    p.add_argument("--kind", choices=("comfortable", "bc", "hc"), required=True)
    p.add_argument("--l", default="3/2")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle_min)

    p = osub.add_parser("max", help="maximum team meeting the HC conditions")
    add_graph_arg(p)
    p.add_argument("--l", default="3/2")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle_max)

    p = osub.add_parser("cds", help="minimum connected dominating set")
    add_graph_arg(p)
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle_cds)

    p = osub.add_parser("ratio", help="heuristic size vs exact optimum over a corpus")
    p.add_argument("--corpus", required=True, help="e.g. cycles:7-12 or trees:4-9+cycles:7-12")
    p.add_argument("--l", default="3/2")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle_ratio)

    p = osub.add_parser("bounds", help="dispersion-index sandwich over a corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--l", default="3/2")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_oracle_bounds)

    p = sub.add_parser("gen", help="emit a generated graph as edge-list text")
    p.add_argument("kind", choices=("path", "cycle", "tree", "gnp"))
    p.add_argument("n", type=int)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--connected", action="store_true", help="retry gnp until connected")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="wall-clock scaling of all-pairs BFS and hicom")
    p.add_argument("--sizes", default="100,200,400")
    p.add_argument("--p", type=float, default=None, help="fixed edge probability (default: auto)")
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--l", default="3/2")
    p.set_defaults(func=cmd_bench)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig.from_args(args)
        return args.func(args, config)
    except EdgeListParseError as exc:
        return _emit_error("parse", str(exc), EXIT_USAGE)
    except HicomError as exc:
        return _emit_error("infeasible", str(exc), EXIT_INFEASIBLE)
    except (ValueError, KeyError) as exc:
        return _emit_error("usage", str(exc), EXIT_USAGE)
    except OSError as exc:
        return _emit_error("io", str(exc), EXIT_USAGE)
    except Exception as exc:  # pragma: no cover - defensive envelope
        return _emit_error("internal", f"{type(exc).__name__}: {exc}", EXIT_INTERNAL)


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
