"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed, 2 bad input,
3 edgeless graph (zero ideal), 4 size guard tripped (rerun with --force).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from functools import partial
from typing import Sequence, TextIO

from .corpus import CorpusError, corpus_bound, default_workers, load_corpus, load_graph6_lines, ordered_map
from .graphs import Graph, GraphError, parse_edge_list, parse_family, to_graph6
from .ideals import EdgelessGraphError, IdealError, MonomialIdeal, symbolic_power
from .invariants import (
    IDEAL_LABEL,
    KINDS,
    THEOREMS,
    conjecture_report,
    ideal_of,
    invariant_report,
    primes_of,
    verify_theorem,
)
from .polyhedron import PolyhedronError, build_sp, enumerate_vertices, format_fraction, format_qvector, qvector_json
from .primes import minimal_primes

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_DOMAIN, EXIT_GUARD = 0, 1, 2, 3, 4
DEFAULT_MAX_N = 7


class GuardError(RuntimeError):
    pass


@dataclass
class RunConfig:
    command: str
    graph6: str | None = None
    edges: str | None = None
    family: str | None = None
    kind: str = "gin"
    fmt: str = "json"
    workers: int = 1
    max_n: int = DEFAULT_MAX_N
    force: bool = False

    def load_graph(self) -> Graph:
        sources = [s for s in (self.graph6, self.edges, self.family) if s is not None]
        if len(sources) != 1:
            raise GraphError("give exactly one of --graph6, --edges, --family")
        if self.family is not None:
            g = parse_family(self.family)
        elif self.edges is not None:
            g = parse_edge_list(_read(self.edges))
        else:
            graphs = load_graph6_lines(_read(self.graph6).splitlines())
            if len(graphs) != 1:
                raise GraphError(f"{self.graph6}: expected one graph6 line, found {len(graphs)}")
            g = graphs[0]
        self.guard(g.n)
        return g

    def guard(self, n: int | None) -> None:
        if n is not None and n > self.max_n and not self.force:
            raise GuardError(f"n = {n} exceeds --max-n {self.max_n}; pass --force to run anyway")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise GraphError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj: dict, cfg: RunConfig, out: TextIO, text: str) -> None:
    if cfg.fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def cmd_ideal(cfg: RunConfig, out: TextIO) -> int:
    g = cfg.load_graph()
    ideal = ideal_of(g, cfg.kind)
    obj = {"graph": to_graph6(g), "kind": cfg.kind, "ideal": IDEAL_LABEL[cfg.kind], **ideal.to_json()}
    _emit(obj, cfg, out, f"{IDEAL_LABEL[cfg.kind]} = {ideal.format()}")
    return EXIT_OK


def cmd_primes(cfg: RunConfig, out: TextIO) -> int:
    g = cfg.load_graph()
    primes = primes_of(g, cfg.kind)
    obj = {
        "graph": to_graph6(g),
        "kind": cfg.kind,
        "dim": 2 * g.n,
        "primes": [p.to_json() for p in primes],
    }
    lines = []
    for p in primes:
        names = [f"x{i}" if i <= g.n else f"y{i - g.n}" for i in p.members]
        lines.append(f"({', '.join(names)})  {json.dumps(p.witnesses[0].to_json())}")
    _emit(obj, cfg, out, "\n".join(lines))
    return EXIT_OK


def cmd_sp_vertices(cfg: RunConfig, out: TextIO) -> int:
    g = cfg.load_graph()
    p = build_sp(primes_of(g, cfg.kind), 2 * g.n)
    rows = []
    lines = []
    for a in enumerate_vertices(p):
        full = all(a[j] + a[g.n + j] != 0 for j in range(g.n))
        rows.append({"coords": qvector_json(a), "full": full, "sum": format_fraction(sum(a))})
        lines.append(f"{format_qvector(a)}  sum={format_fraction(sum(a))}{'  full' if full else ''}")
    obj = {"graph": to_graph6(g), "kind": cfg.kind, "polyhedron": p.to_json(), "vertices": rows}
    _emit(obj, cfg, out, "\n".join(lines))
    return EXIT_OK


def cmd_invariants(cfg: RunConfig, out: TextIO) -> int:
    g = cfg.load_graph()
    rep = invariant_report(g, cfg.kind).to_json()
    text = "\n".join(f"{k}: {v}" for k, v in rep.items())
    _emit(rep, cfg, out, text)
    return EXIT_OK


def cmd_sympower(cfg: RunConfig, out: TextIO, ideal_path: str | None, m: int) -> int:
    if ideal_path is not None:
        if any(s is not None for s in (cfg.graph6, cfg.edges, cfg.family)):
            raise GraphError("give either --ideal or a graph source, not both")
        try:
            ideal = MonomialIdeal.from_json(json.loads(_read(ideal_path)))
        except json.JSONDecodeError as exc:
            raise IdealError(f"{ideal_path}: invalid JSON ({exc.msg})") from None
        cfg.guard(ideal.dim)
        primes = minimal_primes(ideal)
    else:
        g = cfg.load_graph()
        ideal = ideal_of(g, cfg.kind)
        primes = [p.support for p in primes_of(g, cfg.kind)]
    power = symbolic_power(primes, m, ideal.graph_n)
    obj = {"m": m, **power.to_json()}
    _emit(obj, cfg, out, f"I^({m}) = {power.format()}")
    return EXIT_OK


def _verify_one(theorem: str, kind: str | None, g: Graph) -> dict:
    return verify_theorem(theorem, g, kind).to_json()


def cmd_verify(cfg: RunConfig, out: TextIO, theorem: str, corpus_spec: str, kind: str | None) -> int:
    if theorem not in THEOREMS:
        raise CorpusError(f"unknown theorem {theorem!r}; known: {', '.join(THEOREMS)}")
    cfg.guard(corpus_bound(corpus_spec))
    corpus = load_corpus(corpus_spec)
    cfg.guard(corpus.max_n)
    checked = passed = skipped = 0
    failures = []
    fn = partial(_verify_one, theorem, kind)
    for res in ordered_map(fn, list(corpus.graphs), cfg.workers):
        if res["status"] == "skip":
            skipped += 1
        else:
            checked += 1
            if res["status"] == "pass":
                passed += 1
            else:
                failures.append({"graph": res["graph"], "detail": res["detail"]})
        if cfg.fmt == "json":
            out.write(json.dumps(res) + "\n")
        else:
            out.write(f"{res['status'].upper():4}  {res['graph']}  {json.dumps(res['detail'])}\n")
        out.flush()
    summary = {
        "theorem": theorem,
        "corpus": corpus_spec,
        "checked": checked,
        "passed": passed,
        "skipped": skipped,
        "failures": failures,
    }
    if cfg.fmt == "json":
        out.write(json.dumps(summary) + "\n")
    else:
        out.write(f"{theorem} on {corpus_spec}: {passed}/{checked} passed, {skipped} skipped\n")
    return EXIT_OK if not failures else EXIT_FAIL


def cmd_conjectures(cfg: RunConfig, out: TextIO) -> int:
    g = cfg.load_graph()
    rows = [r.to_json() for r in conjecture_report(g)]
    obj = {"graph": to_graph6(g), "rows": rows}
    header = f"{'ideal':10} {'areg':>6} {'path':>10} {'vertices':>9} {'edges':>6}"
    lines = [header] + [
        f"{r['ideal']:10} {r['areg']:>6} {r['path']:>10} {r['path_vertices']:>9} {r['path_edges']:>6}"
        for r in rows
    ]
    _emit(obj, cfg, out, "\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beisym",
        description="Symbolic polyhedra and asymptotic invariants of monomial ideals from graphs.",
    )
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--graph6", metavar="FILE", help="file holding one graph6 line")
    src.add_argument("--edges", metavar="FILE", help="edge-list file ('n <count>' then 'i j' lines)")
    src.add_argument("--family", metavar="SPEC", help="path:n, cycle:n, complete:n, kpartite:c1,c2,..., net, paw")
    common.add_argument("--format", dest="fmt", choices=("json", "text"), default="json")
    common.add_argument("--workers", type=int, default=None, help="worker processes (default: $BEISYM_WORKERS or 1)")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse graphs larger than this")
    common.add_argument("--force", action="store_true", help="ignore --max-n")

    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("ideal", "minimal generators of the chosen ideal"),
        ("primes", "minimal primes with their combinatorial witnesses"),
        ("sp-vertices", "vertices of the symbolic polyhedron"),
        ("invariants", "Waldschmidt constant, asymptotic regularity and path orders"),
        ("conjectures", "asymptotic regularity against longest induced/admissible paths"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("--kind", choices=KINDS, default="gin")
    p = sub.add_parser("sympower", parents=[common], help="symbolic power of a squarefree monomial ideal")
    p.add_argument("--ideal", metavar="FILE", help="ideal JSON {dim, gens}")
    p.add_argument("-m", type=int, required=True, help="order of the symbolic power")
    p.add_argument("--kind", choices=KINDS, default="gin")
    p = sub.add_parser("verify", parents=[common], help="check a theorem over a graph corpus")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    p.add_argument("--corpus", required=True, help="all-connected:N, family:cycle:3..7, file of graph6 lines, ...")
    p.add_argument("--kind", choices=KINDS, default=None)
    return parser


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    workers = args.workers if args.workers is not None else default_workers()
    cfg = RunConfig(
        command=args.command,
        graph6=args.graph6,
        edges=args.edges,
        family=args.family,
        kind=args.kind or "gin",
        fmt=args.fmt,
        workers=max(1, workers),
        max_n=args.max_n,
        force=args.force,
    )
    try:
        if args.command == "ideal":
            return cmd_ideal(cfg, out)
        if args.command == "primes":
            return cmd_primes(cfg, out)
        if args.command == "sp-vertices":
            return cmd_sp_vertices(cfg, out)
        if args.command == "invariants":
            return cmd_invariants(cfg, out)
        if args.command == "conjectures":
            return cmd_conjectures(cfg, out)
        if args.command == "sympower":
            if args.m < 1:
                raise IdealError("-m must be positive")
            return cmd_sympower(cfg, out, args.ideal, args.m)
        if args.command == "verify":
            return cmd_verify(cfg, out, args.theorem, args.corpus, args.kind)
    except EdgelessGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (GraphError, IdealError, CorpusError, PolyhedronError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
