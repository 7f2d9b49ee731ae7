"""Graph corpora for verification campaigns.

Corpus specs:

    all-connected:N        one graph per isomorphism class, connected, 2..N vertices
    labeled-connected:N    every connected graph on exactly 1..k labels, k = 2..N
    two-component:N        disjoint unions of two connected graphs (at least one
                           edge overall), at most N vertices in total
    family:KIND:A..B       path / cycle / complete for sizes A..B
    family:kpartite:N      complete multipartite graphs, k >= 2 parts, total <= N
    family:SPEC            a single family graph (``net``, ``paw``, ``path:4``, ...)
    file:PATH or PATH      graph6 lines from a file

Isomorphism classes come from the networkx graph atlas (all graphs up to 7
vertices), so "all-connected" stops at 7.
"""

from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

from .graphs import Graph, GraphError, disjoint_union, is_connected, make_family, parse_family, parse_graph6

T = TypeVar("T")

WORKERS_ENV = "BEISYM_WORKERS"
ATLAS_MAX_N = 7


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Corpus:
    spec: str
    graphs: tuple[Graph, ...]
    max_n: int

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


@lru_cache(maxsize=None)
def _atlas() -> tuple[Graph, ...]:
    import networkx as nx

    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n == 0:
            continue
        out.append(Graph.from_edges(n, ((u + 1, v + 1) for u, v in h.edges())))
    return tuple(out)


def connected_graphs(max_n: int, min_n: int = 2) -> list[Graph]:
    """Connected graphs up to isomorphism, in atlas order."""
    if max_n > ATLAS_MAX_N:
        raise CorpusError(f"isomorphism-class corpus only available up to n = {ATLAS_MAX_N}")
    return [g for g in _atlas() if min_n <= g.n <= max_n and is_connected(g)]


def labeled_connected_graphs(max_n: int, min_n: int = 2) -> list[Graph]:
    """Every connected graph on the labels 1..n for n in [min_n, max_n]."""
    out = []
    for n in range(min_n, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for bits in range(1 << len(pairs)):
            g = Graph.from_edges(n, (p for k, p in enumerate(pairs) if bits >> k & 1))
            if is_connected(g):
                out.append(g)
    return out


def two_component_graphs(max_n: int) -> list[Graph]:
    """G1 + G2 with both connected, at least one with an edge, |G1| + |G2| <= max_n."""
    pieces = [g for g in _atlas() if g.n < max_n and is_connected(g)]
    out = []
    for a, b in combinations_with_replacement(range(len(pieces)), 2):
        g1, g2 = pieces[a], pieces[b]
        if g1.n + g2.n > max_n or not (g1.edges or g2.edges):
            continue
        out.append(disjoint_union(g1, g2))
    return out


def multipartite_part_vectors(max_total: int) -> list[tuple[int, ...]]:
    """Non-increasing part-size vectors with at least two parts and total <= max_total."""
    out = []

    def parts(rest: int, cap: int, prefix: tuple[int, ...]) -> None:
        if len(prefix) >= 2:
            out.append(prefix)
        for c in range(min(rest, cap), 0, -1):
            parts(rest - c, c, prefix + (c,))

    parts(max_total, max_total, ())
    return sorted(out, key=lambda p: (sum(p), len(p), p))


def load_graph6_lines(lines: Iterable[str]) -> list[Graph]:
    out = []
    for k, line in enumerate(lines, 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        try:
            out.append(parse_graph6(s))
        except GraphError as exc:
            raise GraphError(f"graph6 line {k}: {exc}") from None
    return out


_RANGE = re.compile(r"^(\d+)\.\.(\d+)$")


def _int(s: str, spec: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise CorpusError(f"bad size {s!r} in corpus spec {spec!r}") from None


def corpus_bound(spec: str) -> int | None:
    """Largest vertex count a corpus spec can produce, without building it."""
    head, _, rest = spec.partition(":")
    if head in ("all-connected", "labeled-connected", "two-component"):
        return _int(rest, spec)
    if head == "family":
        kind, _, arg = rest.partition(":")
        m = _RANGE.match(arg)
        if m:
            return int(m.group(2))
        if kind == "kpartite" and arg.isdigit():
            return int(arg)
    return None


def load_corpus(spec: str) -> Corpus:
    head, _, rest = spec.partition(":")
    if head == "all-connected":
        graphs = connected_graphs(_int(rest, spec))
    elif head == "labeled-connected":
        graphs = labeled_connected_graphs(_int(rest, spec))
    elif head == "two-component":
        graphs = two_component_graphs(_int(rest, spec))
    elif head == "family":
        kind, _, arg = rest.partition(":")
        m = _RANGE.match(arg)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            graphs = [make_family("complete_multipartite" if kind == "kpartite" else kind, k) for k in range(lo, hi + 1)]
        elif kind == "kpartite" and arg.isdigit():
            graphs = [make_family("complete_multipartite", *p) for p in multipartite_part_vectors(int(arg))]
        else:
            graphs = [parse_family(rest)]
    else:
        path = rest if head == "file" else spec
        if not os.path.exists(path):
            raise CorpusError(f"unknown corpus spec {spec!r}")
        with open(path) as fh:
            graphs = load_graph6_lines(fh)
    if not graphs:
        raise CorpusError(f"corpus {spec!r} is empty")
    return Corpus(spec, tuple(graphs), max(g.n for g in graphs))


def default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn: Callable[..., T], items: Sequence, workers: int = 1) -> Iterator[T]:
    """map() that keeps input order; uses a process pool when workers > 1."""
    if workers <= 1 or len(items) <= 1:
        yield from map(fn, items)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers)))
