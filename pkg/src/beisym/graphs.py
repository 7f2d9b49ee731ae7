"""Simple labeled graphs on 1..n and the combinatorics the ideal constructions need.

Vertex labels matter: the lex initial ideal and admissible paths depend on the
order of the labels, so nothing here relabels silently.  Internally vertex sets
are bitmasks with vertex ``i`` stored at bit ``i - 1``.

Path "order" always means the number of vertices on the path, not edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Invalid graph data or unparsable graph input."""


def _bit(v: int) -> int:
    return 1 << (v - 1)


def _members(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _to_mask(vs: Iterable[int]) -> int:
    m = 0
    for v in vs:
        m |= _bit(v)
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        for e in self.edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            if not (1 <= i < j <= self.n):
                raise GraphError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        norm = set()
        for e in edges:
            i, j = e
            if i == j:
                raise GraphError(f"loop at vertex {i}")
            norm.add((min(i, j), max(i, j)))
        return cls(n, frozenset(norm))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def nbr(self) -> tuple[int, ...]:
        """Neighbour bitmasks, indexed by vertex (index 0 unused)."""
        adj = [0] * (self.n + 1)
        for i, j in self.edges:
            adj[i] |= _bit(j)
            adj[j] |= _bit(i)
        return tuple(adj)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.nbr[i] & _bit(j))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return _members(self.nbr[v])

    def __str__(self) -> str:
        es = " ".join(f"{i}-{j}" for i, j in self.sorted_edges)
        return f"Graph(n={self.n}; {es})"


# ---------------------------------------------------------------------------
# ingestion


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 (short form, n <= 62).

    Vertex 0 of the format becomes vertex 1.
    """
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphError(f"invalid graph6 byte {ch!r}")
    n = ord(s[0]) - 63
    if n == 63:
        raise GraphError("graph6 long form (n > 62) is not supported")
    if n == 0:
        raise GraphError("graph6 string encodes the empty graph (n = 0)")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {nbytes} for n={n}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i + 1, j + 1))
            k += 1
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise GraphError("graph6 short form only covers n <= 62")
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(2, g.n + 1)
        for i in range(1, j)
    ]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: ``n <count>`` then one ``i j`` per line.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise GraphError("edge list is empty")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "n":
        raise GraphError(f"line {lineno}: expected header 'n <count>', got {header!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise GraphError(f"line {lineno}: vertex count {parts[1]!r} is not an integer") from None
    if n < 1:
        raise GraphError(f"line {lineno}: vertex count must be positive")
    edges = []
    for lineno, line in lines[1:]:
        parts = line.split()
        try:
            i, j = (int(p) for p in parts)
        except ValueError:
            raise GraphError(f"line {lineno}: cannot parse edge {line!r}") from None
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"line {lineno}: endpoint out of range 1..{n}")
        if i == j:
            raise GraphError(f"line {lineno}: loop at vertex {i}")
        edges.append((i, j))
    return Graph.from_edges(n, edges)


def to_edge_list(g: Graph) -> str:
    return "\n".join([f"n {g.n}"] + [f"{i} {j}" for i, j in g.sorted_edges]) + "\n"


# ---------------------------------------------------------------------------
# subgraphs and components


def induced_subgraph(g: Graph, w: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced on ``w``, relabeled 1..|w| keeping the label order."""
    ws = sorted(set(w))
    if not ws:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    if ws[0] < 1 or ws[-1] > g.n:
        raise GraphError(f"vertex set {ws} out of range 1..{g.n}")
    relabel = {old: new for new, old in enumerate(ws, 1)}
    edges = [(relabel[i], relabel[j]) for i, j in g.edges if i in relabel and j in relabel]
    return Graph.from_edges(len(ws), edges), relabel


def _components_mask(g: Graph, allowed: int) -> list[int]:
    nbr = g.nbr
    comps = []
    rest = allowed
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            v = b.bit_length()
            new = nbr[v] & allowed & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    return [_members(c) for c in _components_mask(g, g.full_mask)]


def is_connected(g: Graph) -> bool:
    return len(_components_mask(g, g.full_mask)) == 1


def component_count_after_removal(g: Graph, t: Iterable[int]) -> int:
    """c_G(t): components of the graph induced on [n] minus t (0 if t is everything)."""
    tm = _to_mask(t)
    if tm & ~g.full_mask:
        raise GraphError("removal set out of range")
    return len(_components_mask(g, g.full_mask & ~tm))


# ---------------------------------------------------------------------------
# irredundant disconnecting sets


@dataclass(frozen=True)
class DisconnectingSet:
    members: tuple[int, ...]
    component_count: int


def enumerate_ids(g: Graph) -> list[DisconnectingSet]:
    """All irredundant disconnecting sets, ordered by size then lexicographically.

    Plain subset scan with memoised component counts; fine up to n of about 16.
    """
    full = g.full_mask
    counts: dict[int, int] = {}

    def c(tm: int) -> int:
        if tm not in counts:
            counts[tm] = len(_components_mask(g, full & ~tm))
        return counts[tm]

    out = []
    for size in range(g.n + 1):
        for t in combinations(g.vertices, size):
            tm = _to_mask(t)
            ct = c(tm)
            if all(ct > c(tm & ~_bit(i)) for i in t):
                out.append(DisconnectingSet(t, ct))
    return out


# ---------------------------------------------------------------------------
# paths


@dataclass(frozen=True)
class VertexPath:
    vertices: tuple[int, ...]
    kind: str  # "induced" or "admissible"

    @property
    def start(self) -> int:
        return self.vertices[0]

    @property
    def end(self) -> int:
        return self.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def __len__(self) -> int:
        return len(self.vertices)


def _induced_sequences(g: Graph) -> Iterator[tuple[int, ...]]:
    # Depth-first extension: a new vertex may touch only the current end.
    nbr = g.nbr

    def extend(path: list[int], used: int, before_last: int) -> Iterator[tuple[int, ...]]:
        last = path[-1]
        cand = nbr[last] & ~used & ~_nbr_union(before_last)
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length()
            path.append(v)
            yield tuple(path)
            yield from extend(path, used | b, before_last | _bit(last))
            path.pop()

    nbr_cache: dict[int, int] = {}

    def _nbr_union(mask: int) -> int:
        if mask not in nbr_cache:
            u = 0
            for v in _members(mask):
                u |= nbr[v]
            nbr_cache[mask] = u
        return nbr_cache[mask]

    for s in g.vertices:
        yield from extend([s], _bit(s), 0)


def enumerate_induced_paths(g: Graph) -> list[VertexPath]:
    """Induced paths with at least one edge, each reported once with start < end.

    Sorted by vertex count, then lexicographically.
    """
    seqs = {p for p in _induced_sequences(g) if p[0] < p[-1]}
    return [VertexPath(p, "induced") for p in sorted(seqs, key=lambda p: (len(p), p))]


def enumerate_admissible_paths(g: Graph) -> list[VertexPath]:
    """Admissible paths: from i to j (i < j), interior outside [i, j], no shortcut.

    The no-shortcut condition on a simple path is the same as the path being
    induced, so these are the induced paths whose interior avoids [i, j].
    """
    out = []
    for p in enumerate_induced_paths(g):
        i, j = p.start, p.end
        if all(v < i or v > j for v in p.interior):
            out.append(VertexPath(p.vertices, "admissible"))
    return out


def longest_induced_path_order(g: Graph) -> int:
    """Vertex count of a longest induced path; 0 when there are no edges."""
    return max((len(p) for p in enumerate_induced_paths(g)), default=0)


def longest_admissible_path_order(g: Graph) -> int:
    return max((len(p) for p in enumerate_admissible_paths(g)), default=0)


def simple_path_vertex_sets(g: Graph) -> set[tuple[int, int, frozenset[int]]]:
    """(i, j, interior set) for every simple path i..j with i < j.

    Exponential in general; only meant for small graphs.
    """
    nbr = g.nbr
    out: set[tuple[int, int, frozenset[int]]] = set()

    def walk(start: int, last: int, used: int) -> None:
        cand = nbr[last] & ~used
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length()
            if start < v:
                out.add((start, v, frozenset(_members(used & ~_bit(start)))))
            walk(start, v, used | b)

    for s in g.vertices:
        walk(s, s, _bit(s))
    return out


# ---------------------------------------------------------------------------
# covers, cliques, colourings


def _bron_kerbosch(nbr: Sequence[int], r: int, p: int, x: int, out: list[int]) -> None:
    if not p and not x:
        out.append(r)
        return
    px = p | x
    # pivot with most neighbours in p
    pivot = max(_members(px), key=lambda u: (nbr[u] & p).bit_count())
    cand = p & ~nbr[pivot]
    while cand:
        b = cand & -cand
        cand ^= b
        v = b.bit_length()
        _bron_kerbosch(nbr, r | b, p & nbr[v], x & nbr[v], out)
        p &= ~b
        x |= b


def maximal_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    full = g.full_mask
    co = [0] + [full & ~g.nbr[v] & ~_bit(v) for v in g.vertices]
    out: list[int] = []
    _bron_kerbosch(co, 0, full, 0, out)
    return sorted((_members(m) for m in out), key=lambda s: (len(s), s))


def minimal_vertex_covers(g: Graph) -> list[tuple[int, ...]]:
    """Inclusion-minimal vertex covers (complements of maximal independent sets)."""
    full = g.full_mask
    covers = [_members(full & ~_to_mask(s)) for s in maximal_independent_sets(g)]
    return sorted(covers, key=lambda c: (len(c), c))


def maximum_clique(g: Graph) -> tuple[int, ...]:
    best = 0

    def expand(r: int, p: int) -> None:
        nonlocal best
        if not p:
            if r.bit_count() > best.bit_count():
                best = r
            return
        while p:
            if r.bit_count() + p.bit_count() <= best.bit_count():
                return
            b = p & -p
            v = b.bit_length()
            expand(r | b, p & g.nbr[v])
            p ^= b

    expand(0, g.full_mask)
    return _members(best)


def clique_number(g: Graph) -> int:
    return len(maximum_clique(g))


def optimal_coloring(g: Graph) -> dict[int, int]:
    """A proper colouring with chi(G) colours, colours numbered from 0.

    Branch and bound in DSATUR order; exact, meant for n up to about 20.
    """
    n = g.n
    nbr = g.nbr
    best: dict[int, int] = {}
    best_k = n + 1
    lower = max(clique_number(g), 1)
    color: dict[int, int] = {}

    def saturation(v: int) -> int:
        return len({color[u] for u in _members(nbr[v]) if u in color})

    def search(used: int) -> bool:
        nonlocal best, best_k
        if used >= best_k:
            return False
        if len(color) == n:
            best, best_k = dict(color), used
            return best_k == lower
        v = max(
            (u for u in g.vertices if u not in color),
            key=lambda u: (saturation(u), nbr[u].bit_count(), -u),
        )
        forbidden = {color[u] for u in _members(nbr[v]) if u in color}
        for c in range(min(used + 1, best_k - 1)):
            if c in forbidden:
                continue
            color[v] = c
            done = search(max(used, c + 1))
            del color[v]
            if done:
                return True
        return False

    search(0)
    return best


def chromatic_number(g: Graph) -> int:
    return max(optimal_coloring(g).values()) + 1


def is_bipartite(g: Graph) -> bool:
    return bool(g.edges) and chromatic_number(g) == 2


def is_closed_labeling(g: Graph) -> bool:
    """Check the closed-graph condition for the labeling as given."""
    es = g.sorted_edges
    for (i, j), (k, l) in combinations(es, 2):
        if i == k and not g.has_edge(j, l):
            return False
        if j == l and not g.has_edge(i, k):
            return False
    return True


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n, [(i, j) for i, j in combinations(g.vertices, 2) if not g.has_edge(i, j)]
    )


def multipartite_parts(g: Graph) -> list[tuple[int, ...]] | None:
    """The parts if ``g`` is complete multipartite (complement is a union of cliques)."""
    co = complement(g)
    parts = connected_components(co)
    for part in parts:
        for i, j in combinations(part, 2):
            if not co.has_edge(i, j):
                return None
    return parts


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for h in graphs:
        edges += [(i + offset, j + offset) for i, j in h.edges]
        offset += h.n
    return Graph.from_edges(offset, edges)


# ---------------------------------------------------------------------------
# named families


def make_family(kind: str, *params: int) -> Graph:
    """Named graph with its canonical labeling.

    ``path n``, ``cycle n``, ``complete n``, ``empty n``,
    ``complete_multipartite c1 c2 ...`` (parts labeled contiguously), ``net``
    (triangle 1,2,3 with pendants 4,5,6 on 1,2,3) and ``paw`` (triangle
    1,2,3 with pendant 4 on 1).
    """
    def need_n(lo: int) -> int:
        if len(params) != 1 or not isinstance(params[0], int) or params[0] < lo:
            raise GraphError(f"{kind} needs one size >= {lo}, got {params}")
        return params[0]

    if kind == "path":
        n = need_n(1)
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])
    if kind == "cycle":
        n = need_n(3)
        return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])
    if kind == "complete":
        n = need_n(1)
        return Graph.from_edges(n, combinations(range(1, n + 1), 2))
    if kind == "empty":
        return Graph(need_n(1))
    if kind in ("complete_multipartite", "kpartite"):
        if not params or any(not isinstance(c, int) or c < 1 for c in params):
            raise GraphError(f"part sizes must be positive integers, got {params}")
        blocks = []
        start = 1
        for c in params:
            blocks.append(range(start, start + c))
            start += c
        edges = [
            (i, j)
            for a, b in combinations(blocks, 2)
            for i in a
            for j in b
        ]
        return Graph.from_edges(start - 1, edges)
    if kind == "net":
        if params:
            raise GraphError("net takes no parameters")
        return Graph.from_edges(6, [(1, 2), (2, 3), (1, 3), (1, 4), (2, 5), (3, 6)])
    if kind == "paw":
        if params:
            raise GraphError("paw takes no parameters")
        return Graph.from_edges(4, [(1, 2), (2, 3), (1, 3), (1, 4)])
    raise GraphError(f"unknown graph family {kind!r}")


def parse_family(spec: str) -> Graph:
    """Parse ``path:3``, ``cycle:5``, ``complete:4``, ``kpartite:1,1,2``, ``net``, ``paw``."""
    name, _, arg = spec.strip().partition(":")
    name = name.strip()
    if name == "kpartite":
        name = "complete_multipartite"
    try:
        params = [int(x) for x in arg.split(",")] if arg.strip() else []
    except ValueError:
        raise GraphError(f"bad family parameters in {spec!r}") from None
    return make_family(name, *params)
