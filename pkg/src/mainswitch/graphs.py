"""Graphs, signed graphs, switchings, file formats, and the two graph families.

Vertices are labelled 1..n everywhere.  The family constructors fix the
labelling that the switching constructions depend on: pendant vertices come
first in the clique-with-pendants family, and complete multipartite parts are
laid out consecutively in declaration order.  File formats translate indices
at the boundary only.

All values here are immutable after construction and safe to share between
concurrent workers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

Edge = tuple[int, int]

__all__ = [
    "Edge",
    "Graph",
    "GraphFormatError",
    "MultipartiteParams",
    "SignedGraph",
    "SnrParams",
    "Switching",
    "adjacency_matrix",
    "apply_switching",
    "as_signed",
    "emit_graph6",
    "format_signed_edge_list",
    "is_connected",
    "make_multipartite",
    "make_snr",
    "parse_graph6",
    "parse_signed_edge_list",
]


class GraphFormatError(ValueError):
    """Malformed textual graph input; carries the byte offset when known."""

    def __init__(self, message: str, offset: int | None = None) -> None:
        super().__init__(message if offset is None else f"{message} (byte {offset})")
        self.offset = offset


def _norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n."""

    n: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("vertex count must be positive")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{self.n} or not ordered")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        seen: set[Edge] = set()
        for u, v in edges:
            e = _norm_edge(u, v)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    def has_edge(self, u: int, v: int) -> bool:
        return _norm_edge(u, v) in self.edges

    def neighbor_sets(self) -> dict[int, frozenset[int]]:
        nbrs: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return {v: frozenset(s) for v, s in nbrs.items()}

    def degree(self, u: int) -> int:
        return sum(1 for e in self.edges if u in e)


@dataclass(frozen=True)
class SignedGraph:
    """A graph together with a +1/-1 sign on every edge.

    Only the negative edges are stored; an all-positive signed graph has the
    same adjacency matrix as its underlying graph.
    """

    graph: Graph
    negative: frozenset[Edge]

    def __post_init__(self) -> None:
        stray = self.negative - self.graph.edges
        if stray:
            raise ValueError(f"negative signs on non-edges: {sorted(stray)}")

    @property
    def n(self) -> int:
        return self.graph.n

    def sign(self, u: int, v: int) -> int:
        e = _norm_edge(u, v)
        if e not in self.graph.edges:
            raise ValueError(f"no edge {e}")
        return -1 if e in self.negative else 1


def as_signed(g: Graph | SignedGraph) -> SignedGraph:
    """Promote a plain graph to its all-positive signed form."""
    if isinstance(g, SignedGraph):
        return g
    return SignedGraph(g, frozenset())


@dataclass(frozen=True)
class Switching:
    """A vertex subset X; switching negates every edge crossing (X, V\\X)."""

    switched: frozenset[int]

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "Switching":
        return cls(frozenset(vertices))


def apply_switching(g: Graph | SignedGraph, x: Switching | Iterable[int]) -> SignedGraph:
    """Negate the sign of every edge with exactly one endpoint in the set.

    Applying the same set twice is the identity, and a set and its complement
    produce the same signed graph.
    """
    sg = as_signed(g)
    xs = x.switched if isinstance(x, Switching) else frozenset(x)
    for v in xs:
        if not (1 <= v <= sg.n):
            raise ValueError(f"switched vertex {v} out of range 1..{sg.n}")
    negative = set(sg.negative)
    for e in sg.graph.edges:
        u, v = e
        if (u in xs) != (v in xs):
            if e in negative:
                negative.discard(e)
            else:
                negative.add(e)
    return SignedGraph(sg.graph, frozenset(negative))


def adjacency_matrix(g: Graph | SignedGraph) -> list[list[int]]:
    """Symmetric integer adjacency matrix with entries in {-1, 0, 1}."""
    sg = as_signed(g)
    n = sg.n
    a = [[0] * n for _ in range(n)]
    for u, v in sg.graph.edges:
        s = -1 if (u, v) in sg.negative else 1
        a[u - 1][v - 1] = s
        a[v - 1][u - 1] = s
    return a


def is_connected(g: Graph | SignedGraph) -> bool:
    base = g.graph if isinstance(g, SignedGraph) else g
    if base.n == 1:
        return True
    nbrs = base.neighbor_sets()
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == base.n


# ---------------------------------------------------------------------------
# graph6 codec (single-byte size form, n <= 62)
# ---------------------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_pair_order(n: int) -> Iterator[Edge]:
    # Upper triangle in column order: (1,2), (1,3), (2,3), (1,4), ...
    for j in range(2, n + 1):
        for i in range(1, j):
            yield (i, j)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (standard 63-offset encoding, n <= 62).

    The optional ``>>graph6<<`` prefix is accepted.  Errors report the byte
    offset of the offending character within the record.
    """
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 record", 0)
    try:
        raw = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphFormatError("non-ASCII character in graph6 record", exc.start) from None
    head = raw[0]
    if head == 126:
        raise GraphFormatError("multi-byte vertex count (n > 62) not supported", 0)
    if not (63 <= head <= 125):
        raise GraphFormatError(f"malformed size byte {chr(head)!r}", 0)
    n = head - 63
    if n == 0:
        raise GraphFormatError("graph must have at least one vertex", 0)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = raw[1:]
    if len(body) < nbytes:
        raise GraphFormatError(
            f"truncated bit field: need {nbytes} bytes, got {len(body)}", len(raw))
    if len(body) > nbytes:
        raise GraphFormatError("trailing data after bit field", 1 + nbytes)
    bits: list[int] = []
    for off, ch in enumerate(body, start=1):
        if not (63 <= ch <= 126):
            raise GraphFormatError(f"character {chr(ch)!r} outside graph6 range", off)
        val = ch - 63
        bits.extend((val >> shift) & 1 for shift in (5, 4, 3, 2, 1, 0))
    if any(bits[npairs:]):
        raise GraphFormatError("nonzero padding bits", 1 + npairs // 6)
    edges = [pair for pair, bit in zip(_g6_pair_order(n), bits) if bit]
    return Graph(n, frozenset(edges))


def emit_graph6(g: Graph) -> str:
    """Encode a graph as one graph6 record (n <= 62)."""
    if g.n > 62:
        raise ValueError("graph6 emission supports n <= 62 only")
    bits = [1 if pair in g.edges else 0 for pair in _g6_pair_order(g.n)]
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Signed edge list format: "n m" then m lines "u v s" with s in {+,-}
# ---------------------------------------------------------------------------


def parse_signed_edge_list(text: str) -> SignedGraph:
    """Parse the signed edge-list format: header ``n m`` then ``u v s`` lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    rows = [(i + 1, ln) for i, ln in enumerate(lines) if ln]
    if not rows:
        raise GraphFormatError("empty signed edge list")
    header = rows[0][1].split()
    if len(header) != 2:
        raise GraphFormatError(f"header must be 'n m', got {rows[0][1]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise GraphFormatError(f"non-integer header {rows[0][1]!r}") from None
    if n < 1 or m < 0:
        raise GraphFormatError(f"invalid header values n={n} m={m}")
    data = rows[1:]
    if len(data) != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(data)}")
    edges: set[Edge] = set()
    negative: set[Edge] = set()
    for lineno, ln in data:
        parts = ln.split()
        if len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'u v s', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer endpoints in {ln!r}") from None
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {u}")
        if not (1 <= u < v <= n):
            raise GraphFormatError(f"line {lineno}: need 1 <= u < v <= {n}, got {u} {v}")
        sign = parts[2]
        if sign not in ("+", "-"):
            raise GraphFormatError(f"line {lineno}: bad sign token {sign!r}")
        e = (u, v)
        if e in edges:
            raise GraphFormatError(f"line {lineno}: duplicate edge {e}")
        edges.add(e)
        if sign == "-":
            negative.add(e)
    return SignedGraph(Graph(n, frozenset(edges)), frozenset(negative))


def format_signed_edge_list(sg: SignedGraph) -> str:
    lines = [f"{sg.n} {len(sg.graph.edges)}"]
    for u, v in sorted(sg.graph.edges):
        lines.append(f"{u} {v} {'-' if (u, v) in sg.negative else '+'}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Graph families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnrParams:
    """Clique on n-r vertices with r pendant edges at one clique vertex.

    Pendants are v1..vr, the attachment vertex (degree n-1) is v_{r+1}, the
    remaining clique vertices are v_{r+2}..vn.
    """

    n: int
    r: int

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("pendant count must be nonnegative")
        if self.n < self.r + 1:
            raise ValueError(f"need n >= r+1, got n={self.n} r={self.r}")

    @property
    def pendants(self) -> range:
        return range(1, self.r + 1)

    @property
    def center(self) -> int:
        return self.r + 1

    @property
    def clique_rest(self) -> range:
        return range(self.r + 2, self.n + 1)


def make_snr(p: SnrParams) -> Graph:
    """Build the clique-with-pendants graph with the canonical labelling."""
    edges: list[Edge] = [(i, p.center) for i in p.pendants]
    edges.extend(itertools.combinations(range(p.center, p.n + 1), 2))
    return Graph(p.n, frozenset(edges))


@dataclass(frozen=True)
class MultipartiteParams:
    """Complete multipartite layout: blocks (l_i, t_i) of l_i parts of size t_i.

    Part sizes must strictly decrease.  Vertices are numbered consecutively
    part by part, group by group; ``offsets[i-1]`` is the number of vertices
    before group i.
    """

    blocks: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if not self.blocks:
            raise ValueError("at least one block required")
        for l, t in self.blocks:
            if l < 1:
                raise ValueError(f"part count must be >= 1, got {l}")
            if t < 1:
                raise ValueError(f"part size must be >= 1, got {t}")
        sizes = [t for _, t in self.blocks]
        if any(nxt >= prev for nxt, prev in zip(sizes[1:], sizes)):
            raise ValueError(f"part sizes must strictly decrease, got {sizes}")

    @classmethod
    def of(cls, blocks: Iterable[tuple[int, int]]) -> "MultipartiteParams":
        return cls(tuple((int(l), int(t)) for l, t in blocks))

    @property
    def s(self) -> int:
        return len(self.blocks)

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(l for l, _ in self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(t for _, t in self.blocks)

    @property
    def group_sizes(self) -> tuple[int, ...]:
        return tuple(l * t for l, t in self.blocks)

    @property
    def offsets(self) -> tuple[int, ...]:
        offs = []
        acc = 0
        for m in self.group_sizes:
            offs.append(acc)
            acc += m
        return tuple(offs)

    @property
    def n(self) -> int:
        return sum(self.group_sizes)

    def group_range(self, i: int) -> range:
        f = self.offsets[i - 1]
        return range(f + 1, f + self.group_sizes[i - 1] + 1)

    def part_range(self, i: int, j: int) -> range:
        l, t = self.blocks[i - 1]
        if not (1 <= j <= l):
            raise ValueError(f"group {i} has {l} parts, asked for part {j}")
        f = self.offsets[i - 1] + (j - 1) * t
        return range(f + 1, f + t + 1)

    def parts(self) -> Iterator[range]:
        for i in range(1, self.s + 1):
            for j in range(1, self.counts[i - 1] + 1):
                yield self.part_range(i, j)


def make_multipartite(p: MultipartiteParams) -> Graph:
    """Complete multipartite graph: u ~ v iff they lie in different parts."""
    n = p.n
    part_of = [0] * (n + 1)
    for pid, rng in enumerate(p.parts()):
        for v in rng:
            part_of[v] = pid
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if part_of[u] != part_of[v]
    ]
    return Graph(n, frozenset(edges))
