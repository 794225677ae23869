"""Exhaustive switching search, small-graph catalogs, and certificates.

Switching classes of an all-positive graph are parametrised by the subsets of
{2..n}: a set and its complement give the same signed graph, so vertex 1 can
be pinned unswitched.  The brute-force verifier walks these 2^(n-1) classes in
size order and keeps the first all-main one, so certificates prefer small
switchings.

Graph catalogs are generated one vertex at a time: every class on k-1
vertices is extended by a new last vertex with every possible neighbourhood,
and duplicates are removed by a canonical form obtained by brute force over
all k! relabellings (vectorised; the canonical form is the lexicographically
smallest upper-triangle bit string).
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from ._version import __version__
from .exact import MainProfile, char_poly, distinct_eigenvalue_count, main_profile, rank_exact, walk_matrix
from .graphs import Graph, Switching, adjacency_matrix, apply_switching, emit_graph6, is_connected, parse_graph6

TOOL_VERSION = f"mainswitch {__version__}"

CATALOG_CAP = 7
CANONICAL_CAP = 8

__all__ = [
    "CATALOG_CAP",
    "Certificate",
    "DisconnectedGraphError",
    "TOOL_VERSION",
    "UnswitchableGraph",
    "VerificationReport",
    "canonical_form",
    "canonical_graph6",
    "enumerate_connected_graphs",
    "enumerate_switchings",
    "find_all_main_switching",
    "make_certificate",
    "switching_main_counts",
    "verify_certificate",
    "verify_conjecture",
]


class DisconnectedGraphError(ValueError):
    """The switching search covers connected graphs only."""


# ---------------------------------------------------------------------------
# Switching enumeration
# ---------------------------------------------------------------------------


def enumerate_switchings(n: int) -> Iterator[Switching]:
    """All 2^(n-1) switching classes: subsets of {2..n} ordered by size, then
    lexicographically.  Vertex 1 stays unswitched (complement equivalence)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    for size in range(n):
        for combo in itertools.combinations(range(2, n + 1), size):
            yield Switching(frozenset(combo))


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------

_CERT_FIELDS = ("graph6", "switching", "distinct_count", "main_count",
                "all_main", "method", "tool_version")


@dataclass(frozen=True)
class Certificate:
    """Independently re-checkable evidence that a switching is all-main (or
    records the counts when it is not)."""

    graph6: str
    switching: tuple[int, ...]
    distinct_count: int
    main_count: int
    all_main: bool
    method: str
    tool_version: str

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "switching": list(self.switching),
            "distinct_count": self.distinct_count,
            "main_count": self.main_count,
            "all_main": self.all_main,
            "method": self.method,
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, d: dict) -> "Certificate":
        missing = [k for k in _CERT_FIELDS if k not in d]
        if missing:
            raise ValueError(f"certificate missing fields: {missing}")
        return cls(
            graph6=str(d["graph6"]),
            switching=tuple(int(v) for v in d["switching"]),
            distinct_count=int(d["distinct_count"]),
            main_count=int(d["main_count"]),
            all_main=bool(d["all_main"]),
            method=str(d["method"]),
            tool_version=str(d["tool_version"]),
        )


def make_certificate(graph: Graph, switching: Switching | Iterable[int],
                     method: str, profile: MainProfile | None = None) -> Certificate:
    xs = switching.switched if isinstance(switching, Switching) else frozenset(switching)
    if profile is None:
        profile = main_profile(adjacency_matrix(apply_switching(graph, xs)))
    return Certificate(
        graph6=emit_graph6(graph),
        switching=tuple(sorted(xs)),
        distinct_count=profile.distinct_count,
        main_count=profile.main_count,
        all_main=profile.all_main,
        method=method,
        tool_version=TOOL_VERSION,
    )


def verify_certificate(cert: Certificate) -> bool:
    """Re-derive the exact profile from (graph, switching) and compare every
    recorded count; any single-field tamper fails.

    An unparsable graph payload raises; a switching that does not fit the
    graph merely fails verification.
    """
    graph = parse_graph6(cert.graph6)
    try:
        sg = apply_switching(graph, cert.switching)
    except ValueError:
        return False
    profile = main_profile(adjacency_matrix(sg))
    return (profile.distinct_count == cert.distinct_count
            and profile.main_count == cert.main_count
            and profile.all_main == cert.all_main)


# ---------------------------------------------------------------------------
# Brute-force search over switching classes
# ---------------------------------------------------------------------------


def _switched_adjacency(a: list[list[int]], xs: frozenset[int]) -> list[list[int]]:
    # Conjugation by the +-1 diagonal of xs; same matrix apply_switching yields.
    n = len(a)
    out = [row[:] for row in a]
    for u in xs:
        i = u - 1
        for j in range(n):
            if (j + 1) not in xs:
                out[i][j] = -out[i][j]
                out[j][i] = -out[j][i]
    return out


def find_all_main_switching(g: Graph) -> Certificate | None:
    """First switching class (in enumeration order) whose exact profile is
    all-main, as a certificate; None when every class fails.

    The distinct eigenvalue count is computed once: switching conjugates the
    adjacency matrix, so the characteristic polynomial never changes.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("the switching search requires a connected graph")
    a = adjacency_matrix(g)
    dc = distinct_eigenvalue_count(char_poly(a))
    for x in enumerate_switchings(g.n):
        mc = rank_exact(walk_matrix(_switched_adjacency(a, x.switched)))
        if mc == dc:
            profile = MainProfile(main_count=mc, distinct_count=dc, all_main=True)
            return make_certificate(g, x, "brute_force", profile)
    return None


def switching_main_counts(g: Graph) -> list[int]:
    """Exact main count of every switching class, in enumeration order."""
    if not is_connected(g):
        raise DisconnectedGraphError("the switching search requires a connected graph")
    a = adjacency_matrix(g)
    return [rank_exact(walk_matrix(_switched_adjacency(a, x.switched)))
            for x in enumerate_switchings(g.n)]


# ---------------------------------------------------------------------------
# Canonical forms and the connected-graph catalog
# ---------------------------------------------------------------------------


def _pairs(n: int) -> list[tuple[int, int]]:
    # 0-based upper-triangle pairs in column order; pairs inside the first k
    # vertices form a prefix, which the augmentation step relies on.
    return [(i, j) for j in range(1, n) for i in range(j)]


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    """perm_table[p, k] = index of the pair that permutation p moves onto
    canonical pair position k."""
    pairs = _pairs(n)
    index = {pair: k for k, pair in enumerate(pairs)}
    perms = list(itertools.permutations(range(n)))
    table = np.empty((len(perms), len(pairs)), dtype=np.int32)
    for p, perm in enumerate(perms):
        for k, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            table[p, k] = index[(a, b) if a < b else (b, a)]
    return table


def _mask_bits(mask: int, npairs: int) -> np.ndarray:
    return np.array([(mask >> k) & 1 for k in range(npairs)], dtype=np.uint64)


def _canonical_value(mask: int, n: int) -> int:
    npairs = n * (n - 1) // 2
    if npairs == 0:
        return 0
    table = _perm_table(n)
    bits = _mask_bits(mask, npairs)
    weights = (np.uint64(1) << np.arange(npairs - 1, -1, -1, dtype=np.uint64))
    values = bits[table] @ weights
    return int(values.min())


def _value_to_mask(value: int, npairs: int) -> int:
    mask = 0
    for k in range(npairs):
        if (value >> (npairs - 1 - k)) & 1:
            mask |= 1 << k
    return mask


def _mask_to_graph(mask: int, n: int) -> Graph:
    pairs = _pairs(n)
    edges = [(i + 1, j + 1) for k, (i, j) in enumerate(pairs) if (mask >> k) & 1]
    return Graph(n, frozenset(edges))


def _graph_to_mask(g: Graph) -> int:
    mask = 0
    for k, (i, j) in enumerate(_pairs(g.n)):
        if (i + 1, j + 1) in g.edges:
            mask |= 1 << k
    return mask


def canonical_form(g: Graph) -> Graph:
    """Relabelling of g that minimises the upper-triangle bit string over all
    n! permutations (n <= 8)."""
    if g.n > CANONICAL_CAP:
        raise ValueError(f"canonical form by permutation search capped at n={CANONICAL_CAP}")
    value = _canonical_value(_graph_to_mask(g), g.n)
    return _mask_to_graph(_value_to_mask(value, g.n * (g.n - 1) // 2), g.n)


def canonical_graph6(g: Graph) -> str:
    return emit_graph6(canonical_form(g))


@lru_cache(maxsize=None)
def _catalog_masks(n: int) -> tuple[int, ...]:
    """Canonical masks of ALL isomorphism classes on exactly n vertices."""
    if n == 1:
        return (0,)
    npairs_prev = (n - 1) * (n - 2) // 2
    npairs = n * (n - 1) // 2
    seen: set[int] = set()
    for old in _catalog_masks(n - 1):
        for nbhd in range(1 << (n - 1)):
            mask = old | (nbhd << npairs_prev)
            seen.add(_canonical_value(mask, n))
    return tuple(_value_to_mask(v, npairs) for v in sorted(seen))


def enumerate_connected_graphs(n: int, cap: int = CATALOG_CAP) -> list[Graph]:
    """One canonical representative per isomorphism class of connected simple
    graphs on exactly n vertices, in canonical order."""
    if not (1 <= n <= cap):
        raise ValueError(f"catalog enumeration supports 1 <= n <= {cap}")
    if cap > CANONICAL_CAP:
        raise ValueError(f"cap cannot exceed {CANONICAL_CAP}")
    graphs = (_mask_to_graph(mask, n) for mask in _catalog_masks(n))
    return [g for g in graphs if is_connected(g)]


# ---------------------------------------------------------------------------
# Conjecture verification over the catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnswitchableGraph:
    """A catalog graph with no all-main switching class, with the exact main
    count of every class as evidence."""

    graph6: str
    main_counts: tuple[int, ...]


@dataclass(frozen=True)
class VerificationReport:
    n_range: tuple[int, int]
    graphs_checked: int
    successes: int
    exceptions: tuple[UnswitchableGraph, ...]
    elapsed: float
    certificates: tuple[Certificate, ...]

    def to_json_dict(self) -> dict:
        # The elapsed time is deliberately left out so reports are
        # byte-for-byte reproducible.
        return {
            "n_range": list(self.n_range),
            "graphs_checked": self.graphs_checked,
            "successes": self.successes,
            "exceptions": [
                {"graph6": e.graph6, "main_counts": list(e.main_counts)}
                for e in self.exceptions
            ],
            "tool_version": TOOL_VERSION,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def summary_text(self) -> str:
        lines = [
            f"connected graphs on {self.n_range[0]}..{self.n_range[1]} vertices: "
            f"{self.graphs_checked} checked, {self.successes} with an all-main switching",
        ]
        if self.exceptions:
            lines.append("exceptions (no all-main switching):")
            for e in self.exceptions:
                lines.append(f"  {e.graph6}  class main counts: {list(e.main_counts)}")
        else:
            lines.append("exceptions: none")
        lines.append(f"elapsed: {self.elapsed:.2f}s")
        return "\n".join(lines)


def _search_one(graph: Graph) -> Certificate | None:
    return find_all_main_switching(graph)


def verify_conjecture(max_n: int, workers: int = 1,
                      graphs: Iterable[Graph] | None = None) -> VerificationReport:
    """Run the brute-force search over every connected catalog graph on
    2..max_n vertices (or over a supplied iterable of graphs).

    The expected outcome for max_n >= 4 is exactly two exceptions: the single
    edge and the 4-clique minus an edge.
    """
    start = time.perf_counter()
    if graphs is None:
        if not (2 <= max_n <= CATALOG_CAP):
            raise ValueError(f"need 2 <= max_n <= {CATALOG_CAP}")
        todo: list[Graph] = []
        for n in range(2, max_n + 1):
            todo.extend(enumerate_connected_graphs(n))
        n_range = (2, max_n)
    else:
        todo = list(graphs)
        if not todo:
            raise ValueError("no graphs to verify")
        n_range = (min(g.n for g in todo), max(g.n for g in todo))
    if workers < 1:
        raise ValueError("worker count must be >= 1")
    if workers == 1:
        results = [_search_one(g) for g in todo]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_one, todo, chunksize=16))
    certificates: list[Certificate] = []
    exceptions: list[UnswitchableGraph] = []
    for graph, cert in zip(todo, results):
        if cert is None:
            exceptions.append(UnswitchableGraph(
                graph6=emit_graph6(graph),
                main_counts=tuple(switching_main_counts(graph)),
            ))
        else:
            certificates.append(cert)
    return VerificationReport(
        n_range=n_range,
        graphs_checked=len(todo),
        successes=len(certificates),
        exceptions=tuple(exceptions),
        elapsed=time.perf_counter() - start,
        certificates=tuple(certificates),
    )
