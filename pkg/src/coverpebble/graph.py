"""Simple connected graphs, hop distances, induced subgraphs and products.

Vertices are the dense integers ``0..n-1``.  A :class:`Graph` is immutable;
its distance matrix is computed once when a top-level graph is built and
then shared by everything that needs it.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as _iproduct
from typing import Iterable

from .errors import (
    DisconnectedError,
    EmptySetError,
    FormatError,
    SelfLoopError,
    VertexOutOfRangeError,
)


class DistanceMatrix(tuple):
    """Square tuple-of-tuples of hop counts, ``dm[u][v]``."""

    @property
    def size(self) -> int:
        return len(self)

    @cached_property
    def diameter(self) -> int:
        return max((max(row) for row in self), default=0)


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: frozenset
    labels: tuple | None = field(default=None, compare=False)
    # per-graph scratch space for derived data (cells, arcs, kernels)
    _memo: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(ns)) for ns in nbrs)

    @cached_property
    def dist(self) -> DistanceMatrix:
        return all_pairs_distances(self)

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        """Directed moves sorted by (source, target)."""
        return tuple((u, v) for u in range(self.vertex_count) for v in self.adjacency[u])

    def is_connected(self) -> bool:
        return not _unreachable_from_zero(self)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, edges={self.edge_list()})"


def _normalize_edges(vertex_count, edge_list) -> frozenset:
    edges = set()
    for u, v in edge_list:
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise VertexOutOfRangeError(x, vertex_count)
        if u == v:
            raise SelfLoopError(u)
        edges.add((min(u, v), max(u, v)))
    return frozenset(edges)


def _unreachable_from_zero(g: Graph) -> set[int]:
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return set(range(g.vertex_count)) - seen


def build_graph(vertex_count: int, edge_list: Iterable[tuple[int, int]], labels=None) -> Graph:
    """Validate an edge list and return a connected simple graph.

    Duplicate edges (in either orientation) collapse to one.  Raises
    :class:`SelfLoopError`, :class:`VertexOutOfRangeError` or
    :class:`DisconnectedError`.
    """
    if vertex_count < 1:
        raise VertexOutOfRangeError(vertex_count, max(vertex_count, 0))
    g = Graph(vertex_count, _normalize_edges(vertex_count, edge_list),
              tuple(labels) if labels is not None else None)
    missing = _unreachable_from_zero(g)
    if missing:
        raise DisconnectedError(missing)
    g.dist  # computed eagerly, shared afterwards
    return g


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first hop counts from every vertex.

    Raises :class:`DisconnectedError` if some pair is unreachable, since a
    distance matrix here always has finite entries.
    """
    rows = []
    for s in range(g.vertex_count):
        row = _bfs(g, s)
        if s == 0 and min(row) < 0:
            raise DisconnectedError(v for v, d in enumerate(row) if d < 0)
        rows.append(tuple(row))
    return DistanceMatrix(rows)


def distance_to_set(dm: DistanceMatrix, q: int, S: Iterable[int]) -> int:
    row = dm[q]
    best = min((row[r] for r in S), default=None)
    if best is None:
        raise EmptySetError()
    return best


def induced_subgraph(g: Graph, S: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``S`` plus the mapping ``new id -> old id``.

    The result may be disconnected; callers that need distances on it are
    responsible for only passing connected vertex sets.
    """
    old = tuple(sorted(set(S)))
    if not old:
        raise EmptySetError()
    new = {v: i for i, v in enumerate(old)}
    edges = frozenset(
        (new[u], new[v]) for u, v in g.edges if u in new and v in new
    )
    labels = tuple(g.label(v) for v in old) if g.labels is not None else None
    return Graph(len(old), edges, labels), old


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Cartesian product; product vertex ``a * |H| + x`` is the pair ``(a, x)``."""
    m = h.vertex_count
    pairing = tuple(_iproduct(range(g.vertex_count), range(m)))
    edges = set()
    for a in range(g.vertex_count):
        for x, y in h.edges:
            edges.add((a * m + x, a * m + y))
    for a, b in g.edges:
        for x in range(m):
            edges.add((a * m + x, b * m + x))
    labels = tuple(f"({g.label(a)},{h.label(x)})" for a, x in pairing)
    p = Graph(g.vertex_count * m, frozenset(edges), labels)
    p.dist
    return p, pairing


# --- named families -------------------------------------------------------

def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    return build_graph(n, [(v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < v ^ (1 << k)])


# --- text format ----------------------------------------------------------

def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _int_fields(line: str, lineno: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise FormatError(f"line {lineno}: expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise FormatError(f"line {lineno}: non-integer field in {line!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header plus ``m`` edge lines.

    Lines of the form ``# label <id> <text>`` (written by :func:`format_graph`
    for product graphs) restore vertex labels; other comments are ignored.
    """
    lines = list(_content_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    lineno, header = lines[0]
    n, m = _int_fields(header, lineno, 2)
    if n < 1 or m < 0:
        raise FormatError(f"line {lineno}: bad header {header!r}")
    if len(lines) - 1 != m:
        raise FormatError(f"header declares {m} edges, found {len(lines) - 1}")
    edges = [tuple(_int_fields(line, no, 2)) for no, line in lines[1:]]

    labels: dict[int, str] = {}
    for raw in text.splitlines():
        parts = raw.strip().split(None, 3)
        if len(parts) == 4 and parts[0] == "#" and parts[1] == "label" and parts[2].isdigit():
            labels[int(parts[2])] = parts[3]
    label_tuple = tuple(labels.get(v, str(v)) for v in range(n)) if labels else None
    return build_graph(n, edges, label_tuple)


def format_graph(g: Graph) -> str:
    out = [f"{g.vertex_count} {len(g.edges)}"]
    out += [f"{u} {v}" for u, v in g.edge_list()]
    if g.labels is not None:
        out += [f"# label {v} {g.labels[v]}" for v in range(g.vertex_count)]
    return "\n".join(out) + "\n"


def read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_graph(path: str) -> Graph:
    return parse_graph(read_text(path))


def save_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))

