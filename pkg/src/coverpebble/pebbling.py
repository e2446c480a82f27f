"""Distributions, pebbling moves and standard values.

A distribution is a plain tuple of nonnegative ints indexed by vertex id.
The same type doubles as a weight function (the target of a cover).
Standard values are Python ints, so they never overflow.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence

from .errors import (
    EmptySetError,
    FormatError,
    IllegalMoveError,
    InsufficientPebblesError,
    LengthMismatchError,
    NotAdjacentError,
    PebblingError,
    VertexOutOfRangeError,
)
from .graph import DistanceMatrix, Graph

Distribution = tuple


class Move(NamedTuple):
    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.source}->{self.target}"


MoveSequence = Sequence[Move]


def as_distribution(counts: Iterable[int], vertex_count: int | None = None) -> Distribution:
    d = tuple(int(c) for c in counts)
    if any(c < 0 for c in d):
        raise ValueError(f"negative pebble count in {d}")
    if vertex_count is not None and len(d) != vertex_count:
        raise LengthMismatchError(len(d), vertex_count)
    return d


def total(d: Distribution) -> int:
    return sum(d)


def apply_move(g: Graph, d: Distribution, m: Move) -> Distribution:
    """Remove two pebbles from ``m.source`` and add one to ``m.target``."""
    p, q = m
    n = g.vertex_count
    for v in (p, q):
        if not 0 <= v < n:
            raise VertexOutOfRangeError(v, n)
    if p == q or not g.has_edge(p, q):
        raise NotAdjacentError(p, q)
    if d[p] < 2:
        raise InsufficientPebblesError(p, d[p])
    out = list(d)
    out[p] -= 2
    out[q] += 1
    return tuple(out)


def replay(g: Graph, d: Distribution, seq: Iterable[Move]) -> Distribution:
    cur = d
    for i, m in enumerate(seq):
        try:
            cur = apply_move(g, cur, Move(*m))
        except PebblingError as exc:
            raise IllegalMoveError(i, exc) from exc
    return cur


def _check_lengths(d, w):
    if len(d) != len(w):
        raise LengthMismatchError(len(d), len(w))


def contains(d: Distribution, w: Distribution) -> bool:
    """True iff ``w`` is contained in ``d`` (``d[q] >= w[q]`` everywhere)."""
    _check_lengths(d, w)
    return all(a >= b for a, b in zip(d, w))


def distribution_nodes(d: Distribution, w: Distribution) -> tuple[int, ...]:
    """Vertices where ``d`` exceeds ``w``, ascending."""
    _check_lengths(d, w)
    return tuple(q for q, (a, b) in enumerate(zip(d, w)) if a > b)


def restrict(d: Distribution, S: Iterable[int]) -> Distribution:
    keep = set(S)
    return tuple(c if q in keep else 0 for q, c in enumerate(d))


def standard_value(dm: DistanceMatrix, d: Distribution, S: Iterable[int]) -> int:
    """Sum of ``d[q] * 2**dist(q, S)`` over all vertices."""
    S = tuple(S)
    if not S:
        raise EmptySetError()
    value = 0
    for q, c in enumerate(d):
        if c:
            row = dm[q]
            value += c << min(row[r] for r in S)
    return value


def singleton_values(dm: DistanceMatrix, w: Distribution) -> list[int]:
    """``standard_value(dm, w, {v})`` for every vertex ``v``."""
    n = len(w)
    return [sum(w[u] << dm[u][v] for u in range(n)) for v in range(n)]


def stacking_number(dm: DistanceMatrix, w: Distribution) -> tuple[int, int]:
    """Largest singleton standard value of ``w`` and the first vertex attaining it."""
    values = singleton_values(dm, w)
    best = max(values)
    return best, values.index(best)


# --- text format ----------------------------------------------------------

def parse_distribution(text: str, vertex_count: int | None = None) -> Distribution:
    """Parse ``"3 0 3"`` or the shorthand ``"uniform:k"``.

    The shorthand needs ``vertex_count``.  Comment lines are skipped.
    """
    body = " ".join(
        line for line in text.splitlines() if line.strip() and not line.strip().startswith("#")
    ).strip()
    if body.startswith("uniform:"):
        if vertex_count is None:
            raise FormatError("uniform:k needs a vertex count")
        try:
            k = int(body[len("uniform:"):])
        except ValueError:
            raise FormatError(f"bad shorthand {body!r}") from None
        if k < 0:
            raise FormatError(f"bad shorthand {body!r}")
        return (k,) * vertex_count
    try:
        d = tuple(int(x) for x in body.split())
    except ValueError:
        raise FormatError(f"non-integer entry in distribution {body!r}") from None
    if any(c < 0 for c in d):
        raise FormatError(f"negative entry in distribution {body!r}")
    if vertex_count is not None and len(d) != vertex_count:
        raise FormatError(f"distribution has {len(d)} entries, graph has {vertex_count} vertices")
    return d


def format_distribution(d: Distribution) -> str:
    return " ".join(map(str, d)) + "\n"
