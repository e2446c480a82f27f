"""Exact ground truth by exhaustive search.

Everything here decides coverage literally: explore the distributions
derivable from a start and see whether one of them contains the target.
Nothing relies on the stacking formula, so these routines can be used to
check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from time import perf_counter
from typing import Iterator

import numpy as np

from . import kernels
from .errors import LimitExceeded, LengthMismatchError, PebblingError
from .graph import Graph
from .pebbling import Distribution, Move, apply_move, contains, singleton_values


@dataclass(frozen=True)
class SearchLimits:
    """Budget for one exact search; ``max_seconds=None`` means no clock."""

    max_states: int = 5_000_000
    max_seconds: float | None = None

    def __post_init__(self):
        if self.max_states < 1:
            raise ValueError("max_states must be at least 1")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ValueError("max_seconds must be positive")


UNLIMITED = SearchLimits(max_states=2**62)


@dataclass(frozen=True)
class SearchStats:
    states_visited: int
    max_frontier: int
    elapsed: float

    def as_lines(self) -> str:
        return (
            f"states_visited={self.states_visited}\n"
            f"max_frontier={self.max_frontier}\n"
            f"elapsed={self.elapsed:.6f}\n"
        )


def _coef(g: Graph):
    coef = g._memo.get("coef")
    if coef is None:
        dm = g.dist
        n = g.vertex_count
        coef = g._memo["coef"] = tuple(tuple(1 << dm[u][v] for v in range(n)) for u in range(n))
    return coef


def covers_exact(g: Graph, w: Distribution, d: Distribution, limits: SearchLimits | None = None,
                 *, prune: bool = True, backend: str | None = None):
    """Decide whether ``d`` covers ``w`` by depth-first search.

    Moves are tried in (source, target) order and every distinct
    distribution is expanded at most once.  With ``prune`` on, a generated
    distribution whose value at some single vertex has already fallen
    below that of ``w`` is recorded but not expanded; values never grow
    under moves, so no cover can lie below it.

    Returns ``(verdict, moves, stats)``; ``moves`` is None when the verdict
    is False.  Raises :class:`LimitExceeded` when the budget runs out.
    """
    n = g.vertex_count
    if len(w) != n or len(d) != n:
        raise LengthMismatchError(len(w) if len(w) != n else len(d), n)
    limits = limits or SearchLimits()
    wvals = singleton_values(g.dist, w)
    t0 = perf_counter()
    status, path, states, depth = kernels.search(
        n, g.arcs, _coef(g), wvals, tuple(w), tuple(d), prune,
        limits.max_states, limits.max_seconds, backend=backend,
    )
    stats = SearchStats(states, depth, perf_counter() - t0)
    if status == kernels.STATE_LIMIT:
        raise LimitExceeded("states", stats)
    if status == kernels.TIME_LIMIT:
        raise LimitExceeded("time", stats)
    if status == kernels.FOUND:
        arcs = g.arcs
        return True, tuple(Move(*arcs[a]) for a in path), stats
    return False, None, stats


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    index: int | None = None  # first illegal move, or len(seq) if replay ends short of w
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def check_certificate(g: Graph, d: Distribution, seq, w: Distribution) -> CertificateCheck:
    """Replay ``seq`` from ``d`` and report where, if anywhere, it fails."""
    cur = tuple(d)
    if len(cur) != g.vertex_count or len(w) != g.vertex_count:
        return CertificateCheck(False, 0, "length mismatch")
    for i, m in enumerate(seq):
        try:
            cur = apply_move(g, cur, Move(*m))
        except PebblingError as exc:
            return CertificateCheck(False, i, str(exc))
    if not contains(cur, w):
        return CertificateCheck(False, len(seq), f"final distribution {cur} does not contain {tuple(w)}")
    return CertificateCheck(True)


def verify_certificate(g: Graph, d: Distribution, seq, w: Distribution) -> bool:
    return check_certificate(g, d, seq, w).valid


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ways to write ``total`` as ``parts`` nonnegative ints, lexicographic."""
    v = [0] * parts
    v[-1] = total
    while True:
        yield tuple(v)
        k = parts - 1
        while k > 0 and v[k] == 0:
            k -= 1
        if k == 0:
            return
        tail = v[k]
        v[k] = 0
        v[k - 1] += 1
        v[-1] = tail - 1


def phi_exact(g: Graph, w: Distribution, limits: SearchLimits | None = None) -> int:
    """Least ``m`` such that every distribution of exactly ``m`` pebbles covers ``w``.

    Candidates are tried upward from ``|w|`` and each one is checked in
    full; nothing assumes the property is monotone in ``m``.
    ``limits.max_states`` applies to each search, ``limits.max_seconds``
    to the whole computation.
    """
    limits = limits or SearchLimits()
    n = g.vertex_count
    deadline = perf_counter() + limits.max_seconds if limits.max_seconds else None
    m = sum(w)
    while True:
        if _all_cover(g, w, m, n, limits, deadline):
            return m
        m += 1


def _all_cover(g, w, m, n, limits, deadline) -> bool:
    for d in compositions(m, n):
        budget = limits
        if deadline is not None:
            left = deadline - perf_counter()
            if left <= 0:
                raise LimitExceeded("time")
            budget = SearchLimits(limits.max_states, left)
        ok, _, _ = covers_exact(g, w, d, budget)
        if not ok:
            return False
    return True


# --- whole-table oracle ---------------------------------------------------

def count_upto(n: int, T: int) -> int:
    """Number of distributions on ``n`` vertices with at most ``T`` pebbles."""
    return comb(T + n, n)


def compositions_upto(n: int, T: int) -> np.ndarray:
    """Every vector of ``n`` nonnegative ints with sum <= ``T``, one per row.

    Rows are in lexicographic order, which is also the order used to index
    :class:`CoverTable`.
    """
    if n == 1:
        return np.arange(T + 1, dtype=np.int64)[:, None]
    blocks = []
    for a in range(T + 1):
        rest = compositions_upto(n - 1, T - a)
        blocks.append(np.hstack([np.full((len(rest), 1), a, dtype=np.int64), rest]))
    return np.vstack(blocks)


class CoverTable:
    """Cover verdicts for every distribution of at most ``max_total`` pebbles.

    Built bottom-up by pebble count: a distribution covers ``w`` iff it
    contains ``w`` or one legal move leads to a distribution that covers.
    Useful when the same (graph, weight) pair is queried many times.
    """

    def __init__(self, g: Graph, w: Distribution, max_total: int, backend: str | None = None):
        self.graph = g
        self.weights = tuple(w)
        self.max_total = max_total
        self._table = kernels.cover_table(g.vertex_count, g.arcs, self.weights, max_total, backend=backend)

    def __len__(self) -> int:
        return len(self._table)

    def covers(self, d: Distribution) -> bool:
        if sum(d) > self.max_total:
            raise ValueError(f"{sum(d)} pebbles exceeds the table bound {self.max_total}")
        return bool(self._table[kernels.rank(d, self.max_total)])

    def flags(self) -> np.ndarray:
        """Boolean verdicts aligned with ``compositions_upto(n, max_total)``."""
        return np.frombuffer(bytes(self._table), dtype=np.uint8).astype(bool)
