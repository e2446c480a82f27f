"""Exhaustive small-case search around the value-condition question.

Known direction: if ``d`` covers ``w`` then ``V_S(d) >= V_S(w)`` for every
nonempty vertex set ``S``.  Open direction: does the value condition imply
a cover?  :func:`search_conjecture` walks every (graph, weight,
distribution) triple in a family and reports violations of either
direction; a violation of the known direction means a bug here.

Only the standard-value family of value functions is tested.  General
value functions cannot be enumerated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from time import perf_counter
from typing import Iterable, Iterator

import numpy as np

from .errors import LimitExceeded, TooManyVerticesError
from .graph import Graph, build_graph, cartesian_product
from .oracle import CoverTable, SearchLimits, compositions_upto, count_upto
from .pebbling import Distribution, stacking_number, standard_value
from .solver import require_positive

EXHAUSTIVE_BOUND = 15


# --- enumeration ----------------------------------------------------------

def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labelled graphs on ``n`` vertices, by sorted edge tuple."""
    pairs = list(combinations(range(n), 2))
    edge_sets = []
    for mask in range(1 << len(pairs)):
        edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
        if len(edges) >= n - 1 and _connected(n, edges):
            edge_sets.append(edges)
    for edges in sorted(edge_sets):
        yield build_graph(n, edges)


def _connected(n, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in range(n)}) == 1


def graph_family(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, max_n + 1):
        yield from connected_graphs(n)


def positive_weights(n: int, max_weight: int) -> Iterator[tuple[int, ...]]:
    return product(range(1, max_weight + 1), repeat=n)


def nonempty_subsets(n: int) -> list[tuple[int, ...]]:
    """Nonempty subsets of ``range(n)`` as sorted tuples, lexicographic."""
    return sorted(s for k in range(1, n + 1) for s in combinations(range(n), k))


# --- value condition ------------------------------------------------------

def value_condition_holds(g: Graph, w: Distribution, d: Distribution, bound: int = EXHAUSTIVE_BOUND):
    """Check ``V_S(d) >= V_S(w)`` for every nonempty ``S``.

    Returns ``(True, None)`` or ``(False, S)`` with ``S`` the
    lexicographically first violating set.
    """
    n = g.vertex_count
    if n > bound:
        raise TooManyVerticesError(n, bound)
    dm = g.dist
    for S in nonempty_subsets(n):
        if standard_value(dm, d, S) < standard_value(dm, w, S):
            return False, frozenset(S)
    return True, None


def _subset_coefficients(g: Graph):
    """Matrix with entry ``2**dist(q, S)`` for vertex row q and subset column S."""
    coef = g._memo.get("subset_coef")
    if coef is None:
        dm = g.dist
        subsets = nonempty_subsets(g.vertex_count)
        coef = np.array(
            [[1 << min(dm[q][r] for r in S) for S in subsets] for q in range(g.vertex_count)],
            dtype=np.int64,
        )
        g._memo["subset_coef"] = coef = (subsets, coef)
    return coef


# --- report ---------------------------------------------------------------

def format_graph_token(g: Graph) -> str:
    return f"{g.vertex_count}:" + ",".join(f"{u}-{v}" for u, v in g.edge_list())


def parse_graph_token(token: str) -> Graph:
    n, _, body = token.partition(":")
    edges = [tuple(int(x) for x in e.split("-")) for e in body.split(",") if e]
    return build_graph(int(n), edges)


def _vec(v) -> str:
    return ",".join(str(int(x)) for x in v)


def _set(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


@dataclass(frozen=True)
class Instance:
    graph: Graph
    weights: tuple[int, ...]
    dist: tuple[int, ...]

    def fields(self) -> str:
        return f"graph={format_graph_token(self.graph)} w={_vec(self.weights)} d={_vec(self.dist)}"


@dataclass
class ConjectureReport:
    family: str
    max_weight: int
    budget: int | None
    tested: int = 0
    condition_holds: int = 0
    confirmations: int = 0
    counterexamples: list[Instance] = field(default_factory=list)
    necessity_violations: list[tuple[Instance, frozenset]] = field(default_factory=list)
    cursor: Instance | None = None
    complete: bool = True

    def to_text(self) -> str:
        budget = "SN" if self.budget is None else self.budget
        out = [
            f"# family={self.family} max_weight={self.max_weight} budget={budget}",
            "# scope=standard-value functions V_S only; general value functions are not enumerable",
            "# question: V_S(d) >= V_S(w) for every nonempty S  =>  d covers w ?",
        ]
        out += [f"CEX {inst.fields()} evidence=oracle-exhausted-state-space"
                for inst in self.counterexamples]
        out += [f"NECESSITY-VIOLATION {inst.fields()} violating_set={_set(S)}"
                for inst, S in self.necessity_violations]
        out.append(f"# condition_holds={self.condition_holds} confirmations={self.confirmations} "
                   f"necessity_violations={len(self.necessity_violations)}")
        if not self.complete:
            resume = self.cursor.fields() if self.cursor is not None else "start"
            out.append(f"# INCOMPLETE resume_after {resume}")
        out.append(f"TESTED={self.tested} CEX={len(self.counterexamples)}")
        return "\n".join(out) + "\n"


class HarnessLimitExceeded(LimitExceeded):
    """Carries the partial report; ``report.cursor`` is the last finished instance."""

    def __init__(self, reason, report):
        super().__init__(reason)
        self.report = report


def parse_instance_line(line: str) -> Instance:
    """Rebuild the instance from a CEX or NECESSITY-VIOLATION report line."""
    kv = dict(tok.split("=", 1) for tok in line.split()[1:] if "=" in tok)
    return Instance(
        parse_graph_token(kv["graph"]),
        tuple(int(x) for x in kv["w"].split(",")),
        tuple(int(x) for x in kv["d"].split(",")),
    )


# --- search ---------------------------------------------------------------

def search_conjecture(family: Iterable[Graph], max_weight: int, pebble_budget: int | None = None,
                      limits: SearchLimits | None = None, *, family_name: str = "custom",
                      resume_after: Instance | None = None) -> ConjectureReport:
    """Test every positive weight up to ``max_weight`` and every distribution
    of at most ``min(pebble_budget, SN_W(G))`` pebbles on each graph.

    Beyond the stacking number every distribution covers, so nothing
    larger needs checking.  Enumeration order: graphs as given, weights and
    distributions lexicographically.  Exact cover verdicts come from a
    :class:`CoverTable` per (graph, weight).

    ``limits.max_states`` caps the table size of any single (graph, weight)
    pair and ``limits.max_seconds`` the whole run; running out raises
    :class:`HarnessLimitExceeded` holding the partial report.
    """
    limits = limits or SearchLimits()
    report = ConjectureReport(family_name, max_weight, pebble_budget)
    start = perf_counter()
    skipping = resume_after is not None
    resume_key = (resume_after.graph, resume_after.weights) if skipping else None

    for g in family:
        n = g.vertex_count
        if n > EXHAUSTIVE_BOUND:
            raise TooManyVerticesError(n, EXHAUSTIVE_BOUND)
        subsets, coef = _subset_coefficients(g)
        for w in positive_weights(n, max_weight):
            if skipping:
                if (g, w) == resume_key:
                    skipping = False
                continue
            sn, _ = stacking_number(g.dist, w)
            T = sn if pebble_budget is None else min(pebble_budget, sn)
            size = count_upto(n, T)
            if size > limits.max_states:
                report.complete = False
                raise HarnessLimitExceeded("states", report)
            if limits.max_seconds is not None and perf_counter() - start > limits.max_seconds:
                report.complete = False
                raise HarnessLimitExceeded("time", report)
            _check_batch(report, g, w, T, subsets, coef)
    return report


def _check_batch(report, g, w, T, subsets, coef):
    dists = compositions_upto(g.vertex_count, T)
    covers = CoverTable(g, w, T).flags()
    values = dists @ coef
    targets = np.asarray(w, dtype=np.int64) @ coef
    ok = values >= targets
    holds = ok.all(axis=1)

    report.tested += len(dists)
    report.condition_holds += int(holds.sum())
    report.confirmations += int((holds & covers).sum())
    for i in np.flatnonzero(holds & ~covers):
        report.counterexamples.append(Instance(g, w, tuple(int(x) for x in dists[i])))
    for i in np.flatnonzero(covers & ~holds):
        S = subsets[int(np.argmin(ok[i]))]
        report.necessity_violations.append((Instance(g, w, tuple(int(x) for x in dists[i])), frozenset(S)))
    report.cursor = Instance(g, w, tuple(int(x) for x in dists[-1]))


# --- product identity -----------------------------------------------------

def product_weight(w1: Distribution, w2: Distribution) -> tuple[int, ...]:
    """Weight ``w1[a] * w2[x]`` on product vertex ``a * len(w2) + x``."""
    return tuple(a * x for a in w1 for x in w2)


@lru_cache(maxsize=4096)
def _product(g, h):
    return cartesian_product(g, h)[0]


def check_product_identity(g: Graph, h: Graph, w1: Distribution, w2: Distribution):
    """Compare the stacking number of the product weight on ``g x h`` with
    the product of the factor stacking numbers.

    Returns ``(lhs, rhs, equal)``.
    """
    require_positive(w1)
    require_positive(w2)
    gh = _product(g, h)
    lhs, _ = stacking_number(gh.dist, product_weight(w1, w2))
    rhs = stacking_number(g.dist, w1)[0] * stacking_number(h.dist, w2)[0]
    return lhs, rhs, lhs == rhs
