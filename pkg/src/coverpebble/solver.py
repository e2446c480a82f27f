"""Constructive cover decisions with replayable move certificates.

The pipeline in :func:`decide_cover` goes from cheap to expensive:
containment, necessary value checks, the constructive sufficient
condition, and finally the exhaustive oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import (
    FormatError,
    LimitExceeded,
    NonPositiveWeightError,
    PreconditionViolated,
    SurplusExceedsStackError,
)
from .graph import Graph, induced_subgraph
from .oracle import SearchLimits, covers_exact
from .pebbling import (
    Distribution,
    Move,
    contains,
    distribution_nodes,
    singleton_values,
    stacking_number,
    standard_value,
)

ORACLE_TOKEN = "oracle-exhausted-state-space"


class Verdict(str, enum.Enum):
    COVERS = "COVERS"
    NOT_COVERS = "NOTCOVERS"
    UNKNOWN = "UNKNOWN"


@dataclass(frozen=True)
class CoverDecision:
    verdict: Verdict
    certificate: tuple[Move, ...] | None = None
    witness: frozenset | str | None = None
    method: str = ""

    @property
    def covers(self) -> bool:
        return self.verdict is Verdict.COVERS

    def witness_text(self) -> str:
        if isinstance(self.witness, frozenset):
            return "{" + ",".join(map(str, sorted(self.witness))) + "}"
        return str(self.witness)


def _covers(seq, method):
    return CoverDecision(Verdict.COVERS, tuple(seq), None, method)


def _not_covers(witness, method):
    if not isinstance(witness, str):
        witness = frozenset(witness)
    return CoverDecision(Verdict.NOT_COVERS, None, witness, method)


def require_positive(w: Distribution) -> None:
    for v, x in enumerate(w):
        if x < 1:
            raise NonPositiveWeightError(v, x)


def _check_lengths(g, *dists):
    for x in dists:
        if len(x) != g.vertex_count:
            raise PreconditionViolated(
                f"distribution of length {len(x)} on a graph with {g.vertex_count} vertices")


def _check_single_surplus(w, v0, d):
    for s, (a, b) in enumerate(zip(d, w)):
        if s != v0 and a > b:
            raise PreconditionViolated(f"vertex {s} holds {a} > weight {b} but is not v0={v0}")


# --- zero or one surplus vertex -------------------------------------------

def decide_no_surplus(g: Graph, w: Distribution, d: Distribution) -> CoverDecision:
    """Decide a cover when ``d`` exceeds ``w`` nowhere: only ``d == w`` works."""
    _check_lengths(g, w, d)
    nodes = distribution_nodes(d, w)
    if nodes:
        raise PreconditionViolated(f"distribution nodes present: {list(nodes)}")
    if tuple(d) == tuple(w):
        return _covers((), "nonode")
    return _not_covers(range(g.vertex_count), "nonode")


def _nearest_order(g: Graph, v0: int):
    key = ("order", v0)
    order = g._memo.get(key)
    if order is None:
        row = g.dist[v0]
        order = g._memo[key] = tuple(sorted(range(g.vertex_count), key=lambda q: (row[q], q)))
    return order


def _descent_path(g: Graph, a: int, b: int) -> tuple[int, ...]:
    """Shortest a-b path; each step takes the smallest neighbour closer to b."""
    key = ("path", a, b)
    path = g._memo.get(key)
    if path is None:
        dm = g.dist
        path = [a]
        cur = a
        while cur != b:
            cur = min(u for u in g.adjacency[cur] if dm[u][b] == dm[cur][b] - 1)
            path.append(cur)
        path = g._memo[key] = tuple(path)
    return path


def normalize_single_source(g: Graph, w: Distribution, v0: int, d: Distribution):
    """Push the surplus at ``v0`` out until the distribution fits inside ``w``.

    Requires positive ``w``, ``d[s] <= w[s]`` away from ``v0`` and
    ``V_{v0}(d) <= V_{v0}(w)``.  While ``v0`` holds too many pebbles, one
    pebble is walked along a shortest path to the nearest deficient vertex;
    each walk keeps the value at ``v0`` unchanged.

    Returns ``(d_star, moves)`` with ``d_star`` contained in ``w``.
    """
    _check_lengths(g, w, d)
    require_positive(w)
    _check_single_surplus(w, v0, d)
    dm = g.dist
    vd, vw = standard_value(dm, d, (v0,)), standard_value(dm, w, (v0,))
    if vd > vw:
        raise PreconditionViolated(f"value at v0={v0} is {vd} > {vw}")

    cur = list(d)
    seq: list[Move] = []
    order = _nearest_order(g, v0)
    while cur[v0] > w[v0]:
        q = next(q for q in order if cur[q] < w[q])
        path = _descent_path(g, v0, q)
        for a, b in zip(path, path[1:]):
            seq.append(Move(a, b))
            cur[a] -= 2
            cur[b] += 1
    return tuple(cur), seq


def cover_from_single_node(g: Graph, w: Distribution, v0: int, d: Distribution) -> CoverDecision:
    """Exact decision when ``v0`` is the only vertex where ``d`` may exceed ``w``."""
    _check_lengths(g, w, d)
    require_positive(w)
    _check_single_surplus(w, v0, d)
    dm = g.dist
    surplus = standard_value(dm, d, (v0,)) - standard_value(dm, w, (v0,))
    if surplus < 0:
        return _not_covers((v0,), "onenode")
    if surplus > d[v0]:
        raise SurplusExceedsStackError(f"surplus {surplus} exceeds the {d[v0]} pebbles at {v0}")
    # run the construction on the trimmed stack; the same moves stay legal on d
    trimmed = list(d)
    trimmed[v0] -= surplus
    _, seq = normalize_single_source(g, w, v0, tuple(trimmed))
    return _covers(seq, "onenode")


# --- sufficient condition over Voronoi-style cells ------------------------

def cells(g: Graph, nodes: tuple[int, ...]) -> dict[int, tuple[int, ...]]:
    """Vertices at least as close to each node as to any other node.

    Ties put a vertex in every closest node's cell.
    """
    dm = g.dist
    out = {}
    for di in nodes:
        out[di] = tuple(
            v for v in range(g.vertex_count) if all(dm[v][di] <= dm[v][dj] for dj in nodes)
        )
    return out


def _cell_contexts(g: Graph, nodes: tuple[int, ...]):
    key = ("cells", nodes)
    ctx = g._memo.get(key)
    if ctx is None:
        ctx = []
        for di, cell in cells(g, nodes).items():
            if len(cell) == g.vertex_count:
                sub, mapping = g, tuple(range(g.vertex_count))
            else:
                sub, mapping = induced_subgraph(g, cell)
            ctx.append((di, cell, sub, mapping, mapping.index(di)))
        g._memo[key] = ctx
    return ctx


def cover_sufficient(g: Graph, w: Distribution, d: Distribution) -> CoverDecision:
    """Cover certificate when the node-set value reaches every node's stack value.

    With distribution nodes ``N``, the test is
    ``V_N(d) >= max_{i in N} V_{{i}}(w)``.  When it fails the answer is
    UNKNOWN: the condition is sufficient, not necessary.

    Construction: split the graph into cells around the nodes.  If every
    cell covers its share of ``w`` on its own, the cell certificates are
    concatenated.  Otherwise the failing cell with the largest node is
    drained into its share of ``w`` (one fewer node) and the process
    repeats on the result.
    """
    _check_lengths(g, w, d)
    require_positive(w)
    w = tuple(w)
    cur = tuple(d)
    nodes = distribution_nodes(cur, w)
    if not nodes:
        return decide_no_surplus(g, w, cur)
    dm = g.dist
    wvals = singleton_values(dm, w)
    if standard_value(dm, cur, nodes) < max(wvals[i] for i in nodes):
        return CoverDecision(Verdict.UNKNOWN, method="bigproof")
    method = "onenode" if len(nodes) == 1 else "bigproof"

    prefix: list[Move] = []
    while True:
        ctx = _cell_contexts(g, nodes)
        failing = None
        for di, cell, _, _, _ in ctx:
            if sum(cur[v] << dm[v][di] for v in cell) < sum(w[v] << dm[v][di] for v in cell):
                failing = di, cell
        if failing is None:
            for di, cell, sub, mapping, local_v0 in ctx:
                dec = cover_from_single_node(
                    sub, tuple(w[v] for v in mapping), local_v0, tuple(cur[v] for v in mapping))
                if not dec.covers:
                    raise PreconditionViolated(f"cell of node {di} failed after its value check passed")
                prefix.extend(Move(mapping[a], mapping[b]) for a, b in dec.certificate)
            return _covers(prefix, method)

        # drain the failing cell with the largest node id (ctx is in ascending node order)
        dj, cell = failing
        _, _, sub, mapping, local_v0 = next(c for c in ctx if c[0] == dj)
        d_star, seq = normalize_single_source(
            sub, tuple(w[v] for v in mapping), local_v0, tuple(cur[v] for v in mapping))
        prefix.extend(Move(mapping[a], mapping[b]) for a, b in seq)
        nxt = list(cur)
        for i, v in enumerate(mapping):
            nxt[v] = d_star[i]
        cur = tuple(nxt)
        nodes = distribution_nodes(cur, w)
        if not nodes or standard_value(dm, cur, nodes) < max(wvals[i] for i in nodes):
            raise PreconditionViolated("draining a cell broke the value condition")


def decide_cover(g: Graph, w: Distribution, d: Distribution, limits: SearchLimits | None = None,
                 *, use_oracle: bool = True) -> CoverDecision:
    """Layered decision: containment, value checks, construction, oracle.

    UNKNOWN only comes back when ``use_oracle`` is off or the oracle ran
    out of budget.
    """
    _check_lengths(g, w, d)
    require_positive(w)
    w, d = tuple(w), tuple(d)
    if contains(d, w):
        return _covers((), "containment")

    dm = g.dist
    n = g.vertex_count
    candidates = [(v,) for v in range(n)] + [tuple(range(n))]
    nodes = distribution_nodes(d, w)
    if nodes:
        candidates.append(nodes)
    for S in candidates:
        if standard_value(dm, d, S) < standard_value(dm, w, S):
            return _not_covers(S, "necessary")

    dec = cover_sufficient(g, w, d)
    if dec.verdict is not Verdict.UNKNOWN or not use_oracle:
        return dec
    try:
        ok, moves, _ = covers_exact(g, w, d, limits)
    except LimitExceeded:
        return CoverDecision(Verdict.UNKNOWN, method="oracle")
    if ok:
        return _covers(moves, "oracle")
    return _not_covers(ORACLE_TOKEN, "oracle")


# --- cover pebbling number ------------------------------------------------

def cover_pebbling_number(g: Graph, w: Distribution) -> tuple[int, int]:
    """Weighted cover pebbling number for positive ``w`` and a vertex attaining it."""
    _check_lengths(g, w)
    require_positive(w)
    return stacking_number(g.dist, w)


def worst_distribution(g: Graph, w: Distribution) -> Distribution:
    """One pebble short of the stacking number, all on the critical vertex."""
    value, v = cover_pebbling_number(g, w)
    d = [0] * g.vertex_count
    d[v] = value - 1
    return tuple(d)


# --- certificate text format ----------------------------------------------

def format_certificate(seq) -> str:
    lines = [f"CERT {len(seq)}"] + [f"MOVE {a} {b}" for a, b in seq]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[Move, ...]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise FormatError("empty certificate")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "CERT" or not head[1].isdigit():
        raise FormatError(f"bad certificate header {lines[0]!r}")
    count = int(head[1])
    if len(lines) - 1 != count:
        raise FormatError(f"header declares {count} moves, found {len(lines) - 1}")
    moves = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "MOVE":
            raise FormatError(f"bad move line {ln!r}")
        try:
            moves.append(Move(int(parts[1]), int(parts[2])))
        except ValueError:
            raise FormatError(f"bad move line {ln!r}") from None
    return tuple(moves)
