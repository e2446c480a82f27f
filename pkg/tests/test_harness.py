import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverpebble.errors import NonPositiveWeightError, TooManyVerticesError
from coverpebble.graph import build_graph, cartesian_product, complete_graph, hypercube, path_graph
from coverpebble.harness import (
    HarnessLimitExceeded,
    Instance,
    check_product_identity,
    connected_graphs,
    format_graph_token,
    graph_family,
    nonempty_subsets,
    parse_graph_token,
    parse_instance_line,
    positive_weights,
    product_weight,
    search_conjecture,
    value_condition_holds,
)
from coverpebble.oracle import SearchLimits, compositions_upto, covers_exact
from coverpebble.pebbling import stacking_number

from .brute import covers_bfs, subsets, value
from .conftest import connected_graphs as graph_strategy
from .conftest import random_connected_graph


def test_connected_graph_counts():
    # labelled connected graphs on 1..4 vertices
    assert [sum(1 for _ in connected_graphs(n)) for n in range(1, 5)] == [1, 1, 4, 38]


def test_family_order_is_by_size_then_edges():
    fam = list(graph_family(3))
    assert [g.vertex_count for g in fam] == [1, 2, 3, 3, 3, 3]
    keys = [g.edge_list() for g in fam[2:]]
    assert keys == sorted(keys)


def test_nonempty_subsets_include_everything():
    subs = nonempty_subsets(3)
    assert len(subs) == 7 and (0, 1, 2) in subs
    assert subs == sorted(subs)


def test_value_condition_examples(p2, p3):
    assert value_condition_holds(p2, (1, 1), (2, 0)) == (False, frozenset({0}))
    assert value_condition_holds(p3, (1, 1, 1), (3, 0, 3)) == (True, None)
    assert value_condition_holds(p3, (1, 1, 1), (2, 1, 1))[0]


def test_value_condition_bound():
    with pytest.raises(TooManyVerticesError):
        value_condition_holds(path_graph(5), (1,) * 5, (1,) * 5, bound=4)


@settings(max_examples=100)
@given(graph_strategy(max_n=5), st.data())
def test_value_condition_matches_brute_force(g, data):
    n = g.vertex_count
    w = data.draw(st.tuples(*[st.integers(1, 2)] * n))
    d = data.draw(st.tuples(*[st.integers(0, 6)] * n))
    holds, S = value_condition_holds(g, w, d)
    bad = [s for s in subsets(n) if value(g.dist, d, s) < value(g.dist, w, s)]
    assert holds == (not bad)
    if not holds:
        assert S == frozenset(min(tuple(sorted(s)) for s in bad))


def test_empty_family_gives_empty_report():
    report = search_conjecture([], 2)
    assert report.tested == 0 and not report.counterexamples
    assert report.to_text().splitlines()[-1] == "TESTED=0 CEX=0"


def test_p2_condition_is_exact():
    p2 = path_graph(2)
    report = search_conjecture([p2], 1, pebble_budget=3)
    assert report.tested == 10 and not report.counterexamples
    for d in compositions_upto(2, 3).tolist():
        assert value_condition_holds(p2, (1, 1), d)[0] == covers_exact(p2, (1, 1), d)[0]


def test_smallest_counterexample_on_p3(p3):
    # every set value is met (S={0,2} is tight at 4 >= 4) yet the two
    # pebbles on each end can only ever reach the middle once
    w, d = (1, 1, 1), (2, 0, 2)
    assert value_condition_holds(p3, w, d) == (True, None)
    assert not covers_exact(p3, w, d)[0]
    assert not covers_bfs(p3.edges, w, d)


def test_report_agrees_with_per_instance_checks():
    fam = list(graph_family(3))
    report = search_conjecture(fam, 2, family_name="n<=3")
    cex = set()
    tested = holds = 0
    for g in fam:
        n = g.vertex_count
        for w in positive_weights(n, 2):
            sn, _ = stacking_number(g.dist, w)
            for d in compositions_upto(n, sn).tolist():
                d = tuple(d)
                tested += 1
                ok = value_condition_holds(g, w, d)[0]
                covers = covers_exact(g, w, d)[0]
                assert ok or not covers
                holds += ok
                if ok and not covers:
                    cex.add((g, w, d))
    assert report.tested == tested and report.condition_holds == holds
    assert {(i.graph, i.weights, i.dist) for i in report.counterexamples} == cex
    assert not report.necessity_violations
    assert len(cex) == 96


def test_report_lines_replay():
    report = search_conjecture(graph_family(3), 1, family_name="n<=3")
    text = report.to_text()
    assert text.startswith("# family=n<=3 max_weight=1 budget=SN\n")
    lines = [ln for ln in text.splitlines() if ln.startswith("CEX ")]
    assert len(lines) == len(report.counterexamples) > 0
    for line in lines:
        inst = parse_instance_line(line)
        assert value_condition_holds(inst.graph, inst.weights, inst.dist)[0]
        assert not covers_exact(inst.graph, inst.weights, inst.dist)[0]
    assert text.splitlines()[-1] == f"TESTED={report.tested} CEX={len(lines)}"


def test_reports_are_deterministic():
    a = search_conjecture(graph_family(3), 2, family_name="x").to_text()
    b = search_conjecture(graph_family(3), 2, family_name="x").to_text()
    assert a == b


def test_budget_caps_distributions():
    full = search_conjecture(graph_family(3), 1)
    capped = search_conjecture(graph_family(3), 1, pebble_budget=3)
    assert capped.tested < full.tested
    assert capped.to_text().startswith("# family=custom max_weight=1 budget=3")


def test_limits_and_resume():
    fam = list(graph_family(3))
    with pytest.raises(HarnessLimitExceeded) as info:
        search_conjecture(fam, 2, limits=SearchLimits(max_states=50))
    partial = info.value.report
    assert not partial.complete and info.value.reason == "states"
    assert "# INCOMPLETE resume_after" in partial.to_text()

    full = search_conjecture(fam, 2)
    rest = search_conjecture(fam, 2, resume_after=partial.cursor)
    assert partial.tested + rest.tested == full.tested
    assert partial.counterexamples + rest.counterexamples == full.counterexamples


def test_time_limit_is_reported():
    with pytest.raises(HarnessLimitExceeded) as info:
        search_conjecture(graph_family(4), 2, limits=SearchLimits(max_seconds=1e-9))
    assert info.value.reason == "time"


def test_graph_token_round_trip():
    for g in graph_family(4):
        assert parse_graph_token(format_graph_token(g)) == g
    line = "CEX " + Instance(path_graph(3), (1, 1, 1), (2, 0, 2)).fields()
    assert line == "CEX graph=3:0-1,1-2 w=1,1,1 d=2,0,2"


# --- product identity ------------------------------------------------------

def test_product_examples(p2):
    assert check_product_identity(p2, p2, (1, 1), (1, 1)) == (9, 9, True)
    single = build_graph(1, [])
    k4 = complete_graph(4)
    lhs, rhs, eq = check_product_identity(single, k4, (3,), (1, 2, 1, 1))
    assert eq and lhs == 3 * stacking_number(k4.dist, (1, 2, 1, 1))[0]


def test_iterated_product_matches_q3():
    p2 = path_graph(2)
    c4, _ = cartesian_product(p2, p2)
    lhs, rhs, eq = check_product_identity(c4, p2, (1,) * 4, (1, 1))
    assert (lhs, rhs, eq) == (27, 27, True)
    assert stacking_number(hypercube(3).dist, (1,) * 8)[0] == 27


def test_product_weight_layout():
    assert product_weight((1, 2), (3, 4, 5)) == (3, 4, 5, 6, 8, 10)


def test_product_rejects_zero_weight(p2):
    with pytest.raises(NonPositiveWeightError):
        check_product_identity(p2, p2, (1, 0), (1, 1))


def test_product_identity_on_random_pairs():
    rng = random.Random(5)
    for _ in range(300):
        g = random_connected_graph(rng, rng.randint(1, 5))
        h = random_connected_graph(rng, rng.randint(1, 5))
        w1 = tuple(rng.randint(1, 3) for _ in range(g.vertex_count))
        w2 = tuple(rng.randint(1, 3) for _ in range(h.vertex_count))
        assert check_product_identity(g, h, w1, w2)[2]
