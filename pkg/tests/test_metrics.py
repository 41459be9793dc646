import pytest

import gridmesh as gm
from gridmesh.errors import MismatchedTopologyError
from gridmesh.metrics import get_metric, register_metric


def test_walkthrough_usage():
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    ca = gm.assignment_from_sets(3, [[1, 2], [1, 3], [2, 3], [1, 3]])
    report = gm.evaluate(t, ca, cg)
    assert report.usage == {1: 3, 2: 2, 3: 3}
    assert report.spread == 1
    assert report.tid == 1


def test_unused_channels_counted():
    t = gm.make_grid(gm.GridSpec(1, 2, radios=1, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    ca = gm.assignment_from_sets(3, [[1], [1]])
    report = gm.evaluate(t, ca, cg)
    assert report.usage == {1: 2, 2: 0, 3: 0}
    assert report.spread == 2


def test_spread_zero_iff_even():
    t = gm.make_grid(gm.GridSpec(3, 3, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    ca, _ = gm.assign_nocag(t, 3)
    report = gm.evaluate(t, ca, cg)
    counts = set(report.usage.values())
    assert (report.spread == 0) == (len(counts) == 1)


def test_usage_sums_to_assigned_radios():
    t = gm.make_grid(gm.GridSpec(4, 4, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    ca, _ = gm.assign_nocag(t, 3)
    report = gm.evaluate(t, ca, cg)
    assert sum(report.usage.values()) == sum(len(s) for s in ca.sets)


def test_compare_orders_by_tid_then_spread():
    t = gm.make_grid(gm.GridSpec(3, 3, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    nocag_ca, _ = gm.assign_nocag(t, 3)
    cca_ca = gm.assign_cca(t, 3)
    ranked = gm.compare(
        [
            ("cca", gm.evaluate(t, cca_ca, cg)),
            ("nocag", gm.evaluate(t, nocag_ca, cg)),
        ]
    )
    assert [label for label, _ in ranked] == ["nocag", "cca"]


def test_compare_single_entry():
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    ca, _ = gm.assign_nocag(t, 3)
    ranked = gm.compare([("only", gm.evaluate(t, ca, cg))])
    assert len(ranked) == 1


def test_compare_mismatched_topology():
    t1 = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    t2 = gm.make_grid(gm.GridSpec(3, 3, radios=2, channels=3))
    ca1, _ = gm.assign_nocag(t1, 3)
    ca2, _ = gm.assign_nocag(t2, 3)
    r1 = gm.evaluate(t1, ca1, gm.build_conflict_graph(t1, 2))
    r2 = gm.evaluate(t2, ca2, gm.build_conflict_graph(t2, 2))
    with pytest.raises(MismatchedTopologyError):
        gm.compare([("a", r1), ("b", r2)])


def test_usage_string():
    assert gm.usage_string({1: 6, 2: 6, 3: 6}) == "06:06:06"
    assert gm.usage_string({1: 25, 2: 7, 3: 18}) == "25:07:18"


def test_metric_registry():
    register_metric("link_count", lambda topo, ca, cg: len(topo.links))
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    ca, _ = gm.assign_nocag(t, 3)
    cg = gm.build_conflict_graph(t, 2)
    assert get_metric("link_count")(t, ca, cg) == 4
    assert get_metric("tid")(t, ca, cg) == 1
