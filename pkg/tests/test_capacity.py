import pytest

import gridmesh as gm
from gridmesh.errors import InvalidSpecError, ScenarioError


def grid(n):
    return gm.make_grid(gm.GridSpec(n, n, radios=2, channels=3))


def test_scenario_3x3():
    scenario = gm.build_scenario(grid(3))
    assert len(scenario.flows) == 6
    assert all(len(f.path) == 3 for f in scenario.flows)
    # verticals by column first, then horizontals by row
    assert scenario.flows[0].path == (0, 3, 6)
    assert scenario.flows[3].path == (0, 1, 2)


def test_scenario_6x6():
    scenario = gm.build_scenario(grid(6))
    assert len(scenario.flows) == 12


def test_scenario_1x1_rejected():
    t = gm.make_grid(gm.GridSpec(1, 1, radios=2, channels=3))
    with pytest.raises(ScenarioError):
        gm.build_scenario(t)


def test_scenario_rectangular_extension():
    t = gm.make_grid(gm.GridSpec(2, 3, radios=2, channels=3))
    scenario = gm.build_scenario(t)
    assert scenario.rectangular_extension
    assert len(scenario.flows) == 5  # 3 columns + 2 rows


def test_path_capacity():
    assert gm.path_capacity((0, 1, 2), [9.1, 9.1]) == 9.1
    assert gm.path_capacity((0, 1, 2, 3), [9.1, 4.0, 9.1]) == 4.0
    assert gm.path_capacity((0, 1), [9.1]) == 9.1


def test_path_capacity_mapping():
    caps = {(0, 1): 9.1, (1, 2): 4.0}
    assert gm.path_capacity((0, 1, 2), caps) == 4.0


def test_path_capacity_errors():
    with pytest.raises(ScenarioError):
        gm.path_capacity((0,), [])
    with pytest.raises(ScenarioError):
        gm.path_capacity((0, 1, 2), [9.1])


def test_path_capacity_monotone():
    base = gm.path_capacity((0, 1, 2, 3), [5.0, 3.0, 7.0])
    raised = gm.path_capacity((0, 1, 2, 3), [5.0, 4.0, 7.0])
    assert raised >= base


@pytest.mark.parametrize(
    "n,aggregate",
    [(3, 54.6), (4, 72.8), (5, 91.0), (6, 109.2), (7, 127.4)],
)
def test_upper_bound_table(n, aggregate):
    t = grid(n)
    bound = gm.upper_bound(t, gm.build_scenario(t))
    assert bound.aggregate == pytest.approx(aggregate, abs=0)
    assert bound.aggregate == pytest.approx(2 * n * 9.1)
    assert all(v <= 9.1 for v in bound.per_flow.values())


def test_upper_bound_channel_constraint():
    t = gm.Topology(
        rows=2,
        cols=2,
        spacing_m=250.0,
        channels=1,
        nodes=tuple(gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3)).nodes),
        links=tuple(gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3)).links),
    )
    with pytest.raises(InvalidSpecError):
        gm.upper_bound(t, gm.build_scenario(t))


@pytest.mark.parametrize("n", range(3, 8))
def test_flow_conservation_at_bound(n):
    t = grid(n)
    scenario = gm.build_scenario(t)
    bound = gm.upper_bound(t, scenario)
    assert gm.verify_flow_conservation(scenario, bound.per_flow)


@pytest.mark.parametrize("n", range(3, 8))
def test_flow_conservation_rejects_overrate(n):
    t = grid(n)
    scenario = gm.build_scenario(t)
    rates = dict(gm.upper_bound(t, scenario).per_flow)
    rates[0] = 9.2
    assert not gm.verify_flow_conservation(scenario, rates)


def test_flow_conservation_zero_rates():
    scenario = gm.build_scenario(grid(3))
    zero = {i: 0.0 for i in range(len(scenario.flows))}
    assert gm.verify_flow_conservation(scenario, zero)


def test_flow_conservation_negative_rejected():
    scenario = gm.build_scenario(grid(3))
    rates = {i: 1.0 for i in range(len(scenario.flows))}
    rates[1] = -0.5
    assert not gm.verify_flow_conservation(scenario, rates)


def test_bound_dominates_perturbed_feasible_rates():
    scenario = gm.build_scenario(grid(4))
    t = grid(4)
    bound = gm.upper_bound(t, scenario)
    scaled = {i: v * 0.9 for i, v in bound.per_flow.items()}
    assert gm.verify_flow_conservation(scenario, scaled)
    assert sum(scaled.values()) <= bound.aggregate
