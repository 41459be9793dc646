import pytest

import gridmesh as gm
from gridmesh.baselines import SearchBudget
from gridmesh.errors import InvalidSpecError

from conftest import naive_optimal_tid


def test_bfca_1x2_single_radio():
    t = gm.make_grid(gm.GridSpec(1, 2, radios=1, channels=3))
    result = gm.assign_bfca(t, 3)
    assert result.optimal_metric == 0
    assert result.assignment.sets == ((1,), (1,))
    assert result.exhausted


def test_bfca_1x3_forced_conflict():
    t = gm.make_grid(gm.GridSpec(1, 3, radios=1, channels=2))
    result = gm.assign_bfca(t, 2)
    assert result.optimal_metric == 1  # middle node's single radio forces it


def test_bfca_2x2_golden_optimum():
    # Frozen from the naive per-radio enumerator: minimum active-conflict
    # count on the 2x2 grid with 2 radios and 3 channels is 1 (four links,
    # three channels, every link pair conflicts).
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    result = gm.assign_bfca(t, 3)
    assert result.optimal_metric == 1
    assert result.exhausted
    report = gm.validate(t, result.assignment)
    assert report.topology_preserved


def test_bfca_matches_naive_oracle():
    for dims in [(1, 2), (1, 3), (2, 2), (2, 3), (1, 6)]:
        t = gm.make_grid(gm.GridSpec(*dims, radios=2, channels=3))
        expected = naive_optimal_tid(t, 3)
        assert gm.assign_bfca(t, 3).optimal_metric == expected, dims


def test_symmetry_pruning_sound():
    for dims in [(1, 2), (1, 3), (2, 2), (2, 3), (1, 6)]:
        t = gm.make_grid(gm.GridSpec(*dims, radios=2, channels=3))
        pruned = gm.assign_bfca(t, 3, SearchBudget(symmetry_pruning=True))
        full = gm.assign_bfca(t, 3, SearchBudget(symmetry_pruning=False))
        assert pruned.optimal_metric == full.optimal_metric, dims
        assert pruned.states_explored <= full.states_explored


def test_budget_monotone():
    t = gm.make_grid(gm.GridSpec(2, 3, radios=2, channels=3))
    metrics = []
    for budget in (1, 10, 100, 10**6):
        result = gm.assign_bfca(t, 3, SearchBudget(max_states=budget))
        metrics.append(result.optimal_metric)
    assert metrics == sorted(metrics, reverse=True)
    assert not gm.assign_bfca(t, 3, SearchBudget(max_states=1)).exhausted


def test_bfca_rejects_too_few_channels():
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    with pytest.raises(InvalidSpecError):
        gm.assign_bfca(t, 1)


def test_bad_budget():
    with pytest.raises(InvalidSpecError):
        SearchBudget(max_states=0)


def test_cca_1x2_lowest_fill():
    t = gm.make_grid(gm.GridSpec(1, 2, radios=2, channels=3))
    ca = gm.assign_cca(t, 3)
    assert ca.sets == ((1, 2), (1, 2))


def test_cca_3x3_valid_but_unfair():
    t = gm.make_grid(gm.GridSpec(3, 3, radios=2, channels=3))
    cca = gm.assign_cca(t, 3)
    assert gm.validate(t, cca).topology_preserved
    nocag_ca, _ = gm.assign_nocag(t, 3)
    cg = gm.build_conflict_graph(t, 2)
    assert (
        gm.evaluate(t, cca, cg).spread >= gm.evaluate(t, nocag_ca, cg).spread
    )


def test_cca_never_beats_bfca():
    t = gm.make_grid(gm.GridSpec(2, 2, radios=2, channels=3))
    cg = gm.build_conflict_graph(t, 2)
    cca = gm.assign_cca(t, 3)
    assert gm.active_conflicts(cg, cca) >= gm.assign_bfca(t, 3).optimal_metric


def test_nocag_dominates_cca_3x3_to_7x7():
    for n in range(3, 8):
        t = gm.make_grid(gm.GridSpec(n, n, radios=2, channels=3))
        cg = gm.build_conflict_graph(t, 2)
        nocag_ca, _ = gm.assign_nocag(t, 3)
        cca_ca = gm.assign_cca(t, 3)
        rn = gm.evaluate(t, nocag_ca, cg)
        rc = gm.evaluate(t, cca_ca, cg)
        assert rn.spread <= rc.spread, n
        assert rn.tid <= rc.tid, n
