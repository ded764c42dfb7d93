import random
from fractions import Fraction

import pytest

from addtree.oracle import optimal_cost_dp
from addtree.planner import (
    default_group_parameter,
    plan,
    plan_general,
    plan_single_sign,
)
from addtree.tree import build_balanced, cost, evaluate_exact, serialize


def ceil_log2(k):
    return (k - 1).bit_length()


def test_plan_general_examples():
    assert cost(plan_general([1, 3, -2, -5])) == 6
    assert cost(plan_general([3, 5, -5])) == 3
    with pytest.raises(ValueError):
        plan_general([1, 2, 3])
    with pytest.raises(ValueError):
        plan_general([1, 0, -2])


def test_plan_general_presorted_matches_unsorted():
    rng = random.Random(5)
    for _ in range(30):
        n = rng.randint(2, 10)
        while True:
            x = [rng.choice([1, -1]) * rng.randint(1, 50) for _ in range(n)]
            if any(v > 0 for v in x) and any(v < 0 for v in x):
                break
        assert cost(plan_general(sorted(x), presorted=True)) == cost(plan_general(x))
    with pytest.raises(ValueError):
        plan_general([3, -1], presorted=True)


def test_plan_single_sign_examples():
    assert cost(plan_single_sign([1, 2, 3, 4], 1)) == 20
    assert cost(plan_single_sign([1, 1, 1, 8], 1)) == 22
    # n <= 2^t degenerates to one balanced group
    t = plan_single_sign([1, 2, 3], 2)
    assert serialize(t) == serialize(build_balanced([1, 2, 3]))


def test_plan_single_sign_validation():
    with pytest.raises(ValueError):
        plan_single_sign([1, -1], 1)
    with pytest.raises(ValueError):
        plan_single_sign([1, 2], 0)


def test_plan_single_sign_negative_symmetry():
    x = [3, 1, 4, 1, 5, 9, 2, 6]
    neg = [-v for v in x]
    assert cost(plan_single_sign(neg, 1)) == cost(plan_single_sign(x, 1))
    assert evaluate_exact(plan_single_sign(neg, 1)) == -sum(x)


def test_default_group_parameter():
    assert default_group_parameter(256) == 2
    assert default_group_parameter(2**17) == 4
    assert default_group_parameter(4) == 1
    assert default_group_parameter(2) == 1
    assert default_group_parameter(32) == 2
    assert default_group_parameter(31) == 1
    with pytest.raises(ValueError):
        default_group_parameter(1)


def test_theorem_general_bound():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(2, 10)
        while True:
            x = [rng.choice([1, -1]) * rng.randint(1, 99) for _ in range(n)]
            if any(v > 0 for v in x) and any(v < 0 for v in x):
                break
        factor = 2 * (ceil_log2(n - 1) + 1)
        assert cost(plan_general(x)) <= factor * optimal_cost_dp(x).optimal_cost


def test_theorem_single_sign_bound():
    rng = random.Random(23)
    for _ in range(40):
        n = rng.randint(1, 10)
        x = [rng.randint(1, 99) for _ in range(n)]
        opt = optimal_cost_dp(x).optimal_cost
        for t in (1, 2, 3):
            assert cost(plan_single_sign(x, t)) <= opt + t * sum(x)


def test_step3_cost_decomposition():
    # cost(plan) = Pi + cost(balanced stage) <= Pi + (h-1)(Pi+Delta)
    from addtree.matching import match_multiset

    rng = random.Random(29)
    for _ in range(40):
        n = rng.randint(2, 12)
        while True:
            x = [rng.choice([1, -1]) * rng.randint(1, 99) for _ in range(n)]
            if any(v > 0 for v in x) and any(v < 0 for v in x):
                break
        m = match_multiset(x)
        tree = plan_general(x)
        balanced_stage = cost(tree) - m.pi
        pieces = len(m.pairs) + len(m.unmatched)
        h = ceil_log2(pieces) + 1 if pieces > 1 else 1
        assert h <= ceil_log2(n - 1) + 1
        assert balanced_stage <= (h - 1) * (m.pi + m.delta)


def test_planner_conservation():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(2, 12)
        while True:
            x = [rng.choice([1, -1]) * rng.randint(1, 99) for _ in range(n)]
            if any(v > 0 for v in x) and any(v < 0 for v in x):
                break
        assert evaluate_exact(plan_general(x)) == sum(x)
        pos = [abs(v) for v in x]
        assert evaluate_exact(plan_single_sign(pos, 2)) == sum(pos)


def test_plan_dispatch():
    report = plan([1, 2, 3, 4], "huffman")
    assert report.cost == 19 and report.guarantee_factor == 1
    report = plan([1, 3, -2, -5], "critical")
    assert report.cost == 6
    assert report.guarantee_factor == 2 * (ceil_log2(3) + 1) == 6
    with pytest.raises(ValueError):
        plan([1, 2, 3, 4], "critical")
    with pytest.raises(ValueError):
        plan([1, -2], "huffman")
    with pytest.raises(ValueError):
        plan([1, 2], "nonsense")


def test_plan_with_oracle_ratio():
    report = plan([1, 3, -2, -5], "critical", with_oracle=True)
    assert report.optimal_cost == 6
    assert report.observed_ratio == 1
    assert report.observed_ratio <= report.guarantee_factor


def test_plan_report_json():
    report = plan([1, 2, 3, 4], "grouped", t=1, alpha=Fraction(1, 8))
    payload = report.to_json_dict(4)
    assert payload["strategy"] == "grouped"
    assert payload["cost"] == "20"
    assert payload["error_bound"] == "2.5"
    assert payload["guarantee_factor"] == "2"
    assert payload["tree"].startswith("(")


def test_plan_balanced_guarantee_only_single_sign():
    assert plan([1, 2, 3, 4], "balanced").guarantee_factor == 2
    assert plan([1, -2, 3], "balanced").guarantee_factor is None


def test_plan_optimal_strategy():
    report = plan([5, -5, 3], "optimal")
    assert report.cost == 3 and report.optimal_cost == 3
