"""End-to-end summation planners with proven worst-case guarantees.

Strategies:

* ``balanced``  -- pairwise balanced tree, any input.
* ``huffman``   -- optimal for single-sign input, O(n log n) (O(n) sorted).
* ``critical``  -- mixed-sign planner: minimum critical matching, add each
  pair, then a balanced tree over the pair sums and unmatched leaves.
  Cost is within 2(ceil(log2(n-1)) + 1) of optimal.
* ``grouped``   -- single-sign planner: balanced trees over groups of 2^t,
  Huffman over the group maxima, groups spliced in. Cost is within
  optimal + t * |sum|; with the default t this gives a
  ceil(log2 log2 n)-factor guarantee in O(n) time even unsorted.
* ``optimal``   -- exact oracle, exponential time, small n only.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .huffman import build_huffman, build_huffman_sorted
from .matching import minimum_critical_matching, split_by_sign
from .numeric import ErrorModel, Value, as_value, format_value
from .oracle import optimal_cost_dp
from .tree import (
    AdditionTree,
    Internal,
    Leaf,
    build_balanced,
    combine_balanced,
    cost,
    gc_paused,
    negate,
    serialize,
)

STRATEGIES = ("balanced", "huffman", "critical", "grouped", "optimal")


@dataclass
class PlanReport:
    strategy: str
    tree: AdditionTree
    cost: Value
    error_bound: Value
    guarantee_factor: Optional[Value] = None
    optimal_cost: Optional[Value] = None
    observed_ratio: Optional[Value] = None

    def to_json_dict(self, n: int) -> dict:
        def fmt(v):
            return None if v is None else format_value(v)

        return {
            "strategy": self.strategy,
            "n": n,
            "cost": format_value(self.cost),
            "error_bound": format_value(self.error_bound),
            "guarantee_factor": fmt(self.guarantee_factor),
            "optimal_cost": fmt(self.optimal_cost),
            "observed_ratio": fmt(self.observed_ratio),
            "tree": serialize(self.tree),
        }


def _ceil_log2(k: int) -> int:
    return (k - 1).bit_length() if k >= 1 else 0


def _check_nonzero(x: Sequence[Value]) -> None:
    if not x:
        raise ValueError("input multiset is empty")
    if any(v == 0 for v in x):
        raise ValueError("input values must be nonzero")


def _sign_split(x: Sequence[Value]) -> tuple:
    pos = sum(1 for v in x if v > 0)
    neg = sum(1 for v in x if v < 0)
    return pos, neg


def plan_general(x: Sequence[Value], presorted: bool = False) -> AdditionTree:
    """Mixed-sign planner: match, add pairs, balance the rest.

    With presorted=True, x must already be sorted ascending; the sort is
    skipped and the whole plan runs in O(n).
    """
    _check_nonzero(x)
    npos, nneg = _sign_split(x)
    if npos == 0 or nneg == 0:
        raise ValueError(
            "general planner requires mixed signs; use the single-sign planner"
        )
    if presorted:
        xs = list(x)
        if any(xs[i] > xs[i + 1] for i in range(len(xs) - 1)):
            raise ValueError("input is not sorted ascending")
        negatives = xs[:nneg][::-1]
        positives = xs[nneg:]
    else:
        positives, negatives = split_by_sign(x)
    matching = minimum_critical_matching(positives, negatives)
    pieces = [Internal(Leaf(a), Leaf(b)) for a, b in matching.pairs]
    pieces.extend(Leaf(z) for z in matching.unmatched)
    return combine_balanced(pieces)


def plan_single_sign(x: Sequence[Value], t: int) -> AdditionTree:
    """Single-sign planner: groups of 2^t, Huffman over group maxima.

    Partitions x in input order into ceil(n / 2^t) groups, builds a
    balanced tree per group, then merges groups Huffman-style keyed on the
    group maxima. Guarantees cost <= optimal + t * |sum(x)|.
    """
    _check_nonzero(x)
    if t < 1:
        raise ValueError(f"group parameter t must be >= 1, got {t}")
    npos, nneg = _sign_split(x)
    if npos and nneg:
        raise ValueError("single-sign planner requires all values of one sign")
    if nneg:
        return negate(plan_single_sign([-v for v in x], t))

    width = 1 << t
    with gc_paused():
        entries = []  # (group max, insertion order, group tree)
        for i in range(0, len(x), width):
            group = x[i : i + width]
            entries.append((max(group), len(entries), build_balanced(group)))
        if len(entries) == 1:
            return entries[0][2]
        # Huffman over the maxima; each merge joins the actual group trees,
        # so the result is the Huffman tree with maxima leaves replaced in
        # place.
        heapq.heapify(entries)
        counter = len(entries)
        while len(entries) > 1:
            wa, _, ta = heapq.heappop(entries)
            wb, _, tb = heapq.heappop(entries)
            heapq.heappush(entries, (wa + wb, counter, Internal(ta, tb)))
            counter += 1
        return entries[0][2]


def default_group_parameter(n: int) -> int:
    """max(1, floor(log2(log2(n) - 1))), computed exactly.

    t is the largest k with n >= 2^(2^k + 1), clamped to at least 1 so the
    grouped planner's precondition t >= 1 holds even for tiny n.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    k = 0
    while n >= 1 << ((1 << (k + 1)) + 1):
        k += 1
    return max(1, k)


def plan(
    x: Sequence[Value],
    strategy: str,
    t: Optional[int] = None,
    alpha: Value = None,
    with_oracle: bool = False,
    oracle_cap: int = 20,
    presorted: bool = False,
) -> PlanReport:
    """Run the named strategy and assemble a report.

    alpha defaults to 2^-53 (IEEE double roundoff). with_oracle also runs
    the exact solver and records the observed cost ratio.
    """
    _check_nonzero(x)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    model = ErrorModel(Fraction(1, 2**53) if alpha is None else alpha)
    n = len(x)
    npos, nneg = _sign_split(x)
    single_sign = npos == 0 or nneg == 0
    guarantee: Optional[Value] = None
    optimal: Optional[Value] = None

    if strategy == "balanced":
        tree = build_balanced(x)
        if single_sign and n >= 2:
            guarantee = _ceil_log2(n)
    elif strategy == "huffman":
        if not single_sign:
            raise ValueError("huffman strategy requires single-sign input")
        if nneg:
            tree = negate(
                build_huffman_sorted([-v for v in reversed(x)])
                if presorted
                else build_huffman([-v for v in x])
            )
        else:
            tree = build_huffman_sorted(x) if presorted else build_huffman(x)
        guarantee = 1
    elif strategy == "critical":
        if single_sign:
            raise ValueError("critical strategy requires mixed-sign input")
        tree = plan_general(x, presorted=presorted)
        guarantee = 2 * (_ceil_log2(n - 1) + 1)
    elif strategy == "grouped":
        if not single_sign:
            raise ValueError("grouped strategy requires single-sign input")
        if t is None:
            t = default_group_parameter(max(n, 2))
        tree = plan_single_sign(x, t)
        guarantee = 1 + t
    else:  # optimal
        result = optimal_cost_dp(x, cap=oracle_cap)
        tree = result.witness
        optimal = result.optimal_cost
        guarantee = 1

    c = cost(tree)
    ratio = None
    if with_oracle and optimal is None:
        optimal = optimal_cost_dp(x, cap=oracle_cap).optimal_cost
    if optimal is not None and optimal > 0:
        ratio = as_value(Fraction(c) / Fraction(optimal))
    return PlanReport(
        strategy=strategy,
        tree=tree,
        cost=c,
        error_bound=model.alpha * c,
        guarantee_factor=guarantee,
        optimal_cost=optimal,
        observed_ratio=ratio,
    )
