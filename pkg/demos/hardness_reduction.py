"""
Why no exact polynomial algorithm is expected
=============================================

Finding the minimum-cost addition tree for mixed-sign input is NP-hard, by
a reduction from 3-PARTITION. This walkthrough builds a reduction instance
from a small 3-PARTITION input and shows that its optimal tree cost hits
the target exactly when (and only when) the input is a yes-instance.
"""

from addtree import (
    ThreePartitionInstance,
    check_partition_witness,
    find_triple_partition,
    optimal_cost_dp,
    perturbation_bounds,
    reduce_to_addition_tree,
)

# --- A yes-instance of 3-PARTITION ----------------------------------------

# Three values summing to K = 15: one triple, trivially partitionable.
inst = ThreePartitionInstance(b=(4, 5, 6), k=15)
triples = find_triple_partition(inst)
print(f"3-PARTITION witness: {triples}")
assert check_partition_witness(inst, triples)

# --- The reduction --------------------------------------------------------

red = reduce_to_addition_tree(inst)
print(f"n = {len(red.x)} values, target cost {red.target_cost}")
print(f"shifted items a_i = {red.a}")
print(f"anchors: -H = {-red.h_big} (x{red.m}), h = {red.h} (x{red.m})")

# The perturbation bounds are what make the gadget rigid: every a_i is
# within 4*eps of L/3, so only triples can neutralize an anchor.
bounds = perturbation_bounds(red)
print(f"perturbation bounds hold: {bounds.ok}")

# --- The equivalence, checked against the exact oracle --------------------

result = optimal_cost_dp(red.x)
print(f"optimal tree cost {result.optimal_cost} vs target {red.target_cost}")
assert result.optimal_cost == red.target_cost  # yes-instance: target met

# A no-instance (b values that cannot form equal-sum triples) overshoots:
bad = ThreePartitionInstance(b=(4, 4, 4, 6, 6, 6), k=15)
assert find_triple_partition(bad) is None
bad_red = reduce_to_addition_tree(bad)
bad_cost = optimal_cost_dp(bad_red.x).optimal_cost
print(f"no-instance: optimal {bad_cost} > target {bad_red.target_cost}")
assert bad_cost > bad_red.target_cost
