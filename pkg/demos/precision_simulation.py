"""
Watching the error bound hold in reduced precision
==================================================

The worst-case error of an addition tree is alpha times its cost, with
alpha the unit roundoff. Exercising that bound with 53-bit doubles takes
astronomically large inputs, so this walkthrough simulates summation in a
tiny custom format (a p-bit significand with round-to-nearest-even) where
rounding is visible at desk scale.
"""

import random

from addtree import Precision, build_balanced, plan, round_to_precision, simulate

# --- Rounding at p = 3 bits: only 8 significand patterns ------------------

p3 = Precision(3)
print(f"p=3 unit roundoff alpha = {p3.alpha}")
for v in (7, 8, 9, 10, 11):
    print(f"  round({v}) = {round_to_precision(v, p3)}")

# --- One summation, observed vs bound -------------------------------------

x = [5, 4, 7, 6]
sim = simulate(build_balanced(x), p3)
print(
    f"\nbalanced sum of {x}: computed {sim.computed}, true {sim.true_sum}, "
    f"|error| {sim.abs_error}, first-order bound {sim.bound}"
)
assert sim.abs_error <= 2 * sim.bound  # bound is first-order; slack ~ n*alpha

# --- A better tree really does round less, on average ---------------------

rng = random.Random(3)
prec = Precision(12)
wins = ties = 0
trials = 200
for _ in range(trials):
    # Skewed magnitudes: this is where tree shape matters most.
    vals = [rng.randint(1, 2 ** rng.randint(1, 12)) for _ in range(24)]
    bal = simulate(build_balanced(vals), prec)
    huf = simulate(plan(vals, "huffman").tree, prec)
    if huf.abs_error < bal.abs_error:
        wins += 1
    elif huf.abs_error == bal.abs_error:
        ties += 1

print(
    f"\n{trials} random 24-term sums at p=12: Huffman beats balanced "
    f"{wins}x, ties {ties}x, loses {trials - wins - ties}x"
)
