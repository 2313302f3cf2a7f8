# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Non-cyclic isolated Gorenstein examples
#
# Even n: block copies of the order-8 group in SL(2). Odd composite n = q n':
# a metacyclic group of order q^2 l in GL(q), pushed into SL(n) by pairing
# copies of the representation with copies of its conjugate.

# %%
import time

from qsing import classify, construct_even, construct_odd_composite, odd_composite_params
from qsing.constructors import ConstructionError

for n in (2, 4, 6, 8):
    r = classify(construct_even(n))
    print(n, r.group_order, r.in_sl, r.isolated, r.cyclic, r.gorenstein.value)

# %% [markdown]
# Parameters are the smallest admissible choices: q is the least prime factor,
# l the least prime congruent to 1 mod 2q, alpha the least unit of order q mod l.

# %%
for n in (9, 15, 25, 49):
    print(n, odd_composite_params(n))

# %%
for n in (9, 15, 25):
    t = time.perf_counter()
    r = classify(construct_odd_composite(n))
    print(n, r.group_order, r.cyclotomic_order, r.isolated, r.cyclic,
          f"{time.perf_counter() - t:.2f} s")

# %% [markdown]
# In odd prime dimension the construction is refused.

# %%
try:
    construct_odd_composite(7)
except ConstructionError as err:
    print(err)
