# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Exact arithmetic in cyclotomic fields
#
# Every entry of a finite-order matrix lives in some Q(zeta_m). An element is
# stored as its coordinates in the power basis 1, z, ..., z^(phi(m)-1), reduced
# modulo the m-th cyclotomic polynomial, so equality is coefficient equality.

# %%
from fractions import Fraction

from qsing.cyclotomic import Cyclotomic, conjugate, cyclotomic_polynomial, lift_common

cyclotomic_polynomial(12)

# %% [markdown]
# Powers of zeta wrap around and fold back into the basis.

# %%
z = Cyclotomic.zeta(5)
print(z ** 5, "|", z ** 4, "|", 1 + z + z ** 2 + z ** 3 + z ** 4)

# %% [markdown]
# Division uses an extended Euclid inverse. Complex conjugation sends z to z^-1.

# %%
a = Fraction(1, 2) - 3 * z ** 2
print(a.inverse())
print(a * a.inverse() == 1, conjugate(z) == z ** 4)

# %% [markdown]
# Values from different fields meet in the field of the lcm order.

# %%
i, w = Cyclotomic.zeta(4), Cyclotomic.zeta(3)
li, lw = lift_common(i, w)
print(li.order, li, "|", lw)
