# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Group closure and the singular locus
#
# A group is given by generators. Breadth-first closure lists its elements,
# and each element's eigenvalue-1 multiplicity comes from a rank computation.

# %%
from qsing import classify, closure, sigma_chain, sing_locus_dim
from qsing.cyclotomic import Cyclotomic
from qsing.linalg import CycMatrix, diagonal, mult_eigen_one

i = Cyclotomic.zeta(4)
G = closure([diagonal([i, -i], 4), CycMatrix([[0, i], [i, 0]], 4)])
len(G), G.orders

# %% [markdown]
# Sigma_k collects the elements fixing a subspace of dimension at least k.
# The subgroups H_k they generate shrink with k; the last index where H_k
# still differs from H_(n-1) is the dimension of the singular locus.

# %%
for name, gens in [
    ("<diag(-1,-1,1)>", [diagonal([-1, -1, 1], 1)]),
    ("<diag(-1,1)>", [diagonal([-1, 1], 1)]),
    ("order-8 group", G.generator_matrices),
]:
    chain = sigma_chain(closure(gens))
    print(f"{name:16} |Sigma_k| = {[len(s) for s in chain.sigma]}  "
          f"sing_locus_dim = {sing_locus_dim(chain)}")

# %% [markdown]
# Every non-identity element of the order-8 group acts without fixed vectors.

# %%
[mult_eigen_one(g) for g in G.elements]

# %%
classify(G).to_dict()
