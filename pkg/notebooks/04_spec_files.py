# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Spec files and the command line
#
# Groups travel as small text files. Entries are sums of rational multiples of
# powers of z, where z stands for zeta_m.

# %%
from qsing import GroupSpec, SpecError, closure, emit_spec, parse_spec
from qsing.cli import main
from qsing.constructors import construct_odd_composite

text = emit_spec(GroupSpec.from_group(construct_odd_composite(9)))
print(text[:400])

# %%
spec = parse_spec(text)
spec == GroupSpec.from_group(construct_odd_composite(9)), len(closure(list(spec.generators)))

# %% [markdown]
# Malformed input is reported with a line and column.

# %%
try:
    parse_spec("cyclotomic_order 4\ndimension 2\ngenerator\nz, 0\n0, z^\nend\n")
except SpecError as err:
    print(err)

# %% [markdown]
# The same operations are exposed through the `qsing` command.

# %%
main(["construct", "--family", "even", "--n", "4"])
