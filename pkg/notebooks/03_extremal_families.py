# %% [markdown]
# # Extremal families
#
# `witness_nongraphic(d)` sits one below the floor bound and is not
# graphic, so the bound cannot be lowered.  `gap_example(x)` is covered by
# the floor bound but not by the `d1**2/4 + d1 + 1` bound.

# %%
from degseq import erdos_gallai_check, gap_example, proof_forms, witness_nongraphic

for d in range(2, 10):
    w = witness_nongraphic(d)
    r = erdos_gallai_check(w)
    print(f"d={d}: {w!s:12s} n={w.n:3d} first violation {tuple(r.first_violation)}")

# %%
for x in range(1, 7):
    g = gap_example(x)
    print(f"x={x}: {g!s:12s} n={g.n:3d} graphic={erdos_gallai_check(g).graphic}")

# %% [markdown]
# The three flat candidates left over in the argument for the floor bound
# all have odd degree sum, so none of them is an admissible input.

# %%
for x in range(1, 7):
    print(x, [(str(s), s.sum) for s in proof_forms(x)])
