# %% [markdown]
# # Sufficient conditions on n, d1 and dn
#
# Each bound says: an even-sum sequence that is long enough compared to its
# largest and smallest entries is graphic.  All comparisons are done on
# exact integers.

# %%
from degseq import bounds_summary, parse_sequence, remark_thresholds
from degseq.bounds import Predicate, min_length

for text in ["5,1^11", "4^2,1^6", "4^3,1^4", "2^3"]:
    verdicts, eg = bounds_summary(parse_sequence(text))
    row = "  ".join(f"{v.predicate.value}={'Y' if v.holds else '-'}" for v in verdicts)
    print(f"{text:10s} graphic={eg.graphic!s:5s} {row}")

# %% [markdown]
# For `d1 = 2x + 1` and `dn = 1` the three length thresholds differ by one
# each step down the ladder.

# %%
print(" x   zz   bhjw  floor")
for x in range(1, 8):
    print(f"{x:2d} {remark_thresholds(x)}")

# %% [markdown]
# The minimal qualifying length for every predicate, as a function of d1
# with dn = 1.

# %%
for d1 in range(1, 13):
    print(d1, [min_length(p, d1, 1) for p in Predicate if p is not Predicate.ZZ_GENERAL])
