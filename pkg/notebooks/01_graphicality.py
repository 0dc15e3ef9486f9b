# %% [markdown]
# # Deciding graphicality
#
# A sequence of positive integers is *graphic* when some simple graph has
# exactly those vertex degrees.  `degseq` stores sequences in run-length
# form and tests them with the Erdős–Gallai inequalities.

# %%
from degseq import (
    erdos_gallai_check,
    flatten_at,
    havel_hakimi_realize,
    parse_sequence,
)

seq = parse_sequence("3,3,1,1")
print(seq, seq.n, seq.sum)

# %% [markdown]
# Input order does not matter; `V^C` repeats `V` a total of `C` times.

# %%
print(parse_sequence("1, 2^2, 1^3"))

# %% [markdown]
# The report carries the least index `k` where the inequality is reversed,
# together with both sides.

# %%
report = erdos_gallai_check(seq)
print(report)
print(erdos_gallai_check(seq, all_violations=True).violations)

# %% [markdown]
# Havel–Hakimi gives an explicit edge list when one exists.

# %%
graph = havel_hakimi_realize(parse_sequence("3,2,2,1"))
print(graph.edges, graph.degrees())

# %% [markdown]
# Large runs cost nothing extra: this star has a million leaves.

# %%
star = parse_sequence("1000000,1^1000000")
print(erdos_gallai_check(star).graphic)

# %% [markdown]
# Flattening raises the first `k` entries to `d1` and lowers the rest to
# `dn`; a violation at `k` survives it.

# %%
from degseq import eg_terms

s = parse_sequence("4,4,3,2,1,1,1")
for k in range(1, s.n + 1):
    flat = flatten_at(s, k)
    print(k, eg_terms(s, k), flat, eg_terms(flat, k))
