# %% [markdown]
# # Exhaustive checks
#
# `cross_check` visits every non-increasing sequence up to a given length
# and largest entry, comparing every method against every other.
# `sharpness_scan` confirms that the floor bound is exact for one d1.

# %%
import time

from degseq.oracle import count_sequences, cross_check, sharpness_scan

t = time.perf_counter()
report = cross_check(9, 6)
print(report.sequences_checked, sum(count_sequences(n, 6) for n in range(1, 10)))
print("graphic:", report.graphic_count, "clean:", report.clean, f"{time.perf_counter() - t:.1f}s")

# %%
for d1 in range(2, 7):
    r = sharpness_scan(d1, extra_lengths=2)
    print(d1, r.threshold, r.witness_at_threshold_minus_1, r.sequences_checked, r.confirmed)
