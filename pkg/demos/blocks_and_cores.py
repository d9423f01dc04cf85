"""
Cores, weights and blocks
=========================

Removing e-rim hooks from a partition until none is left gives its e-core,
and the number of hooks removed is its e-weight.  Two Specht modules of
H_q(S_n) lie in the same block exactly when their labels share an e-core.
This script walks through those pieces for small n.
"""
from vertexcalc import (
    Partition,
    block_of,
    blocks_of_size,
    cuspidal_support,
    e_core_quotient,
    enumerate_partitions,
    predicted_vertex_of_block,
    wilcox_decompose,
)

# e-core, weight and e-quotient of a single partition
lam = Partition((7, 4, 1))
data = e_core_quotient(lam, 3)
print(f"{lam}: 3-core {data.core}, weight {data.weight}, quotient {[str(q) for q in data.quotient]}")

# The Wilcox decomposition writes lam = e*sigma + nu with nu e-restricted.
# |sigma| = k says the cuspidal support is a product of k copies of S_e.
w = wilcox_decompose(lam, 3)
cs = cuspidal_support(lam, 3)
print(f"lam = 3*{w.sigma} + {w.nu}; cuspidal support {cs.parabolic}, depth {cs.depth}")

###############################################################################
# Blocks of H_q(S_6) at e = 3.  A block of weight w is predicted to have
# vertex S_e x ... x S_e with w factors.

n, e = 6, 3
by_block = {}
for lam in enumerate_partitions(n):
    by_block.setdefault(block_of(lam, e), []).append(lam)

for b in blocks_of_size(n, e):
    labels = " ".join(lam.to_text() for lam in by_block[b])
    print(f"{b}: vertex {predicted_vertex_of_block(b)}; labels {labels}")
