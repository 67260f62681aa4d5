"""The rerouting step behind the n-linked tournaments, over GF(2).

A square matrix with ones on the diagonal records which candidate cycles
link which targets.  Summing a chosen set of rows gives a rerouted cycle
that links at least 2n - 3 targets; flipping the at most n - 2 targets the
original cycle linked still leaves n - 1.
"""

import random

from tourlink.linking import gap_table, random_linking_matrix, select_index_set, simulate_zcycle_linking

rng = random.Random(3)
for n in (3, 4, 5):
    size = (2 * n - 3) ** 2
    m = random_linking_matrix(size, rng, density=0.1)
    sel = select_index_set(m, n)
    c = [0] * size
    for j in rng.sample(range(size), n - 2):
        c[j] = 1
    linked = simulate_zcycle_linking(m, c, n)
    print(f"n={n}: {size}x{size}, {sel.branch} branch, {len(sel.indices)} rows summed, "
          f"weight {sel.weight} >= {2 * n - 3}, {len(linked)} linked >= {n - 1}")

print(gap_table(7).to_markdown())
