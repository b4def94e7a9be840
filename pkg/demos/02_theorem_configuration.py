"""
A cheap 1-clique configuration on K_{3k+3}
==========================================
"""
import time

from brushclean import theorem_config, is_one_clique_config, clique_parallel_clean
from brushclean.constructions import phase_profile

for k in (0, 1, 2, 5, 10):
    w = theorem_config(k)
    r = is_one_clique_config(3 * k + 3, w, strict=True)
    print(f"k={k:2d} n={3 * k + 3:3d} S={sum(w):4d} 1-clique={r.verdict} peak={r.peak}")

# how many vertices get cleaned at each step
k = 12
print("phases for k=12:", clique_parallel_clean(3 * k + 3, theorem_config(k), mode="summary").rho_sizes)
print("predicted:      ", phase_profile(k))

# the sorted-prefix engine handles a clique of 10^5 vertices directly
k = 33332
t0 = time.perf_counter()
ok = is_one_clique_config(3 * k + 3, theorem_config(k)).verdict
print(f"K_{3 * k + 3}: {ok} in {time.perf_counter() - t0:.3f} s")
