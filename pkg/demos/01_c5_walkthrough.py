"""
Cleaning a 5-cycle by hand
==========================

Two brushes on one vertex of C_5, cleaned in parallel and then one vertex
at a time.
"""
from brushclean import make_cycle, parallel_clean, sequential_clean, orbit_analyze

C5 = make_cycle(5)
start = (2, 0, 0, 0, 0)

# parallel: every dirty vertex with enough brushes fires at once
trace = parallel_clean(C5, start)
print(trace.to_text())
print()

# sequential: one primed vertex per step, lowest index first
trace_seq = sequential_clean(C5, start)
print("sequential K", trace_seq.K, "final", trace_seq.final_config)

# feed the final brushes back in and the graph no longer cleans
print("orbit:", orbit_analyze(C5, trace.final_config).describe())
