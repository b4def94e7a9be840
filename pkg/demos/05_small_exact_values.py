"""
Exact values on tiny cliques
============================
"""
from brushclean import exact_brush_number, exact_cpb_clique, make_clique
from brushclean.constructions import decompose

for n in range(1, 6):
    b = exact_brush_number(make_clique(n))
    cpb = exact_cpb_clique(n, 20)
    print(f"K_{n}: b={b.minimum} {b.witness}   cpb={cpb.minimum} {cpb.witness}   chain S={decompose(n).costs[-1]}")
