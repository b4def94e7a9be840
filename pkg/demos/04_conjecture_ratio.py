"""
The ratio b/S along the all-3 chain
===================================

b(K_n) = floor(n^2/4) cleans once; S is the cost of the chain configuration,
which cleans forever.  The ratio settles near 7/12 > 9/16.
"""
from brushclean import CliqueChain, ratio_table
from brushclean.bounds import CONJECTURED_RATIO, LIMIT_COEFFICIENT, to_decimal

rows = ratio_table(CliqueChain(3, (3,) * 12))
print(" i          n   S/n^2           b/S")
for r in rows:
    print(f"{r.i:2d} {r.n:10d}   {to_decimal(r.s_ratio, 10)}  {to_decimal(r.b_over_s, 10)}")

gaps = [abs(r.s_ratio - LIMIT_COEFFICIENT) for r in rows]
print("gap ratios:", [round(float(b / a), 4) for a, b in zip(gaps, gaps[1:])])
print("above 9/16 everywhere:", all(r.b_over_s > CONJECTURED_RATIO for r in rows))
