"""
Growing configurations by lifting
=================================

Every lift takes a 1-clique configuration on K_n to one on K_{3n+d}.
"""
from brushclean import CliqueChain, build_chain, decompose, is_one_clique_config

chain = CliqueChain.parse("1,2,3,3")
built = build_chain(chain)
for n, S, w in zip(chain.orders, chain.costs, built.configs):
    print(n, S, is_one_clique_config(n, w).verdict, w if n < 15 else "...")

# any order can be reached from a base of size 1, 2 or 3
for n in (4, 5, 10, 100, 1000):
    c = decompose(n)
    print(f"n={n}: base {c.n0}, digits {c.digits}, S={c.costs[-1]}")
