"""
Heisenberg-type groups with large abelian index
===============================================

For a finite abelian ``K`` of order ``n`` the group ``Q_K`` of order ``n**3``
has no abelian subgroup of index below ``n``. Growing ``K`` makes the
abelian index unbounded.
"""

from jordan_kit import constructions as C
from jordan_kit.analysis import min_abelian_index
from jordan_kit.group import are_isomorphic, quotient_group
from jordan_kit.theorems import run_zarhin_suite

p = C.ZarhinParams((2, 2))
G = C.zarhin_group(p)
mu = C.zarhin_roots(G, p)
print("order", G.order, "center is the roots of unity:", G.center() == mu)
Q, _ = quotient_group(G, mu)
print("Q/mu is K x K:", are_isomorphic(Q, C.abelian((2, 2, 2, 2))))
print("min abelian index", min_abelian_index(G), ">= |K| =", p.n)

for r in run_zarhin_suite(8):
    c = r.computed
    print(f"{r.inputs[0]:<14} order {c['order']:>3}  min abelian index {c['min_abelian_index']:>2}  passed={r.passed}")
