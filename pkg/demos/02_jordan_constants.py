"""
Jordan constants of small groups
================================

``J_G`` is the largest value, over subgroups ``K``, of the least index of a
normal abelian subgroup of ``K``.
"""

import math
import time

from jordan_kit import constructions as C
from jordan_kit.analysis import jordan_constant, min_abelian_index, min_normal_abelian_index
from jordan_kit.bounds import collins_value

for n in range(3, 7):
    t0 = time.perf_counter()
    r = jordan_constant(C.symmetric(n))
    print(f"Sym{n}: J = {r.jordan_constant:>4}  classes {r.subgroup_class_count:>3}  ({time.perf_counter() - t0:.2f}s)")

# SL2(F5) realizes the value 60 of J(GL_2); the witness is its center {+1, -1}.
G = C.binary_icosahedral()
r = jordan_constant(G)
print("SL2(F5):", r.jordan_constant, "collins(2) =", collins_value(2).value)
print("witness abelian subgroup:", [G.label(x) for x in r.witness_abelian])

# Simple groups have no nontrivial normal abelian subgroup at all.
for n in (5, 6, 7):
    alpha, _ = min_normal_abelian_index(C.alternating(n))
    print(f"alpha(Alt{n}) = {alpha} = {n}!/2: {alpha == math.factorial(n) // 2}")

# Dropping normality can only lower the index.
for name, H in [("D8", C.dihedral(8)), ("Alt5", C.alternating(5)), ("SL2(F5)", G)]:
    print(name, "min abelian index", min_abelian_index(H), "<= alpha", min_normal_abelian_index(H)[0])
