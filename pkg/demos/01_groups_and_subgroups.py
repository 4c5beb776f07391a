"""
Groups as Cayley tables
=======================

Every group in the package is a numpy multiplication table. Elements are
plain indices; labels are only for printing.
"""

import numpy as np

from jordan_kit import constructions as C
from jordan_kit.analysis import enumerate_normal_subgroups, enumerate_subgroup_classes
from jordan_kit.group import (
    Permutation,
    close_generators,
    find_isomorphism,
    normal_core,
    quotient_group,
    structure_report,
)

# Close two permutations into Sym4.
G = close_generators([Permutation.from_cycles(4, [(0, 1, 2, 3)]), Permutation.from_cycles(4, [(0, 1)])])
print("order", G.order, "first labels", G.labels[:4])
print(structure_report(G))

# Subgroups up to conjugacy, with the size of each class.
for c in enumerate_subgroup_classes(G):
    print(f"order {c.representative.order:>2}  class size {c.class_size}  normal={c.is_normal}  abelian={c.is_abelian}")

# The Klein four-group is normal; the quotient has order 6 and is Sym3.
V = next(N for N in enumerate_normal_subgroups(G) if N.order == 4)
Q, proj = quotient_group(G, V)
print("Sym4/V4 isomorphic to Sym3:", find_isomorphism(Q, C.symmetric(3)) is not None)

# The core of a point stabilizer is trivial: Sym4 acts faithfully on 4 points.
stab = next(c.representative for c in enumerate_subgroup_classes(G) if c.representative.order == 6)
print("core of a Sym3 inside Sym4 has order", normal_core(G, stab).order)

# Tables can be handed in directly; all axioms are checked.
from jordan_kit import FiniteGroup

Z5 = FiniteGroup.from_table(np.add.outer(np.arange(5), np.arange(5)) % 5)
print("Z/5 abelian:", Z5.is_abelian, "exponent", Z5.exponent)
