"""
Executable inequality checks
============================

Each check computes both sides independently and keeps every quantity in a
record, so the verdict can be recomputed later.
"""

from collections import Counter

from jordan_kit import constructions as C
from jordan_kit.analysis import enumerate_normal_subgroups
from jordan_kit.theorems import (
    CorpusEntry,
    check_centerless_bound,
    check_extension_bound,
    intersection_records,
    run_suite,
)

G = C.symmetric(4)
for H in enumerate_normal_subgroups(G):
    r = check_extension_bound(G, H, name="Sym4")
    print(f"H of order {H.order:>2}: J_G={r.computed['J_G']} bound={r.computed['bound']} passed={r.passed}")

A4 = next(N for N in enumerate_normal_subgroups(G) if N.order == 12)
r = check_centerless_bound(G, A4, name="Sym4")
print("centerless bound with H = Alt4:", r.computed)

V = next(N for N in enumerate_normal_subgroups(G) if N.order == 4)
for k in intersection_records(G, V, name="Sym4")[:5]:
    print(k.inputs[2][:20], {x: k.computed[x] for x in ("index_L_M", "index_bound", "M_abelian")})

corpus = [CorpusEntry("D8", C.dihedral(8)), CorpusEntry("Q8", C.quaternion(8)), CorpusEntry("Alt4", C.alternating(4))]
records = run_suite(corpus, workers=2)
print(Counter((r.check_id, "skip" if r.skipped else r.passed) for r in records))
