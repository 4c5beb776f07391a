"""
Closed-form bounds
==================

Exact integer tables: finite subgroups of GL_n(Z), Jordan constants of
GL_n over an algebraically closed field of characteristic zero, and the
symmetric-group lower bound.
"""

from jordan_kit.bounds import collins_value, minkowski_bound, symmetric_lower_bound
from jordan_kit.errors import NotTabulatedError

for n in range(1, 7):
    e = minkowski_bound(n)
    print(f"M({n}) = {e.value:>8}  = " + " * ".join(f"{p}^{d}" for p, d in e.prime_exponents.items()))

for n in [2, 3, 4, 5, 6, 10, 20, 21, 63, 64, 71]:
    try:
        c = collins_value(n)
        print(f"J(GL_{n}) = {c.value}  [{c.rule}]")
    except NotTabulatedError as exc:
        print(f"J(GL_{n}): {exc}")

for n in (4, 5, 6):
    print(f"(n+1)! = {symmetric_lower_bound(n).value} <= {collins_value(n).value}")
