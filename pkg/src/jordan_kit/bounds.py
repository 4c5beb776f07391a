"""Exact closed-form bounds: Minkowski/Schur, Collins' values of J for GL_n, and (n+1)!.

All values are Python integers; nothing here touches floating point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import primerange

from .errors import NotApplicableError, NotTabulatedError

RULES = ("minkowski-product", "collins-small-n", "collins-60r", "collins-factorial", "symmetric-lower")

# Multiplicative bound for finite subgroups of the plane Cremona group, kept as a constant only.
SERRE_CREMONA2_MULTIPLICATIVE_BOUND = 2**10 * 3**4 * 5**2 * 7

_COLLINS_SMALL = {2: 60, 3: 360, 4: 25920, 5: 25920, 6: 6531840}


@dataclass(frozen=True)
class BoundEntry:
    n: int
    value: int
    rule: str
    prime_exponents: dict[int, int] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.rule not in RULES:
            raise ValueError(f"unknown rule {self.rule!r}")
        if self.rule == "minkowski-product":
            if self.prime_exponents is None or math.prod(p**d for p, d in self.prime_exponents.items()) != self.value:
                raise ValueError("minkowski entry must store exponents multiplying to its value")


def minkowski_bound(n: int) -> BoundEntry:
    """Upper bound for the order of a finite subgroup of ``GL_n(Z)``.

    Product of ``p**d_p`` over primes with ``n // (p - 1) > 0``, where
    ``d_p = sum_{i >= 0} n // (p**i * (p - 1))``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    exps: dict[int, int] = {}
    for p in primerange(2, n + 2):
        d, q = 0, p - 1
        while n // q:
            d += n // q
            q *= p
        exps[p] = d
    return BoundEntry(n, math.prod(p**d for p, d in exps.items()), "minkowski-product", exps)


def collins_value(n: int) -> BoundEntry:
    """Jordan constant of ``GL_n`` over an algebraically closed field of characteristic 0.

    Raises NotTabulatedError for ``7 <= n <= 19``, whose values are not
    reproduced here.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if n in _COLLINS_SMALL:
        return BoundEntry(n, _COLLINS_SMALL[n], "collins-small-n")
    if 7 <= n <= 19:
        raise NotTabulatedError(f"J(GL_{n}) is not tabulated in source")
    if n >= 71 or n in (63, 65, 67, 69):
        return BoundEntry(n, math.factorial(n + 1), "collins-factorial")
    r = n // 2
    return BoundEntry(n, 60**r * math.factorial(r), "collins-60r")


def symmetric_lower_bound(n: int) -> BoundEntry:
    """``(n+1)!``, a lower bound for ``J(GL_n)`` when ``n >= 4``."""
    if n < 4:
        raise NotApplicableError("the (n+1)! lower bound is stated for n >= 4")
    return BoundEntry(n, math.factorial(n + 1), "symmetric-lower")
