"""Named group families, the Zarhin groups ``Q_K``, and declarative group specs."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Mapping, Sequence

import numpy as np

from . import config
from .errors import CapExceededError, SpecError
from .group import (
    FiniteGroup,
    Permutation,
    SubgroupSet,
    close_generators,
    direct_product,
    matrix_group_over_prime_field,
    semidirect_product,
)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("n", "cyclic order must be >= 1")
    _check_cap(n)
    ar = np.arange(n)
    return FiniteGroup(np.add.outer(ar, ar) % n, 0, (-ar) % n, tuple(f"{i}" for i in range(n)))


def dihedral(order: int) -> FiniteGroup:
    """Symmetries of a regular ``order/2``-gon, as ``C_{order/2} x| C_2`` by inversion."""
    if order < 2 or order % 2:
        raise SpecError("order", "dihedral order must be even and >= 2")
    _check_cap(order)
    m = order // 2
    ar = np.arange(m)
    return semidirect_product(cyclic(m), cyclic(2), [ar, (-ar) % m])


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("n", "symmetric degree must be >= 1")
    _check_cap(math.factorial(n))
    if n == 1:
        return close_generators([], degree=1)
    gens = [Permutation.from_cycles(n, [list(range(n))])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [[0, 1]]))
    return close_generators(gens)


def alternating(n: int) -> FiniteGroup:
    if n < 1:
        raise SpecError("n", "alternating degree must be >= 1")
    _check_cap(max(math.factorial(n) // 2, 1))
    if n < 3:
        return close_generators([], degree=n)
    gens = [Permutation.from_cycles(n, [[i, i + 1, i + 2]]) for i in range(n - 2)]
    return close_generators(gens)


def quaternion(order: int = 8) -> FiniteGroup:
    """Generalized quaternion group of 2-power order >= 8.

    Elements ``a^i x^j`` sit at index ``2i + j``; ``x a x^-1 = a^-1``, ``x^2 = a^(order/4)``.
    """
    if order < 8 or order & (order - 1):
        raise SpecError("order", "quaternion order must be a power of two >= 8")
    _check_cap(order)
    m2 = order // 2
    idx = np.arange(order)
    i, j = idx // 2, idx % 2
    sign = np.where(j == 1, -1, 1)
    ea = i[:, None] + sign[:, None] * i[None, :] + np.where((j[:, None] == 1) & (j[None, :] == 1), m2 // 2, 0)
    ej = (j[:, None] + j[None, :]) % 2
    table = (ea % m2) * 2 + ej
    inv = np.empty(order, dtype=np.int64)
    rows, cols = np.nonzero(table == 0)
    inv[rows] = cols
    labels = tuple(("a^%d" % a if a else "1") + ("x" if b else "") for a, b in zip(i, j))
    return FiniteGroup(table, 0, inv, labels)


def abelian(factors: Sequence[int]) -> FiniteGroup:
    """Direct sum of cyclic groups ``Z/d_1 + ... + Z/d_r`` under componentwise addition."""
    factors = [int(d) for d in factors]
    if any(d < 1 for d in factors):
        raise SpecError("factors", "cyclic factors must be >= 1")
    _check_cap(math.prod(factors))
    g = cyclic(1)
    for d in factors:
        g = direct_product(g, cyclic(d))
    comps = list(product(*[range(d) for d in factors])) if factors else [()]
    return FiniteGroup(g.table, g.identity, g.inverses, tuple(str(c) for c in comps))


def binary_icosahedral() -> FiniteGroup:
    """``SL_2(F_5)``, the order-120 double cover of ``Alt_5``.

    Over a characteristic-zero field this group is realised by the binary
    icosahedral subgroup of ``GL_2``; here it is only the abstract group.
    """
    return matrix_group_over_prime_field(2, 5, [[[1, 1], [0, 1]], [[0, 4], [1, 0]]])


def _check_cap(order: int) -> None:
    cap = config.closure_cap()
    if order > cap:
        raise CapExceededError("group order", cap)


# ---------------------------------------------------------------------------
# Zarhin groups


@dataclass(frozen=True)
class ZarhinParams:
    """Invariant factors ``d_1 | d_2 | ... | d_r`` (each >= 2) of a finite abelian ``K``."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        f = tuple(int(d) for d in self.invariant_factors)
        if not f:
            raise SpecError("factors", "at least one invariant factor is required")
        if any(d < 2 for d in f):
            raise SpecError("factors", "each invariant factor must be >= 2")
        if any(b % a for a, b in zip(f, f[1:])):
            raise SpecError("factors", "each invariant factor must divide the next")
        object.__setattr__(self, "invariant_factors", f)

    @property
    def n(self) -> int:
        """``|K|``."""
        return math.prod(self.invariant_factors)

    @property
    def m(self) -> int:
        """Exponent of ``K``."""
        return self.invariant_factors[-1]


def _zarhin_coords(p: ZarhinParams):
    """Element coordinates ``(e, g, a)`` in index order: ``e`` major, then ``g``, then ``a``."""
    ks = np.array(list(product(*[range(d) for d in p.invariant_factors])), dtype=np.int64)
    n = p.n
    e = np.repeat(np.arange(n), n * n)
    g = np.tile(np.repeat(ks, n, axis=0), (n, 1))
    a = np.tile(ks, (n * n, 1))
    return e, g, a, ks


def _radix(vecs: np.ndarray, factors: tuple[int, ...]) -> np.ndarray:
    out = np.zeros(len(vecs), dtype=np.int64) if vecs.ndim == 2 else 0
    for i, d in enumerate(factors):
        out = out * d + vecs[..., i]
    return out


def zarhin_group(params: ZarhinParams | Sequence[int]) -> FiniteGroup:
    """The finite group ``Q_K = mu_n x K x K^`` with the twisted product.

    ``(e, g, a)(e', g', a') = (e + e' + (n/m) <a', g>, g + g', a + a')`` where
    ``e`` is the exponent of a fixed primitive n-th root of unity and
    ``<a, g> = sum a_i g_i (m / d_i) mod m`` identifies ``K^`` with ``K``.
    """
    p = params if isinstance(params, ZarhinParams) else ZarhinParams(tuple(params))
    n, m, d = p.n, p.m, np.array(p.invariant_factors, dtype=np.int64)
    _check_cap(n**3)
    e, g, a, ks = _zarhin_coords(p)
    scale = m // d
    pair = ((g * scale) @ a.T) % m  # pair[x, y] = <a_y, g_x>
    e_new = (e[:, None] + e[None, :] + (n // m) * pair) % n
    g_new = _radix((g[:, None, :] + g[None, :, :]) % d, p.invariant_factors)
    a_new = _radix((a[:, None, :] + a[None, :, :]) % d, p.invariant_factors)
    table = (e_new * n + g_new) * n + a_new
    rows, cols = np.nonzero(table == 0)
    inv = np.empty(n**3, dtype=np.int64)
    inv[rows] = cols
    labels = tuple(
        f"({ei}; {','.join(map(str, gi))}; {','.join(map(str, ai))})" for ei, gi, ai in zip(e, g, a)
    )
    return FiniteGroup(table, 0, inv, labels)


def zarhin_index(params: ZarhinParams, e: int, g: Sequence[int], a: Sequence[int]) -> int:
    n = params.n
    gi = int(_radix(np.array(g, dtype=np.int64), params.invariant_factors))
    ai = int(_radix(np.array(a, dtype=np.int64), params.invariant_factors))
    return (e * n + gi) * n + ai


def zarhin_roots(G: FiniteGroup, params: ZarhinParams) -> SubgroupSet:
    """The subgroup ``{(e, 0, 0)}`` of roots of unity."""
    n = params.n
    return SubgroupSet(G, np.arange(n) * n * n, _trusted=True)


# ---------------------------------------------------------------------------
# specs

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "cyclic": ("n",),
    "dihedral": ("order",),
    "symmetric": ("n",),
    "alternating": ("n",),
    "quaternion": ("order",),
    "abelian": ("factors",),
    "binary_icosahedral": (),
    "zarhin": ("factors",),
    "direct_product": ("left", "right"),
}

SPEC_KINDS = ("family", "permutation", "matrix", "cayley")


@dataclass(frozen=True)
class GroupSpec:
    """Declarative recipe for a group.

    ``kind`` selects which fields matter: ``family`` uses ``family`` and
    ``params``; ``permutation`` uses ``degree`` and ``generators`` (each a list of
    cycles); ``matrix`` uses ``dim``, ``p`` and ``generators``; ``cayley`` uses ``table``.
    """

    kind: str
    family: str | None = None
    params: Mapping[str, Any] = field(default_factory=dict)
    degree: int | None = None
    dim: int | None = None
    p: int | None = None
    generators: tuple = ()
    table: tuple = ()

    def validate(self) -> None:
        if self.kind not in SPEC_KINDS:
            raise SpecError("kind", f"unknown kind {self.kind!r}")
        if self.kind == "family":
            if self.family not in FAMILY_PARAMS:
                raise SpecError("family", f"unknown family {self.family!r}")
            want = set(FAMILY_PARAMS[self.family])
            have = set(self.params)
            if want != have:
                raise SpecError("params", f"{self.family} takes {sorted(want)}, got {sorted(have)}")
            for k, v in self.params.items():
                if k in ("left", "right"):
                    if not isinstance(v, GroupSpec):
                        raise SpecError(f"params.{k}", "must be a nested spec")
                    v.validate()
                elif k == "factors":
                    if not isinstance(v, (list, tuple)) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
                        raise SpecError("params.factors", "must be a list of integers")
                elif not isinstance(v, int) or isinstance(v, bool):
                    raise SpecError(f"params.{k}", "must be an integer")
        elif self.kind == "permutation":
            if not isinstance(self.degree, int) or self.degree < 1:
                raise SpecError("degree", "must be a positive integer")
        elif self.kind == "matrix":
            if not isinstance(self.dim, int) or self.dim < 1:
                raise SpecError("dim", "must be a positive integer")
            if not isinstance(self.p, int) or self.p < 2:
                raise SpecError("p", "must be a prime")
        elif self.kind == "cayley":
            if not self.table:
                raise SpecError("table", "must be a non-empty square table")

    def summary(self) -> str:
        if self.kind == "family":
            parts = []
            for k in FAMILY_PARAMS[self.family]:
                v = self.params[k]
                if isinstance(v, GroupSpec):
                    parts.append(v.summary())
                elif isinstance(v, (list, tuple)):
                    parts.append(",".join(map(str, v)))
                else:
                    parts.append(str(v))
            if self.family == "direct_product":
                return f"({parts[0]})x({parts[1]})"
            return f"{self.family}({';'.join(parts)})"
        if self.kind == "permutation":
            return f"permutation(degree={self.degree}, gens={len(self.generators)})"
        if self.kind == "matrix":
            return f"matrix(dim={self.dim}, p={self.p}, gens={len(self.generators)})"
        return f"cayley(order={len(self.table)})"


def standard_family(name: str, **params) -> FiniteGroup:
    """Build a named family member, e.g. ``standard_family("symmetric", n=4)``."""
    spec = GroupSpec("family", name, params)
    return from_spec(spec)


def from_spec(spec: GroupSpec) -> FiniteGroup:
    spec.validate()
    if spec.kind == "family":
        p = spec.params
        f = spec.family
        if f == "cyclic":
            return cyclic(p["n"])
        if f == "dihedral":
            return dihedral(p["order"])
        if f == "symmetric":
            return symmetric(p["n"])
        if f == "alternating":
            return alternating(p["n"])
        if f == "quaternion":
            return quaternion(p["order"])
        if f == "abelian":
            return abelian(p["factors"])
        if f == "binary_icosahedral":
            return binary_icosahedral()
        if f == "zarhin":
            return zarhin_group(ZarhinParams(tuple(p["factors"])))
        if f == "direct_product":
            return direct_product(from_spec(p["left"]), from_spec(p["right"]))
        raise AssertionError(f)
    if spec.kind == "permutation":
        try:
            gens = [Permutation.from_cycles(spec.degree, cyc) for cyc in spec.generators]
        except (ValueError, TypeError) as exc:
            raise SpecError("generators", str(exc)) from None
        return close_generators(gens, degree=spec.degree)
    if spec.kind == "matrix":
        try:
            return matrix_group_over_prime_field(spec.dim, spec.p, spec.generators)
        except (ValueError, TypeError) as exc:
            raise SpecError("generators", str(exc)) from None
    try:
        return FiniteGroup.from_table(np.array(spec.table, dtype=np.int64))
    except ValueError as exc:
        raise SpecError("table", str(exc)) from None
