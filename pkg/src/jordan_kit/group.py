"""Finite groups as Cayley tables, their subgroups, and the structural operations on them.

Elements are integer indices ``0 .. order-1``; labels are for display only.
All objects are immutable after construction.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

from . import config
from .errors import (
    ActionNotAutomorphismError,
    ActionNotHomomorphismError,
    CapExceededError,
    DegreeMismatchError,
    InvalidGroupError,
    NotAbelianError,
    NotInvertibleError,
    NotNormalError,
    NotSubgroupError,
)


def _index_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=_index_dtype(len(a)), copy=True)
    a.setflags(write=False)
    return a


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``{0, ..., degree-1}``; ``(p * q)(i) = p(q(i))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"not a permutation: {imgs}")
        if not imgs:
            raise ValueError("degree must be positive")
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(c) for c in cyc]
            for c in cyc:
                if not 0 <= c < degree or c in seen:
                    raise ValueError(f"bad cycle {cyc} for degree {degree}")
                seen.add(c)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    def __mul__(self, other: Permutation) -> Permutation:
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree}")
        return Permutation(tuple(self.images[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.degree
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        out, seen = [], set()
        for start in range(self.degree):
            if start in seen or self.images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


# ---------------------------------------------------------------------------
# groups


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """An exact finite group given by its multiplication table.

    ``table[a, b]`` is the index of ``a*b``. Use :meth:`from_table` to build one
    from untrusted data; the constructors in this package build valid tables
    directly.
    """

    table: np.ndarray
    identity: int
    inverses: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        t = np.array(self.table, dtype=_index_dtype(len(self.table)), copy=True)
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverses", _frozen(self.inverses))
        object.__setattr__(self, "identity", int(self.identity))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    # -- construction -------------------------------------------------------

    @classmethod
    def from_table(
        cls,
        table,
        labels: Sequence[str] | None = None,
        *,
        seed: int = config.DEFAULT_SEED,
    ) -> FiniteGroup:
        """Build a group from a square table, checking all axioms."""
        t = np.asarray(table)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InvalidGroupError("table must be a non-empty square matrix")
        n = t.shape[0]
        if not np.issubdtype(t.dtype, np.integer) or t.min() < 0 or t.max() >= n:
            raise InvalidGroupError("table entries must be element indices")
        ar = np.arange(n)
        ids = [i for i in range(n) if np.array_equal(t[i], ar) and np.array_equal(t[:, i], ar)]
        if not ids:
            raise InvalidGroupError("no two-sided identity")
        e = ids[0]
        rows, cols = np.nonzero(t == e)
        inverses = np.full(n, -1)
        inverses[rows] = cols
        if (inverses < 0).any() or len(rows) != n:
            raise InvalidGroupError("inverse law fails")
        if labels is not None and len(labels) != n:
            raise InvalidGroupError("labels length differs from order")
        g = cls(t, e, inverses, labels)
        g.validate(seed=seed)
        return g

    # -- basic access -------------------------------------------------------

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def label(self, a: int) -> str:
        return self.labels[a] if self.labels is not None else str(a)

    def power(self, a: int, k: int) -> int:
        k %= self.element_orders[a]
        x = self.identity
        for _ in range(k):
            x = int(self.table[x, a])
        return x

    def validate(self, *, seed: int = config.DEFAULT_SEED, cap: int = config.VALIDATION_CAP) -> None:
        """Check identity, inverse and associativity laws.

        Associativity is checked on every triple up to ``cap`` elements and on
        a seeded random sample of triples beyond.
        """
        t = self.table
        n = self.order
        ar = np.arange(n)
        e = self.identity
        if not (np.array_equal(t[e], ar) and np.array_equal(t[:, e], ar)):
            raise InvalidGroupError("identity law fails")
        if not (np.all(t[ar, self.inverses] == e) and np.all(t[self.inverses, ar] == e)):
            raise InvalidGroupError("inverse law fails")
        if n <= cap:
            for a in range(n):
                # (a*b)*c against a*(b*c) for all b, c
                if not np.array_equal(t[t[a]], t[a][t]):
                    raise InvalidGroupError(f"associativity fails at a={a}")
        else:
            rng = np.random.default_rng(seed)
            a, b, c = rng.integers(0, n, size=(3, config.SAMPLED_TRIPLES))
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise InvalidGroupError("associativity fails on a sampled triple")

    # -- derived data -------------------------------------------------------

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        orders[self.identity] = 1
        ar = np.arange(n)
        active = ar[ar != self.identity]
        cur = active.copy()
        k = 1
        while active.size:
            k += 1
            cur = self.table[cur, active]
            done = cur == self.identity
            orders[active[done]] = k
            active, cur = active[~done], cur[~done]
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*map(int, np.unique(self.element_orders)))

    def conjugates(self, x: int, by=None) -> np.ndarray:
        """``g x g^-1`` for every ``g`` in ``by`` (default: the whole group)."""
        g = np.arange(self.order) if by is None else np.asarray(by)
        return self.table[self.table[g, x], self.inverses[g]]

    def conjugate_set(self, members, by=None) -> np.ndarray:
        """Matrix ``C[i, j] = g_i m_j g_i^-1``."""
        g = np.arange(self.order) if by is None else np.asarray(by)
        m = np.asarray(members)
        return self.table[self.table[g[:, None], m[None, :]], self.inverses[g][:, None]]

    @cached_property
    def conj_table(self) -> np.ndarray:
        """``conj_table[g, x] = g x g^-1``; quadratic memory, only used by the lattice code."""
        c = self.conjugate_set(np.arange(self.order))
        c.setflags(write=False)
        return c

    @cached_property
    def conjugacy_classes(self) -> tuple[np.ndarray, ...]:
        """Conjugacy classes as sorted index arrays, ordered by least element."""
        n = self.order
        assigned = np.zeros(n, dtype=bool)
        out = []
        for x in range(n):
            if assigned[x]:
                continue
            cls = np.unique(self.conjugates(x))
            assigned[cls] = True
            cls.setflags(write=False)
            out.append(cls)
        return tuple(out)

    @cached_property
    def class_size_of(self) -> np.ndarray:
        sizes = np.zeros(self.order, dtype=np.int64)
        for cls in self.conjugacy_classes:
            sizes[cls] = len(cls)
        sizes.setflags(write=False)
        return sizes

    def centralizer_mask(self, x: int) -> np.ndarray:
        return self.table[x, :] == self.table[:, x]

    # -- subgroups ----------------------------------------------------------

    def whole(self) -> SubgroupSet:
        return SubgroupSet(self, np.arange(self.order), _trusted=True)

    def trivial(self) -> SubgroupSet:
        return SubgroupSet(self, [self.identity], _trusted=True)

    def subgroup(self, members: Iterable[int]) -> SubgroupSet:
        """Validated subgroup from an explicit member list."""
        return SubgroupSet(self, members)

    def generate(self, gens: Iterable[int]) -> SubgroupSet:
        gens = [int(g) for g in gens]
        mask = close_mask(self, gens)
        return SubgroupSet(self, np.flatnonzero(mask), _trusted=True, _gens=tuple(gens))

    def center(self) -> SubgroupSet:
        mask = np.all(self.table == self.table.T, axis=1)
        return SubgroupSet(self, np.flatnonzero(mask), _trusted=True)


def close_mask(G: FiniteGroup, gens: Sequence[int], start: np.ndarray | None = None) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``gens`` and the subgroup ``start``.

    ``start`` must be a subgroup mask whose generators are included in ``gens``.
    """
    n = G.order
    if start is None:
        mask = np.zeros(n, dtype=bool)
        mask[G.identity] = True
    else:
        mask = start.copy()
    frontier = np.flatnonzero(mask)
    g = np.asarray(list(gens), dtype=np.int64)
    if g.size == 0:
        return mask
    while frontier.size:
        prod = G.table[frontier[:, None], g[None, :]].ravel()
        prod = prod[~mask[prod]]
        if not prod.size:
            break
        new = np.unique(prod)
        mask[new] = True
        frontier = new
    return mask


class SubgroupSet:
    """A subgroup of ``parent``, stored as its strictly increasing member indices."""

    __slots__ = ("parent", "members", "_mask", "_gens", "_cache")

    def __init__(self, parent: FiniteGroup, members, *, _trusted: bool = False, _gens=None):
        m = np.unique(np.asarray(list(members) if not isinstance(members, np.ndarray) else members, dtype=np.int64))
        self.parent = parent
        self._gens = _gens
        self._cache: dict = {}
        if not _trusted:
            n = parent.order
            if m.size == 0 or m[0] < 0 or m[-1] >= n:
                raise NotSubgroupError("members must be a non-empty set of element indices")
            mask = np.zeros(n, dtype=bool)
            mask[m] = True
            if not mask[parent.identity]:
                raise NotSubgroupError("identity missing")
            if not mask[parent.inverses[m]].all():
                raise NotSubgroupError("not closed under inverses")
            if not mask[parent.table[m[:, None], m[None, :]]].all():
                raise NotSubgroupError("not closed under products")
        m = m.astype(_index_dtype(parent.order))
        m.setflags(write=False)
        self.members = m
        self._mask = None

    # -- container protocol ------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(int(x) for x in self.members)

    def __contains__(self, x) -> bool:
        return bool(self.mask[int(x)])

    @property
    def mask(self) -> np.ndarray:
        if self._mask is None:
            mask = np.zeros(self.parent.order, dtype=bool)
            mask[self.members] = True
            mask.setflags(write=False)
            self._mask = mask
        return self._mask

    @property
    def key(self) -> bytes:
        return self.members.astype(np.int32).tobytes()

    def __eq__(self, other) -> bool:
        if not isinstance(other, SubgroupSet):
            return NotImplemented
        return self.parent is other.parent and np.array_equal(self.members, other.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __repr__(self) -> str:
        return f"SubgroupSet(order={self.order}, index={self.index})"

    def as_tuple(self) -> tuple[int, ...]:
        return tuple(int(x) for x in self.members)

    # -- structure ------------------------------------------------------------

    @property
    def index(self) -> int:
        return self.parent.order // self.order

    def index_in(self, other: SubgroupSet) -> int:
        return other.order // self.order

    @property
    def gens(self) -> tuple[int, ...]:
        """A small generating set (greedy over descending element order)."""
        if self._gens is None:
            G = self.parent
            orders = G.element_orders[self.members]
            cand = self.members[np.argsort(-orders, kind="stable")]
            cur = np.zeros(G.order, dtype=bool)
            cur[G.identity] = True
            gens: list[int] = []
            for x in cand:
                if cur[x]:
                    continue
                gens.append(int(x))
                cur = close_mask(G, gens, cur)
                if cur.sum() == self.order:
                    break
            self._gens = tuple(gens)
        return self._gens

    def is_abelian(self) -> bool:
        if "abelian" not in self._cache:
            sub = self.parent.table[self.members[:, None], self.members[None, :]]
            self._cache["abelian"] = bool(np.array_equal(sub, sub.T))
        return self._cache["abelian"]

    def is_subgroup_of(self, other: SubgroupSet) -> bool:
        return bool(other.mask[self.members].all())

    def is_normal(self, ambient: SubgroupSet | FiniteGroup | None = None) -> bool:
        """Normal in ``ambient`` (default: the parent group)."""
        _ambient_members(self.parent, ambient)
        if self.order == 1:
            return True
        # conjugating by generators suffices
        src = ambient if isinstance(ambient, SubgroupSet) else self.parent.whole()
        g = np.asarray(src.gens, dtype=np.int64)
        if g.size == 0:
            return True
        c = self.parent.conjugate_set(self.members, by=g)
        return bool(self.mask[c].all())

    def normalizer(self, ambient: SubgroupSet | FiniteGroup | None = None) -> SubgroupSet:
        amb = _ambient_members(self.parent, ambient)
        c = self.parent.conjugate_set(self.members, by=amb)
        ok = self.mask[c].all(axis=1)
        return SubgroupSet(self.parent, amb[ok], _trusted=True)

    def conjugate(self, g: int) -> SubgroupSet:
        c = self.parent.conjugate_set(self.members, by=[g])[0]
        return SubgroupSet(self.parent, c, _trusted=True)

    def intersection(self, other: SubgroupSet) -> SubgroupSet:
        return SubgroupSet(self.parent, self.members[other.mask[self.members]], _trusted=True)

    def join(self, other: SubgroupSet) -> SubgroupSet:
        return self.parent.generate(tuple(self.gens) + tuple(other.gens))

    def as_group(self) -> tuple[FiniteGroup, np.ndarray]:
        """Relabel as a stand-alone group; returns it with the embedding (new index -> parent index)."""
        G = self.parent
        m = self.members.astype(np.int64)
        rank = np.full(G.order, -1, dtype=np.int64)
        rank[m] = np.arange(len(m))
        t = rank[G.table[m[:, None], m[None, :]]]
        inv = rank[G.inverses[m]]
        labels = tuple(G.labels[i] for i in m) if G.labels is not None else None
        emb = m.copy()
        emb.setflags(write=False)
        return FiniteGroup(t, int(rank[G.identity]), inv, labels), emb


def _ambient_members(parent: FiniteGroup, ambient) -> np.ndarray:
    if ambient is None or ambient is parent:
        return np.arange(parent.order)
    if isinstance(ambient, FiniteGroup):
        raise ValueError("ambient group must be the parent or one of its subgroups")
    if ambient.parent is not parent:
        raise ValueError("subgroups belong to different parent groups")
    return ambient.members.astype(np.int64)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True, eq=False)
class GroupHomomorphism:
    source: FiniteGroup
    target: FiniteGroup
    map: np.ndarray

    def __post_init__(self):
        m = np.array(self.map, dtype=np.int64, copy=True)
        if m.shape != (self.source.order,):
            raise ValueError("map length must equal the source order")
        m.setflags(write=False)
        object.__setattr__(self, "map", m)

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def is_homomorphism(self) -> bool:
        m = self.map
        lhs = m[self.source.table]
        rhs = self.target.table[m[:, None], m[None, :]]
        return bool(np.array_equal(lhs, rhs))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(np.unique(self.map)) == self.source.order

    def kernel(self) -> SubgroupSet:
        return SubgroupSet(self.source, np.flatnonzero(self.map == self.target.identity), _trusted=True)

    def image(self) -> SubgroupSet:
        return SubgroupSet(self.target, np.unique(self.map), _trusted=True)


# ---------------------------------------------------------------------------
# constructions by closure


def _close_and_tabulate(
    identity: Hashable,
    gens: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    cap: int,
) -> tuple[list, np.ndarray]:
    """BFS closure from the identity, generators applied in the given order.

    Returns the element list in BFS order and the full Cayley table. The
    table is filled column by column from the BFS tree: if ``j = p * g``
    then column ``j`` is column ``p`` pushed through right multiplication by ``g``.
    """
    elems = [identity]
    index = {identity: 0}
    right: list[list[int]] = [[] for _ in gens]
    parent = [(-1, -1)]
    i = 0
    while i < len(elems):
        x = elems[i]
        for k, g in enumerate(gens):
            y = mul(x, g)
            j = index.get(y)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise CapExceededError("closure size", cap)
                index[y] = j
                elems.append(y)
                parent.append((i, k))
            right[k].append(j)
        i += 1
    n = len(elems)
    dt = _index_dtype(n)
    table = np.empty((n, n), dtype=dt)
    table[:, 0] = np.arange(n)
    r = [np.asarray(col, dtype=np.int64) for col in right]
    for j in range(1, n):
        p, k = parent[j]
        table[:, j] = r[k][table[:, p]]
    return elems, table


def _group_from_closure(elems, table, labels) -> FiniteGroup:
    rows, cols = np.nonzero(table == 0)
    inv = np.empty(len(elems), dtype=np.int64)
    inv[rows] = cols
    return FiniteGroup(table, 0, inv, labels)


def close_generators(gens: Sequence[Permutation], degree: int | None = None, cap: int | None = None) -> FiniteGroup:
    """The permutation group generated by ``gens``, elements in canonical BFS order."""
    cap = config.closure_cap() if cap is None else cap
    gens = list(gens)
    if gens:
        degree = gens[0].degree if degree is None else degree
        if any(g.degree != degree for g in gens):
            raise DegreeMismatchError("generators have different degrees")
    degree = 1 if degree is None else degree
    ident = tuple(range(degree))
    gi = [g.images for g in gens]
    elems, table = _close_and_tabulate(ident, gi, lambda p, q: tuple(p[i] for i in q), cap)
    labels = tuple(str(Permutation(e)) for e in elems)
    return _group_from_closure(elems, table, labels)


def _det_mod_p(rows: list[list[int]], p: int) -> int:
    import sympy

    return int(sympy.Matrix(rows).det()) % p


def matrix_group_over_prime_field(dim: int, p: int, gens: Sequence, cap: int | None = None) -> FiniteGroup:
    """Abstract group generated by invertible ``dim x dim`` matrices over ``F_p``."""
    import sympy

    cap = config.closure_cap() if cap is None else cap
    if dim < 1:
        raise ValueError("dim must be positive")
    if not sympy.isprime(p):
        raise ValueError(f"{p} is not prime")
    mats = []
    for g in gens:
        rows = [[int(x) % p for x in row] for row in g]
        if len(rows) != dim or any(len(r) != dim for r in rows):
            raise ValueError(f"generator is not {dim}x{dim}")
        if _det_mod_p(rows, p) == 0:
            raise NotInvertibleError(f"generator {rows} is singular mod {p}")
        mats.append(tuple(tuple(r) for r in rows))
    ident = tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(dim)) % p for j in range(dim)) for i in range(dim)
        )

    elems, table = _close_and_tabulate(ident, mats, mul, cap)
    labels = tuple(str([list(r) for r in m]) for m in elems)
    return _group_from_closure(elems, table, labels)


def direct_product(G1: FiniteGroup, G2: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    """``G1 x G2`` with element ``(i, j)`` at index ``i*|G2| + j``."""
    cap = config.closure_cap() if cap is None else cap
    n1, n2 = G1.order, G2.order
    if n1 * n2 > cap:
        raise CapExceededError("product order", cap)
    t1 = G1.table.astype(np.int64)
    t2 = G2.table.astype(np.int64)
    t = (t1[:, None, :, None] * n2 + t2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    inv = (G1.inverses.astype(np.int64)[:, None] * n2 + G2.inverses.astype(np.int64)[None, :]).ravel()
    labels = None
    if G1.labels is not None or G2.labels is not None:
        labels = tuple(f"({G1.label(i)}, {G2.label(j)})" for i in range(n1) for j in range(n2))
    return FiniteGroup(t, G1.identity * n2 + G2.identity, inv, labels)


def direct_factors(G1: FiniteGroup, G2: FiniteGroup, product: FiniteGroup) -> tuple[SubgroupSet, SubgroupSet]:
    """The copies of ``G1`` and ``G2`` inside ``direct_product(G1, G2)``."""
    n2 = G2.order
    a = np.arange(G1.order) * n2 + G2.identity
    b = G1.identity * n2 + np.arange(n2)
    return SubgroupSet(product, a, _trusted=True), SubgroupSet(product, b, _trusted=True)


def semidirect_product(N: FiniteGroup, H: FiniteGroup, action, cap: int | None = None) -> FiniteGroup:
    """``N x| H`` with ``(n, h)(n', h') = (n * action[h](n'), h h')``.

    ``action[h]`` is a permutation of N's indices that must be an automorphism,
    and ``h -> action[h]`` must be a homomorphism. Element ``(n, h)`` has index
    ``n*|H| + h``.
    """
    cap = config.closure_cap() if cap is None else cap
    nN, nH = N.order, H.order
    if nN * nH > cap:
        raise CapExceededError("product order", cap)
    act = np.asarray(action, dtype=np.int64)
    if act.shape != (nH, nN):
        raise ActionNotAutomorphismError(f"action must have shape ({nH}, {nN})")
    tN = N.table.astype(np.int64)
    for h in range(nH):
        row = act[h]
        if sorted(row.tolist()) != list(range(nN)):
            raise ActionNotAutomorphismError(f"action of {h} is not a bijection")
        if not np.array_equal(row[tN], tN[row[:, None], row[None, :]]):
            raise ActionNotAutomorphismError(f"action of {h} is not an automorphism")
    tH = H.table.astype(np.int64)
    # action[h h'] == action[h] o action[h']
    if not np.array_equal(act[tH], act[np.arange(nH)[:, None, None], act[None, :, :]]):
        raise ActionNotHomomorphismError("action is not a homomorphism")
    first = tN[np.arange(nN)[:, None, None], act[None, :, :]]  # [n, h, n'] = n * act[h](n')
    t = (first[:, :, :, None] * nH + tH[None, :, None, :]).reshape(nN * nH, nN * nH)
    ident = N.identity * nH + H.identity
    rows, cols = np.nonzero(t == ident)
    inv = np.empty(nN * nH, dtype=np.int64)
    inv[rows] = cols
    return FiniteGroup(t, ident, inv)


def semidirect_parts(N: FiniteGroup, H: FiniteGroup, product: FiniteGroup) -> tuple[SubgroupSet, SubgroupSet]:
    """The normal copy of ``N`` and the complement copy of ``H`` inside ``N x| H``."""
    nH = H.order
    a = np.arange(N.order) * nH + H.identity
    b = N.identity * nH + np.arange(nH)
    return SubgroupSet(product, a, _trusted=True), SubgroupSet(product, b, _trusted=True)


def relabel(G: FiniteGroup, perm: Sequence[int]) -> FiniteGroup:
    """Isomorphic copy where old element ``i`` becomes ``perm[i]``."""
    p = np.asarray(perm, dtype=np.int64)
    if sorted(p.tolist()) != list(range(G.order)):
        raise ValueError("perm must be a permutation of the element indices")
    t = np.empty_like(G.table, dtype=np.int64)
    t[p[:, None], p[None, :]] = p[G.table.astype(np.int64)]
    inv = np.empty(G.order, dtype=np.int64)
    inv[p] = p[G.inverses.astype(np.int64)]
    labels = None
    if G.labels is not None:
        labels = [""] * G.order
        for i, j in enumerate(p):
            labels[j] = G.labels[i]
    return FiniteGroup(t, int(p[G.identity]), inv, labels)


# ---------------------------------------------------------------------------
# quotients, cores, conjugate intersections


def quotient_group(G: FiniteGroup, N: SubgroupSet) -> tuple[FiniteGroup, GroupHomomorphism]:
    """``G/N`` on cosets, each named by its least member; cosets ordered by that member."""
    if N.parent is not G:
        raise NotSubgroupError("N is not a subgroup of G")
    if not N.is_normal():
        raise NotNormalError("N is not normal in G")
    rep_of = G.table[:, N.members].min(axis=1).astype(np.int64)
    reps = np.unique(rep_of)
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[reps] = np.arange(len(reps))
    proj = pos[rep_of]
    t = proj[G.table[reps[:, None], reps[None, :]]]
    inv = proj[G.inverses[reps]]
    labels = tuple(G.label(int(r)) + "N" for r in reps) if G.labels is not None else None
    Q = FiniteGroup(t, int(proj[G.identity]), inv, labels)
    return Q, GroupHomomorphism(G, Q, proj)


def normal_core(P: FiniteGroup | SubgroupSet, Q: SubgroupSet) -> SubgroupSet:
    """Intersection of all ``g Q g^-1`` for ``g`` in ``P``; cross-checked against the coset action kernel."""
    G = Q.parent
    amb = _ambient_members(G, P)
    if isinstance(P, SubgroupSet) and not Q.is_subgroup_of(P):
        raise NotSubgroupError("Q is not contained in P")
    core = _intersect_all_conjugates(G, Q, amb)
    other = core_by_coset_action(P, Q)
    if core != other:
        raise AssertionError("normal core disagrees with coset-action kernel")
    return core


def _intersect_all_conjugates(G: FiniteGroup, A: SubgroupSet, by: np.ndarray) -> SubgroupSet:
    c = G.conjugate_set(A.members, by=by)
    counts = np.bincount(c.ravel().astype(np.int64), minlength=G.order)
    return SubgroupSet(G, np.flatnonzero(counts == len(by)), _trusted=True)


def core_by_coset_action(P: FiniteGroup | SubgroupSet, Q: SubgroupSet) -> SubgroupSet:
    """Kernel of the action of ``P`` on the left cosets ``pQ``."""
    G = Q.parent
    amb = _ambient_members(G, P)
    coset_id = G.table[:, Q.members].min(axis=1)
    reps = np.unique(coset_id[amb])
    moved = coset_id[G.table[amb[:, None], reps[None, :]]]
    fixed = (moved == coset_id[reps][None, :]).all(axis=1)
    return SubgroupSet(G, amb[fixed], _trusted=True)


def intersect_conjugates(F: FiniteGroup | SubgroupSet, A: SubgroupSet, L: SubgroupSet) -> SubgroupSet:
    """``M``: the intersection of ``g A g^-1`` over ``g`` in ``F``.

    Requires ``A`` normal abelian in ``L`` and ``L`` normal in ``F``. The result
    is checked to be abelian, normal in ``F``, with ``[L:M] <= [L:A]^[F:L]``.
    """
    G = A.parent
    if L.parent is not G:
        raise NotSubgroupError("A and L belong to different groups")
    amb = _ambient_members(G, F)
    f_mask = np.zeros(G.order, dtype=bool)
    f_mask[amb] = True
    if not A.is_subgroup_of(L):
        raise NotSubgroupError("A is not contained in L")
    if not f_mask[L.members].all():
        raise NotSubgroupError("L is not contained in F")
    if not A.is_abelian():
        raise NotAbelianError("A is not abelian")
    if not A.is_normal(L):
        raise NotNormalError("A is not normal in L")
    F_sub = F if isinstance(F, SubgroupSet) else G.whole()
    if not L.is_normal(F_sub):
        raise NotNormalError("L is not normal in F")
    M = _intersect_all_conjugates(G, A, amb)
    if not (M.is_abelian() and M.is_normal(F_sub) and M.is_subgroup_of(L)):
        raise AssertionError("conjugate intersection lost abelian/normal property")
    if M.index_in(L) > A.index_in(L) ** (len(amb) // L.order):
        raise AssertionError("conjugate intersection index bound violated")
    return M


def intersect_coset_conjugates(F: FiniteGroup | SubgroupSet, A: SubgroupSet, L: SubgroupSet) -> SubgroupSet:
    """Same intersection as :func:`intersect_conjugates`, over one representative per coset of ``L`` in ``F``."""
    G = A.parent
    amb = _ambient_members(G, F)
    coset_id = G.table[amb[:, None], L.members[None, :]].min(axis=1)
    _, first = np.unique(coset_id, return_index=True)
    return _intersect_all_conjugates(G, A, amb[np.sort(first)])


# ---------------------------------------------------------------------------
# structure


@dataclass(frozen=True)
class StructureReport:
    order: int
    is_abelian: bool
    center: SubgroupSet
    exponent: int
    element_orders: Counter = field(compare=False)


def structure_report(G: FiniteGroup) -> StructureReport:
    return StructureReport(
        order=G.order,
        is_abelian=G.is_abelian,
        center=G.center(),
        exponent=G.exponent,
        element_orders=Counter(int(x) for x in G.element_orders),
    )


# ---------------------------------------------------------------------------
# isomorphisms and automorphisms


def _invariants(G: FiniteGroup) -> np.ndarray:
    return G.element_orders * (G.order + 1) + G.class_size_of


def _pruning_generators(G: FiniteGroup, rarity: dict[int, int]) -> list[int]:
    inv = _invariants(G)
    cand = sorted(range(G.order), key=lambda x: (rarity.get(int(inv[x]), 0), -int(G.element_orders[x]), x))
    cur = np.zeros(G.order, dtype=bool)
    cur[G.identity] = True
    gens: list[int] = []
    for x in cand:
        if cur[x]:
            continue
        gens.append(x)
        cur = close_mask(G, gens, cur)
        if cur.all():
            break
    return gens


def _iso_search(G1: FiniteGroup, G2: FiniteGroup, *, find_all: bool, budget: int, limit: int | None):
    """Backtracking over images of a generating set of ``G1``.

    Maps are extended along right-multiplication edges of the Cayley graph;
    any inconsistent edge, collision, or invariant mismatch prunes the branch.
    Yields each complete isomorphism as a list.
    """
    n = G1.order
    if n != G2.order:
        return
    inv1, inv2 = _invariants(G1), _invariants(G2)
    if sorted(inv1.tolist()) != sorted(inv2.tolist()):
        return
    rarity = Counter(inv2.tolist())
    gens = _pruning_generators(G1, rarity)
    by_inv: dict[int, list[int]] = {}
    for y in range(n):
        by_inv.setdefault(int(inv2[y]), []).append(y)
    cands = [by_inv[int(inv1[g])] for g in gens]
    T1 = G1.table.tolist()
    T2 = G2.table.tolist()
    i1, i2 = inv1.tolist(), inv2.tolist()
    phi = [-1] * n
    used = [False] * n
    phi[G1.identity] = G2.identity
    used[G2.identity] = True
    mapped = [G1.identity]
    gimg = [-1] * len(gens)
    steps = 0
    found = 0

    def extend(k: int) -> list[int] | None:
        """Close the map under gens[:k+1]; return newly assigned elements or None on conflict."""
        g, h = gens[k], gimg[k]
        added: list[int] = []

        def assign(x: int, y: int) -> bool:
            cur = phi[x]
            if cur >= 0:
                return cur == y
            if used[y] or i1[x] != i2[y]:
                return False
            phi[x] = y
            used[y] = True
            added.append(x)
            return True

        ok = True
        for x in list(mapped):
            if not assign(T1[x][g], T2[phi[x]][h]):
                ok = False
                break
        i = 0
        while ok and i < len(added):
            x = added[i]
            i += 1
            for j in range(k + 1):
                if not assign(T1[x][gens[j]], T2[phi[x]][gimg[j]]):
                    ok = False
                    break
        if not ok:
            for x in added:
                used[phi[x]] = False
                phi[x] = -1
            return None
        return added

    def rec(k: int):
        nonlocal steps, found
        if k == len(gens):
            if len(mapped) == n:
                found += 1
                yield list(phi)
            return
        for h in cands[k]:
            steps += 1
            if steps > budget:
                raise CapExceededError("isomorphism search steps", budget)
            if used[h] and phi[gens[k]] != h:
                continue
            gimg[k] = h
            added = extend(k)
            if added is None:
                continue
            mapped.extend(added)
            yield from rec(k + 1)
            del mapped[len(mapped) - len(added):]
            for x in added:
                used[phi[x]] = False
                phi[x] = -1
            if not find_all and found:
                return
            if limit is not None and found > limit:
                raise CapExceededError("automorphism count", limit)

    yield from rec(0)


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup, budget: int = config.SEARCH_BUDGET) -> GroupHomomorphism | None:
    """A bijective homomorphism ``G1 -> G2``, or ``None`` if the groups are not isomorphic."""
    for phi in _iso_search(G1, G2, find_all=False, budget=budget, limit=None):
        return GroupHomomorphism(G1, G2, phi)
    return None


def are_isomorphic(G1: FiniteGroup, G2: FiniteGroup, budget: int = config.SEARCH_BUDGET) -> bool:
    return find_isomorphism(G1, G2, budget) is not None


def automorphisms(H: FiniteGroup, cap: int | None = None, budget: int = config.SEARCH_BUDGET) -> list[tuple[int, ...]]:
    """All automorphisms of ``H`` as image tuples, in search order."""
    if H.order > config.AUTOMORPHISM_CAP:
        raise CapExceededError("automorphism source order", config.AUTOMORPHISM_CAP)
    cap = config.closure_cap() if cap is None else cap
    return [tuple(p) for p in _iso_search(H, H, find_all=True, budget=budget, limit=cap)]


def automorphism_group(H: FiniteGroup, cap: int | None = None) -> FiniteGroup:
    """``Aut(H)`` as a permutation group on the element indices of ``H``."""
    autos = automorphisms(H, cap)
    gens: list[Permutation] = []
    have: set[tuple[int, ...]] = {tuple(range(H.order))}
    for a in autos:
        if a in have:
            continue
        gens.append(Permutation(a))
        have = _closure_set(gens)
    G = close_generators(gens, degree=H.order, cap=max(len(autos), 1))
    if G.order != len(autos):
        raise AssertionError("automorphisms do not close to a group of the expected order")
    return G


def _closure_set(gens: list[Permutation]) -> set[tuple[int, ...]]:
    ident = tuple(range(gens[0].degree))
    seen = {ident}
    frontier = [ident]
    gi = [g.images for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gi:
                y = tuple(x[i] for i in g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
