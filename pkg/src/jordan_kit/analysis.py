"""Subgroup structure and Jordan constants of finite groups."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import CapExceededError
from .group import FiniteGroup, SubgroupSet, are_isomorphic, close_mask


@dataclass(frozen=True, eq=False)
class SubgroupClass:
    representative: SubgroupSet
    class_size: int
    is_normal: bool
    is_abelian: bool


@dataclass(frozen=True, eq=False)
class AnalysisReport:
    jordan_constant: int
    bound_constant: int
    witness_subgroup: SubgroupSet
    witness_abelian: SubgroupSet
    subgroup_class_count: int
    elapsed: float


def _lex_key(members) -> tuple[int, ...]:
    return tuple(int(x) for x in members)


# ---------------------------------------------------------------------------
# full lattice up to conjugacy


def enumerate_subgroup_classes(G: FiniteGroup, cap: int = config.LATTICE_CAP) -> list[SubgroupClass]:
    """One representative per conjugacy class of subgroups, ordered by (order, members).

    Each class is grown from a known class representative ``H`` by adjoining
    one element ``g``. Every subgroup is reachable this way from a conjugate
    of a smaller one, so processing class representatives is enough. The
    candidates ``g`` are thinned out: ``<H, g>`` only depends on the coset
    ``Hg`` and the cyclic group ``<g>``, and normalizer-conjugate choices give
    conjugate results.

    The representative of each class is its lexicographically least sorted
    member sequence.
    """
    n = G.order
    if n > cap:
        raise CapExceededError("lattice group order", cap)
    conj = G.conj_table.astype(np.int64)
    table = G.table.astype(np.int64)
    e = G.identity
    orders = G.element_orders

    coprime_powers: dict[int, np.ndarray] = {}

    def generators_of_cyclic(g: int) -> np.ndarray:
        # all generators of <g>
        if g not in coprime_powers:
            k = int(orders[g])
            pw = [e]
            for _ in range(k - 1):
                pw.append(int(table[pw[-1], g]))
            coprime_powers[g] = np.array([pw[i] for i in range(1, k + 1) if np.gcd(i, k) == 1 or k == 1], dtype=np.int64)
        return coprime_powers[g]

    seen: dict[bytes, int] = {}
    classes: list[tuple[np.ndarray, tuple[int, ...], int]] = []

    def register(mask: np.ndarray, gens: tuple[int, ...]) -> None:
        members = np.flatnonzero(mask)
        rows = np.sort(conj[:, members], axis=1)
        order = np.lexsort(rows.T[::-1])
        rows = rows[order]
        keep = np.ones(len(rows), dtype=bool)
        keep[1:] = (rows[1:] != rows[:-1]).any(axis=1)
        distinct = rows[keep]
        idx = len(classes)
        for r in distinct:
            seen[r.astype(np.int32).tobytes()] = idx
        g_min = int(order[0])
        rep_gens = tuple(int(conj[g_min, x]) for x in gens)
        classes.append((distinct[0], rep_gens, len(distinct)))

    trivial = np.zeros(n, dtype=bool)
    trivial[e] = True
    register(trivial, ())
    head = 0
    while head < len(classes):
        rep, gens, _ = classes[head]
        head += 1
        h_mask = np.zeros(n, dtype=bool)
        h_mask[rep] = True
        norm = np.flatnonzero(h_mask[conj[:, rep]].all(axis=1))
        done = h_mask.copy()
        for g in range(n):
            if done[g]:
                continue
            coset = table[rep[:, None], generators_of_cyclic(g)[None, :]].ravel()
            done[conj[norm[:, None], coset[None, :]].ravel()] = True
            k_mask = close_mask(G, gens + (g,), h_mask)
            key = np.flatnonzero(k_mask).astype(np.int32).tobytes()
            if key not in seen:
                register(k_mask, gens + (g,))

    out = []
    for members, gens, size in classes:
        sub = SubgroupSet(G, members, _trusted=True, _gens=gens)
        out.append(SubgroupClass(sub, size, size == 1, sub.is_abelian()))
    out.sort(key=lambda c: (c.representative.order, _lex_key(c.representative.members)))
    return out


# ---------------------------------------------------------------------------
# normal subgroups


def enumerate_normal_subgroups(
    G: FiniteGroup, cap: int = config.NORMAL_LATTICE_CAP, abelian_only: bool = False
) -> list[SubgroupSet]:
    """All normal subgroups, ordered by (order, members).

    Built from the normal closures of single conjugacy classes, closed under
    products ``NM``. With ``abelian_only`` only abelian products are kept,
    which still reaches every normal abelian subgroup since all its
    intermediate joins lie inside it.
    """
    n = G.order
    if n > cap:
        raise CapExceededError("normal-lattice group order", cap)
    table = G.table.astype(np.int64)

    def is_abelian(members: np.ndarray) -> bool:
        sub = table[members[:, None], members[None, :]]
        return bool(np.array_equal(sub, sub.T))

    closures: dict[bytes, np.ndarray] = {}
    for cls in G.conjugacy_classes:
        if cls[0] == G.identity and len(cls) == 1:
            continue
        members = np.flatnonzero(close_mask(G, cls.astype(np.int64)))
        if abelian_only and not is_abelian(members):
            continue
        closures.setdefault(members.astype(np.int32).tobytes(), members)
    base = list(closures.values())

    found: dict[bytes, np.ndarray] = {}
    triv = np.array([G.identity], dtype=np.int64)
    found[triv.astype(np.int32).tobytes()] = triv
    for b in base:
        found.setdefault(b.astype(np.int32).tobytes(), b)
    work = list(found.values())
    i = 0
    while i < len(work):
        N = work[i]
        i += 1
        n_mask = np.zeros(n, dtype=bool)
        n_mask[N] = True
        for C in base:
            if n_mask[C].all():
                continue
            prod = np.unique(table[N[:, None], C[None, :]])
            key = prod.astype(np.int32).tobytes()
            if key in found:
                continue
            if abelian_only and not is_abelian(prod):
                continue
            found[key] = prod
            work.append(prod)
    subs = [SubgroupSet(G, m, _trusted=True) for m in found.values()]
    subs.sort(key=lambda s: (s.order, _lex_key(s.members)))
    return subs


def min_normal_abelian_index(G: FiniteGroup, cap: int = config.NORMAL_LATTICE_CAP) -> tuple[int, SubgroupSet]:
    """Least index of a normal abelian subgroup, with the largest such subgroup as witness."""
    if G.is_abelian:
        return 1, G.whole()
    cands = enumerate_normal_subgroups(G, cap, abelian_only=True)
    best = max(c.order for c in cands)
    witness = min((c for c in cands if c.order == best), key=lambda c: _lex_key(c.members))
    return G.order // best, witness


def min_abelian_index(G: FiniteGroup, cap: int = config.LATTICE_CAP) -> int:
    """Least index of any abelian subgroup (normal or not).

    Depth-first search over abelian subgroups containing the center, always
    adjoining an element of the current centralizer; a branch is cut once its
    centralizer cannot beat the best order found.
    """
    n = G.order
    if n > cap:
        raise CapExceededError("lattice group order", cap)
    if G.is_abelian:
        return 1
    table = G.table.astype(np.int64)
    orders = G.element_orders
    cent_cache: dict[int, np.ndarray] = {}

    def cent(x: int) -> np.ndarray:
        if x not in cent_cache:
            cent_cache[x] = G.centralizer_mask(x)
        return cent_cache[x]

    Z = G.center()
    best = Z.order
    visited: set[bytes] = set()

    def powers_coprime(x: int) -> list[int]:
        k = int(orders[x])
        out, y = [], x
        for i in range(1, k + 1):
            if np.gcd(i, k) == 1:
                out.append(y)
            y = int(table[y, x])
        return out

    def dfs(a_mask: np.ndarray, c_mask: np.ndarray, gens: tuple[int, ...]) -> None:
        nonlocal best
        size = int(a_mask.sum())
        best = max(best, size)
        if int(c_mask.sum()) <= best:
            return
        done = a_mask.copy()
        members = np.flatnonzero(a_mask)
        for x in np.flatnonzero(c_mask & ~a_mask):
            x = int(x)
            if done[x]:
                continue
            done[table[members[:, None], np.array(powers_coprime(x))[None, :]].ravel()] = True
            b_mask = close_mask(G, gens + (x,), a_mask)
            key = np.packbits(b_mask).tobytes()
            if key in visited:
                continue
            visited.add(key)
            c_new = c_mask & cent(x)
            if int(c_new.sum()) > best or int(b_mask.sum()) > best:
                dfs(b_mask, c_new, gens + (x,))

    dfs(Z.mask.copy(), np.ones(n, dtype=bool), Z.gens)
    return n // best


# ---------------------------------------------------------------------------
# Jordan constant


def _alpha_of(item: tuple[FiniteGroup, np.ndarray]) -> tuple[int, tuple[int, ...]]:
    K, emb = item
    alpha, w = min_normal_abelian_index(K)
    return alpha, tuple(int(x) for x in emb[w.members])


def jordan_constant(G: FiniteGroup, workers: int = 1, cap: int = config.LATTICE_CAP) -> AnalysisReport:
    """Jordan constant ``J_G``: the maximum over subgroups ``K`` of the least index of a normal abelian subgroup of ``K``.

    ``b_G`` is ``|G|``. The witness is the lexicographically least class
    representative attaining the maximum, together with its largest normal
    abelian subgroup. ``workers > 1`` farms out the per-class work to
    processes; the result does not depend on it.
    """
    t0 = time.perf_counter()
    classes = enumerate_subgroup_classes(G, cap)
    results: list[tuple[int, tuple[int, ...]] | None] = [None] * len(classes)
    todo = []
    for i, c in enumerate(classes):
        rep = c.representative
        if c.is_abelian:
            results[i] = (1, rep.as_tuple())
        else:
            todo.append(i)
    items = [classes[i].representative.as_group() for i in todo]
    if workers > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            computed = list(pool.map(_alpha_of, items))
    else:
        computed = [_alpha_of(it) for it in items]
    for i, r in zip(todo, computed):
        results[i] = r
    J = max(r[0] for r in results)
    best = min(
        (i for i, r in enumerate(results) if r[0] == J),
        key=lambda i: _lex_key(classes[i].representative.members),
    )
    witness = classes[best].representative
    abel = SubgroupSet(G, results[best][1], _trusted=True)
    return AnalysisReport(
        jordan_constant=J,
        bound_constant=G.order,
        witness_subgroup=witness,
        witness_abelian=abel,
        subgroup_class_count=len(classes),
        elapsed=time.perf_counter() - t0,
    )


def is_simple(G: FiniteGroup) -> bool:
    if G.order == 1:
        return False
    for cls in G.conjugacy_classes:
        if len(cls) == 1 and cls[0] == G.identity:
            continue
        if not close_mask(G, cls.astype(np.int64)).all():
            return False
    return True


def simple_nonabelian_classes(G: FiniteGroup, cap: int = config.LATTICE_CAP) -> list[FiniteGroup]:
    """One group per isomorphism class of simple nonabelian subgroups, by increasing order."""
    reps: list[FiniteGroup] = []
    for c in enumerate_subgroup_classes(G, cap):
        if c.is_abelian:
            continue
        K, _ = c.representative.as_group()
        if not is_simple(K):
            continue
        if any(R.order == K.order and are_isomorphic(R, K) for R in reps):
            continue
        reps.append(K)
    return reps
