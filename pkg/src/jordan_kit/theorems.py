"""Executable inequality checks over concrete finite groups.

Each check computes both sides of an inequality by independent enumeration
and returns a :class:`CheckRecord` carrying every computed quantity, so the
verdict can be recomputed from the record alone.
"""
from __future__ import annotations

import math
import operator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence, Union

import numpy as np

from .analysis import (
    enumerate_normal_subgroups,
    enumerate_subgroup_classes,
    jordan_constant,
    min_abelian_index,
    min_normal_abelian_index,
)
from .constructions import (
    ZarhinParams,
    abelian,
    alternating,
    binary_icosahedral,
    cyclic,
    dihedral,
    quaternion,
    symmetric,
    zarhin_group,
)
from .errors import CapExceededError, CenterNotTrivialError
from .group import (
    FiniteGroup,
    SubgroupSet,
    are_isomorphic,
    automorphisms,
    direct_product,
    intersect_conjugates,
    intersect_coset_conjugates,
    normal_core,
    quotient_group,
    semidirect_parts,
    semidirect_product,
)

Operand = Union[str, int]
_OPS: dict[str, Callable[[int, int], bool]] = {"<=": operator.le, "==": operator.eq}


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of one check.

    ``relations`` lists ``(op, lhs, rhs)`` with ``op`` in ``<=``/``==`` and
    operands naming entries of ``computed`` (or integer literals). A skipped
    record is a precondition miss, not a counterexample.
    """

    check_id: str
    inputs: tuple[str, ...]
    computed: dict[str, int]
    relations: tuple[tuple[str, Operand, Operand], ...]
    passed: bool
    skipped: bool = False
    reason: str | None = None
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def recheck(self) -> bool:
        if self.skipped:
            return self.passed
        return all(_OPS[op](self._value(a), self._value(b)) for op, a, b in self.relations)

    def _value(self, x: Operand) -> int:
        return x if isinstance(x, int) else self.computed[x]

    @property
    def sort_key(self) -> tuple:
        return (self.check_id, self.inputs)


def _record(check_id, inputs, computed, relations, witnesses=None) -> CheckRecord:
    computed = {k: int(v) for k, v in computed.items()}
    probe = CheckRecord(check_id, tuple(inputs), computed, tuple(relations), False, witnesses=witnesses or {})
    return CheckRecord(check_id, tuple(inputs), computed, tuple(relations), probe.recheck(), witnesses=witnesses or {})


def _skipped(check_id, inputs, reason) -> CheckRecord:
    return CheckRecord(check_id, tuple(inputs), {}, (), True, skipped=True, reason=reason)


_J_CACHE: dict[bytes, int] = {}


def _jordan(G: FiniteGroup) -> int:
    # keyed by the exact table; no isomorphism shortcuts
    key = G.table.astype(np.int32).tobytes() + G.identity.to_bytes(4, "little")
    if key not in _J_CACHE:
        _J_CACHE[key] = jordan_constant(G).jordan_constant
    return _J_CACHE[key]


def _sub_label(H: SubgroupSet) -> str:
    return f"order={H.order}:" + ",".join(map(str, H.as_tuple()))


# ---------------------------------------------------------------------------
# checks


def check_gs_bounds(
    G: FiniteGroup,
    H: SubgroupSet | None = None,
    factors: tuple[FiniteGroup, FiniteGroup] | None = None,
    split: tuple[SubgroupSet, SubgroupSet] | None = None,
    *,
    include_subgroups: bool = True,
    name: str = "G",
) -> list[CheckRecord]:
    """Subgroup, quotient, split-complement and product inequalities for ``J``.

    * every subgroup class ``K``: ``J_K <= J_G``
    * ``H`` normal: ``J_{G/H} <= J_G``
    * ``split = (N, S)`` with ``S`` a complement of normal ``N``: ``S = G/N`` and ``J_S <= J_G``
    * ``factors = (G1, G2)`` with ``G = G1 x G2``: ``J_Gi <= J_G <= J_G1 J_G2``
    """
    JG = _jordan(G)
    out: list[CheckRecord] = []
    if include_subgroups:
        for c in enumerate_subgroup_classes(G):
            K = c.representative
            JK = _jordan(K.as_group()[0])
            out.append(
                _record("gs.subgroup", (name, _sub_label(K)), {"J_K": JK, "J_G": JG}, [("<=", "J_K", "J_G")], {"K": K.as_tuple()})
            )
    if H is not None:
        inputs = (name, _sub_label(H))
        if not H.is_normal():
            out.append(_skipped("gs.quotient", inputs, "H is not normal"))
        else:
            Q, _ = quotient_group(G, H)
            out.append(_record("gs.quotient", inputs, {"J_quotient": _jordan(Q), "J_G": JG, "order_H": H.order}, [("<=", "J_quotient", "J_G")]))
    if split is not None:
        N, S = split
        inputs = (name, _sub_label(N), _sub_label(S))
        Q, _ = quotient_group(G, N)
        computed = {
            "J_complement": _jordan(S.as_group()[0]),
            "J_G": JG,
            "trivial_intersection": int(N.intersection(S).order == 1),
            "orders_multiply": int(N.order * S.order == G.order),
            "complement_iso_quotient": int(are_isomorphic(S.as_group()[0], Q)),
        }
        out.append(
            _record(
                "gs.split",
                inputs,
                computed,
                [
                    ("==", "trivial_intersection", 1),
                    ("==", "orders_multiply", 1),
                    ("==", "complement_iso_quotient", 1),
                    ("<=", "J_complement", "J_G"),
                ],
            )
        )
    if factors is not None:
        G1, G2 = factors
        J1, J2 = _jordan(G1), _jordan(G2)
        computed = {"J_G1": J1, "J_G2": J2, "J_G": JG, "J_G1_J_G2": J1 * J2, "order_matches": int(G1.order * G2.order == G.order)}
        out.append(
            _record(
                "gs.product",
                (name,),
                computed,
                [("==", "order_matches", 1), ("<=", "J_G1", "J_G"), ("<=", "J_G2", "J_G"), ("<=", "J_G", "J_G1_J_G2")],
            )
        )
    return out


def check_extension_bound(G: FiniteGroup, H: SubgroupSet, *, name: str = "G") -> CheckRecord:
    """``J_G <= b_{G/H} * J_H ** b_{G/H}`` with ``b_{G/H} = |G/H|``."""
    Q, _ = quotient_group(G, H)
    b = Q.order
    JH = _jordan(H.as_group()[0])
    JG = _jordan(G)
    bound = b * JH**b
    return _record(
        "extension",
        (name, _sub_label(H)),
        {"J_G": JG, "J_H": JH, "b_quotient": b, "bound": bound, "slack": bound - JG},
        [("<=", "J_G", "bound")],
    )


def intersection_records(G: FiniteGroup, H: SubgroupSet, *, name: str = "G") -> list[CheckRecord]:
    """The conjugate-intersection step behind the extension bound, for every finite ``F <= G``.

    ``L = F n H``, ``A`` a largest normal abelian subgroup of ``L`` and ``M`` the
    intersection of the ``F``-conjugates of ``A``. Checks ``M`` abelian, normal
    in ``F``, ``[L:M] <= [L:A]^[F:L]`` and ``[F:M] <= b J_H^b``; ``M`` is computed
    both over all of ``F`` and over coset representatives.
    """
    Q, _ = quotient_group(G, H)
    b = Q.order
    JH = _jordan(H.as_group()[0])
    out = []
    for c in enumerate_subgroup_classes(G):
        F = c.representative
        L = F.intersection(H)
        Lg, emb = L.as_group()
        _, w = min_normal_abelian_index(Lg)
        A = SubgroupSet(G, emb[w.members], _trusted=True)
        inputs = (name, _sub_label(H), _sub_label(F))
        try:
            M = intersect_conjugates(F, A, L)
        except AssertionError as exc:
            out.append(CheckRecord("extension.intersection", inputs, {}, (("==", 0, 1),), False, reason=str(exc)))
            continue
        M2 = intersect_coset_conjugates(F, A, L)
        index_FL = F.order // L.order
        computed = {
            "index_L_M": L.order // M.order,
            "index_L_A": L.order // A.order,
            "index_F_L": index_FL,
            "index_bound": (L.order // A.order) ** index_FL,
            "index_F_M": F.order // M.order,
            "extension_bound": b * JH**b,
            "M_abelian": int(M.is_abelian()),
            "M_normal_in_F": int(M.is_normal(F)),
            "routes_agree": int(M == M2),
        }
        out.append(
            _record(
                "extension.intersection",
                inputs,
                computed,
                [
                    ("==", "M_abelian", 1),
                    ("==", "M_normal_in_F", 1),
                    ("==", "routes_agree", 1),
                    ("<=", "index_L_M", "index_bound"),
                    ("<=", "index_F_M", "extension_bound"),
                ],
                {"M": M.as_tuple()},
            )
        )
    return out


def check_centerless_bound(G: FiniteGroup, H: SubgroupSet, *, name: str = "G") -> CheckRecord:
    """``J_G <= |Aut H| * J_{G/H} ** |Aut H|`` for normal ``H`` with trivial center.

    Raises CenterNotTrivialError when the precondition fails.
    """
    Hg, _ = H.as_group()
    if Hg.center().order != 1:
        raise CenterNotTrivialError(f"center of H has order {Hg.center().order}")
    aut = len(automorphisms(Hg))
    Q, _ = quotient_group(G, H)
    JQ = _jordan(Q)
    JG = _jordan(G)
    bound = aut * JQ**aut
    return _record(
        "centerless",
        (name, _sub_label(H)),
        {"J_G": JG, "J_quotient": JQ, "aut_H": aut, "bound": bound, "slack": bound - JG},
        [("<=", "J_G", "bound")],
    )


def check_core_bound(P: FiniteGroup, Q: SubgroupSet, *, name: str = "P") -> CheckRecord:
    """Normal core ``N`` of ``Q``: ``N <= Q``, ``N`` normal, ``[P:N] <= [P:Q]!``."""
    N = normal_core(P, Q)
    idx = Q.index
    return _record(
        "core",
        (name, _sub_label(Q)),
        {
            "index_P_N": N.index,
            "index_P_Q": idx,
            "index_factorial": math.factorial(idx),
            "N_in_Q": int(N.is_subgroup_of(Q)),
            "N_normal": int(N.is_normal()),
        },
        [("==", "N_in_Q", 1), ("==", "N_normal", 1), ("<=", "index_P_N", "index_factorial")],
        {"N": N.as_tuple()},
    )


def check_zarhin_property(params: ZarhinParams | Sequence[int]) -> CheckRecord:
    """Every abelian subgroup of ``Q_K`` has index at least ``n = |K|``."""
    p = params if isinstance(params, ZarhinParams) else ZarhinParams(tuple(params))
    G = zarhin_group(p)
    mai = min_abelian_index(G)
    return _record(
        "zarhin",
        ("zarhin(" + ",".join(map(str, p.invariant_factors)) + ")",),
        {"n": p.n, "order": G.order, "n_cubed": p.n**3, "min_abelian_index": mai},
        [("==", "order", "n_cubed"), ("<=", "n", "min_abelian_index")],
    )


# ---------------------------------------------------------------------------
# corpus


@dataclass(eq=False)
class CorpusEntry:
    name: str
    group: FiniteGroup
    factors: tuple[FiniteGroup, FiniteGroup] | None = None
    split: tuple[SubgroupSet, SubgroupSet] | None = None


def _power_action(n: int, r: int, order_h: int) -> list[list[int]]:
    """Action of ``C_order_h`` on ``Z/n`` where the generator multiplies by ``r``."""
    return [[(pow(r, h, n) * x) % n for x in range(n)] for h in range(order_h)]


def _semidirect_entry(name: str, N: FiniteGroup, H: FiniteGroup, action) -> CorpusEntry:
    G = semidirect_product(N, H, action)
    return CorpusEntry(name, G, split=semidirect_parts(N, H, G))


def default_corpus() -> list[CorpusEntry]:
    """Family groups, pairwise direct products of order <= 64, semidirect products, and the larger named groups."""
    fam = {
        "C1": cyclic(1),
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C5": cyclic(5),
        "C6": cyclic(6),
        "C8": cyclic(8),
        "C2^2": abelian([2, 2]),
        "C2xC4": abelian([2, 4]),
        "C2^3": abelian([2, 2, 2]),
        "D6": dihedral(6),
        "D8": dihedral(8),
        "D10": dihedral(10),
        "D12": dihedral(12),
        "Q8": quaternion(8),
        "Q16": quaternion(16),
        "Sym3": symmetric(3),
        "Sym4": symmetric(4),
        "Sym5": symmetric(5),
        "Alt4": alternating(4),
        "Alt5": alternating(5),
        "SL2(F5)": binary_icosahedral(),
        "Zarhin(2)": zarhin_group((2,)),
        "Zarhin(3)": zarhin_group((3,)),
    }
    entries = [CorpusEntry(k, v) for k, v in fam.items()]
    small = ["C2", "C3", "C4", "C2^2", "Sym3", "D8", "Q8"]
    for i, a in enumerate(small):
        for b in small[i:]:
            if fam[a].order * fam[b].order <= 64:
                G1, G2 = fam[a], fam[b]
                entries.append(CorpusEntry(f"{a}x{b}", direct_product(G1, G2), factors=(G1, G2)))
    c2, c3, c4 = fam["C2"], fam["C3"], fam["C4"]
    v4_cycle = [[0, 1, 2, 3], [0, 3, 1, 2], [0, 2, 3, 1]]  # (a,b) -> (b, a+b) on index 2a+b
    entries += [
        _semidirect_entry("C3:C2", c3, c2, _power_action(3, 2, 2)),
        _semidirect_entry("C3:C4", c3, c4, _power_action(3, 2, 4)),
        _semidirect_entry("C4:C4", c4, c4, _power_action(4, 3, 4)),
        _semidirect_entry("C5:C4", fam["C5"], c4, _power_action(5, 2, 4)),
        _semidirect_entry("C7:C3", cyclic(7), c3, _power_action(7, 2, 3)),
        _semidirect_entry("C8:C2[3]", fam["C8"], c2, _power_action(8, 3, 2)),
        _semidirect_entry("C8:C2[5]", fam["C8"], c2, _power_action(8, 5, 2)),
        _semidirect_entry("C2^2:C3", fam["C2^2"], c3, v4_cycle),
        _semidirect_entry("C3^2:C2", abelian([3, 3]), c2, [list(range(9)), [(-(x // 3) % 3) * 3 + (-(x % 3) % 3) for x in range(9)]]),
    ]
    return entries


SUITES = ("gs", "extension", "intersection", "centerless", "core")


def run_entry(entry: CorpusEntry, suites: Sequence[str] = SUITES) -> list[CheckRecord]:
    G, name = entry.group, entry.name
    out: list[CheckRecord] = []
    normals = enumerate_normal_subgroups(G) if set(suites) & {"gs", "extension", "intersection", "centerless"} else []
    if "gs" in suites:
        out += check_gs_bounds(G, factors=entry.factors, split=entry.split, name=name)
        for H in normals:
            out += check_gs_bounds(G, H, include_subgroups=False, name=name)
    if "extension" in suites:
        out += [check_extension_bound(G, H, name=name) for H in normals]
    if "intersection" in suites:
        for H in normals:
            out += intersection_records(G, H, name=name)
    if "centerless" in suites:
        for H in normals:
            try:
                out.append(check_centerless_bound(G, H, name=name))
            except CenterNotTrivialError as exc:
                out.append(_skipped("centerless", (name, _sub_label(H)), str(exc)))
            except CapExceededError as exc:
                out.append(_skipped("centerless", (name, _sub_label(H)), str(exc)))
    if "core" in suites:
        for c in enumerate_subgroup_classes(G):
            out.append(check_core_bound(G, c.representative, name=name))
    return out


def _run_entry_star(args):
    return run_entry(*args)


def run_suite(corpus: Sequence[CorpusEntry], suites: Sequence[str] = SUITES, workers: int = 1) -> list[CheckRecord]:
    """All checks over ``corpus``, sorted by ``(check_id, inputs)`` whatever the worker count."""
    jobs = [(e, tuple(suites)) for e in corpus]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_entry_star, jobs))
    else:
        chunks = [_run_entry_star(j) for j in jobs]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: r.sort_key)
    return records


def run_zarhin_suite(max_order: int = 8) -> list[CheckRecord]:
    """Zarhin property for every abelian ``K`` with ``|K| <= max_order``."""
    return [check_zarhin_property(p) for p in zarhin_chains(max_order)]


def zarhin_chains(max_order: int) -> list[ZarhinParams]:
    """All invariant-factor chains ``d_1 | ... | d_r`` (``d_i >= 2``) with product ``<= max_order``."""
    out: list[tuple[int, ...]] = []

    def extend(chain: tuple[int, ...], prod: int):
        if chain:
            out.append(chain)
        start = chain[-1] if chain else 2
        for d in range(start, max_order // prod + 1):
            if chain and d % chain[-1]:
                continue
            extend(chain + (d,), prod * d)

    extend((), 1)
    out.sort(key=lambda c: (math.prod(c), c))
    return [ZarhinParams(c) for c in out]
