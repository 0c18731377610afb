"""Structure-level analysis: regularity, duo, relative ideals, simplicity,
and decomposition of the carrier along a semilattice congruence.

The pinned regularity predicates quantify over every operation g and ask
for membership with the inner product x g x fixed; the legacy variants
let every operation position range independently.  Pinned implies legacy;
the converse is a search target, not a theorem.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterator

from .core import (PreconditionError, Structure, Subset, _owned,
                   downset_bits, product_bits, subset_masks)
from .ideals import IdealKind, _all_ideal_bits, _ideal_bits
from .relations import Partition, is_semilattice_congruence, relation_partition


def _sandwich_bits(s: Structure, mid: int) -> int:
    """Mask of M G mid G M (no order closure)."""
    return product_bits(s, product_bits(s, s.full, mid), s.full)


def is_intra_regular(s: Structure) -> bool:
    """Every x lies below some u g' (x g x) g'' v, for every operation g."""
    return intra_regular_failure(s) is None


def intra_regular_failure(s: Structure):
    """First (x, label) breaking pinned intra-regularity, or None."""
    for x in range(s.n):
        for g, t in zip(s.gamma_names, s.tables):
            mid = 1 << t[x][x]
            if not (downset_bits(s, _sandwich_bits(s, mid)) >> x) & 1:
                return (x, g)
    return None


def is_intra_regular_legacy(s: Structure) -> bool:
    """Every x lies below some u g' x g'' x g''' v, all positions free."""
    return intra_regular_legacy_failure(s) is None


def intra_regular_legacy_failure(s: Structure):
    m = s.full
    for x in range(s.n):
        xb = 1 << x
        w = product_bits(s, product_bits(s, product_bits(s, m, xb), xb), m)
        if not (downset_bits(s, w) >> x) & 1:
            return (x,)
    return None


def is_left_regular(s: Structure) -> bool:
    """Every x lies below some u g' (x g x), for every operation g."""
    return left_regular_failure(s) is None


def left_regular_failure(s: Structure):
    for x in range(s.n):
        for g, t in zip(s.gamma_names, s.tables):
            mid = 1 << t[x][x]
            if not (downset_bits(s, product_bits(s, s.full, mid)) >> x) & 1:
                return (x, g)
    return None


def is_right_regular(s: Structure) -> bool:
    """Every x lies below some (x g x) g' v, for every operation g."""
    return right_regular_failure(s) is None


def right_regular_failure(s: Structure):
    for x in range(s.n):
        for g, t in zip(s.gamma_names, s.tables):
            mid = 1 << t[x][x]
            if not (downset_bits(s, product_bits(s, mid, s.full)) >> x) & 1:
                return (x, g)
    return None


def is_left_regular_legacy(s: Structure) -> bool:
    m = s.full
    for x in range(s.n):
        xb = 1 << x
        w = product_bits(s, product_bits(s, m, xb), xb)
        if not (downset_bits(s, w) >> x) & 1:
            return False
    return True


def is_right_regular_legacy(s: Structure) -> bool:
    m = s.full
    for x in range(s.n):
        xb = 1 << x
        w = product_bits(s, product_bits(s, xb, xb), m)
        if not (downset_bits(s, w) >> x) & 1:
            return False
    return True


def is_left_duo(s: Structure) -> bool:
    """Every left ideal is two-sided."""
    return all(_ideal_bits(s, b, IdealKind.TWO_SIDED)
               for b in _all_ideal_bits(s, IdealKind.LEFT))


def is_right_duo(s: Structure) -> bool:
    """Every right ideal is two-sided."""
    return all(_ideal_bits(s, b, IdealKind.TWO_SIDED)
               for b in _all_ideal_bits(s, IdealKind.RIGHT))


def _subsemigroup_bits(s: Structure, bits: int) -> bool:
    return bits != 0 and not product_bits(s, bits, bits) & ~bits


def is_subsemigroup(s: Structure, t: Subset) -> bool:
    """Nonempty and closed under every operation."""
    return _subsemigroup_bits(s, _owned(s, t))


def all_subsemigroups(s: Structure) -> list[Subset]:
    key = ("all_subsemigroups",)
    hit = s._cache.get(key)
    if hit is None:
        hit = tuple(m for m in subset_masks(s.n) if _subsemigroup_bits(s, m))
        s._cache[key] = hit
    return [Subset(s, b) for b in hit]


def _relative_ideal_bits(s: Structure, tbits: int, abits: int, kind: IdealKind) -> bool:
    if not abits or abits & ~tbits:
        return False
    if kind is not IdealKind.RIGHT and product_bits(s, tbits, abits) & ~abits:
        return False
    if kind is not IdealKind.LEFT and product_bits(s, abits, tbits) & ~abits:
        return False
    # downward closure relative to T under the ambient order
    return not downset_bits(s, abits) & tbits & ~abits


def _require_subsemigroup(s: Structure, tbits: int) -> None:
    if not _subsemigroup_bits(s, tbits):
        raise PreconditionError("T must be a subsemigroup")


def is_relative_ideal(s: Structure, t: Subset, a: Subset,
                      kind: IdealKind = IdealKind.TWO_SIDED) -> bool:
    """Ideal of the subsemigroup T, with downward closure taken inside T."""
    tbits = _owned(s, t)
    _require_subsemigroup(s, tbits)
    return _relative_ideal_bits(s, tbits, _owned(s, a), kind)


def _masks_within(tbits: int) -> list[int]:
    # nonempty submasks of tbits, ascending by popcount then value
    subs = []
    sub = tbits
    while sub:
        subs.append(sub)
        sub = (sub - 1) & tbits
    subs.sort(key=lambda m: (m.bit_count(), m))
    return subs


def relative_ideals(s: Structure, t: Subset,
                    kind: IdealKind = IdealKind.TWO_SIDED) -> list[Subset]:
    """Every ideal of the subsemigroup T, brute force over subsets of T."""
    tbits = _owned(s, t)
    _require_subsemigroup(s, tbits)
    return [Subset(s, a) for a in _masks_within(tbits)
            if _relative_ideal_bits(s, tbits, a, kind)]


def _simple_bits(s: Structure, tbits: int, kind: IdealKind) -> bool:
    for a in _masks_within(tbits):
        if a != tbits and _relative_ideal_bits(s, tbits, a, kind):
            return False
    return True


def is_simple(s: Structure, t: Subset) -> bool:
    """The subsemigroup T has no relative two-sided ideal besides itself."""
    tbits = _owned(s, t)
    _require_subsemigroup(s, tbits)
    return _simple_bits(s, tbits, IdealKind.TWO_SIDED)


def is_left_simple(s: Structure, t: Subset) -> bool:
    tbits = _owned(s, t)
    _require_subsemigroup(s, tbits)
    return _simple_bits(s, tbits, IdealKind.LEFT)


def is_right_simple(s: Structure, t: Subset) -> bool:
    tbits = _owned(s, t)
    _require_subsemigroup(s, tbits)
    return _simple_bits(s, tbits, IdealKind.RIGHT)


@dataclass
class ClassVerdict:
    block: Subset
    is_subsemigroup: bool
    is_simple: bool
    is_left_simple: bool


@dataclass
class DecompositionReport:
    """How the carrier splits along a semilattice congruence.

    `is_semilattice_of_simple` requires the partition to actually be a
    semilattice congruence with every class a simple subsemigroup;
    `is_chain_of_simple` additionally requires every product's class to
    be one of its factors' classes, with the first failing (x, y, label)
    kept as a witness.
    """

    partition: Partition
    class_verdicts: list[ClassVerdict]
    is_semilattice_congruence: bool
    is_semilattice_of_simple: bool
    is_chain_of_simple: bool
    chain_witness_failure: tuple | None

    def quotient_chain(self) -> list[int] | None:
        """Block indices sorted by the quotient order, when it is a chain."""
        if self.chain_witness_failure is not None:
            return None
        s = self.partition.structure
        cls = self.partition.class_of
        reps = [b.elements()[0] for b in self.partition.blocks]

        def below(i: int, j: int) -> bool:
            # block i is below block j when every product of reps lands in i
            return all(cls[t[reps[i]][reps[j]]] == i for t in s.tables)

        def cmp(i: int, j: int) -> int:
            if i == j:
                return 0
            return -1 if below(i, j) else 1

        return sorted(range(len(reps)), key=cmp_to_key(cmp))


def _chain_failure(s: Structure, p: Partition) -> tuple | None:
    cls = p.class_of
    for x in range(s.n):
        for y in range(s.n):
            for g, t in zip(s.gamma_names, s.tables):
                c = cls[t[x][y]]
                if c != cls[x] and c != cls[y]:
                    return (x, y, g)
    return None


def decompose(s: Structure, sigma: Partition | None = None) -> DecompositionReport:
    """Split the carrier along sigma (default: the N partition).

    Per-class verdicts use relative ideals inside each block; the chain
    condition is evaluated independently of simplicity.
    """
    if sigma is None:
        hit = s._cache.get(("decompose",))
        if hit is not None:
            return hit
        p = relation_partition(s, "N")
    else:
        if sigma.structure is not s:
            raise PreconditionError("partition does not belong to this structure")
        p = sigma
    slc = is_semilattice_congruence(s, p)
    verdicts = []
    for blk in p.blocks:
        sub = _subsemigroup_bits(s, blk.bits)
        verdicts.append(ClassVerdict(
            block=blk,
            is_subsemigroup=sub,
            is_simple=sub and _simple_bits(s, blk.bits, IdealKind.TWO_SIDED),
            is_left_simple=sub and _simple_bits(s, blk.bits, IdealKind.LEFT),
        ))
    semi = slc and all(v.is_simple for v in verdicts)
    fail = _chain_failure(s, p)
    report = DecompositionReport(
        partition=p,
        class_verdicts=verdicts,
        is_semilattice_congruence=slc,
        is_semilattice_of_simple=semi,
        is_chain_of_simple=semi and fail is None,
        chain_witness_failure=fail,
    )
    if sigma is None:
        s._cache[("decompose",)] = report
    return report


def maximal_simple_subsemigroups(s: Structure) -> list[Subset]:
    """Inclusion-maximal simple subsemigroups, by popcount then mask value."""
    key = ("maximal_simple",)
    hit = s._cache.get(key)
    if hit is None:
        simple = [m for m in subset_masks(s.n)
                  if _subsemigroup_bits(s, m) and _simple_bits(s, m, IdealKind.TWO_SIDED)]
        hit = tuple(m for m in simple
                    if not any(c != m and c & m == m for c in simple))
        s._cache[key] = hit
    return [Subset(s, b) for b in hit]
