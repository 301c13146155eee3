"""Signed sumsets and the predicates built on them.

The h-fold signed sumset of A = {a_1, ..., a_m} is the set of group elements
expressible as sum(lambda_i * a_i) with integer coefficients whose absolute
values sum to h exactly.  Each a_i carries a single coefficient, so layers are
computed by a per-element dynamic program over (element, norm used so far)
states.  Iterated layer addition would be wrong: the layer for h is not
contained in the layer for h-1 plus one more step, because norm can only
cancel within one element's coefficient, not across elements.

Membership tables are dense boolean numpy arrays indexed by element index.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

import numpy as np

from .groups import GroupElement, GroupSpec, encode_residues, exponent, residue_matrix

__all__ = [
    "Subset",
    "SumsetLayers",
    "signed_sumset",
    "cumulative_sumset",
    "is_t_independent",
    "independence_number",
    "is_s_spanning",
    "spanning_number",
    "is_zero_h_sum_free",
    "is_kl_sum_free",
    "is_Bh",
    "table_to_elements",
]


@dataclass(frozen=True)
class Subset:
    """An ordered, duplicate-free list of elements of one group."""

    group: GroupSpec
    elements: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        seen = set()
        for g in self.elements:
            if g.group != self.group:
                raise ValueError("subset element belongs to a different group")
            if g in seen:
                raise ValueError(f"duplicate element {g.residues} in subset")
            seen.add(g)

    @classmethod
    def of(cls, group: GroupSpec, *residue_tuples) -> "Subset":
        return cls(group, tuple(group.element(r) for r in residue_tuples))

    @property
    def m(self) -> int:
        return len(self.elements)

    def indices(self) -> list[int]:
        return [g.index for g in self.elements]


class _ShiftIndex:
    """Cached index maps x -> index(x - v), one permutation per shift v."""

    def __init__(self, G: GroupSpec):
        self.G = G
        self.n = G.order
        self._res = None if G.is_cyclic else residue_matrix(G)
        self._cache: dict[int, np.ndarray] = {}

    def table(self, v: GroupElement) -> np.ndarray:
        key = v.index
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.G.is_cyclic:
            idx = (np.arange(self.n) - key) % self.n
        else:
            shifted = (self._res - np.asarray(v.residues)) % np.asarray(self.G.orders)
            idx = encode_residues(self.G, shifted)
        self._cache[key] = idx
        return idx


def _build_layers(A: Subset, max_h: int) -> list[np.ndarray]:
    """Exact layers h = 0..max_h of the signed sumset of A, as boolean tables."""
    G = A.group
    n = G.order
    layers = [np.zeros(n, dtype=bool) for _ in range(max_h + 1)]
    layers[0][G.identity.index] = True
    shifts = _ShiftIndex(G)
    for a in A.elements:
        new = [layer.copy() for layer in layers]
        for c in range(1, max_h + 1):
            for mult in (c * a, (-c) * a):
                idx = shifts.table(mult)
                for h in range(c, max_h + 1):
                    np.logical_or(new[h], layers[h - c][idx], out=new[h])
        layers = new
    return layers


@dataclass(frozen=True)
class SumsetLayers:
    """Membership tables of the exact layers h = 0..maxH for one subset."""

    group: GroupSpec
    subset: Subset
    maxH: int
    layers: tuple[np.ndarray, ...]

    @classmethod
    def build(cls, A: Subset, max_h: int) -> "SumsetLayers":
        if max_h < 0:
            raise ValueError("layer count must be nonnegative")
        return cls(A.group, A, max_h, tuple(_build_layers(A, max_h)))

    def cumulative(self, s: int) -> np.ndarray:
        if s > self.maxH:
            raise ValueError("requested union beyond the built layers")
        out = self.layers[0].copy()
        for h in range(1, s + 1):
            np.logical_or(out, self.layers[h], out=out)
        return out


def signed_sumset(A: Subset, h: int) -> np.ndarray:
    """Membership table of the h-fold signed sumset of A."""
    if h < 0:
        raise ValueError("fold count must be nonnegative")
    return _build_layers(A, h)[h]


def cumulative_sumset(A: Subset, s: int) -> np.ndarray:
    """Membership table of the union of layers 0..s."""
    if s < 0:
        raise ValueError("fold count must be nonnegative")
    layers = _build_layers(A, s)
    out = layers[0]
    for h in range(1, s + 1):
        np.logical_or(out, layers[h], out=out)
    return out


def is_t_independent(A: Subset, t: int) -> bool:
    """True iff the identity avoids every layer 1..t; t = 0 is always true."""
    if t < 0:
        raise ValueError("independence order must be nonnegative")
    if t == 0:
        return True
    zero = A.group.identity.index
    layers = _build_layers(A, t)
    return not any(layers[h][zero] for h in range(1, t + 1))


def independence_number(A: Subset) -> int:
    """Largest t for which A is t-independent.

    Equals (min h >= 1 with identity in the h layer) - 1.  The identity is
    guaranteed at h = exponent(G) (take the coefficient exponent on any one
    element), so the doubling below always terminates.
    """
    if A.m == 0:
        raise ValueError("independence number of the empty set is undefined")
    zero = A.group.identity.index
    cap = exponent(A.group)
    max_h = 4
    while True:
        max_h = min(max_h, cap)
        layers = _build_layers(A, max_h)
        for h in range(1, max_h + 1):
            if layers[h][zero]:
                return h - 1
        if max_h == cap:
            raise AssertionError("identity unreachable below the group exponent")
        max_h *= 2


def is_s_spanning(A: Subset, s: int) -> bool:
    """True iff the layers 0..s cover the whole group."""
    return bool(cumulative_sumset(A, s).all())


def spanning_number(A: Subset) -> int | None:
    """Smallest s with A s-spanning, or None when A does not generate G.

    The cumulative unions grow monotonically and, once they stall for a
    single step, stay stalled forever (any representation of norm s+2 passes
    through one of norm s+1), so the first stall is the generated subgroup.
    """
    n = A.group.order
    max_h = 4
    while True:
        layers = _build_layers(A, max_h)
        cum = layers[0].copy()
        prev_count = int(cum.sum())
        for h in range(1, max_h + 1):
            np.logical_or(cum, layers[h], out=cum)
            count = int(cum.sum())
            if count == n:
                return h if n > 1 else 0
            if count == prev_count:
                return None
            prev_count = count
        if prev_count == n:
            return 0
        max_h *= 2


def _sums(A: Subset, terms: int):
    G = A.group
    for combo in combinations_with_replacement(A.elements, terms):
        total = G.identity
        for g in combo:
            total = total + g
        yield total


def is_zero_h_sum_free(A: Subset, h: int) -> bool:
    """True iff no h terms from A (repetition allowed) sum to the identity."""
    if h < 1:
        raise ValueError("term count must be at least 1")
    zero = A.group.identity
    return all(total != zero for total in _sums(A, h))


def is_kl_sum_free(A: Subset, k: int, l: int) -> bool:
    """True iff no k-term sum from A equals an l-term sum from A."""
    if k == l:
        raise ValueError("the two term counts must differ")
    if min(k, l) < 1:
        raise ValueError("term counts must be at least 1")
    left = {total for total in _sums(A, k)}
    return all(total not in left for total in _sums(A, l))


def is_Bh(A: Subset, h: int) -> bool:
    """True iff all h-term sums with repetition are distinct across multisets."""
    if h < 1:
        raise ValueError("term count must be at least 1")
    sums = list(_sums(A, h))
    return len(set(sums)) == comb(A.m + h - 1, h)


def table_to_elements(G: GroupSpec, table: np.ndarray) -> list[GroupElement]:
    """Decode a membership table into its elements, in index order."""
    return [G.element_at(int(i)) for i in np.flatnonzero(table)]
