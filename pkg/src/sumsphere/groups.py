"""Finite abelian groups as explicit products of cyclic factors.

A group is described by its list of cyclic factor orders, an element by its
residue vector aligned with those factors.  Elements also carry a dense
integer index (mixed radix, first factor most significant) so that membership
tables over the whole group can be plain arrays.

Two GroupSpec values are equal only if their factor lists match; no
invariant-factor canonicalization is performed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm, prod

import numpy as np

__all__ = [
    "GroupSpec",
    "GroupElement",
    "add",
    "negate",
    "scalar_mul",
    "self_inverse_count",
    "enumerate_elements",
    "units",
    "exponent",
    "label",
    "parse_group",
    "parse_element",
    "parse_subset_literal",
    "format_element",
    "all_abelian_groups",
]

_GROUP_RE = re.compile(r"^Z(\d+)(?:[xX]Z(\d+))*$", re.IGNORECASE)


@dataclass(frozen=True, slots=True)
class GroupSpec:
    """The group Z_{n1} x ... x Z_{nk}, given by its factor orders."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders:
            raise ValueError("a group needs at least one cyclic factor")
        for n in self.orders:
            if not isinstance(n, int) or n < 1:
                raise ValueError(f"cyclic factor order must be a positive integer, got {n!r}")

    @property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def is_cyclic(self) -> bool:
        return len(self.orders) == 1

    def element(self, *residues: int) -> GroupElement:
        """Build an element from residues, reducing each into canonical range."""
        if len(residues) == 1 and isinstance(residues[0], (tuple, list)):
            residues = tuple(residues[0])
        if len(residues) != len(self.orders):
            raise ValueError(
                f"expected {len(self.orders)} residues for {label(self)}, got {len(residues)}"
            )
        return GroupElement(self, tuple(r % n for r, n in zip(residues, self.orders)))

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, (0,) * len(self.orders))

    def index_of(self, g: GroupElement) -> int:
        """Mixed-radix index of an element; first factor is most significant."""
        if g.group != self:
            raise ValueError("element index requested against a different group")
        idx = 0
        for r, n in zip(g.residues, self.orders):
            idx = idx * n + r
        return idx

    def element_at(self, index: int) -> GroupElement:
        """Inverse of index_of."""
        if not 0 <= index < self.order:
            raise ValueError(f"element index {index} out of range for {label(self)}")
        residues = []
        for n in reversed(self.orders):
            residues.append(index % n)
            index //= n
        return GroupElement(self, tuple(reversed(residues)))


@dataclass(frozen=True, slots=True)
class GroupElement:
    """An element of a GroupSpec, stored as canonical reduced residues."""

    group: GroupSpec
    residues: tuple[int, ...]

    def __add__(self, other: GroupElement) -> GroupElement:
        if self.group != other.group:
            raise ValueError("cannot add elements of different groups")
        return GroupElement(
            self.group,
            tuple((a + b) % n for a, b, n in zip(self.residues, other.residues, self.group.orders)),
        )

    def __neg__(self) -> GroupElement:
        return GroupElement(
            self.group, tuple((-r) % n for r, n in zip(self.residues, self.group.orders))
        )

    def __rmul__(self, k: int) -> GroupElement:
        return GroupElement(
            self.group, tuple((k * r) % n for r, n in zip(self.residues, self.group.orders))
        )

    @property
    def index(self) -> int:
        return self.group.index_of(self)


def add(g: GroupElement, h: GroupElement) -> GroupElement:
    """Group law: componentwise sum mod the factor orders."""
    return g + h


def negate(g: GroupElement) -> GroupElement:
    """Inverse element: componentwise negation mod the factor orders."""
    return -g


def scalar_mul(k: int, g: GroupElement) -> GroupElement:
    """Integer multiple k*g; k may be negative or zero."""
    return k * g


def self_inverse_count(G: GroupSpec) -> int:
    """Number of g with g + g = 0, the identity included.

    Equals the product over factors of gcd(2, n_i): each coordinate must be
    0 or, for even n_i, n_i/2.
    """
    return prod(gcd(2, n) for n in G.orders)


def enumerate_elements(G: GroupSpec) -> list[GroupElement]:
    """All elements of G in index order (no repeats)."""
    return [G.element_at(i) for i in range(G.order)]


def units(G: GroupSpec) -> list[int]:
    """Residues coprime to n, for cyclic G = Z_n only."""
    if not G.is_cyclic:
        raise ValueError("unit multiplication is only supported for cyclic groups")
    n = G.orders[0]
    return [c for c in range(1, n) if gcd(c, n) == 1] or ([1] if n == 1 else [])


def exponent(G: GroupSpec) -> int:
    """Least e >= 1 with e*g = 0 for all g, i.e. lcm of the factor orders."""
    return reduce(lcm, G.orders, 1)


def label(G: GroupSpec) -> str:
    """Literal form of a group, e.g. "Z25" or "Z2xZ4"."""
    return "x".join(f"Z{n}" for n in G.orders)


def parse_group(text: str) -> GroupSpec:
    """Parse a group literal such as "Z25" or "Z2xZ4" (case-insensitive x)."""
    cleaned = text.strip()
    if not _GROUP_RE.match(cleaned):
        raise ValueError(f"malformed group literal {text!r}; expected e.g. Z25 or Z2xZ4")
    orders = tuple(int(part[1:]) for part in re.split("[xX]", cleaned) if part)
    return GroupSpec(orders)


def format_element(g: GroupElement) -> str:
    """Residues joined by commas: "7" for cyclic groups, "1,3" for products."""
    return ",".join(str(r) for r in g.residues)


def parse_element(G: GroupSpec, text: str) -> GroupElement:
    parts = text.split(",")
    try:
        residues = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed element literal {text!r} for {label(G)}") from None
    if len(residues) != len(G.orders):
        raise ValueError(
            f"element literal {text!r} has {len(residues)} residues; {label(G)} needs {len(G.orders)}"
        )
    return G.element(*residues)


def parse_subset_literal(G: GroupSpec, text: str) -> list[GroupElement]:
    """Parse a set literal.

    Elements are separated by ';' and residues inside an element by ','.
    For cyclic groups a plain comma list like "1,4,6,9,11" is also accepted.
    """
    cleaned = text.strip()
    if not cleaned:
        raise ValueError("empty set literal")
    if ";" in cleaned:
        chunks = [c for c in cleaned.split(";") if c.strip()]
    elif G.is_cyclic:
        chunks = cleaned.split(",")
    else:
        chunks = [cleaned]
    return [parse_element(G, chunk.strip()) for chunk in chunks]


def residue_matrix(G: GroupSpec) -> np.ndarray:
    """(order, k) int array of every element's residues, in index order."""
    k = len(G.orders)
    out = np.empty((G.order, k), dtype=np.int64)
    idx = np.arange(G.order)
    for pos in range(k - 1, -1, -1):
        n = G.orders[pos]
        out[:, pos] = idx % n
        idx //= n
    return out


def encode_residues(G: GroupSpec, residues: np.ndarray) -> np.ndarray:
    """Vectorized index_of for an (N, k) residue array (already reduced)."""
    idx = np.zeros(len(residues), dtype=np.int64)
    for pos, n in enumerate(G.orders):
        idx = idx * n + residues[:, pos]
    return idx


def _partitions(e: int) -> list[tuple[int, ...]]:
    # partitions of e in weakly decreasing order
    if e == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(e, e, [])
    return out


def all_abelian_groups(order: int) -> list[GroupSpec]:
    """Every abelian group of the given order, one spec per isomorphism class.

    Factors are grouped by prime, each prime contributing cyclic factors
    p**part for one partition of its exponent.
    """
    if order < 1:
        raise ValueError("group order must be positive")
    if order == 1:
        return [GroupSpec((1,))]
    factorization = []
    rest = order
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            factorization.append((p, e))
        p += 1
    if rest > 1:
        factorization.append((rest, 1))

    specs = [()]
    for p, e in factorization:
        specs = [
            existing + tuple(p**part for part in partition)
            for existing in specs
            for partition in _partitions(e)
        ]
    return [GroupSpec(orders) for orders in specs]
