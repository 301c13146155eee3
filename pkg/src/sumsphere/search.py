"""Exact extremal search over subsets of a finite abelian group.

Branch and bound for the largest t-independent set, iterative deepening for
the smallest s-spanning set, and exhaustive enumeration of perfect sets.
State per node is the family of exact signed-sumset layers as boolean tables;
appending an element only shifts and ORs existing layers, so no layer is ever
recomputed from scratch.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .formulas import delannoy
from .groups import (
    GroupElement,
    GroupSpec,
    all_abelian_groups,
    encode_residues,
    residue_matrix,
    units,
)
from .sumsets import Subset

__all__ = [
    "SearchConfig",
    "SearchResult",
    "ProbeCell",
    "tau",
    "phi",
    "find_perfect_sets",
    "conjecture_probe_perfect",
    "is_perfect_set",
    "unit_orbit_representative",
]


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exact searches.

    symmetry_reduction prunes unit-multiplication orbits (cyclic groups,
    independence search only).  thread_count splits the search at the
    first-element level; values and exhaustiveness do not depend on it.
    Budgets turn a complete search into a best-effort one; results are then
    flagged exhaustive=False.
    """

    symmetry_reduction: bool = True
    thread_count: int = 1
    node_budget: int | None = None
    time_budget: float | None = None

    def __post_init__(self) -> None:
        if self.thread_count < 1:
            raise ValueError("thread_count must be at least 1")
        if self.node_budget is not None and self.node_budget < 0:
            raise ValueError("node_budget must be nonnegative")
        if self.time_budget is not None and self.time_budget < 0:
            raise ValueError("time_budget must be nonnegative")


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: Subset | None
    exhaustive: bool
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class ProbeCell:
    m: int
    s: int
    order: int
    searched: bool
    witnesses: tuple[tuple[GroupSpec, Subset], ...]


class _Ctx:
    """Per-group index tables: scalar multiples and subtraction gathers."""

    def __init__(self, G: GroupSpec, coeff_max: int):
        self.G = G
        self.n = G.order
        self.cyclic = G.is_cyclic
        if self.cyclic:
            n = self.n
            ar = np.arange(n)
            self.mul = {c: (c * ar) % n for c in range(1, coeff_max + 1)}
            self.neg = (-ar) % n
        else:
            res = residue_matrix(G)
            orders = np.asarray(G.orders)
            self._res = res
            self._orders = orders
            self.mul = {
                c: encode_residues(G, (c * res) % orders) for c in range(1, coeff_max + 1)
            }
            self.neg = encode_residues(G, (-res) % orders)
        self._sub: dict[int, np.ndarray] = {}

    def sub_idx(self, v: int) -> np.ndarray:
        # x -> index(x - v); one gather permutation per shift, cached
        hit = self._sub.get(v)
        if hit is not None:
            return hit
        if self.cyclic:
            idx = (np.arange(self.n) - v) % self.n
        else:
            shifted = (self._res - self._res[v]) % self._orders
            idx = encode_residues(self.G, shifted)
        self._sub[v] = idx
        return idx

    def empty_layers(self, max_h: int) -> list[np.ndarray]:
        layers = [np.zeros(self.n, dtype=bool) for _ in range(max_h + 1)]
        layers[0][0] = True  # identity has index 0 in mixed radix
        return layers

    def append(self, layers: list[np.ndarray], e: int) -> list[np.ndarray]:
        # assign element e a coefficient in [-H, H]; cost is the coefficient's
        # absolute value, so layer h pulls from layer h-c shifted by +-c*e
        H = len(layers) - 1
        new = [layer.copy() for layer in layers]
        for c in range(1, H + 1):
            v = int(self.mul[c][e])
            for shift in (v, int(self.neg[v])):
                idx = self.sub_idx(shift)
                for h in range(c, H + 1):
                    np.logical_or(new[h], layers[h - c][idx], out=new[h])
        return new

    def cumulative(self, layers: list[np.ndarray], top: int) -> list[np.ndarray]:
        # unions U_r of layers 0..r for r = 0..top
        out = [layers[0].copy()]
        for h in range(1, top + 1):
            out.append(np.logical_or(out[-1], layers[h]))
        return out


def _feasible(ctx: _Ctx, cums: list[np.ndarray], cand: np.ndarray, t: int) -> np.ndarray:
    # e stays t-independent after appending iff c*e avoids U_{t-c} for every
    # c; layers are closed under negation, so one probe per c suffices
    if len(cand) == 0:
        return cand
    bad = np.zeros(len(cand), dtype=bool)
    for c in range(1, t + 1):
        np.logical_or(bad, cums[t - c][ctx.mul[c][cand]], out=bad)
    return cand[~bad]


class _Shared:
    def __init__(self, best: int, witness: list[int], cfg: SearchConfig):
        self.lock = threading.Lock()
        self.best = best
        self.witness = witness
        self.nodes = 0
        self.aborted = False
        self.deadline = None if cfg.time_budget is None else time.perf_counter() + cfg.time_budget
        self.node_budget = cfg.node_budget

    def bump(self, count: int = 1) -> bool:
        """Add to the node counter; returns False once a budget is exhausted."""
        with self.lock:
            self.nodes += count
            if self.node_budget is not None and self.nodes > self.node_budget:
                self.aborted = True
            if self.deadline is not None and time.perf_counter() > self.deadline:
                self.aborted = True
            return not self.aborted

    def offer(self, size: int, chosen: list[int]) -> None:
        with self.lock:
            if size > self.best:
                self.best = size
                self.witness = list(chosen)


def _tau_dfs(
    ctx: _Ctx,
    t: int,
    layers: list[np.ndarray],
    cand: np.ndarray,
    chosen: list[int],
    shared: _Shared,
) -> None:
    if not shared.bump():
        return
    if len(chosen) + len(cand) <= shared.best:
        return
    for i in range(len(cand)):
        if shared.aborted:
            return
        if len(chosen) + (len(cand) - i) <= shared.best:
            return
        e = int(cand[i])
        new_layers = ctx.append(layers, e)
        chosen.append(e)
        if len(chosen) > shared.best:
            shared.offer(len(chosen), chosen)
        rest = cand[i + 1 :]
        if rest.size:
            cums = ctx.cumulative(new_layers, t - 1)
            new_cand = _feasible(ctx, cums, rest, t)
            if new_cand.size:
                _tau_dfs(ctx, t, new_layers, new_cand, chosen, shared)
        chosen.pop()


def _greedy_independent(ctx: _Ctx, t: int, cand: np.ndarray) -> list[int]:
    layers = ctx.empty_layers(t)
    chosen: list[int] = []
    while cand.size:
        e = int(cand[0])
        layers = ctx.append(layers, e)
        chosen.append(e)
        cums = ctx.cumulative(layers, t - 1)
        cand = _feasible(ctx, cums, cand[1:], t)
    return chosen


def _subset_from_indices(G: GroupSpec, indices: list[int]) -> Subset:
    return Subset(G, tuple(G.element_at(i) for i in sorted(indices)))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n) if n % d == 0]


def tau(G: GroupSpec, t: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact maximum size of a t-independent subset of G, with witness.

    Independence is hereditary, so depth-first extension of independent
    partial sets in ascending element-index order is complete.  For cyclic G
    with symmetry_reduction, the search is rooted at divisors d of n and
    candidates keep gcd(e, n) >= d: every unit-multiplication orbit contains
    a representative of that shape, and unit multiples preserve independence.
    """
    cfg = cfg or SearchConfig()
    if t < 1:
        raise ValueError("independence order must be at least 1")
    if G.order < 2:
        raise ValueError("the group must have at least 2 elements")
    start = time.perf_counter()
    ctx = _Ctx(G, t)
    n = ctx.n

    base_layers = ctx.empty_layers(t)
    base_cums = ctx.cumulative(base_layers, t - 1)
    all_cand = _feasible(ctx, base_cums, np.arange(1, n, dtype=np.int64), t)

    seed = _greedy_independent(ctx, t, all_cand)
    shared = _Shared(len(seed), seed, cfg)

    if cfg.symmetry_reduction and ctx.cyclic:
        gcds = np.gcd(all_cand, n)
        roots = [d for d in _divisors(n) if (all_cand == d).any()]
        branches = [
            (d, all_cand[(gcds >= d) & (all_cand > d)])
            for d in roots
        ]
    else:
        branches = [
            (int(e), all_cand[i + 1 :]) for i, e in enumerate(all_cand)
        ]

    def run_branch(root: int, cand: np.ndarray) -> None:
        if shared.aborted:
            return
        if 1 + len(cand) <= shared.best:
            return
        layers = ctx.append(ctx.empty_layers(t), root)
        if 1 > shared.best:
            shared.offer(1, [root])
        cums = ctx.cumulative(layers, t - 1)
        cand = _feasible(ctx, cums, cand, t)
        _tau_dfs(ctx, t, layers, cand, [root], shared)

    if cfg.thread_count > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=cfg.thread_count) as pool:
            list(pool.map(lambda br: run_branch(*br), branches))
    else:
        for root, cand in branches:
            run_branch(root, cand)

    witness = _subset_from_indices(G, shared.witness)
    return SearchResult(
        value=shared.best,
        witness=witness,
        exhaustive=not shared.aborted,
        nodes_explored=shared.nodes,
        elapsed=time.perf_counter() - start,
    )


def _phi_dfs(
    ctx: _Ctx,
    s: int,
    m: int,
    start_idx: int,
    layers: list[np.ndarray],
    cov: int,
    chosen: list[int],
    arow: list[int],
    shared: _Shared,
    found: list[list[int]],
) -> bool:
    if not shared.bump():
        return False
    n = ctx.n
    if cov == n:
        found.append(list(chosen))
        return True
    j = len(chosen)
    if j == m:
        return False
    # adding the remaining m - j elements contributes at most the number of
    # coefficient vectors whose support touches a new element
    if cov + (arow[m] - arow[j]) < n:
        return False
    for idx in range(start_idx, n):
        if shared.aborted:
            return False
        if n - idx < m - j:
            return False
        new_layers = ctx.append(layers, idx)
        cum = new_layers[0]
        for h in range(1, s + 1):
            cum = np.logical_or(cum, new_layers[h])
        new_cov = int(cum.sum())
        chosen.append(idx)
        if _phi_dfs(ctx, s, m, idx + 1, new_layers, new_cov, chosen, arow, shared, found):
            chosen.pop()
            return True
        chosen.pop()
    return False


def phi(G: GroupSpec, s: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact minimum size of an s-spanning subset of G, with witness.

    Iterative deepening on the subset size m, starting at the counting bound
    min{m : a(m,s) >= |G|}; within a level, subsets are enumerated in
    ascending index order with a coverage-count prune.  The empty set spans
    the trivial group, so phi(Z_1, s) = 0.
    """
    cfg = cfg or SearchConfig()
    if s < 1:
        raise ValueError("spanning order must be at least 1")
    start = time.perf_counter()
    n = G.order
    if n == 1:
        return SearchResult(0, Subset(G, ()), True, 0, time.perf_counter() - start)

    ctx = _Ctx(G, s)
    arow = [delannoy(j, s) for j in range(n + 1)]
    m0 = next(m for m in range(1, n + 1) if arow[m] >= n)
    shared = _Shared(0, [], cfg)

    for m in range(m0, n + 1):
        found: list[list[int]] = []
        base = ctx.empty_layers(s)
        # element 0 never helps a minimal spanning set; start from index 1
        if _phi_dfs(ctx, s, m, 1, base, 1, [], arow, shared, found):
            witness = _subset_from_indices(G, found[0])
            return SearchResult(
                value=m,
                witness=witness,
                exhaustive=not shared.aborted,
                nodes_explored=shared.nodes,
                elapsed=time.perf_counter() - start,
            )
        if shared.aborted:
            # every level below m is exhausted, so m is a certified lower bound
            return SearchResult(m, None, False, shared.nodes, time.perf_counter() - start)
    raise AssertionError("the whole group always spans itself")


def is_perfect_set(A: Subset, s: int) -> bool:
    """2s-independent, s-spanning, and |G| equal to the counting bound."""
    from .sumsets import is_s_spanning, is_t_independent

    return (
        A.group.order == delannoy(A.m, s)
        and is_t_independent(A, 2 * s)
        and is_s_spanning(A, s)
    )


def _perfect_dfs(
    ctx: _Ctx,
    s: int,
    m: int,
    layers: list[np.ndarray],
    cand: np.ndarray,
    chosen: list[int],
    arow: list[int],
    shared: _Shared,
    out: list[list[int]],
) -> None:
    if not shared.bump():
        return
    t = 2 * s
    n = ctx.n
    j = len(chosen)
    if j == m:
        cum = layers[0]
        for h in range(1, s + 1):
            cum = np.logical_or(cum, layers[h])
        if int(cum.sum()) == n:
            out.append(list(chosen))
        return
    if len(cand) < m - j:
        return
    cum = layers[0]
    for h in range(1, s + 1):
        cum = np.logical_or(cum, layers[h])
    if int(cum.sum()) + (arow[m] - arow[j]) < n:
        return
    for i in range(len(cand)):
        if shared.aborted:
            return
        if len(cand) - i < m - j:
            return
        e = int(cand[i])
        new_layers = ctx.append(layers, e)
        rest = cand[i + 1 :]
        cums = ctx.cumulative(new_layers, t - 1)
        new_cand = _feasible(ctx, cums, rest, t)
        chosen.append(e)
        _perfect_dfs(ctx, s, m, new_layers, new_cand, chosen, arow, shared, out)
        chosen.pop()


def find_perfect_sets(
    m: int, s: int, cfg: SearchConfig | None = None
) -> list[tuple[GroupSpec, Subset]]:
    """All size-m subsets that are s-spanning and 2s-independent in any
    abelian group whose order equals the counting bound a(m, s).

    Every witness is returned; unit multiples are NOT collapsed.  Use
    unit_orbit_representative to group cyclic witnesses into orbits.
    """
    cfg = cfg or SearchConfig()
    if m < 1 or s < 1:
        raise ValueError("need m >= 1 and s >= 1")
    order = delannoy(m, s)
    arow = [delannoy(j, s) for j in range(m + 1)]
    results: list[tuple[GroupSpec, Subset]] = []
    for G in all_abelian_groups(order):
        ctx = _Ctx(G, 2 * s)
        shared = _Shared(0, [], cfg)
        base = ctx.empty_layers(2 * s)
        cums = ctx.cumulative(base, 2 * s - 1)
        cand = _feasible(ctx, cums, np.arange(1, ctx.n, dtype=np.int64), 2 * s)
        out: list[list[int]] = []
        _perfect_dfs(ctx, s, m, base, cand, [], arow, shared, out)
        for indices in out:
            results.append((G, _subset_from_indices(G, indices)))
    return results


def conjecture_probe_perfect(
    max_m: int,
    max_s: int,
    cfg: SearchConfig | None = None,
    order_cap: int = 256,
) -> list[ProbeCell]:
    """Search every cell m >= 3, s >= 2 within range for perfect sets.

    Reports findings only; cells whose group order exceeds the cap are
    marked not searched.
    """
    cells = []
    for m in range(3, max_m + 1):
        for s in range(2, max_s + 1):
            order = delannoy(m, s)
            if order > order_cap:
                cells.append(ProbeCell(m, s, order, False, ()))
                continue
            witnesses = tuple(find_perfect_sets(m, s, cfg))
            cells.append(ProbeCell(m, s, order, True, witnesses))
    return cells


def unit_orbit_representative(A: Subset) -> Subset:
    """Lexicographically least unit multiple of A (cyclic groups only)."""
    G = A.group
    n = G.orders[0] if G.is_cyclic else None
    if n is None:
        raise ValueError("unit orbits are only defined for cyclic groups")
    best = None
    for u in units(G):
        candidate = tuple(sorted((u * a.residues[0]) % n for a in A.elements))
        if best is None or candidate < best:
            best = candidate
    return Subset.of(G, *best) if best is not None else A
