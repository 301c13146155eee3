"""Bundled value tables and recomputation reports.

Each table stores one classification of cyclic-group values as runs of
orders per value.  Orders listed under "omitted" are absent from the
published classification; orders under "convention" are published under a
different convention for degenerate cases and are skipped in comparisons.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from importlib import resources

from .formulas import tau3_cyclic
from .groups import GroupSpec
from .search import SearchConfig, SearchResult, phi, tau

__all__ = [
    "Table",
    "TableRow",
    "TableReport",
    "Design3Row",
    "table_names",
    "load_table",
    "published_value",
    "listed_orders",
    "reproduce_table",
    "reproduce_tau3_formula",
    "load_design3_status",
]

_TABLE_NAMES = ("tau4", "tau5", "tau6", "phi2")


@dataclass(frozen=True)
class Table:
    name: str
    kind: str
    parameter: int
    source: str
    classes: dict[int, tuple[tuple[int, int], ...]]
    omitted: tuple[int, ...]
    convention: tuple[int, ...]


@dataclass(frozen=True)
class TableRow:
    n: int
    published: int
    computed: int
    witness: tuple[int, ...] | None
    nodes: int
    millis: int
    exhaustive: bool

    @property
    def match(self) -> bool:
        return self.published == self.computed


@dataclass(frozen=True)
class TableReport:
    table: str
    kind: str
    parameter: int
    rows: tuple[TableRow, ...]
    skipped: tuple[int, ...]
    elapsed: float

    @property
    def mismatches(self) -> tuple[int, ...]:
        return tuple(row.n for row in self.rows if not row.match)


@dataclass(frozen=True)
class Design3Row:
    d: int
    minimum: int
    exists: tuple[int, ...]
    exists_from: int
    nonexistence: tuple[int, ...]
    open: tuple[int, ...]


def table_names() -> tuple[str, ...]:
    return _TABLE_NAMES


def _read_data(filename: str) -> dict:
    text = resources.files("sumsphere").joinpath("data", filename).read_text(encoding="utf-8")
    return json.loads(text)


def load_table(name: str) -> Table:
    if name not in _TABLE_NAMES:
        raise ValueError(f"unknown table {name!r}; available: {', '.join(_TABLE_NAMES)}")
    raw = _read_data(name + ".json")
    classes = {
        int(value): tuple((int(lo), int(hi)) for lo, hi in runs)
        for value, runs in raw["classes"].items()
    }
    return Table(
        name=raw["name"],
        kind=raw["kind"],
        parameter=int(raw["parameter"]),
        source=raw["source"],
        classes=classes,
        omitted=tuple(int(n) for n in raw["omitted"]),
        convention=tuple(int(n) for n in raw["convention"]),
    )


def published_value(table: Table, n: int) -> int | None:
    for value, runs in table.classes.items():
        for lo, hi in runs:
            if lo <= n <= hi:
                return value
    return None


def listed_orders(table: Table) -> tuple[int, ...]:
    orders = set()
    for runs in table.classes.values():
        for lo, hi in runs:
            orders.update(range(lo, hi + 1))
    return tuple(sorted(orders))


def _compute(kind: str, parameter: int, n: int, config: SearchConfig, cache=None) -> SearchResult:
    group = GroupSpec((n,))
    if cache is not None:
        hit = cache.lookup(group, kind, parameter)
        if hit is not None:
            return hit
    result = tau(group, parameter, config) if kind == "tau" else phi(group, parameter, config)
    if cache is not None:
        cache.store(group, kind, parameter, result)
    return result


def _row(n: int, published: int, result: SearchResult) -> TableRow:
    witness = None
    if result.witness is not None:
        witness = tuple(g.residues[0] for g in result.witness.elements)
    return TableRow(
        n=n,
        published=published,
        computed=result.value,
        witness=witness,
        nodes=result.nodes_explored,
        millis=round(result.elapsed * 1000),
        exhaustive=result.exhaustive,
    )


def reproduce_table(
    name: str,
    n_from: int | None = None,
    n_to: int | None = None,
    config: SearchConfig | None = None,
    cache=None,
) -> TableReport:
    """Recompute every listed order of a table and report agreement.

    Convention cells are skipped, not compared.  Orders outside
    [n_from, n_to] are ignored when either bound is given.
    """
    table = load_table(name)
    cfg = config or SearchConfig()
    rows = []
    skipped = []
    start = time.perf_counter()
    for n in listed_orders(table):
        if n_from is not None and n < n_from:
            continue
        if n_to is not None and n > n_to:
            continue
        if n in table.convention:
            skipped.append(n)
            continue
        result = _compute(table.kind, table.parameter, n, cfg, cache)
        rows.append(_row(n, published_value(table, n), result))
    return TableReport(
        table=table.name,
        kind=table.kind,
        parameter=table.parameter,
        rows=tuple(rows),
        skipped=tuple(skipped),
        elapsed=time.perf_counter() - start,
    )


def reproduce_tau3_formula(
    n_from: int | None = None,
    n_to: int | None = None,
    config: SearchConfig | None = None,
    cache=None,
) -> TableReport:
    """Search values of the 3-independence number against the three-case
    closed form, over 4 <= n <= 60 by default."""
    lo = 4 if n_from is None else max(n_from, 2)
    hi = 60 if n_to is None else n_to
    cfg = config or SearchConfig()
    rows = []
    start = time.perf_counter()
    for n in range(lo, hi + 1):
        result = _compute("tau", 3, n, cfg, cache)
        rows.append(_row(n, tau3_cyclic(n), result))
    return TableReport(
        table="tau3-formula",
        kind="tau",
        parameter=3,
        rows=tuple(rows),
        skipped=(),
        elapsed=time.perf_counter() - start,
    )


def load_design3_status() -> tuple[Design3Row, ...]:
    raw = _read_data("design3_status.json")
    return tuple(
        Design3Row(
            d=int(row["d"]),
            minimum=int(row["minimum"]),
            exists=tuple(int(n) for n in row["exists"]),
            exists_from=int(row["exists_from"]),
            nonexistence=tuple(int(n) for n in row["nonexistence"]),
            open=tuple(int(n) for n in row["open"]),
        )
        for row in raw["rows"]
    )
