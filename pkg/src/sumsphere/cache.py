"""Append-only JSON-lines result cache with verification on read.

Entries are keyed by (group label, kind, parameter).  A cached value is
trusted only when it is exhaustive and its witness re-verifies against the
predicate it claims; anything else, including unparsable lines, degrades to
recomputation.  The default path comes from the SUMSPHERE_CACHE environment
variable.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .groups import GroupSpec, format_element, label, parse_group, parse_subset_literal
from .search import SearchResult
from .sumsets import Subset, is_s_spanning, is_t_independent

__all__ = ["CacheEntry", "ResultCache", "default_cache_path", "open_cache"]

ENV_VAR = "SUMSPHERE_CACHE"


@dataclass(frozen=True)
class CacheEntry:
    group: str
    kind: str
    param: int
    value: int
    witness: str | None
    exhaustive: bool
    nodes: int


def default_cache_path() -> str | None:
    path = os.environ.get(ENV_VAR)
    return path or None


def open_cache(path: str | None = None) -> "ResultCache | None":
    """Cache at the explicit path, else at the environment default, else none."""
    resolved = path or default_cache_path()
    return ResultCache(resolved) if resolved else None


def _parse_line(line: str) -> CacheEntry | None:
    try:
        raw = json.loads(line)
        witness = raw.get("witness")
        if witness is not None and not isinstance(witness, str):
            return None
        entry = CacheEntry(
            group=str(raw["group"]),
            kind=str(raw["kind"]),
            param=int(raw["param"]),
            value=int(raw["value"]),
            witness=witness,
            exhaustive=bool(raw["exhaustive"]),
            nodes=int(raw.get("nodes", 0)),
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError):
        return None
    if entry.kind not in ("tau", "phi") or entry.param < 1 or entry.value < 0:
        return None
    return entry


def _witness_subset(group: GroupSpec, witness: str | None) -> Subset | None:
    if witness is None:
        return None
    if witness == "":
        return Subset(group, ())
    return Subset(group, tuple(parse_subset_literal(group, witness)))


def _verifies(entry: CacheEntry) -> bool:
    try:
        group = parse_group(entry.group)
        subset = _witness_subset(group, entry.witness)
    except ValueError:
        return False
    if subset is None:
        return False
    if entry.kind == "tau":
        return subset.m == entry.value and is_t_independent(subset, entry.param)
    return subset.m == entry.value and is_s_spanning(subset, entry.param)


class ResultCache:
    """One JSONL file; reads scan the whole file, writes append a line."""

    def __init__(self, path: str) -> None:
        self.path = path
        self._entries: dict[tuple[str, str, int], CacheEntry] = {}
        self._load()

    def _load(self) -> None:
        if not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                entry = _parse_line(line)
                if entry is None:
                    continue
                self._entries[(entry.group, entry.kind, entry.param)] = entry

    def lookup(self, group: GroupSpec, kind: str, param: int) -> SearchResult | None:
        entry = self._entries.get((label(group), kind, param))
        if entry is None or not entry.exhaustive:
            return None
        if not _verifies(entry):
            return None
        witness = _witness_subset(group, entry.witness)
        return SearchResult(
            value=entry.value,
            witness=witness,
            exhaustive=True,
            nodes_explored=entry.nodes,
            elapsed=0.0,
        )

    def store(self, group: GroupSpec, kind: str, param: int, result: SearchResult) -> None:
        # partial results are not worth replaying under a different budget
        if not result.exhaustive or result.witness is None:
            return
        witness = ";".join(format_element(g) for g in result.witness.elements)
        entry = CacheEntry(
            group=label(group),
            kind=kind,
            param=param,
            value=result.value,
            witness=witness,
            exhaustive=True,
            nodes=result.nodes_explored,
        )
        self._entries[(entry.group, entry.kind, entry.param)] = entry
        payload = {
            "group": entry.group,
            "kind": entry.kind,
            "param": entry.param,
            "value": entry.value,
            "witness": entry.witness,
            "exhaustive": entry.exhaustive,
            "nodes": entry.nodes,
        }
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, sort_keys=True) + "\n")
