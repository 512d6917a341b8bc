"""Divisor-maximum table by dynamic programming over prime slots.

The search space is one slot per usable irreducible, ordered by degree.
Every maximizer assigns non-increasing exponents along that slot order
(a higher exponent on a higher-degree irreducible could be swapped down
to reach the same tau at lower degree, contradicting maximality at the
exact degree, since the maximum is strictly increasing in the degree).
The DP state is (slot index, remaining degree budget, exponent cap); one
memoized pass yields T(n) for every n at once and a backtracking pass
recovers every optimal exponent assignment, which is a factorization
pattern.  All arithmetic is exact.

Records carry the markers of the distinguished families: SHC for degrees
holding a superior maximizer, SSHC for the strict half-step members in
between.  A versioned JSON cache (big integers as decimal strings) makes
repeated table requests cheap; writes are atomic via os.replace.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, replace
from pathlib import Path

from .divisor_core import ExponentPattern, _canonical_order, pattern, realization_count
from .irreducibles import count_irreducibles, ensure_prime_power
from .superior import iter_spoints, shc_pattern, sshc_family

MARKER_NONE = "none"
MARKER_SSHC = "SSHC"
MARKER_SHC = "SHC"

CACHE_FORMAT_VERSION = 1


@dataclass(frozen=True)
class HCRecord:
    """Everything known about the divisor maximum at one degree."""

    degree: int
    tau: int
    patterns: tuple[ExponentPattern, ...]
    total_polynomials: int
    marker: str = MARKER_NONE


def _slot_degrees(q: int, max_degree: int) -> list[int]:
    """Degrees of the irreducible slots the DP ranges over, ascending.

    Classes are taken whole up to the smallest b whose cumulative degree
    mass sum(a * pi(a), a <= b) reaches max_degree: any maximizer of
    degree <= max_degree fits, because touching class b+1 requires filling
    all lower classes first, which already exceeds the budget.  Slots per
    class are additionally capped at max_degree // class degree, which no
    pattern within budget can exceed.
    """
    mass = 0
    b = 0
    while mass < max_degree:
        b += 1
        mass += b * count_irreducibles(q, b)
    if mass < max_degree:
        raise AssertionError(f"slot cutoff failed for q={q}, max_degree={max_degree}")
    slots = []
    for k in range(1, b + 1):
        slots.extend([k] * min(count_irreducibles(q, k), max_degree // k))
    return slots


def _compute_records(q: int, max_degree: int) -> list[HCRecord]:
    slots = _slot_degrees(q, max_degree)
    n_slots = len(slots)
    memo: dict[tuple[int, int, int], int | None] = {}

    def best(i: int, budget: int, cap: int) -> int | None:
        """Max tau over monotone exponent assignments to slots i.. spending
        exactly budget; None when unreachable."""
        if budget == 0:
            return 1
        if i == n_slots:
            return None
        k = slots[i]
        top = min(cap, budget // k)
        key = (i, budget, top)
        if key in memo:
            return memo[key]
        result = None
        for e in range(top, 0, -1):
            sub = best(i + 1, budget - e * k, e)
            if sub is not None:
                candidate = (e + 1) * sub
                if result is None or candidate > result:
                    result = candidate
        memo[key] = result
        return result

    def collect(
        i: int, budget: int, cap: int, need: int, prefix: tuple[tuple[int, int], ...]
    ) -> list[tuple[tuple[int, int], ...]]:
        """All monotone assignments from state (i, budget, cap) whose tau
        product equals need."""
        if budget == 0:
            return [prefix] if need == 1 else []
        out = []
        k = slots[i]
        for e in range(min(cap, budget // k), 0, -1):
            sub = best(i + 1, budget - e * k, e)
            if sub is not None and (e + 1) * sub == need:
                out.extend(collect(i + 1, budget - e * k, e, sub, prefix + ((k, e),)))
        return out

    records = []
    for n in range(max_degree + 1):
        tau = best(0, n, n)
        if tau is None:
            raise AssertionError(f"degree {n} unreachable; slot model broken")
        assignments = collect(0, n, n, tau, ())
        patterns = []
        for assignment in assignments:
            grouped: dict[int, list[int]] = {}
            for k, e in assignment:
                grouped.setdefault(k, []).append(e)
            patterns.append(pattern(q, grouped))
        ordered = _canonical_order(patterns)
        total = sum(realization_count(p) for p in ordered)
        records.append(HCRecord(n, tau, ordered, total))
    return records


def annotate_markers(records: list[HCRecord], q: int) -> list[HCRecord]:
    """Return records with SHC / SSHC markers filled in.

    Walks grid points in increasing order; each contributes its superior
    maximizer's degree (SHC) and the degrees of the strict intermediate
    family members (SSHC).  Consecutive superior degrees bracket each
    family, so the walk stops once a family lies entirely above the table.
    """
    if not records:
        return []
    max_degree = records[-1].degree
    shc_degrees: set[int] = set()
    sshc_degrees: set[int] = set()
    for point in iter_spoints():
        family = sshc_family(point, q)
        top = family[0].degree
        bottom = family[-1].degree
        if bottom > max_degree:
            break
        if top <= max_degree:
            shc_degrees.add(top)
        for entry in family[1:-1]:
            if entry.degree <= max_degree:
                sshc_degrees.add(entry.degree)
    overlap = shc_degrees & sshc_degrees
    if overlap:
        raise AssertionError(f"degree marked both ways: {sorted(overlap)}")
    out = []
    for record in records:
        if record.degree in shc_degrees:
            out.append(replace(record, marker=MARKER_SHC))
        elif record.degree in sshc_degrees:
            out.append(replace(record, marker=MARKER_SSHC))
        else:
            out.append(record)
    return out


def _pattern_to_json(p: ExponentPattern) -> dict:
    return {
        "classes": [
            {"class_degree": k, "exponents": list(exponents)} for k, exponents in p.classes
        ],
        "realizations": str(realization_count(p)),
    }


def _pattern_from_json(q: int, doc: dict) -> ExponentPattern:
    return pattern(q, {c["class_degree"]: c["exponents"] for c in doc["classes"]})


def _record_to_json(record: HCRecord) -> dict:
    return {
        "degree": record.degree,
        "tau": str(record.tau),
        "marker": record.marker,
        "total_polynomials": str(record.total_polynomials),
        "patterns": [_pattern_to_json(p) for p in record.patterns],
    }


def _record_from_json(q: int, doc: dict) -> HCRecord:
    return HCRecord(
        degree=doc["degree"],
        tau=int(doc["tau"]),
        patterns=tuple(_pattern_from_json(q, p) for p in doc["patterns"]),
        total_polynomials=int(doc["total_polynomials"]),
        marker=doc["marker"],
    )


def _cache_path(cache_dir: str | Path, q: int, max_degree: int) -> Path:
    name = f"hc_table_q{q}_n{max_degree}_v{CACHE_FORMAT_VERSION}.json"
    return Path(cache_dir) / name


def _load_cache(path: Path, q: int, max_degree: int) -> list[HCRecord] | None:
    try:
        doc = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
    if (
        doc.get("format_version") != CACHE_FORMAT_VERSION
        or doc.get("q") != q
        or doc.get("max_degree") != max_degree
    ):
        return None
    try:
        records = [_record_from_json(q, r) for r in doc["records"]]
    except (KeyError, TypeError, ValueError):
        return None
    if [r.degree for r in records] != list(range(max_degree + 1)):
        return None
    return records


def _store_cache(path: Path, q: int, max_degree: int, records: list[HCRecord]) -> None:
    doc = {
        "format_version": CACHE_FORMAT_VERSION,
        "q": q,
        "max_degree": max_degree,
        "records": [_record_to_json(r) for r in records],
    }
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(doc, handle, indent=2, sort_keys=True)
            handle.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def hc_table(q: int, max_degree: int, cache_dir: str | Path | None = None) -> list[HCRecord]:
    """Records for every degree 0..max_degree, markers included.

    With cache_dir set, a valid cached table is returned as-is and fresh
    results are written back atomically; a stale or unreadable cache file
    is silently recomputed.
    """
    ensure_prime_power(q)
    if max_degree < 0:
        raise ValueError(f"max_degree must be nonnegative, got {max_degree}")
    path = _cache_path(cache_dir, q, max_degree) if cache_dir is not None else None
    if path is not None:
        cached = _load_cache(path, q, max_degree)
        if cached is not None:
            return cached
    records = annotate_markers(_compute_records(q, max_degree), q)
    if path is not None:
        _store_cache(path, q, max_degree, records)
    return records
