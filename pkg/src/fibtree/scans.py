"""Exhaustive verification campaigns over the code space.

Each scan enumerates a declared scope, checks one statement, and returns
a report whose violation records carry enough data to replay the check.
Scans are deterministic: the same parameters produce the same report
regardless of the parallelism degree, because the code space is
partitioned by fixed prefixes and partial results are merged in
partition order.  Wall-clock timing is kept out of the serialized
payload so that re-runs compare byte-identical.
"""

from __future__ import annotations

import time
from bisect import bisect_right, insort
from dataclasses import dataclass, field
from fractions import Fraction
from multiprocessing import Pool

from .engine import ROOT, State, apply_step, evaluate, value
from .errors import DomainError
from .metrics import cluster_variance, weight

_PARTITION_BITS = 4


# ---------------------------------------------------------------- reports

@dataclass
class ScanReport:
    scope: str
    checked: int
    violations: list = field(default_factory=list)
    elapsed_ms: float | None = None
    # set only when the violations list was truncated to a cap
    violations_total: int | None = None

    def to_jsonable(self) -> dict:
        # elapsed is intentionally nulled: payloads must be reproducible
        out = {
            "scope": self.scope,
            "checked": self.checked,
            "violations": self.violations,
            "elapsed_ms": None,
        }
        if self.violations_total is not None:
            out["violations_total"] = self.violations_total
        return out


@dataclass(frozen=True)
class ValueClass:
    value: int
    codes: tuple[str, ...]
    beyond_reflection: bool

    def to_jsonable(self) -> dict:
        return {
            "value": self.value,
            "codes": list(self.codes),
            "beyond_reflection": self.beyond_reflection,
        }


@dataclass(frozen=True)
class BlockAlternatingVerdict:
    j: int
    block: int
    block_reflected: int
    alternating: int
    alternating_reflected: int

    @property
    def ok(self) -> bool:
        return (
            self.block == self.block_reflected
            and self.alternating == self.alternating_reflected
            and self.block < self.alternating
        )

    def to_jsonable(self) -> dict:
        return {
            "j": self.j,
            "block": self.block,
            "block_reflected": self.block_reflected,
            "alternating": self.alternating,
            "alternating_reflected": self.alternating_reflected,
            "ok": self.ok,
        }


@dataclass
class RootScanReport:
    scope: str
    checked: int
    survivors: list[State]
    elapsed_ms: float | None = None

    def to_jsonable(self) -> dict:
        return {
            "scope": self.scope,
            "checked": self.checked,
            "survivors": [list(s) for s in self.survivors],
            "elapsed_ms": None,
        }


# ------------------------------------------------------- value tables

def _subtree_values(args: tuple[int, int]) -> list[list[int]]:
    """Values of all codes below a fixed prefix, one list per extra length.

    The codes extending prefix p at total length L occupy the contiguous
    index range [p << (L-P), (p+1) << (L-P)), so the parent can splice
    worker results without reordering.
    """
    prefix, max_len = args
    a, b, c = evaluate(format(prefix, f"0{_PARTITION_BITS}b"))
    depth = max_len - _PARTITION_BITS
    out = [[0] * (1 << d) for d in range(1, depth + 1)]
    stack = [(a, b, 0, 0)]
    while stack:
        a, b, rel, d = stack.pop()
        if d:
            out[d - 1][rel] = a + b
        if d < depth:
            stack.append((b, a + b, (rel << 1) | 1, d + 1))
            stack.append((a, a + b, rel << 1, d + 1))
    return out


def build_value_tables(max_len: int, jobs: int = 1) -> list[list[int]]:
    """tables[L][code_as_int] = value of the code, for 0 <= L <= max_len."""
    if max_len < 0:
        raise DomainError("max_len must be >= 0")
    shallow = min(max_len, _PARTITION_BITS)
    tables: list[list[int]] = [[0] * (1 << L) for L in range(max_len + 1)]
    stack = [(1, 2, 0, 0)]
    while stack:
        a, b, code, L = stack.pop()
        tables[L][code] = a + b
        if L < shallow:
            stack.append((b, a + b, (code << 1) | 1, L + 1))
            stack.append((a, a + b, code << 1, L + 1))
    if max_len <= _PARTITION_BITS:
        return tables
    parts = [(p, max_len) for p in range(1 << _PARTITION_BITS)]
    if jobs > 1:
        with Pool(min(jobs, len(parts))) as pool:
            results = pool.map(_subtree_values, parts)
    else:
        results = [_subtree_values(p) for p in parts]
    for prefix, sub in zip(range(1 << _PARTITION_BITS), results):
        for d, row in enumerate(sub, start=1):
            L = _PARTITION_BITS + d
            base = prefix << d
            tables[L][base:base + (1 << d)] = row
    return tables


def _bit_reverse(x: int, length: int) -> int:
    r = 0
    for _ in range(length):
        r = (r << 1) | (x & 1)
        x >>= 1
    return r


def _code_str(x: int, length: int) -> str:
    return format(x, f"0{length}b") if length else ""


# ------------------------------------------------------------ the scans

def scan_reflection(max_len: int, jobs: int = 1) -> ScanReport:
    """Check value(t) == value(reflect(t)) for every code of length <= max_len."""
    if max_len < 1:
        raise DomainError("max_len must be >= 1")
    t0 = time.perf_counter()
    tables = build_value_tables(max_len, jobs)
    violations = []
    checked = 0
    for L in range(1, max_len + 1):
        row = tables[L]
        checked += 1 << L
        for code in range(1 << L):
            rev = _bit_reverse(code, L)
            if code < rev and row[code] != row[rev]:
                violations.append({
                    "length": L,
                    "code": _code_str(code, L),
                    "reflected": _code_str(rev, L),
                    "value": row[code],
                    "reflected_value": row[rev],
                })
    report = ScanReport(
        scope=f"all codes of length 1..{max_len}",
        checked=checked,
        violations=violations,
    )
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def scan_converse(length: int, jobs: int = 1) -> list[ValueClass]:
    """Group codes of one length by value; flag classes that go beyond reflection.

    Every class with at least two codes is returned.  A class is flagged
    when it contains codes that are neither equal nor mutual reflections,
    which is exactly a counterexample to the converse of the reflection
    principle at this length.
    """
    if length < 1:
        raise DomainError("length must be >= 1")
    row = build_value_tables(length, jobs)[length]
    by_value: dict[int, list[int]] = {}
    for code, val in enumerate(row):
        by_value.setdefault(val, []).append(code)
    classes = []
    for val in sorted(by_value):
        codes = by_value[val]
        if len(codes) < 2:
            continue
        # only a plain reflection pair {t, refl(t)} stays unflagged
        beyond = len(codes) > 2 or _bit_reverse(codes[0], length) != codes[1]
        classes.append(ValueClass(
            value=val,
            codes=tuple(_code_str(c, length) for c in codes),
            beyond_reflection=beyond,
        ))
    return classes


def check_block_alternating(j: int) -> BlockAlternatingVerdict:
    """Compare the block code 0^j 1^j with the alternating code (01)^j."""
    if j < 2:
        raise DomainError("block comparison needs j >= 2")
    return BlockAlternatingVerdict(
        j=j,
        block=value("0" * j + "1" * j),
        block_reflected=value("1" * j + "0" * j),
        alternating=value("01" * j),
        alternating_reflected=value("10" * j),
    )


def iter_conjecture_violations(length: int, weight_filter: int | None = None,
                               jobs: int = 1):
    """Every pair of equal-length, equal-weight codes where the strictly
    smaller cluster variance does not come with a strictly larger value.

    Yields one dict per violating pair, in a fixed deterministic order
    (weight ascending, then the higher-variance code by (value, code),
    then its lower-variance partners by (value, code)), so results can be
    streamed and compared byte for byte across runs.  The pair count can
    be in the millions at length 14, hence a generator.
    """
    if length < 1:
        raise DomainError("length must be >= 1")
    row = build_value_tables(length, jobs)[length]
    buckets: dict[int, list[tuple[Fraction, int, int]]] = {}
    for code in range(1 << length):
        text = _code_str(code, length)
        w = weight(text)
        if weight_filter is not None and w != weight_filter:
            continue
        buckets.setdefault(w, []).append((cluster_variance(text), row[code], code))
    for w in sorted(buckets):
        items = sorted(buckets[w], key=lambda r: (r[0], r[1], r[2]))
        # previous strictly-lower-variance entries, ordered by (value, code)
        prev: list[tuple[int, int, Fraction]] = []
        prev_vals: list[int] = []
        start = 0
        for end in range(1, len(items) + 1):
            if end < len(items) and items[end][0] == items[start][0]:
                continue
            group = items[start:end]
            for var_j, val_j, code_j in sorted(group, key=lambda r: (r[1], r[2])):
                cut = bisect_right(prev_vals, val_j)
                for val_i, code_i, var_i in prev[:cut]:
                    yield {
                        "length": length,
                        "weight": w,
                        "low_var_code": _code_str(code_i, length),
                        "high_var_code": _code_str(code_j, length),
                        "low_var": str(var_i),
                        "high_var": str(var_j),
                        "low_var_value": val_i,
                        "high_var_value": val_j,
                    }
            for var_i, val_i, code_i in group:
                insort(prev, (val_i, code_i, var_i))
                insort(prev_vals, val_i)
            start = end


def scan_conjecture(length: int, weight_filter: int | None = None,
                    jobs: int = 1,
                    violation_cap: int | None = None) -> ScanReport:
    """Report form of iter_conjecture_violations.

    violation_cap bounds how many pairs are kept in the report (the full
    count still lands in violations_total); None keeps every pair, which
    is fine up to length 12 or so but runs to millions of pairs beyond.
    """
    t0 = time.perf_counter()
    violations: list[dict] = []
    total = 0
    for pair in iter_conjecture_violations(length, weight_filter, jobs):
        total += 1
        if violation_cap is None or len(violations) < violation_cap:
            violations.append(pair)
    checked = 1 << length
    if weight_filter is not None:
        checked = sum(1 for c in range(1 << length)
                      if _code_str(c, length).count("1") == weight_filter)
    scope = f"codes of length {length}"
    if weight_filter is not None:
        scope += f" with weight {weight_filter}"
    report = ScanReport(scope=scope, checked=checked, violations=violations)
    if total != len(violations):
        report.violations_total = total
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report


def scan_roots(max_entry: int, depth: int) -> RootScanReport:
    """Which roots (a, b, a+b) keep the reflection identity?

    A root is evaluated from its value-ordered pair: listing (2, 1, 3)
    next to (1, 2, 3) only makes sense if evaluation does not depend on
    which of the first two slots holds the smaller entry.  The cheap
    depth-2 test F[01] == F[10] is applied first; survivors get the full
    reflection check over all codes of length <= depth.
    """
    if max_entry < 2:
        raise DomainError("max_entry must be >= 2")
    if depth < 2:
        raise DomainError("depth must be >= 2")
    from math import gcd

    t0 = time.perf_counter()
    checked = 0
    survivors = []
    for a in range(1, max_entry + 1):
        for b in range(1, max_entry + 1):
            if gcd(a, b) != 1:
                continue
            checked += 1
            root = (min(a, b), max(a, b), a + b)
            if value("01", root) != value("10", root):
                continue
            ok = True
            for L in range(1, depth + 1):
                vals = [0] * (1 << L)
                stack = [(root[0], root[1], 0, 0)]
                while stack:
                    x, y, code, d = stack.pop()
                    if d == L:
                        vals[code] = x + y
                        continue
                    stack.append((y, x + y, (code << 1) | 1, d + 1))
                    stack.append((x, x + y, code << 1, d + 1))
                if any(vals[c] != vals[_bit_reverse(c, L)] for c in range(1 << L)):
                    ok = False
                    break
            if ok:
                survivors.append((a, b, a + b))
    report = RootScanReport(
        scope=f"roots (a, b, a+b) with a, b <= {max_entry}, coprime, depth {depth}",
        checked=checked,
        survivors=sorted(survivors),
    )
    report.elapsed_ms = (time.perf_counter() - t0) * 1000
    return report
