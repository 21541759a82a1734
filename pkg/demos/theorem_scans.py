#!/usr/bin/env python3
"""Exhaustive scans: reflection invariance, its converse, the variance
ordering conjecture, alternative roots, block comparisons."""

from itertools import islice

from fibtree import (
    check_block_alternating,
    iter_conjecture_violations,
    scan_converse,
    scan_reflection,
    scan_roots,
)

report = scan_reflection(14)
print(f"reflection: {report.checked} codes checked, "
      f"{len(report.violations)} violations")
print()

print("value classes of length 5 that go beyond reflection:")
for cls in scan_converse(5):
    if cls.beyond_reflection:
        print(f"  F = {cls.value}: {', '.join(cls.codes)}")
print()

print("lower variance does not force a larger value; the smallest cases:")
for pair in islice(iter_conjecture_violations(5), 3):
    print(f"  {pair['low_var_code']} (var {pair['low_var']}, "
          f"F = {pair['low_var_value']})  vs  "
          f"{pair['high_var_code']} (var {pair['high_var']}, "
          f"F = {pair['high_var_value']})")
print()

roots = scan_roots(30, 8)
print(f"roots keeping reflection invariance (checked {roots.checked}): "
      f"{roots.survivors}")
print()

print("block 0^j 1^j stays below alternating (01)^j:")
for j in range(2, 7):
    v = check_block_alternating(j)
    print(f"  j = {j}: block {v.block}, alternating {v.alternating}")
