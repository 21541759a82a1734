#!/usr/bin/env python3
"""Fraction labels of the tree and the mediant recurrences that move them."""

from fibtree import check_generation, enumerate_codes, f_L, f_R, u, v

print("fraction labels along 0 -> 01 -> 011:")
for code in ("", "0", "01", "011"):
    name = code if code else "(root)"
    print(f"  {name:>6}: u = {u(code)}, v = {v(code)}")
print()

print("one generation of labels per length:")
for length in range(1, 4):
    labels = sorted(u(c) for c in enumerate_codes(length))
    print(f"  length {length}: {', '.join(str(x) for x in labels)}")
print()

x = u("01")
print(f"local moves from u(01) = {x}:")
print(f"  append 0: f_L({x}) = {f_L(x)} = u(010)")
print(f"  append 1: 1/f_R({x}) = {1 / f_R(x)} = u(011)")
print()

verdict = check_generation(6)
print(f"generation 6: state side {verdict.state_side} labels, "
      f"path side {verdict.path_side}, equal: {verdict.equal}")
