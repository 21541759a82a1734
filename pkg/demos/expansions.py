#!/usr/bin/env python3
"""Values as two-term Fibonacci combinations, and the recursive tree view."""

from fibtree import (
    decode_expansion,
    encode_expansion,
    expand_recursive,
    fib,
    flatten_products,
    pure_fibonacci,
    tree_to_jsonable,
    tree_value,
    value,
)

code = "10011"
e = encode_expansion(code)
print(f"F[{code}] = {value(code)} = {e.a}*fib({e.k}) + {e.b}*fib({e.k + 2})"
      f" = {e.a}*{fib(e.k)} + {e.b}*{fib(e.k + 2)}")
print(f"decoding {e} gives back {decode_expansion(e)!r}")
print()

print("all-ones codes are pure Fibonacci numbers:")
for n in range(1, 8):
    print(f"  F[{'1' * n}] = fib({n + 4}) = {pure_fibonacci('1' * n)}")
print()

tree = expand_recursive(code)
print(f"recursive expansion of {code}:")
print(f"  tree     {tree_to_jsonable(tree)}")
print(f"  products {flatten_products(tree)}")
print(f"  value    {tree_value(tree)}")
