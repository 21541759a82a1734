"""Fibonacci expansions of code values.

Every code containing a zero corresponds to exactly one expansion
a*F(k) + b*F(k+2) with gcd(a, b) = 1: the run of leading ones fixes k,
the bit after the first zero orients the pair, and the remaining bits,
read in reverse, rebuild the coefficient pair as a tree state.  All-ones
codes fall outside the bijection; their value is a single Fibonacci
number.  The expansion recurses, since every coefficient is itself an
initial value or the value of a shorter code, giving a nested tree whose
leaves are plain Fibonacci numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Union

from .engine import as_code, decode_state, evaluate
from .errors import DomainError

_fib_cache = [0, 1, 1]


def fib(n: int) -> int:
    """F(1) = F(2) = 1 indexing, so the root state is (F(2), F(3), F(4))."""
    if n < 1:
        raise DomainError("Fibonacci index must be >= 1")
    while len(_fib_cache) <= n:
        _fib_cache.append(_fib_cache[-1] + _fib_cache[-2])
    return _fib_cache[n]


@dataclass(frozen=True)
class Expansion:
    a: int
    b: int
    k: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise DomainError("expansion coefficients must be positive")
        if self.k < 2:
            raise DomainError("expansion index k must be >= 2")
        if gcd(self.a, self.b) != 1:
            raise DomainError(f"expansion coefficients {self.a},{self.b} must be coprime")

    def value(self) -> int:
        return self.a * fib(self.k) + self.b * fib(self.k + 2)


def pure_fibonacci(code: str) -> int:
    """Value of an all-ones code: a single Fibonacci number F(len + 4)."""
    code = as_code(code)
    if not code or "0" in code:
        raise DomainError("pure_fibonacci expects a nonempty all-ones code")
    return fib(len(code) + 4)


def encode_expansion(code: str) -> Expansion:
    code = as_code(code)
    if "0" not in code:
        raise DomainError("all-ones codes have no expansion; use pure_fibonacci")
    leading = 0
    while code[leading] == "1":
        leading += 1
    k = leading + 2
    rest = code[leading + 1:]
    if not rest:
        return Expansion(1, 1, k)
    # The bit after the first zero orients the coefficient pair; the bits
    # after it, reversed, evaluate to the state carrying the pair.
    p, q, _ = evaluate(rest[1:][::-1])
    if rest[0] == "0":
        return Expansion(q, p, k)
    return Expansion(p, q, k)


def decode_expansion(e: Expansion) -> str:
    """Inverse of encode_expansion on its whole domain."""
    prefix = "1" * (e.k - 2) + "0"
    if e.a == 1 and e.b == 1:
        return prefix
    orient = "0" if e.a > e.b else "1"
    lo, hi = min(e.a, e.b), max(e.a, e.b)
    return prefix + orient + decode_state((lo, hi, lo + hi))[::-1]


@dataclass(frozen=True)
class Leaf:
    """A plain Fibonacci number F(index)."""
    index: int


@dataclass(frozen=True)
class SumNode:
    """(value of a) * F(k) + (value of b) * F(k+2)."""
    k: int
    a: "ExpansionTree"
    b: "ExpansionTree"


ExpansionTree = Union[Leaf, SumNode]


def tree_value(node: ExpansionTree) -> int:
    if isinstance(node, Leaf):
        return fib(node.index)
    return tree_value(node.a) * fib(node.k) + tree_value(node.b) * fib(node.k + 2)


def tree_to_jsonable(node: ExpansionTree):
    if isinstance(node, Leaf):
        return {"fib": node.index}
    return {"k": node.k, "a": tree_to_jsonable(node.a), "b": tree_to_jsonable(node.b)}


def flatten_products(node: ExpansionTree) -> list[tuple[int, ...]]:
    """Distribute the tree into a sum of products of Fibonacci numbers.

    Each tuple lists the indices of one product term; the tree value is
    the sum over tuples of the product of fib(i).
    """
    if isinstance(node, Leaf):
        return [(node.index,)]
    out = [tuple(sorted(t + (node.k,))) for t in flatten_products(node.a)]
    out += [tuple(sorted(t + (node.k + 2,))) for t in flatten_products(node.b)]
    return sorted(out)


def expand_recursive(code: str) -> ExpansionTree:
    """Nested expansion of a code's value, down to Fibonacci-number leaves."""
    code = as_code(code)
    if not code:
        raise DomainError("the empty code has no expansion")
    if "0" not in code:
        return Leaf(len(code) + 4)
    e = encode_expansion(code)
    if e.a == 1 and e.b == 1:
        return SumNode(e.k, Leaf(2), Leaf(2))

    # Codes for the coefficient pair: with w the code of the state
    # (min, max, min+max), the larger coefficient is the value of w less
    # its last bit, and the smaller one is the value of w less its
    # trailing zeros and two more bits (the leading entry rides along
    # every 0-step and was the middle entry two steps before the last
    # 1-step).  Coefficients 1, 2, 3 are initial values, not prefixes.
    lo, hi = min(e.a, e.b), max(e.a, e.b)
    w = decode_state((lo, hi, lo + hi))
    code_hi = w[:-1]
    code_lo = w.rstrip("0")[:-2]

    def subtree(v: int, sub: str) -> ExpansionTree:
        if v <= 3:
            return Leaf(v + 1)
        return expand_recursive(sub)

    t_lo, t_hi = subtree(lo, code_lo), subtree(hi, code_hi)
    if e.a < e.b:
        return SumNode(e.k, t_lo, t_hi)
    return SumNode(e.k, t_hi, t_lo)
