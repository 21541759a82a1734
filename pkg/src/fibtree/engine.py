"""Core state machine: binary codes acting on additive integer triples.

A state is a triple (a, b, c) with c = a + b.  A code is a finite string
over '0'/'1'; its leftmost bit is applied first.  The two transforms are

    step 0: (a, b, c) -> (a, c, a + c)
    step 1: (a, b, c) -> (b, c, b + c)

and the value of a code is the third entry of the state it reaches from
the root (1, 2, 3).  Every state reachable from that root has a < b < c
with pairwise coprime entries, which is what makes exact decoding back
to the code possible.
"""

from __future__ import annotations

from math import gcd
from typing import Iterator

State = tuple[int, int, int]

ROOT: State = (1, 2, 3)

_BITS = {"0": 0, "1": 1}

from .errors import DomainError


def as_code(text: str) -> str:
    """Validate a code string; empty is allowed and names the root."""
    if not isinstance(text, str):
        raise DomainError(f"code must be a string, got {type(text).__name__}")
    for ch in text:
        if ch not in _BITS:
            raise DomainError(f"invalid code symbol {ch!r}")
    return text


def as_state(triple) -> State:
    a, b, c = triple
    if a < 1 or b < 1:
        raise DomainError(f"state entries must be positive, got {tuple(triple)}")
    if c != a + b:
        raise DomainError(f"malformed state {tuple(triple)}: third entry must be the sum")
    return (a, b, c)


def as_root(triple) -> State:
    # Generalized roots are accepted unordered, e.g. (2, 1, 3).
    return as_state(triple)


def apply_step(s: State, bit: int) -> State:
    """One transform applied to a raw triple (no reordering)."""
    a, b, c = as_state(s)
    if bit == 0:
        return (a, c, a + c)
    if bit == 1:
        return (b, c, b + c)
    raise DomainError(f"bit must be 0 or 1, got {bit!r}")


def evaluate(code: str, root: State = ROOT) -> State:
    """Fold the code over the root, left to right."""
    a, b, c = as_root(root)
    for ch in as_code(code):
        if ch == "0":
            a, b = a, c
        else:
            a, b = b, c
        c = a + b
    return (a, b, c)


def value(code: str, root: State = ROOT) -> int:
    return evaluate(code, root)[2]


def trace(code: str, root: State = ROOT) -> list[State]:
    """All intermediate states, root first; length is len(code) + 1."""
    s = as_root(root)
    out = [s]
    for ch in as_code(code):
        s = apply_step(s, _BITS[ch])
        out.append(s)
    return out


def reduce_state(s: State) -> tuple[State, int]:
    """Invert one step: return (parent, bit) with apply_step(parent, bit) == s.

    Defined for states reachable from the canonical root only.  The parent
    of (a, b, c) is (a, b-a, b) reordered; the consumed bit is read off the
    comparison of b against 2a.  b == 2a cannot occur below the root when
    gcd(a, b) == 1, so the inversion is unambiguous.
    """
    a, b, c = as_state(s)
    if (a, b, c) == ROOT:
        raise DomainError("the root has no parent")
    if not a < b or gcd(a, b) != 1:
        raise DomainError(f"state {s} is not reachable from the root")
    if b > 2 * a:
        return (a, b - a, b), 0
    if b < 2 * a:
        return (b - a, a, b), 1
    raise DomainError(f"state {s} is not reachable from the root")


def decode_state(s: State) -> str:
    """The unique code with evaluate(code) == s; inverse of evaluate.

    Terminates because the middle entry strictly decreases at each
    reduction; a reduction that leaves the ladder of valid states means
    the input was not reachable.
    """
    a, b, c = as_state(s)
    if not (1 <= a < b) or gcd(a, b) != 1:
        raise DomainError(f"state {s} is not reachable from the root")
    bits: list[str] = []
    while (a, b, a + b) != ROOT:
        (pa, pb, _), bit = reduce_state((a, b, a + b))
        bits.append("01"[bit])
        a, b = pa, pb
        if a < 1 or not a < b:
            raise DomainError(f"state {s} is not reachable from the root")
    return "".join(reversed(bits))


def reflect(code: str) -> str:
    """Reverse the bit order."""
    return as_code(code)[::-1]


def enumerate_codes(length: int) -> Iterator[str]:
    """All codes of a given length, ascending as integers with x1 most significant."""
    if length < 0:
        raise DomainError("length must be >= 0")
    for n in range(1 << length):
        yield format(n, f"0{length}b") if length else ""


def enumerate_states(max_third_entry: int) -> Iterator[tuple[State, str]]:
    """Every state reachable from the root with c <= bound, with its code.

    Depth-first, 0-branch first.  Children are pruned as soon as c exceeds
    the bound, which is valid because c strictly increases along every edge.
    """
    if max_third_entry < 3:
        raise DomainError("bound must be >= 3")
    stack: list[tuple[State, str]] = [(ROOT, "")]
    while stack:
        (a, b, c), code = stack.pop()
        yield (a, b, c), code
        # push 1-branch first so the 0-branch is explored first
        for bit in (1, 0):
            child = apply_step((a, b, c), bit)
            if child[2] <= max_third_entry:
                stack.append((child, code + "01"[bit]))
