"""Independent recomputations used to cross-check library results.

Everything here is deliberately written against different primitives
than the package uses: values via explicit 3x3 matrix products, cluster
statistics via a per-position outward scan, Fibonacci numbers via plain
iteration.  Slow and dumb on purpose.
"""

from fractions import Fraction

M0 = ((1, 0, 0), (0, 0, 1), (1, 0, 1))  # (a, b, c) -> (a, c, a+c)
M1 = ((0, 1, 0), (0, 0, 1), (0, 1, 1))  # (a, b, c) -> (b, c, b+c)


def mat_vec(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(3)) for i in range(3))


def state_by_matrices(code, root=(1, 2, 3)):
    v = tuple(root)
    for ch in code:
        v = mat_vec(M1 if ch == "1" else M0, v)
    return v


def value_by_matrices(code, root=(1, 2, 3)):
    return state_by_matrices(code, root)[2]


def cluster_at(code, i):
    """Length of the maximal constant run containing position i."""
    lo = i
    while lo > 0 and code[lo - 1] == code[i]:
        lo -= 1
    hi = i
    while hi + 1 < len(code) and code[hi + 1] == code[i]:
        hi += 1
    return hi - lo + 1


def average_by_positions(code):
    return Fraction(sum(cluster_at(code, i) for i in range(len(code))), len(code))


def variance_by_positions(code):
    return Fraction(sum(cluster_at(code, i) ** 2 for i in range(len(code))),
                    len(code))


def fib_by_addition(n):
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a
