"""Shared reference rows: every length-4 code with a nonconstant pattern,
its final state, and its cluster variance, in the canonical listing order."""

from fractions import Fraction

LENGTH4_TABLE = [
    # code, final state, cluster variance
    ("1000", (2, 9, 11), Fraction(7)),
    ("0100", (3, 10, 13), Fraction(5, 2)),
    ("0010", (4, 9, 13), Fraction(5, 2)),
    ("0001", (5, 6, 11), Fraction(7)),
    ("1100", (3, 11, 14), Fraction(4)),
    ("0110", (4, 11, 15), Fraction(5, 2)),
    ("0011", (5, 9, 14), Fraction(4)),
    ("1001", (7, 9, 16), Fraction(5, 2)),
    ("1010", (5, 12, 17), Fraction(1)),
    ("0101", (7, 10, 17), Fraction(1)),
    ("1110", (5, 13, 18), Fraction(7)),
    ("1101", (8, 11, 19), Fraction(5, 2)),
    ("1011", (7, 12, 19), Fraction(5, 2)),
    ("0111", (7, 11, 18), Fraction(7)),
]
