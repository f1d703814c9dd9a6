"""Bit-level primitives for carry-free binary arithmetic."""
from __future__ import annotations

try:
    from gmpy2 import bincoef as _binomial
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from math import comb as _binomial


def digit_sum(n: int) -> int:
    """Sum of the binary digits of n (population count)."""
    if n < 0:
        raise ValueError("digit_sum expects n >= 0")
    return n.bit_count()


def is_free_of(i: int, j: int) -> bool:
    """True when adding i and j in base 2 involves no carries.

    Equivalently, the binary expansion of i has 0s wherever j has 1s,
    i.e. the bitwise AND of i and j is zero.
    """
    if i < 0 or j < 0:
        raise ValueError("is_free_of expects nonnegative integers")
    return i & j == 0


def free_residues(j: int, limit: int) -> list[int]:
    """All d with 0 <= d < limit that are free of j, in increasing order.

    The n-th element's 1-bits occupy the n-th subset pattern of the 0-bit
    positions of j, so digit_sum(result[n]) == digit_sum(n).
    """
    if j < 0 or limit < 0:
        raise ValueError("free_residues expects nonnegative arguments")
    return [d for d in range(limit) if d & j == 0]


def kummer_oracle(i: int, j: int) -> bool:
    """Whether the binomial coefficient C(i+j, j) is odd.

    Computes the exact arbitrary-precision binomial and checks its parity.
    Deliberately avoids any bit manipulation of i and j, so it serves as an
    independent cross-check of is_free_of: the two agree on every input.
    """
    if i < 0 or j < 0:
        raise ValueError("kummer_oracle expects nonnegative integers")
    return _binomial(i + j, j) % 2 == 1
