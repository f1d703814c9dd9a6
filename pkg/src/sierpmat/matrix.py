"""Exact construction and algebra of the parameterized Sierpinski-Pascal matrices.

The family assigns to each exact rational x a unit lower-triangular matrix
whose (i, j) entry is x**digit_sum(i-j) when i-j is free of j and 0
otherwise. At x=1 this is Pascal's triangle mod 2 left-justified, whose
support is the discrete Sierpinski triangle; x=0 gives the identity. All
arithmetic here is exact: entries are Python ints or fractions.Fraction,
never floats.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence, Union

from .bitops import digit_sum

Scalar = Union[int, Fraction]


def check_scalar(value: Scalar) -> Scalar:
    """Reject anything that is not an exact rational number."""
    if isinstance(value, (int, Fraction)):
        return value
    raise TypeError(
        f"exact rational scalar required (int or Fraction), got {type(value).__name__}"
    )


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


class TriMatrix:
    """Dense lower-triangular matrix of exact rational entries.

    The size is a power of two, matching the self-similar block structure of
    the family: products and inverses of such windows depend only on the
    window. Rows are stored row-major as tuples and instances are immutable.
    ``unit_diagonal`` records whether every diagonal entry equals 1; it holds
    for every member of the family and for anything built from members by
    products and inverses.
    """

    __slots__ = ("n", "rows", "unit_diagonal")

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        n = len(rows)
        if not is_power_of_two(n):
            raise ValueError(f"matrix size must be a power of two, got {n}")
        frozen = []
        unit = True
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            row = tuple(row)
            for e in row:
                if not isinstance(e, (int, Fraction)):
                    raise TypeError(
                        f"entry ({i}) must be an exact rational, got {type(e).__name__}"
                    )
            if any(row[i + 1:]):
                raise ValueError(f"row {i} has a nonzero entry above the diagonal")
            if row[i] != 1:
                unit = False
            frozen.append(row)
        self.n = n
        self.rows = tuple(frozen)
        self.unit_diagonal = unit

    @classmethod
    def identity(cls, n: int) -> "TriMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Scalar:
        return self.rows[i][j]

    def nonzero_pattern(self) -> tuple[tuple[bool, ...], ...]:
        """Boolean support of the matrix, for zero-pattern comparisons."""
        return tuple(tuple(bool(e) for e in row) for row in self.rows)

    def top_left(self, size: int) -> "TriMatrix":
        """Upper-left size x size window (size must be a power of two)."""
        if size > self.n:
            raise ValueError("window larger than the matrix")
        return TriMatrix([row[:size] for row in self.rows[:size]])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TriMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"TriMatrix(n={self.n}, unit_diagonal={self.unit_diagonal})"


def sierpinski_entry(x: Scalar, i: int, j: int) -> Scalar:
    """Single entry of the parameter-x matrix, straight from the definition.

    x**digit_sum(i-j) when i >= j >= 0 and i-j is free of j, else 0.
    """
    if i < 0 or j < 0:
        raise ValueError("indices must be nonnegative")
    if j > i:
        return 0
    d = i - j
    if d & j:
        return 0
    return x ** digit_sum(d)


def sierpinski_matrix(x: Scalar, n: int) -> TriMatrix:
    """Truncated parameter-x matrix of the family, size n x n.

    n must be a power of two: the truncation windows of those sizes are
    exactly the self-similar blocks, and they are closed under product and
    inverse. x=1 yields the 0/1 Sierpinski pattern, x=0 the identity.
    """
    check_scalar(x)
    if not is_power_of_two(n):
        raise ValueError(f"size must be a power of two, got {n}")
    k = n.bit_length() - 1
    powers = [x ** t for t in range(k + 1)]
    rows = []
    for i in range(n):
        row = [0] * n
        for j in range(i + 1):
            d = i - j
            if d & j == 0:
                row[j] = powers[d.bit_count()]
        rows.append(row)
    return TriMatrix(rows)


def mat_mul(a: TriMatrix, b: TriMatrix) -> TriMatrix:
    """Exact product of two lower-triangular matrices of the same size."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: {a.n} vs {b.n}")
    n = a.n
    out = []
    for i in range(n):
        arow = a.rows[i]
        acc: list[Scalar] = [0] * n
        for m in range(i + 1):
            f = arow[m]
            if f:
                brow = b.rows[m]
                for j in range(m + 1):
                    g = brow[j]
                    if g:
                        acc[j] = acc[j] + f * g
        out.append(acc)
    return TriMatrix(out)


def mat_vec(a: TriMatrix, v: Sequence[Scalar], counter=None) -> list[Scalar]:
    """Exact matrix-vector product.

    With a counter the plain triangular algorithm runs, performing and
    tallying one multiply-add per (i, j <= i) pair, n(n+1)/2 in total;
    without one, zero entries are skipped for speed. Both modes return
    identical exact results.
    """
    if len(v) != a.n:
        raise ValueError(f"vector length {len(v)} does not match size {a.n}")
    for e in v:
        check_scalar(e)
    out = []
    if counter is None:
        for row in a.rows:
            s: Scalar = 0
            for e, w in zip(row, v):
                if e:
                    s = s + e * w
            out.append(s)
    else:
        for i, row in enumerate(a.rows):
            s = 0
            for j in range(i + 1):
                s = s + row[j] * v[j]
            counter.add(i + 1)
            out.append(s)
    return out


def mat_inverse(a: TriMatrix) -> TriMatrix:
    """Exact inverse of a unit lower-triangular matrix by forward substitution.

    Generic substitution over the rows, knowing nothing about the structure
    of the family; that makes it an independent route to the inverse, which
    for the parameter-x matrix must come out equal to the parameter-(-x) one.
    """
    if not a.unit_diagonal:
        raise ValueError("mat_inverse requires a unit diagonal")
    n = a.n
    inv_rows: list[list[Scalar]] = []
    for i in range(n):
        arow = a.rows[i]
        acc: list[Scalar] = [0] * n
        for m in range(i):
            f = arow[m]
            if f:
                xrow = inv_rows[m]
                for j in range(m + 1):
                    g = xrow[j]
                    if g:
                        acc[j] = acc[j] - f * g
        acc[i] = 1
        inv_rows.append(acc)
    return TriMatrix(inv_rows)


def matrix_power(a: TriMatrix, q: int) -> TriMatrix:
    """Integer power of a matrix; negative exponents go through the inverse."""
    if q < 0:
        return matrix_power(mat_inverse(a), -q)
    result = TriMatrix.identity(a.n)
    for _ in range(q):
        result = mat_mul(result, a)
    return result


def sierpinski_power(r: Scalar, n: int) -> TriMatrix:
    """The r-th power of the x=1 matrix, for rational r, as a family member.

    Adding parameters multiplies the matrices, so the parameter-r matrix
    plays the role of the r-th power: raised to the q-th integer power it
    equals the parameter-(q*r) matrix, and r=-1 gives the exact inverse of
    the x=1 matrix. Returns sierpinski_matrix(r, n).
    """
    return sierpinski_matrix(r, n)


def column_nonzero_signs(a: TriMatrix, j: int) -> list[int]:
    """Nonzero entries of column j read from row j downward, as +1/-1 signs.

    Every nonzero entry must be 1 or -1; anything else raises.
    """
    if not 0 <= j < a.n:
        raise ValueError(f"column {j} out of range for size {a.n}")
    signs = []
    for i in range(j, a.n):
        e = a.rows[i][j]
        if e:
            if e == 1:
                signs.append(1)
            elif e == -1:
                signs.append(-1)
            else:
                raise ValueError(f"entry ({i}, {j}) = {e} is neither 0 nor +-1")
    return signs


def product_entry_oracle(i: int, j: int, x: Scalar, y: Scalar) -> Scalar:
    """Entry (i, j) of the product of the parameter-x and parameter-y matrices,
    by direct enumeration of the contributing intermediate indices.

    A term entry(x, i, k) * entry(y, k, j) is nonzero exactly when k has 1s
    wherever j does and 0s wherever i does; the positions where i has a 1 and
    j a 0 are unconstrained. This walks those k (subsets of the unconstrained
    positions laid over j) and adds the terms up, independently of mat_mul.
    The sum equals (x+y)**digit_sum(i-j) when i-j is free of j and 0
    otherwise.
    """
    if j > i:
        raise ValueError("requires i >= j")
    check_scalar(x)
    check_scalar(y)
    if j & ~i:
        # j has a 1 where i has a 0: no admissible k, every term vanishes
        return 0
    free = i & ~j
    total: Scalar = 0
    m = free
    while True:
        k = j | m
        total = total + sierpinski_entry(x, i, k) * sierpinski_entry(y, k, j)
        if m == 0:
            break
        m = (m - 1) & free
    return total


def format_scalar(value: Scalar) -> str:
    """Render an exact scalar as 'p/q', eliding '/1'."""
    return str(value)


def parse_scalar(text: str) -> Fraction:
    """Parse a 'p/q' string (optional sign, '/1' elidable) to an exact value."""
    return Fraction(text.strip())


def to_csv(a: TriMatrix) -> str:
    """One row per line, entries as exact 'p/q' strings, comma-separated."""
    return "".join(",".join(format_scalar(e) for e in row) + "\n" for row in a.rows)


def from_csv(text: str) -> TriMatrix:
    """Parse the CSV emitted by to_csv back into a TriMatrix."""
    rows = [
        [parse_scalar(cell) for cell in line.split(",")]
        for line in text.splitlines()
        if line.strip()
    ]
    return TriMatrix(rows)


def to_json(a: TriMatrix) -> str:
    """Array of row arrays of exact 'p/q' strings."""
    return json.dumps([[format_scalar(e) for e in row] for row in a.rows])
