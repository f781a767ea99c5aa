"""Matrices, permanents, determinants and perrank.

Scalar matrices store raw field values (see :mod:`permlab.scalars`);
symbolic matrices store :class:`~permlab.polyring.Poly` entries.  Integer
Ryser runs modulo several word-size primes in the compiled kernel and is
lifted by the Chinese remainder theorem.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from . import kernels
from .polyring import Poly, PolyRing, generic_ring
from .scalars import QQ, Field, FieldError, PrimeField, Scalar, field_parse, is_prime

__all__ = [
    "Matrix",
    "MatrixFormatError",
    "permanent",
    "determinant",
    "perrank",
    "sub_permanents",
    "selectors",
    "integer_permanent",
]


class MatrixFormatError(ValueError):
    pass


class Matrix:
    """Dense ``m x n`` grid over a field (scalar) or a polynomial ring (symbolic)."""

    __slots__ = ("field", "ring", "rows", "m", "n")

    def __init__(self, rows: Sequence[Sequence], field: Field | None = None, ring: PolyRing | None = None):
        if (field is None) == (ring is None):
            raise ValueError("give exactly one of field or ring")
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must have at least one row and one column")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged rows")
        if ring is not None:
            rows = [[ring(x) for x in r] for r in rows]
            field = ring.field
        else:
            rows = [[_to_raw(field, x) for x in r] for r in rows]
        self.field = field
        self.ring = ring
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(rows)
        self.n = n

    @classmethod
    def _raw(cls, rows, field=None, ring=None) -> "Matrix":
        obj = cls.__new__(cls)
        obj.field = ring.field if ring is not None else field
        obj.ring = ring
        obj.rows = tuple(tuple(r) for r in rows)
        obj.m = len(obj.rows)
        obj.n = len(obj.rows[0])
        return obj

    @classmethod
    def generic(cls, m: int, n: int, field: Field = QQ, ring: PolyRing | None = None) -> "Matrix":
        """The matrix of indeterminates ``x_i_j``."""
        ring = ring or generic_ring(m, n, field)
        return cls._raw([[ring.var("x_%d_%d" % (i, j)) for j in range(1, n + 1)] for i in range(1, m + 1)], ring=ring)

    @property
    def symbolic(self) -> bool:
        return self.ring is not None

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def entry(self, i: int, j: int):
        v = self.rows[i][j]
        return v if self.symbolic else Scalar(self.field, v)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        """Rows and columns by 0-based index; repeated columns are allowed."""
        for i in rows:
            if not 0 <= i < self.m:
                raise IndexError("row %d out of range" % i)
        for j in cols:
            if not 0 <= j < self.n:
                raise IndexError("column %d out of range" % j)
        return Matrix._raw([[self.rows[i][j] for j in cols] for i in rows], self.field, self.ring)

    def transpose(self) -> "Matrix":
        return Matrix._raw(list(zip(*self.rows)), self.field, self.ring)

    def map(self, fn, field=None, ring=None) -> "Matrix":
        if field is None and ring is None:
            field, ring = self.field, self.ring
        return Matrix._raw([[fn(x) for x in r] for r in self.rows], field, ring)

    def scale_row(self, i: int, c) -> "Matrix":
        rows = [list(r) for r in self.rows]
        if self.symbolic:
            rows[i] = [x * c for x in rows[i]]
        else:
            c = self.field.convert(c)
            rows[i] = [self.field.mul(x, c) for x in rows[i]]
        return Matrix._raw(rows, self.field, self.ring)

    def is_zero(self) -> bool:
        if self.symbolic:
            return all(x.is_zero() for r in self.rows for x in r)
        z = self.field.is_zero
        return all(z(x) for r in self.rows for x in r)

    def entry_is_zero(self, i: int, j: int) -> bool:
        x = self.rows[i][j]
        return x.is_zero() if self.symbolic else self.field.is_zero(x)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.field, self.rows)) if not self.symbolic else hash(self.rows)

    def text_rows(self) -> list[list[str]]:
        if self.symbolic:
            return [[str(x) for x in r] for r in self.rows]
        return [[self.field.format(x) for x in r] for r in self.rows]

    def __str__(self) -> str:
        cells = self.text_rows()
        width = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(width) for c in r) + "]" for r in cells)

    def __repr__(self) -> str:
        return "Matrix(%s, %r)" % (self.field.spec(), self.text_rows())

    # -- files -------------------------------------------------------------
    def to_json(self) -> dict:
        if self.symbolic:
            raise ValueError("only scalar matrices have a file format")
        return {"field": self.field.spec(), "rows": self.text_rows()}

    @classmethod
    def from_json(cls, data) -> "Matrix":
        """Parse ``{"field": spec, "rows": [[text, ...], ...]}``."""
        if isinstance(data, (str, bytes)):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise MatrixFormatError("invalid JSON: %s" % exc) from exc
        if not isinstance(data, dict) or "field" not in data or "rows" not in data:
            raise MatrixFormatError("matrix file needs 'field' and 'rows'")
        try:
            field = field_parse(str(data["field"]))
        except FieldError as exc:
            raise MatrixFormatError(str(exc)) from exc
        rows = data["rows"]
        if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
            raise MatrixFormatError("'rows' must be a non-empty list of lists")
        try:
            parsed = [[field.parse(str(x)) for x in r] for r in rows]
            return cls(parsed, field=field)
        except (FieldError, ValueError, ZeroDivisionError) as exc:
            raise MatrixFormatError(str(exc)) from exc


def _to_raw(field: Field, x):
    if isinstance(x, str):
        return field.parse(x)
    return field.convert(x)


# --------------------------------------------------------------------------
# permanents


def _ryser_generic(rows, F: Field):
    n = len(rows)
    add, sub, mul = F.add, F.sub, F.mul
    sums = [F.zero] * n
    total = F.zero
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            sums = [add(s, r[j]) for s, r in zip(sums, rows)]
        else:
            sums = [sub(s, r[j]) for s, r in zip(sums, rows)]
        prod = F.one
        for s in sums:
            prod = mul(prod, s)
        if bin(gray).count("1") % 2:
            total = sub(total, prod)
        else:
            total = add(total, prod)
    return F.neg(total) if n % 2 else total


@lru_cache(maxsize=None)
def _crt_primes(count: int) -> tuple[int, ...]:
    out = []
    p = (1 << 31) - 1
    while len(out) < count:
        if is_prime(p):
            out.append(p)
        p -= 2
    return tuple(out)


def integer_permanent(rows: Sequence[Sequence[int]]) -> int:
    """Exact permanent of an integer matrix by multimodular Ryser."""
    n = len(rows)
    if n == 0:
        return 1
    bound = 1
    for r in rows:
        bound *= sum(abs(x) for x in r)
    if bound == 0:
        return 0
    need = 2 * bound + 1
    residues = []
    modulus = 1
    count = 1
    while modulus < need:
        count += 1
        modulus = math.prod(_crt_primes(count))
    for p in _crt_primes(count):
        residues.append(kernels.ryser_mod(rows, p))
    value = 0
    for p, r in zip(_crt_primes(count), residues):
        mp = modulus // p
        value = (value + r * mp * pow(mp, -1, p)) % modulus
    if value > modulus // 2:
        value -= modulus
    return value


def _rational_permanent(rows) -> Fraction | int:
    scale = 1
    ints = []
    for r in rows:
        den = math.lcm(*[Fraction(x).denominator for x in r])
        scale *= den
        ints.append([int(Fraction(x) * den) for x in r])
    return QQ.reduce(Fraction(integer_permanent(ints), scale))


def _laplace_dp(rows, add, mul, zero, one):
    """Column-subset DP: value over masks of used columns, one row at a time."""
    n = len(rows)
    layer = {0: one}
    for i in range(n):
        row = rows[i]
        nxt = {}
        for mask, val in layer.items():
            for j in range(n):
                if mask >> j & 1:
                    continue
                term = mul(val, row[j])
                key = mask | (1 << j)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else add(prev, term)
        layer = nxt
    return layer.get((1 << n) - 1, zero)


def permanent(M: Matrix, method: str = "auto"):
    """Exact permanent; returns a Scalar for scalar matrices and a Poly otherwise."""
    if M.m != M.n:
        raise ValueError("permanent needs a square matrix, got %dx%d" % (M.m, M.n))
    if method not in ("auto", "ryser", "laplace"):
        raise ValueError("unknown method %r" % method)
    F = M.field
    if M.symbolic:
        ring = M.ring
        if method == "ryser":
            return _ryser_poly(M)
        return _laplace_dp(M.rows, Poly.__add__, Poly.__mul__, ring.zero, ring.one)
    if method == "laplace":
        return Scalar(F, _laplace_dp(M.rows, F.add, F.mul, F.zero, F.one))
    return Scalar(F, _scalar_ryser(M.rows, F))


def _scalar_ryser(rows, F: Field):
    if isinstance(F, PrimeField) and F.p < (1 << 31):
        return kernels.ryser_mod(rows, F.p)
    if F is QQ or F.kind == "rationals":
        if all(isinstance(x, int) for r in rows for x in r):
            return integer_permanent(rows)
        return _rational_permanent(rows)
    return _ryser_generic(rows, F)


def _ryser_poly(M: Matrix) -> Poly:
    ring = M.ring
    return _ryser_generic_ops(M.rows, ring.zero, ring.one)


def _ryser_generic_ops(rows, zero, one):
    n = len(rows)
    sums = [zero] * n
    total = zero
    gray = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            sums = [s + r[j] for s, r in zip(sums, rows)]
        else:
            sums = [s - r[j] for s, r in zip(sums, rows)]
        prod = one
        for s in sums:
            prod = prod * s
        total = total - prod if bin(gray).count("1") % 2 else total + prod
    return -total if n % 2 else total


# --------------------------------------------------------------------------
# determinants


def determinant(M: Matrix):
    if M.m != M.n:
        raise ValueError("determinant needs a square matrix, got %dx%d" % (M.m, M.n))
    F = M.field
    if M.symbolic:
        return _det_dp(M.rows, M.ring)
    if F.kind == "rationals":
        return Scalar(F, _bareiss_rational(M.rows))
    return Scalar(F, _det_gauss(M.rows, F))


def _det_dp(rows, ring: PolyRing) -> Poly:
    n = len(rows)
    layer = {0: ring.one}
    for i in range(n):
        row = rows[i]
        nxt = {}
        for mask, val in layer.items():
            for j in range(n):
                if mask >> j & 1:
                    continue
                # sign flips once per used column to the right of j
                term = val * row[j]
                if bin(mask >> j).count("1") % 2:
                    term = -term
                key = mask | (1 << j)
                prev = nxt.get(key)
                nxt[key] = term if prev is None else prev + term
        layer = nxt
    return layer.get((1 << n) - 1, ring.zero)


def _bareiss_rational(rows):
    scale = 1
    a = []
    for r in rows:
        den = math.lcm(*[Fraction(x).denominator for x in r])
        scale *= den
        a.append([int(Fraction(x) * den) for x in r])
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return QQ.reduce(Fraction(sign * a[n - 1][n - 1], scale))


def _det_gauss(rows, F: Field):
    a = [list(r) for r in rows]
    n = len(a)
    det = F.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not F.is_zero(a[i][k])), None)
        if piv is None:
            return F.zero
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = F.neg(det)
        det = F.mul(det, a[k][k])
        inv = F.inv(a[k][k])
        for i in range(k + 1, n):
            if F.is_zero(a[i][k]):
                continue
            f = F.mul(a[i][k], inv)
            a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[k])]
    return det


def rank(M: Matrix) -> int:
    """Rank of a scalar matrix by Gaussian elimination."""
    if M.symbolic:
        raise ValueError("rank needs a scalar matrix")
    F = M.field
    a = [list(r) for r in M.rows]
    r = 0
    for c in range(M.n):
        piv = next((i for i in range(r, M.m) if not F.is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = F.inv(a[r][c])
        for i in range(M.m):
            if i != r and not F.is_zero(a[i][c]):
                f = F.mul(a[i][c], inv)
                a[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(a[i], a[r])]
        r += 1
    return r


# --------------------------------------------------------------------------
# selectors


def selectors(m: int, n: int, d: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """``(rows, cols)`` pairs of ``d``-subsets in lexicographic order, 0-based."""
    if not 0 <= d <= min(m, n):
        raise ValueError("d=%d out of range for a %dx%d matrix" % (d, m, n))
    for rows in combinations(range(m), d):
        for cols in combinations(range(n), d):
            yield rows, cols


def sub_permanents(M: Matrix, d: int, method: str = "auto") -> list:
    """All ``d x d`` subpermanents as ``((rows, cols), value)`` in selector order."""
    return [(sel, permanent(M.submatrix(*sel), method)) for sel in selectors(M.m, M.n, d)]


def perrank(M: Matrix) -> int:
    """Largest r with a nonzero r x r subpermanent; 0 for the zero matrix."""
    if M.symbolic:
        raise ValueError("perrank needs a scalar matrix")
    for r in range(min(M.m, M.n), 0, -1):
        for sel in selectors(M.m, M.n, r):
            if not permanent(M.submatrix(*sel)).is_zero():
                return r
    return 0
