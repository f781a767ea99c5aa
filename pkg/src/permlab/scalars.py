"""Exact coefficient fields: QQ, QQ(i), prime fields F_p and GF(p^k).

Field elements are stored as plain Python values so that the polynomial
and permanent code can work on them without wrapper objects:

* ``QQ``   -- ``int`` when integral, otherwise ``fractions.Fraction``
* ``QQi``  -- a pair ``(re, im)`` of ``QQ`` values meaning ``re + im*i``
* ``F<p>`` -- the canonical residue ``0 <= a < p``
* ``GF<p>^<k>`` -- an integer code ``sum c_j p^j`` of the residue polynomial
  modulo the field's defining polynomial

:class:`Scalar` wraps a raw value together with its field for user-facing
code.  Fields themselves are obtained through :func:`field_parse`.
"""

from __future__ import annotations

import functools
import random
import re
from fractions import Fraction
from typing import Any, Iterator, Sequence

__all__ = [
    "FieldError",
    "Field",
    "Rationals",
    "GaussianRationals",
    "PrimeField",
    "ExtensionField",
    "Scalar",
    "field_parse",
    "scalar_arith",
    "is_prime",
    "QQ",
]

MAX_EXTENSION_SIZE = 1 << 16


class FieldError(ValueError):
    """Malformed field spec, field mismatch or division by zero."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _qq_norm(x):
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def _parse_rational(text: str):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        if int(den) == 0:
            raise FieldError("zero denominator in %r" % text)
        return _qq_norm(Fraction(int(num), int(den)))
    return int(text)


def _format_rational(x) -> str:
    if type(x) is Fraction:
        return "%d/%d" % (x.numerator, x.denominator)
    return str(x)


class Field:
    """Base class; concrete fields implement the raw-value arithmetic.

    ``native`` fields accept Python's ``+ - *`` on raw values, provided the
    result is passed through :meth:`reduce` before being stored.
    """

    kind: str = ""
    native: bool = False
    p: int = 0
    k: int = 1
    zero: Any = 0
    one: Any = 1

    @property
    def char(self) -> int:
        return self.p

    @property
    def q(self):
        """Number of elements, ``None`` for infinite fields."""
        return None

    @property
    def is_finite(self) -> bool:
        return self.q is not None

    def reduce(self, a):
        return a

    def is_zero(self, a) -> bool:
        return a == self.zero

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def from_int(self, n: int):
        raise NotImplementedError

    def convert(self, value):
        """Coerce an int, a Scalar of this field or a raw value."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError("scalar from %s used in %s" % (value.field, self))
            return value.value
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return self.from_int(value)
        return self.validate(value)

    def validate(self, a):
        return a

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng: random.Random):
        raise NotImplementedError

    def random_nonzero(self, rng: random.Random):
        while True:
            a = self.random(rng)
            if not self.is_zero(a):
                return a

    def __call__(self, value) -> "Scalar":
        if isinstance(value, str):
            return Scalar(self, self.parse(value))
        return Scalar(self, self.convert(value))

    def spec(self) -> str:
        raise NotImplementedError

    def __str__(self) -> str:
        return self.spec()

    def __repr__(self) -> str:
        return "field_parse(%r)" % self.spec()

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.spec() == other.spec()

    def __hash__(self) -> int:
        return hash(self.spec())

    def __reduce__(self):
        return (field_parse, (self.spec(),))


class Rationals(Field):
    kind = "rationals"
    native = True
    p = 0

    def reduce(self, a):
        if type(a) is Fraction and a.denominator == 1:
            return a.numerator
        return a

    def add(self, a, b):
        return _qq_norm(a + b)

    def sub(self, a, b):
        return _qq_norm(a - b)

    def mul(self, a, b):
        return _qq_norm(a * b)

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return _qq_norm(Fraction(1) / a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return _qq_norm(Fraction(a) / b)

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        return _qq_norm(a ** e)

    def from_int(self, n: int):
        return int(n)

    def validate(self, a):
        if isinstance(a, Fraction):
            return _qq_norm(a)
        if isinstance(a, int):
            return int(a)
        raise FieldError("%r is not a rational" % (a,))

    def parse(self, text: str):
        try:
            return _parse_rational(text)
        except ValueError as exc:
            raise FieldError("bad rational literal %r" % text) from exc

    def format(self, a) -> str:
        return _format_rational(a)

    def random(self, rng):
        num = rng.randint(-20, 20)
        den = rng.choice((1, 1, 1, 2, 3, 5, 7))
        return _qq_norm(Fraction(num, den))

    def spec(self) -> str:
        return "QQ"


class GaussianRationals(Field):
    """QQ(i) with elements ``(re, im)``."""

    kind = "gaussian-rationals"
    p = 0
    zero = (0, 0)
    one = (1, 0)
    I = (0, 1)

    def add(self, a, b):
        return (_qq_norm(a[0] + b[0]), _qq_norm(a[1] + b[1]))

    def sub(self, a, b):
        return (_qq_norm(a[0] - b[0]), _qq_norm(a[1] - b[1]))

    def mul(self, a, b):
        return (_qq_norm(a[0] * b[0] - a[1] * b[1]), _qq_norm(a[0] * b[1] + a[1] * b[0]))

    def neg(self, a):
        return (-a[0], -a[1])

    def inv(self, a):
        n = a[0] * a[0] + a[1] * a[1]
        if n == 0:
            raise ZeroDivisionError("division by zero in QQ(i)")
        n = Fraction(n)
        return (_qq_norm(a[0] / n), _qq_norm(-a[1] / n))

    def from_int(self, n: int):
        return (int(n), 0)

    def validate(self, a):
        if isinstance(a, (int, Fraction)):
            return (_qq_norm(Fraction(a)), 0)
        if isinstance(a, tuple) and len(a) == 2:
            return (QQ.validate(a[0]), QQ.validate(a[1]))
        raise FieldError("%r is not a Gaussian rational" % (a,))

    def parse(self, text: str):
        s = text.strip().replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        try:
            if not s.endswith("i"):
                return (_parse_rational(s), 0)
            body = s[:-1].rstrip("*")
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut > 0:
                re_txt, im_txt = body[:cut], body[cut:]
            else:
                re_txt, im_txt = "0", body
            if im_txt in ("", "+"):
                im_part = 1
            elif im_txt == "-":
                im_part = -1
            else:
                im_part = _parse_rational(im_txt)
            return (_parse_rational(re_txt), im_part)
        except ValueError as exc:
            raise FieldError("bad Gaussian literal %r" % text) from exc

    def format(self, a) -> str:
        re_part, im_part = a
        if im_part == 0:
            return _format_rational(re_part)
        if im_part == 1:
            im_txt = "i"
        elif im_part == -1:
            im_txt = "-i"
        else:
            im_txt = _format_rational(im_part) + "i"
        if re_part == 0:
            return im_txt
        if not im_txt.startswith("-"):
            im_txt = "+" + im_txt
        return _format_rational(re_part) + im_txt

    def random(self, rng):
        return (QQ.random(rng), QQ.random(rng))

    def spec(self) -> str:
        return "QQi"


class PrimeField(Field):
    kind = "prime-field"
    native = True

    def __init__(self, p: int):
        if not is_prime(p):
            raise FieldError("%d is not prime" % p)
        self.p = p
        self._tables = None

    @property
    def q(self):
        return self.p

    def reduce(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("division by zero in F%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def from_int(self, n: int):
        return int(n) % self.p

    def validate(self, a):
        if isinstance(a, int):
            return a % self.p
        if isinstance(a, Fraction):
            return self.div(a.numerator % self.p, a.denominator % self.p)
        raise FieldError("%r is not an element of F%d" % (a, self.p))

    def parse(self, text: str):
        try:
            value = _parse_rational(text)
        except ValueError as exc:
            raise FieldError("bad residue literal %r" % text) from exc
        return self.validate(value)

    def format(self, a) -> str:
        return str(a)

    def elements(self) -> range:
        return range(self.p)

    def random(self, rng):
        return rng.randrange(self.p)

    def tables(self):
        """Addition and multiplication tables as flat ``bytes`` (q <= 256)."""
        if self._tables is None:
            self._tables = _build_tables(self)
        return self._tables

    def spec(self) -> str:
        return "F%d" % self.p


class ExtensionField(Field):
    """GF(p^k) via exp/log tables over the smallest irreducible modulus.

    ``modulus`` lists the coefficients of the monic defining polynomial from
    the constant term upwards (length ``k + 1``).  Element codes are
    ``sum c_j p^j`` of the residue polynomial ``sum c_j t^j``.
    """

    kind = "extension-field"

    def __init__(self, p: int, k: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise FieldError("%d is not prime" % p)
        if k < 1:
            raise FieldError("extension degree must be >= 1")
        if p ** k > MAX_EXTENSION_SIZE:
            raise FieldError("GF(%d^%d) exceeds 2^16 elements" % (p, k))
        self.p = p
        self.k = k
        self._size = p ** k
        if modulus is None:
            modulus = smallest_irreducible(p, k)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree %d" % k)
        if not is_irreducible(modulus, p):
            raise FieldError("modulus %r is reducible over F%d" % (modulus, p))
        self.modulus = modulus
        self._build()
        self._tables = None

    @property
    def q(self):
        return self._size

    def _digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _code(self, digits: Sequence[int]) -> int:
        code = 0
        for c in reversed(digits):
            code = code * self.p + c
        return code

    def _polymul(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                for j in range(k + 1):
                    prod[deg - k + j] = (prod[deg - k + j] - c * self.modulus[j]) % p
        return self._code(prod[:k])

    def _build(self):
        q = self._size
        # smallest code generating the multiplicative group
        for g in range(1 if q == 2 else 2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = self._polymul(x, g)
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:  # pragma: no cover - every finite field has a generator
            raise FieldError("no generator found")
        self.generator = g
        self._exp = exp + exp
        log = [0] * q
        for i, x in enumerate(exp):
            log[x] = i
        self._log = log
        p = self.p
        self._addcache = None
        if q <= 1024:
            self._addcache = [
                [self._code([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))]) for b in range(q)]
                for a in range(q)
            ]
        self._negcache = [self._code([(-x) % p for x in self._digits(a)]) for a in range(q)]

    def exp(self, i: int) -> int:
        return self._exp[i % (self._size - 1)]

    def log(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def add(self, a, b):
        if self._addcache is not None:
            return self._addcache[a][b]
        p = self.p
        return self._code([(x + y) % p for x, y in zip(self._digits(a), self._digits(b))])

    def neg(self, a):
        return self._negcache[a]

    def sub(self, a, b):
        return self.add(a, self._negcache[b])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in %s" % self.spec())
        return self._exp[(self._size - 1 - self._log[a]) % (self._size - 1)]

    def pow(self, a, e: int):
        if a == 0:
            if e <= 0:
                raise ZeroDivisionError("0 to a non-positive power")
            return 0
        return self._exp[(self._log[a] * e) % (self._size - 1)]

    def from_int(self, n: int):
        return int(n) % self.p

    def validate(self, a):
        if isinstance(a, int) and 0 <= a < self._size:
            return a
        raise FieldError("%r is not an element code of %s" % (a, self.spec()))

    def parse(self, text: str):
        s = text.strip().replace(" ", "")
        if s == "g":
            return self.generator
        m = re.fullmatch(r"g\^(-?\d+)", s)
        if m:
            return self.exp(int(m.group(1)))
        try:
            return int(s) % self.p
        except ValueError as exc:
            raise FieldError("bad element literal %r for %s" % (text, self.spec())) from exc

    def format(self, a) -> str:
        if a == 0:
            return "0"
        e = self._log[a]
        if e == 0:
            return "1"
        if e == 1:
            return "g"
        return "g^%d" % e

    def elements(self) -> range:
        return range(self._size)

    def random(self, rng):
        return rng.randrange(self._size)

    def tables(self):
        if self._tables is None:
            self._tables = _build_tables(self)
        return self._tables

    def spec(self) -> str:
        return "GF%d^%d" % (self.p, self.k)


def _build_tables(field: Field):
    q = field.q
    if q > 256:
        raise FieldError("lookup tables are limited to fields of size <= 256")
    add = bytes(field.add(a, b) for a in range(q) for b in range(q))
    mul = bytes(field.mul(a, b) for a in range(q) for b in range(q))
    return add, mul


def _monic_polys(p: int, deg: int) -> Iterator[tuple[int, ...]]:
    """Monic polynomials of degree ``deg`` (low-to-high coefficients), high-degree-first lex."""
    total = p ** deg
    for idx in range(total):
        high_first = []
        x = idx
        for _ in range(deg):
            x, r = divmod(x, p)
            high_first.append(r)
        high_first.reverse()
        yield tuple(reversed(high_first)) + (1,)


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = list(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    for deg in range(len(a) - 1, db - 1, -1):
        c = a[deg] * inv_lead % p
        if c:
            for j in range(db + 1):
                a[deg - db + j] = (a[deg - db + j] - c * b[j]) % p
    return a[:db]


def is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for d in _monic_polys(p, deg):
            if not any(_poly_rem(poly, d, p)):
                return False
    return True


@functools.lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    for cand in _monic_polys(p, k):
        if is_irreducible(cand, p):
            return cand
    raise FieldError("no irreducible polynomial of degree %d over F%d" % (k, p))  # pragma: no cover


QQ = Rationals()
QQI = GaussianRationals()

_SPEC = re.compile(r"^(?:(QQi)|(QQ)|F(\d+)|GF(\d+)\^(\d+))$")


@functools.lru_cache(maxsize=None)
def field_parse(spec: str) -> Field:
    """Parse ``QQ | QQi | F<p> | GF<p>^<k>`` into a field."""
    m = _SPEC.match(spec.strip())
    if not m:
        raise FieldError("malformed field spec %r" % spec)
    if m.group(1):
        return QQI
    if m.group(2):
        return QQ
    if m.group(3):
        return PrimeField(int(m.group(3)))
    p, k = int(m.group(4)), int(m.group(5))
    if not is_prime(p):
        raise FieldError("%d is not prime" % p)
    if p ** k > MAX_EXTENSION_SIZE:
        raise FieldError("GF(%d^%d) exceeds 2^16 elements" % (p, k))
    return ExtensionField(p, k)


class Scalar:
    """An immutable field element tagged with its field."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldError("field mismatch: %s vs %s" % (self.field, other.field))
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, v):
        return Scalar(self.field, v)

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else self._wrap(self.field.div(o, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "Scalar":
        return self._wrap(self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.spec(), self.value))

    def __str__(self) -> str:
        return self.field.format(self.value)

    def __repr__(self) -> str:
        return "Scalar(%s, %s)" % (self.field.spec(), self.field.format(self.value))


_UNARY = {"neg", "inv"}


def scalar_arith(op: str, a: Scalar, b: Scalar | None = None) -> Scalar:
    """Apply ``op`` in {add, sub, mul, div, neg, inv} to scalars of one field."""
    if op in _UNARY:
        if b is not None:
            raise FieldError("%s takes one operand" % op)
        return -a if op == "neg" else a.inv()
    if b is None:
        raise FieldError("%s takes two operands" % op)
    if a.field != b.field:
        raise FieldError("field mismatch: %s vs %s" % (a.field, b.field))
    fn = {"add": a.field.add, "sub": a.field.sub, "mul": a.field.mul, "div": a.field.div}.get(op)
    if fn is None:
        raise FieldError("unknown operation %r" % op)
    return Scalar(a.field, fn(a.value, b.value))
