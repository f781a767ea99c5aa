"""Sparse exact multivariate polynomials over the fields in :mod:`permlab.scalars`.

A monomial ``x_1^a_1 ... x_n^a_n`` is packed into one Python integer::

    key = deg << (8 n)  +  sum_i (127 - a_i) << (8 i)

so that integer comparison of keys *is* the graded reverse lexicographic
order (``x_1 > x_2 > ... > x_n``), monomial multiplication is
``k1 + k2 - K`` for a ring constant ``K``, and divisibility is a single
guarded subtraction.  Individual exponents are limited to 127.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import QQ, ExtensionField, Field, FieldError, GaussianRationals, Scalar

__all__ = ["PolyRing", "Poly", "PolySyntaxError", "RingMismatch", "generic_ring", "parse_poly"]

BITS = 8
_SCALARLIKE = (int, Fraction, tuple, Scalar)
MAXEXP = (1 << (BITS - 1)) - 1


class RingMismatch(ValueError):
    pass


class PolySyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str = ""):
        super().__init__("%s at position %d%s" % (message, pos, (": %r" % text) if text else ""))
        self.pos = pos


class PolyRing:
    """``field[names...]`` with a fixed variable order."""

    def __init__(self, field: Field, names: Sequence[str]):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError("bad variable name %r" % name)
        self.field = field
        self.names = names
        self.nvars = n = len(names)
        self.index = {name: i for i, name in enumerate(names)}
        self.shift = BITS * n
        self.K = sum(MAXEXP << (BITS * i) for i in range(n))
        self.G = sum((1 << (BITS - 1)) << (BITS * i) for i in range(n))
        self.VM = (1 << self.shift) - 1
        self._hash = hash((field, names))

    # -- monomials -------------------------------------------------------
    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has length %d, ring has %d variables" % (len(exps), self.nvars))
        key = 0
        deg = 0
        for i, e in enumerate(exps):
            if e < 0 or e > MAXEXP:
                raise OverflowError("exponent %d out of range [0, %d]" % (e, MAXEXP))
            deg += e
            key |= (MAXEXP - e) << (BITS * i)
        return key | (deg << self.shift)

    def unpack(self, key: int) -> tuple[int, ...]:
        mask = (1 << BITS) - 1
        return tuple(MAXEXP - ((key >> (BITS * i)) & mask) for i in range(self.nvars))

    def mono_degree(self, key: int) -> int:
        return key >> self.shift

    def divides(self, a: int, b: int) -> bool:
        vm, g = self.VM, self.G
        return (((a & vm) | g) - (b & vm)) & g == g

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.unpack(a), self.unpack(b)
        return self.pack([x if x > y else y for x, y in zip(ea, eb)])

    def mono_str(self, key: int) -> str:
        parts = []
        for name, e in zip(self.names, self.unpack(key)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append("%s^%d" % (name, e))
        return "*".join(parts) if parts else "1"

    # -- constructors ----------------------------------------------------
    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.const(self.field.one)

    def const(self, c) -> "Poly":
        c = self.field.convert(c)
        if self.field.is_zero(c):
            return Poly(self, {})
        return Poly(self, {self.K: c})

    def const_raw(self, c) -> "Poly":
        """Constant from an already-canonical raw field value (no integer coercion)."""
        return Poly(self, {} if self.field.is_zero(c) else {self.K: c})

    def var(self, name) -> "Poly":
        i = self.index[name] if isinstance(name, str) else int(name)
        if not 0 <= i < self.nvars:
            raise IndexError(name)
        return Poly(self, {self.K - (1 << (BITS * i)) + (1 << self.shift): self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def from_dict(self, terms: Mapping[Sequence[int], object]) -> "Poly":
        F = self.field
        out: dict[int, object] = {}
        for exps, c in terms.items():
            c = F.convert(c)
            if F.is_zero(c):
                continue
            key = self.pack(exps)
            if key in out:
                c = F.add(out[key], c)
                if F.is_zero(c):
                    del out[key]
                    continue
            out[key] = c
        return Poly(self, out)

    def monomial(self, exps: Sequence[int], coeff=1) -> "Poly":
        return self.from_dict({tuple(exps): coeff})

    def parse(self, text: str) -> "Poly":
        return parse_poly(text, self)

    def __call__(self, value) -> "Poly":
        if isinstance(value, Poly):
            if value.ring != self:
                raise RingMismatch("polynomial from another ring")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return self.const(value)

    # -- misc ------------------------------------------------------------
    def __eq__(self, other) -> bool:
        return self is other or (
            isinstance(other, PolyRing) and self.field == other.field and self.names == other.names
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return "PolyRing(%s, %s)" % (self.field.spec(), ",".join(self.names))


def generic_ring(m: int, n: int, field: Field = QQ, name: str = "x") -> PolyRing:
    """Ring of the generic ``m x n`` matrix, variables ``x_i_j`` in row-major order."""
    if m < 1 or n < 1:
        raise ValueError("matrix dimensions must be positive")
    return PolyRing(field, ["%s_%d_%d" % (name, i, j) for i in range(1, m + 1) for j in range(1, n + 1)])


class Poly:
    """Immutable sparse polynomial; ``terms`` maps packed monomials to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_deg")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._deg = None

    # -- coercion --------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatch("%r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, _SCALARLIKE):
            return self.ring.const(other)
        raise TypeError("cannot combine Poly with %r" % type(other))

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other) -> "Poly":
        try:
            g = self._coerce(other)
        except TypeError:
            return NotImplemented
        F = self.ring.field
        if len(self.terms) < len(g.terms):
            small, big = self.terms, g.terms
        else:
            small, big = g.terms, self.terms
        out = dict(big)
        if F.native:
            red = F.reduce
            for e, c in small.items():
                v = out.get(e)
                if v is None:
                    out[e] = c
                else:
                    v = red(v + c)
                    if v:
                        out[e] = v
                    else:
                        del out[e]
        else:
            zero = F.zero
            for e, c in small.items():
                v = out.get(e)
                if v is None:
                    out[e] = c
                else:
                    v = F.add(v, c)
                    if v != zero:
                        out[e] = v
                    else:
                        del out[e]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        neg = self.ring.field.neg
        return Poly(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        try:
            g = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-g)

    def __rsub__(self, other) -> "Poly":
        try:
            g = self._coerce(other)
        except TypeError:
            return NotImplemented
        return g + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, Poly):
            g = self._coerce(other)
        elif isinstance(other, _SCALARLIKE):
            return self.scale(self.ring.field.convert(other))
        else:
            return NotImplemented
        if not self.terms or not g.terms:
            return Poly(self.ring, {})
        if self.degree() + g.degree() > MAXEXP:
            raise OverflowError("product degree exceeds %d" % MAXEXP)
        ring = self.ring
        F = ring.field
        K = ring.K
        f_items = list(self.terms.items())
        g_items = list(g.terms.items())
        if len(f_items) > len(g_items):
            f_items, g_items = g_items, f_items
        acc: dict = {}
        get = acc.get
        if F.native:
            for ea, ca in f_items:
                d = ea - K
                for eb, cb in g_items:
                    e = eb + d
                    acc[e] = get(e, 0) + ca * cb
            red = F.reduce
            out = {}
            for e, c in acc.items():
                c = red(c)
                if c:
                    out[e] = c
        else:
            add, mul, zero = F.add, F.mul, F.zero
            for ea, ca in f_items:
                d = ea - K
                for eb, cb in g_items:
                    e = eb + d
                    v = get(e)
                    acc[e] = mul(ca, cb) if v is None else add(v, mul(ca, cb))
            out = {e: c for e, c in acc.items() if c != zero}
        return Poly(ring, out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        F = self.ring.field
        c = F.convert(c)
        if F.is_zero(c):
            return Poly(self.ring, {})
        mul = F.mul
        return Poly(self.ring, {e: mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, key: int, c=None) -> "Poly":
        K = self.ring.K
        if c is None:
            return Poly(self.ring, {e + key - K: v for e, v in self.terms.items()})
        mul = self.ring.field.mul
        return Poly(self.ring, {e + key - K: mul(v, c) for e, v in self.terms.items()})

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- queries ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Scalar)):
            return self.terms == self.ring.const(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = (max(self.terms) >> self.ring.shift) if self.terms else -1
        return self._deg

    def is_homogeneous(self) -> bool:
        shift = self.ring.shift
        return len({e >> shift for e in self.terms}) <= 1

    def multidegrees(self, blocks: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
        """Set of block degrees of the terms; ``blocks`` lists variable indices per block."""
        out = set()
        for e in self.terms:
            exps = self.ring.unpack(e)
            out.add(tuple(sum(exps[i] for i in blk) for blk in blocks))
        return out

    def leading_term(self):
        """``(exponents, coefficient)`` of the degrevlex-largest term."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms)
        return self.ring.unpack(e), self.terms[e]

    def sorted_terms(self) -> list[tuple[int, object]]:
        return sorted(self.terms.items(), reverse=True)

    def items(self) -> Iterable[tuple[tuple[int, ...], Scalar]]:
        """``(exponents, Scalar)`` pairs in descending degrevlex order."""
        F = self.ring.field
        for e, c in self.sorted_terms():
            yield self.ring.unpack(e), Scalar(F, c)

    def coefficient_of(self, exps: Sequence[int]) -> Scalar:
        F = self.ring.field
        return Scalar(F, self.terms.get(self.ring.pack(exps), F.zero))

    def constant_coefficient(self) -> Scalar:
        F = self.ring.field
        return Scalar(F, self.terms.get(self.ring.K, F.zero))

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for name, x in zip(self.ring.names, self.ring.unpack(e)):
                if x:
                    used.add(name)
        return used

    # -- evaluation and substitution --------------------------------------
    def evaluate(self, point: Sequence) -> Scalar:
        return Scalar(self.ring.field, self.evaluate_raw(point))

    def evaluate_raw(self, point: Sequence):
        ring = self.ring
        F = ring.field
        if len(point) != ring.nvars:
            raise ValueError("point has length %d, ring has %d variables" % (len(point), ring.nvars))
        vals = [F.convert(v) for v in point]
        powcache: dict = {}
        total = F.zero
        for e, c in self.terms.items():
            term = c
            for i, x in enumerate(ring.unpack(e)):
                if x:
                    pv = powcache.get((i, x))
                    if pv is None:
                        pv = powcache[(i, x)] = F.pow(vals[i], x)
                    term = F.mul(term, pv)
            total = F.add(total, term)
        return total

    def substitute(self, bindings: Mapping[str, "Poly"], target: PolyRing | None = None) -> "Poly":
        """Simultaneous substitution; unbound variables map to the same-named variable of ``target``."""
        ring = self.ring
        if target is None:
            target = ring
        for name in bindings:
            if name not in ring.index:
                raise KeyError("undeclared variable %r" % name)
        images = []
        for name in ring.names:
            if name in bindings:
                img = bindings[name]
                if not isinstance(img, Poly):
                    img = target(img)
                elif img.ring != target:
                    raise RingMismatch("binding for %s lives in another ring" % name)
                images.append(img)
            else:
                if name not in target.index:
                    raise KeyError("variable %r is unbound and absent from the target ring" % name)
                images.append(target.var(name))
        if target.field != ring.field:
            raise RingMismatch("substitution cannot change the coefficient field")
        powcache: dict = {}
        acc = target.zero
        for e, c in self.terms.items():
            term = target.const_raw(c)
            for i, x in enumerate(ring.unpack(e)):
                if x:
                    pv = powcache.get((i, x))
                    if pv is None:
                        pv = powcache[(i, x)] = images[i] ** x
                    term = term * pv
            acc = acc + term
        return acc

    def derivative(self, name) -> "Poly":
        ring = self.ring
        i = ring.index[name] if isinstance(name, str) else int(name)
        F = ring.field
        bit = 1 << (BITS * i)
        top = 1 << ring.shift
        out = {}
        for e, c in self.terms.items():
            x = MAXEXP - ((e >> (BITS * i)) & ((1 << BITS) - 1))
            if x:
                c2 = F.mul(c, F.from_int(x))
                if not F.is_zero(c2):
                    out[e + bit - top] = c2
        return Poly(ring, out)

    def map_coefficients(self, fn, ring: PolyRing | None = None) -> "Poly":
        ring = ring or self.ring
        F = ring.field
        out = {}
        for e, c in self.terms.items():
            c2 = fn(c)
            if not F.is_zero(c2):
                out[e] = c2
        return Poly(ring, out)

    def to_ring(self, ring: PolyRing) -> "Poly":
        """Re-embed into a ring over the same field whose variables include ours."""
        if ring == self.ring:
            return self
        return self.substitute({}, ring)

    # -- text --------------------------------------------------------------
    def __str__(self) -> str:
        ring = self.ring
        F = ring.field
        if not self.terms:
            return "0"
        out = []
        for e, c in self.sorted_terms():
            mono = ring.mono_str(e)
            neg = _is_negative(F, c)
            if neg:
                c = F.neg(c)
            coeff = _coeff_str(F, c)
            if mono == "1":
                body = coeff
            elif coeff == "1":
                body = mono
            else:
                body = coeff + "*" + mono
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return "Poly(%s)" % self


def _is_negative(F: Field, c) -> bool:
    if F.kind == "rationals":
        return c < 0
    if F.kind == "gaussian-rationals":
        return c[0] < 0 or (c[0] == 0 and c[1] < 0)
    return False


def _coeff_str(F: Field, c) -> str:
    txt = F.format(c)
    if isinstance(F, GaussianRationals) and c[0] != 0 and c[1] != 0:
        return "(" + txt + ")"
    return txt


# --------------------------------------------------------------------------
# parser

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError("unexpected character %r" % text[pos:].lstrip()[:1], pos, text)
        start = m.start(m.lastgroup)
        tokens.append((m.lastgroup, m.group(m.lastgroup), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, tok[2], self.text)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token %r" % self.peek()[1])
        return result

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = -acc
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Poly:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if val == "*":
                self.take()
                acc = acc * self.factor()
            elif kind in ("num", "ident") or val == "(":
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> Poly:
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            tok = self.take()
            if tok[0] != "num" or "/" in tok[1]:
                self.error("expected a non-negative integer exponent", tok)
            base = base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        ring = self.ring
        F = ring.field
        kind, val, pos = self.take()
        if kind == "num":
            try:
                return ring.const_raw(F.parse(val))
            except (FieldError, ZeroDivisionError) as exc:
                raise PolySyntaxError(str(exc), pos, self.text) from exc
        if kind == "ident":
            if val in ring.index:
                return ring.var(val)
            if val == "i" and isinstance(F, GaussianRationals):
                return ring.const_raw(F.I)
            if val == "g" and isinstance(F, ExtensionField):
                return ring.const_raw(F.generator)
            raise PolySyntaxError("unknown variable %r" % val, pos, self.text)
        if val == "(":
            inner = self.expr()
            if self.take()[1] != ")":
                self.error("expected ')'", self.toks[self.i - 1])
            return inner
        raise PolySyntaxError("unexpected token %r" % (val or "end of input"), pos, self.text)


def parse_poly(text: str, ring: PolyRing) -> Poly:
    """Parse ``text`` (see module grammar) into a canonical :class:`Poly` of ``ring``."""
    return _Parser(text, ring).parse()


def random_poly(ring: PolyRing, rng, nterms: int = 5, maxdeg: int = 3) -> Poly:
    """Random polynomial for property tests."""
    F = ring.field
    terms = {}
    for _ in range(nterms):
        exps = [0] * ring.nvars
        for _ in range(rng.randint(0, maxdeg)):
            exps[rng.randrange(ring.nvars)] += 1
        terms[tuple(exps)] = F.random(rng)
    return ring.from_dict(terms)


def monomials_of_degree(nvars: int, deg: int):
    """Exponent vectors of total degree ``deg`` (combinations with replacement)."""
    for combo in itertools.combinations_with_replacement(range(nvars), deg):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield tuple(exps)
