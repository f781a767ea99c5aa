"""Buchberger's algorithm, normal forms and ideal membership.

Pairs are chosen by the normal strategy (smallest lcm first, ties by
index) and pruned with the Gebauer-Moeller criteria.  For homogeneous
input the computation can stop at a degree bound D: the resulting basis
decides membership for every polynomial of degree at most D.

Internally a polynomial is a list of ``(key, coeff)`` pairs sorted by
decreasing key, where keys are packed monomials whose integer order is the
monomial order (see :mod:`permlab.polyring`).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Sequence

from .permideal import IdealBasis
from .polyring import BITS, MAXEXP, Poly, PolyRing

__all__ = [
    "MonomialOrder",
    "GroebnerBasis",
    "ResourceCapExceeded",
    "buchberger",
    "normal_form",
    "ideal_contains",
    "ideal_subset",
    "s_polynomial",
    "satisfies_buchberger_criterion",
]

DEFAULT_MAX_BASIS = 20000
DEFAULT_MAX_DEGREE = 40


class ResourceCapExceeded(RuntimeError):
    """A Groebner computation hit its basis-size or degree cap."""


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex"):
            raise ValueError("unknown monomial order %r" % self.kind)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def _as_order(order) -> MonomialOrder:
    if isinstance(order, MonomialOrder):
        return order
    return MonomialOrder(str(order))


class _Codec:
    """Translate ring keys to order keys with matching monomial arithmetic."""

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        n = ring.nvars
        self.n = n
        self.lex = order.kind == "lex"
        self.G = sum((1 << (BITS - 1)) << (BITS * i) for i in range(n))
        if self.lex:
            self.K = 0
            self.VM = (1 << (BITS * n)) - 1
        else:
            self.K = ring.K
            self.VM = ring.VM

    def encode(self, key: int) -> int:
        if not self.lex:
            return key
        exps = self.ring.unpack(key)
        out = 0
        for a in exps:
            out = (out << BITS) | a
        return out

    def decode(self, key: int) -> int:
        if not self.lex:
            return key
        mask = (1 << BITS) - 1
        exps = [(key >> (BITS * (self.n - 1 - i))) & mask for i in range(self.n)]
        return self.ring.pack(exps)

    def exps(self, key: int) -> list[int]:
        mask = (1 << BITS) - 1
        if self.lex:
            return [(key >> (BITS * (self.n - 1 - i))) & mask for i in range(self.n)]
        return [MAXEXP - ((key >> (BITS * i)) & mask) for i in range(self.n)]

    def degree(self, key: int) -> int:
        if self.lex:
            return sum(self.exps(key))
        return key >> self.ring.shift

    def divides(self, a: int, b: int) -> bool:
        G = self.G
        if self.lex:
            return ((b | G) - a) & G == G
        vm = self.VM
        return (((a & vm) | G) - (b & vm)) & G == G

    def lcm(self, a: int, b: int) -> int:
        ea, eb = self.exps(a), self.exps(b)
        m = [x if x > y else y for x, y in zip(ea, eb)]
        if self.lex:
            out = 0
            for x in m:
                out = (out << BITS) | x
            return out
        return self.ring.pack(m)

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.exps(a), self.exps(b)))


class _Arith:
    """Coefficient mode: 'modp' and 'qq' use Python operators, 'generic' the field methods."""

    def __init__(self, F):
        self.F = F
        if F.kind == "prime-field":
            self.mode = "modp"
            self.p = F.p
        elif F.kind == "rationals":
            self.mode = "qq"
            self.p = 0
        else:
            self.mode = "generic"
            self.p = 0


@dataclass
class GroebnerBasis:
    ring: PolyRing
    order: MonomialOrder
    polys: list
    reduced: bool = True
    truncated_at: int | None = None
    stats: dict = field(default_factory=dict)
    _internal: list = field(default_factory=list, repr=False)
    _codec: object = field(default=None, repr=False)
    _arith: object = field(default=None, repr=False)

    def __len__(self) -> int:
        return len(self.polys)

    def covers_degree(self, deg: int) -> bool:
        return self.truncated_at is None or deg <= self.truncated_at

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [self._codec.exps(p[0][0]) for p in self._internal]


# --------------------------------------------------------------------------
# conversion


def _to_internal(f: Poly, codec: _Codec) -> list:
    if not codec.lex:
        return sorted(f.terms.items(), reverse=True)
    return sorted(((codec.encode(k), c) for k, c in f.terms.items()), reverse=True)


def _from_internal(terms: list, ring: PolyRing, codec: _Codec) -> Poly:
    return Poly(ring, {codec.decode(k): c for k, c in terms})


def _monic(terms: list, ar: _Arith) -> list:
    lc = terms[0][1]
    F = ar.F
    if ar.mode == "modp":
        if lc == 1:
            return terms
        inv = pow(lc, -1, ar.p)
        p = ar.p
        return [(k, c * inv % p) for k, c in terms]
    if ar.mode == "qq":
        if lc == 1:
            return terms
        return [(k, F.reduce(F.div(c, lc))) for k, c in terms]
    if lc == F.one:
        return terms
    inv = F.inv(lc)
    return [(k, F.mul(c, inv)) for k, c in terms]


# --------------------------------------------------------------------------
# reduction


def _find_reducer(key: int, leads: list, codec: _Codec, degs: list, kdeg: int):
    G = codec.G
    if codec.lex:
        for idx, lk in enumerate(leads):
            if ((key | G) - lk) & G == G:
                return idx
        return -1
    vm = codec.VM
    kb = key & vm
    for idx, lk in enumerate(leads):
        if degs[idx] <= kdeg and (((lk & vm) | G) - kb) & G == G:
            return idx
    return -1


def _reduce(acc: dict, basis: list, leads: list, degs: list, codec: _Codec, ar: _Arith,
            full: bool = True) -> list:
    """Reduce the polynomial held in ``acc`` (key -> coeff) modulo monic ``basis``.

    Returns the remainder as a sorted internal term list.  With ``full``
    false only the leading term is reduced (the tail is returned as is).
    """
    heap = [-k for k in acc]
    heapq.heapify(heap)
    out = []
    lex = codec.lex
    shift = codec.ring.shift
    mode = ar.mode
    p = ar.p
    F = ar.F
    pop = heapq.heappop
    push = heapq.heappush
    get = acc.get
    while heap:
        k = -pop(heap)
        c = acc.pop(k)
        if mode == "modp":
            c %= p
            if not c:
                continue
        elif mode == "qq":
            if not c:
                continue
        else:
            if F.is_zero(c):
                continue
        kdeg = 0 if lex else k >> shift
        idx = _find_reducer(k, leads, codec, degs, kdeg)
        if idx < 0:
            out.append((k, c))
            if not full:
                # remaining terms are already below k; collect them in order
                rest = []
                while heap:
                    k2 = -pop(heap)
                    c2 = acc.pop(k2)
                    if mode == "modp":
                        c2 %= p
                        if c2:
                            rest.append((k2, c2))
                    elif mode == "qq":
                        if c2:
                            rest.append((k2, c2))
                    elif not F.is_zero(c2):
                        rest.append((k2, c2))
                return out + rest
            continue
        g = basis[idx]
        d = k - g[0][0]  # (k / lead g) * term has key term + d in both encodings
        if mode == "modp" or mode == "qq":
            for kg, cg in g[1:]:
                key = kg + d
                v = get(key)
                if v is None:
                    acc[key] = -c * cg
                    push(heap, -key)
                else:
                    acc[key] = v - c * cg
        else:
            neg, mul, add = F.neg, F.mul, F.add
            nc = neg(c)
            for kg, cg in g[1:]:
                key = kg + d
                v = get(key)
                if v is None:
                    acc[key] = mul(nc, cg)
                    push(heap, -key)
                else:
                    acc[key] = add(v, mul(nc, cg))
    return out


def _spoly_acc(f: list, g: list, codec: _Codec, ar: _Arith) -> dict:
    lcm = codec.lcm(f[0][0], g[0][0])
    K = codec.K
    df = lcm - f[0][0] + K
    dg = lcm - g[0][0] + K
    acc: dict = {}
    if ar.mode in ("modp", "qq"):
        for k, c in f[1:]:
            acc[k + df - K] = c
        for k, c in g[1:]:
            key = k + dg - K
            acc[key] = acc.get(key, 0) - c
    else:
        F = ar.F
        for k, c in f[1:]:
            acc[k + df - K] = c
        for k, c in g[1:]:
            key = k + dg - K
            v = acc.get(key)
            acc[key] = F.neg(c) if v is None else F.sub(v, c)
    return acc


# --------------------------------------------------------------------------
# Buchberger


def _gm_update(G: list, active: list, pairs: list, h_idx: int, codec: _Codec, pair_key) -> None:
    """Gebauer-Moeller update of the pair heap and the active set for a new element h."""
    lh = G[h_idx][0][0]
    divides = codec.divides
    lcm = codec.lcm
    coprime = codec.coprime
    C = [(lcm(lh, G[g][0][0]), g) for g in active]
    D = []
    while C:
        l1, g1 = C.pop(0)
        if coprime(lh, G[g1][0][0]) or (
            not any(divides(l2, l1) for l2, _ in C) and not any(divides(l2, l1) for l2, _ in D)
        ):
            D.append((l1, g1))
    E = [(l1, g1) for l1, g1 in D if not coprime(lh, G[g1][0][0])]
    survivors = []
    for entry in pairs:
        l12, i, j = entry[-3], entry[-2], entry[-1]
        if divides(lh, l12) and lcm(G[i][0][0], lh) != l12 and lcm(G[j][0][0], lh) != l12:
            continue
        survivors.append(entry)
    for l1, g1 in E:
        survivors.append(pair_key(l1, g1, h_idx))
    pairs[:] = survivors
    heapq.heapify(pairs)
    active[:] = [g for g in active if not divides(lh, G[g][0][0])] + [h_idx]


def buchberger(basis: IdealBasis | Sequence[Poly], order="degrevlex", max_basis: int = DEFAULT_MAX_BASIS,
               max_degree: int = DEFAULT_MAX_DEGREE, truncate: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis; with ``truncate`` = D (homogeneous input only) stop above degree D."""
    order = _as_order(order)
    gens = list(basis.generators if isinstance(basis, IdealBasis) else basis)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("empty generator list")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise ValueError("generators live in different rings")
    if truncate is not None and not all(g.is_homogeneous() for g in gens):
        raise ValueError("degree truncation needs homogeneous generators")
    codec = _Codec(ring, order)
    ar = _Arith(ring.field)
    G: list = []
    degs: list = []
    active: list = []
    pairs: list = []
    stats = {"pairs_reduced": 0, "zero_reductions": 0, "pairs_skipped_by_degree": 0}

    def pair_key(l12, i, j):
        return (codec.degree(l12), l12, i, j) if codec.lex else (l12, i, j)

    def add_element(terms: list) -> None:
        terms = _monic(terms, ar)
        deg = codec.degree(terms[0][0])
        if max(codec.degree(k) for k, _ in terms) > max_degree:
            raise ResourceCapExceeded("degree cap %d exceeded" % max_degree)
        G.append(terms)
        degs.append(deg)
        if len(G) > max_basis:
            raise ResourceCapExceeded("basis size cap %d exceeded" % max_basis)
        _gm_update(G, active, pairs, len(G) - 1, codec, pair_key)

    # inter-reduce the input while inserting, smallest leading monomial first
    inputs = sorted((_to_internal(g, codec) for g in gens), key=lambda t: t[0][0])
    for terms in inputs:
        cur = [G[i] for i in active]
        rem = _reduce(dict(terms), cur, [t[0][0] for t in cur], [degs[i] for i in active], codec, ar)
        if rem:
            add_element(rem)
    truncated = False
    while pairs:
        entry = heapq.heappop(pairs)
        l12, i, j = entry[-3], entry[-2], entry[-1]
        if truncate is not None and codec.degree(l12) > truncate:
            truncated = True
            stats["pairs_skipped_by_degree"] += 1 + len(pairs)
            break
        stats["pairs_reduced"] += 1
        acc = _spoly_acc(G[i], G[j], codec, ar)
        cur = [G[a] for a in active]
        rem = _reduce(acc, cur, [t[0][0] for t in cur], [degs[a] for a in active], codec, ar)
        if not rem:
            stats["zero_reductions"] += 1
            continue
        add_element(rem)
    final = _reduce_basis([G[a] for a in active], codec, ar)
    stats["size"] = len(final)
    polys = [_from_internal(t, ring, codec) for t in final]
    return GroebnerBasis(ring, order, polys, True, truncate if truncated else None, stats, final, codec, ar)


def _reduce_basis(elems: list, codec: _Codec, ar: _Arith) -> list:
    elems = sorted(elems, key=lambda t: t[0][0])
    minimal = []
    for t in elems:
        if not any(codec.divides(u[0][0], t[0][0]) for u in minimal):
            minimal.append(t)
    out = []
    for idx, t in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        leads = [u[0][0] for u in others]
        degs = [codec.degree(x) for x in leads]
        tail = _reduce(dict(t[1:]), others, leads, degs, codec, ar) if len(t) > 1 else []
        out.append(_monic([t[0]] + tail, ar))
    out.sort(key=lambda t: t[0][0], reverse=True)
    return out


# --------------------------------------------------------------------------
# queries


def normal_form(f: Poly, gb: GroebnerBasis) -> Poly:
    """Fully reduced remainder of ``f``; zero iff ``f`` lies in the ideal."""
    if f.ring != gb.ring:
        raise ValueError("polynomial and basis live in different rings")
    if not gb.covers_degree(f.degree()):
        raise ValueError("basis is truncated at degree %d, polynomial has degree %d" % (gb.truncated_at, f.degree()))
    codec, ar = gb._codec, gb._arith
    terms = _to_internal(f, codec)
    leads = [t[0][0] for t in gb._internal]
    degs = [codec.degree(k) for k in leads]
    rem = _reduce(dict(terms), gb._internal, leads, degs, codec, ar)
    return _from_internal(rem, gb.ring, codec)


def s_polynomial(f: Poly, g: Poly, order="degrevlex") -> Poly:
    codec = _Codec(f.ring, _as_order(order))
    ar = _Arith(f.ring.field)
    a = _monic(_to_internal(f, codec), ar)
    b = _monic(_to_internal(g, codec), ar)
    acc = _spoly_acc(a, b, codec, ar)
    F = f.ring.field
    if ar.mode == "modp":
        acc = {k: v % ar.p for k, v in acc.items()}
    return _from_internal([(k, v) for k, v in acc.items() if not F.is_zero(v)], f.ring, codec)


def satisfies_buchberger_criterion(gb: GroebnerBasis) -> bool:
    """Post-hoc check: every S-pair of the basis reduces to zero (within the truncation degree)."""
    codec, ar = gb._codec, gb._arith
    G = gb._internal
    leads = [t[0][0] for t in G]
    degs = [codec.degree(k) for k in leads]
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            l12 = codec.lcm(leads[i], leads[j])
            if gb.truncated_at is not None and codec.degree(l12) > gb.truncated_at:
                continue
            if _reduce(_spoly_acc(G[i], G[j], codec, ar), G, leads, degs, codec, ar):
                return False
    return True


_GB_CACHE: dict = {}


def _cached_gb(basis: IdealBasis, order: MonomialOrder, degree: int, **caps) -> GroebnerBasis:
    homogeneous = all(g.is_homogeneous() for g in basis.generators)
    key = (basis.fingerprint(), order)
    gb = _GB_CACHE.get(key)
    if gb is not None and gb.covers_degree(degree):
        return gb
    gb = buchberger(basis, order, truncate=degree if homogeneous else None, **caps)
    _GB_CACHE[key] = gb
    return gb


def clear_cache() -> None:
    _GB_CACHE.clear()


def ideal_contains(basis: IdealBasis, f: Poly, order="degrevlex", **caps) -> bool:
    """Membership via a (cached, degree-truncated when homogeneous) Groebner basis."""
    if f.is_zero():
        return True
    order = _as_order(order)
    gb = _cached_gb(basis, order, f.degree(), **caps)
    return normal_form(f, gb).is_zero()


def ideal_subset(a: IdealBasis, b: IdealBasis, order="degrevlex", **caps) -> bool:
    """True when every generator of ``a`` lies in the ideal generated by ``b``."""
    if a.ring != b.ring:
        raise ValueError("ideals live in different rings")
    if not a.generators:
        return True
    order = _as_order(order)
    gb = _cached_gb(b, order, max(g.degree() for g in a.generators), **caps)
    return all(normal_form(g, gb).is_zero() for g in a.generators)
