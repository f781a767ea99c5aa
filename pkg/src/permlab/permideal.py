"""Permanental ideals and the explicit identities that certify membership in them.

Index conventions: public functions take 1-based row and column labels
(matching the variable names ``x_i_j``); selectors returned by
:func:`permlab.permcore.selectors` are 0-based.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .permcore import Matrix, determinant, permanent, selectors
from .polyring import Poly, PolyRing, generic_ring
from .scalars import QQ, Field, field_parse

__all__ = [
    "IdealBasis",
    "IdealFormatError",
    "MembershipCertificate",
    "TypeSpec",
    "TypePlacement",
    "permanental_ideal",
    "doubled_ideal",
    "minors_ideal",
    "combination_parts",
    "verify_evid",
    "verify_preevid",
    "moncor_certificate",
    "verify_certificate",
    "dplus1_forms",
    "verify_structj",
    "j_ideal",
    "type_v_prime",
    "type_placements",
    "embedded_ideal",
]


class IdealFormatError(ValueError):
    pass


@dataclass
class IdealBasis:
    ring: PolyRing
    generators: list
    label: str = ""

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator from another ring")
            if g.is_zero():
                raise ValueError("zero generator in %s" % (self.label or "basis"))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def fingerprint(self) -> tuple:
        return (self.ring, tuple(tuple(sorted(g.terms.items())) for g in self.generators))

    def to_text(self) -> str:
        lines = [_ring_header(self.ring)]
        lines += [str(g) for g in self.generators]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, label: str = "") -> "IdealBasis":
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise IdealFormatError("empty ideal file")
        ring = _parse_ring_header(lines[0])
        gens = []
        for ln in lines[1:]:
            try:
                g = ring.parse(ln)
            except ValueError as exc:
                raise IdealFormatError(str(exc)) from exc
            if not g.is_zero():
                gens.append(g)
        return cls(ring, gens, label)


def _ring_header(ring: PolyRing) -> str:
    names = ring.names
    for m in range(1, len(names) + 1):
        if len(names) % m == 0:
            n = len(names) // m
            if names == generic_ring(m, n, ring.field).names:
                return "ring %s %d %d" % (ring.field.spec(), m, n)
    return "ring %s vars %s" % (ring.field.spec(), ",".join(names))


def _parse_ring_header(line: str) -> PolyRing:
    parts = line.split()
    try:
        if len(parts) == 4 and parts[0] == "ring":
            return generic_ring(int(parts[2]), int(parts[3]), field_parse(parts[1]))
        if len(parts) == 4 and parts[0] == "ring" and parts[2] == "vars":
            pass
        if len(parts) >= 4 and parts[0] == "ring" and parts[2] == "vars":
            return PolyRing(field_parse(parts[1]), "".join(parts[3:]).split(","))
    except ValueError as exc:
        raise IdealFormatError("bad ring header %r: %s" % (line, exc)) from exc
    raise IdealFormatError("bad ring header %r (expected 'ring <field> <m> <n>')" % line)


@lru_cache(maxsize=64)
def _generic(m: int, n: int, F: Field) -> Matrix:
    return Matrix.generic(m, n, F)


def permanental_ideal(d: int, m: int, n: int, field: Field = QQ) -> IdealBasis:
    """Generators of I_d(m, n) in selector order."""
    if not 1 <= d <= min(m, n):
        raise ValueError("need 1 <= d <= min(m, n), got d=%d m=%d n=%d" % (d, m, n))
    M = _generic(m, n, field)
    gens = [permanent(M.submatrix(*sel)) for sel in selectors(m, n, d)]
    return IdealBasis(M.ring, gens, "I_%d(%d,%d)" % (d, m, n))


def embedded_ideal(d: int, rows: Sequence[int], cols: Sequence[int], m: int, n: int,
                   field: Field = QQ) -> IdealBasis:
    """I_d of the submatrix on 1-based ``rows`` x ``cols``, inside the m x n generic ring."""
    M = _generic(m, n, field)
    sub = M.submatrix([i - 1 for i in rows], [j - 1 for j in cols])
    gens = [permanent(sub.submatrix(*sel)) for sel in selectors(sub.m, sub.n, d)]
    return IdealBasis(M.ring, gens, "I_%d on rows %s cols %s" % (d, list(rows), list(cols)))


def doubled_ideal(d: int, field: Field = QQ) -> IdealBasis:
    """Maximal permanents of (M | M) for the generic d x d matrix M, without repeats.

    Column multisets using some column three times give the zero
    polynomial in characteristic 2 and 3 and are dropped together with
    duplicates.
    """
    M = _generic(d, d, field)
    MM = Matrix._raw([list(r) + list(r) for r in M.rows], ring=M.ring)
    gens = []
    seen = set()
    for sel in selectors(d, 2 * d, d):
        g = permanent(MM.submatrix(*sel))
        if g.is_zero():
            continue
        key = frozenset(g.terms.items())
        if key not in seen:
            seen.add(key)
            gens.append(g)
    return IdealBasis(M.ring, gens, "I_%d(M|M)" % d)


def minors_ideal(k: int, rows: Sequence[int], M: Matrix) -> list[Poly]:
    """k x k minors of the 1-based ``rows`` of a symbolic matrix."""
    sub = M.submatrix([i - 1 for i in rows], list(range(M.n)))
    return [determinant(sub.submatrix(*sel)) for sel in selectors(sub.m, sub.n, k)]


# --------------------------------------------------------------------------
# inclusion-exclusion building blocks


def _row_order(d: int, special_row: int) -> list[int]:
    if not 1 <= special_row <= d:
        raise ValueError("special row %d out of range" % special_row)
    return [special_row - 1] + [i for i in range(d) if i != special_row - 1]


class _Parts:
    """Cached subpermanents of the generic d x n matrix with a chosen special row."""

    def __init__(self, d: int, n: int, field: Field, special_row: int):
        base = _generic(d, n, field)
        self.M = base.submatrix(_row_order(d, special_row), list(range(n)))
        self.d, self.n = d, n
        self.ring = base.ring
        self._A: dict = {}
        self._P: dict = {}
        row0 = self.M.rows[0]
        self.row0 = row0

    def _outside(self, cols) -> Poly:
        mono = self.ring.one
        for j in range(self.n):
            if j not in cols:
                mono = mono * self.row0[j]
        return mono

    def A(self, alpha: tuple) -> Poly:
        if alpha not in self._A:
            sub = self.M.submatrix(list(range(1, self.d)), alpha)
            self._A[alpha] = permanent(sub)
        return self._A[alpha]

    def A_prime(self, alpha: tuple) -> Poly:
        return self.A(alpha) * self._outside(alpha)

    def P(self, beta: tuple) -> Poly:
        if beta not in self._P:
            self._P[beta] = permanent(self.M.submatrix(list(range(self.d)), beta))
        return self._P[beta]

    def P_prime(self, beta: tuple) -> Poly:
        return self.P(beta) * self._outside(beta)


@lru_cache(maxsize=32)
def _parts(d: int, n: int, field: Field, special_row: int) -> _Parts:
    return _Parts(d, n, field, special_row)


def _check_alpha(d: int, n: int, alpha: Sequence[int]) -> tuple:
    alpha = tuple(alpha)
    if len(alpha) != d - 1:
        raise ValueError("alpha must have d-1 = %d entries" % (d - 1))
    if any(not 1 <= a <= n for a in alpha) or any(a >= b for a, b in zip(alpha, alpha[1:])):
        raise ValueError("alpha must be strictly increasing in [1, %d]" % n)
    return tuple(a - 1 for a in alpha)


def combination_parts(d: int, n: int, alpha: Sequence[int], field: Field = QQ,
                      special_row: int = 1) -> dict:
    """A'_alpha and the P'_beta, S_i, T_i sums for one (d-1)-subset ``alpha`` (1-based).

    ``A_alpha`` omits ``special_row`` (row 1 by default).  ``S[i]`` sums
    P'_beta over d-subsets beta meeting alpha in i columns; ``T[i]`` sums
    A'_alpha' over (d-1)-subsets meeting alpha in i columns.
    """
    if not d <= n <= 2 * d - 1:
        raise ValueError("need d <= n <= 2d-1")
    a0 = _check_alpha(d, n, alpha)
    parts = _parts(d, n, field, special_row)
    ring = parts.ring
    aset = set(a0)
    P_prime = {}
    S = [ring.zero for _ in range(d)]
    for beta in combinations(range(n), d):
        pp = parts.P_prime(beta)
        P_prime[tuple(j + 1 for j in beta)] = pp
        S[len(aset.intersection(beta))] += pp
    T = [ring.zero for _ in range(d)]
    for a2 in combinations(range(n), d - 1):
        T[len(aset.intersection(a2))] += parts.A_prime(a2)
    return {
        "ring": ring,
        "A": parts.A(a0),
        "A_prime": parts.A_prime(a0),
        "P_prime": P_prime,
        "S": S,
        "T": T,
    }


def _evid_combination(d: int, n: int, S: list, ring: PolyRing) -> Poly:
    lo = max(0, 2 * d - n - 1)
    B = ring.zero
    for i in range(lo, d):
        coeff = (-1) ** i * math.factorial(i + n - 2 * d + 1) * math.factorial(d - i - 1)
        B += S[i] * coeff
    return B


def verify_evid(d: int, alpha: Sequence[int] | None = None, field: Field = QQ,
                special_row: int = 1) -> dict:
    """Check sum_i (-1)^i i!(d-i-1)! S_i == (-1)^(d-1) d! A'_alpha over the d x (2d-1) matrix."""
    n = 2 * d - 1
    if alpha is None:
        alpha = tuple(range(1, d))
    parts = combination_parts(d, n, alpha, field, special_row)
    ring = parts["ring"]
    B = _evid_combination(d, n, parts["S"], ring)
    sign = (-1) ** (d - 1)
    rhs = parts["A_prime"] * (sign * math.factorial(d))
    diff = B - rhs
    return {
        "pass": diff.is_zero(),
        "sign": sign,
        "d": d,
        "alpha": list(alpha),
        "row": special_row,
        "B_is_zero": B.is_zero(),
        "difference": str(diff),
    }


def verify_preevid(d: int, n: int, alpha: Sequence[int] | None = None, field: Field = QQ,
                   special_row: int = 1) -> dict:
    """Check B == (-1)^(d-1)(n-d+1)! A'_alpha + (-1)^(n+1)(n-d+1)! T_{2d-n-2} for d < n < 2d-1."""
    if not d < n < 2 * d - 1:
        raise ValueError("preevid needs d < n < 2d-1")
    if alpha is None:
        alpha = tuple(range(1, d))
    parts = combination_parts(d, n, alpha, field, special_row)
    ring = parts["ring"]
    B = _evid_combination(d, n, parts["S"], ring)
    f = math.factorial(n - d + 1)
    s1 = (-1) ** (d - 1)
    s2 = (-1) ** (n + 1)
    rhs = parts["A_prime"] * (s1 * f) + parts["T"][2 * d - n - 2] * (s2 * f)
    diff = B - rhs
    return {
        "pass": diff.is_zero(),
        "signs": [s1, s2],
        "d": d,
        "n": n,
        "alpha": list(alpha),
        "row": special_row,
        "difference": str(diff),
    }


# --------------------------------------------------------------------------
# certificates


@dataclass
class MembershipCertificate:
    """``c * target == sum(coeff * generators[index] for index, coeff in pairs)``."""

    c: int
    target: Poly
    pairs: list = field(default_factory=list)
    label: str = ""

    def to_json(self) -> dict:
        ring = self.target.ring
        return {
            "c": self.c,
            "ring": _ring_header(ring),
            "target": str(self.target),
            "label": self.label,
            "pairs": [{"generator": idx, "coefficient": str(q)} for idx, q in self.pairs],
        }

    @classmethod
    def from_json(cls, data) -> "MembershipCertificate":
        if isinstance(data, (str, bytes)):
            data = json.loads(data)
        ring = _parse_ring_header(data["ring"])
        pairs = [(int(p["generator"]), ring.parse(p["coefficient"])) for p in data["pairs"]]
        return cls(int(data["c"]), ring.parse(data["target"]), pairs, data.get("label", ""))


def verify_certificate(cert: MembershipCertificate, basis: IdealBasis) -> dict:
    if cert.c == 0:
        return {"pass": False, "difference": "certificate scalar is zero"}
    if cert.target.ring != basis.ring:
        raise ValueError("certificate and basis live in different rings")
    total = basis.ring.zero
    for idx, q in cert.pairs:
        if not 0 <= idx < len(basis.generators):
            raise IndexError("generator index %d out of range" % idx)
        total += q * basis.generators[idx]
    diff = total - cert.target * cert.c
    return {"pass": diff.is_zero(), "difference": str(diff)}


def _prime_factors(c: int) -> list[int]:
    c = abs(c)
    out = []
    p = 2
    while p * p <= c:
        while c % p == 0:
            if p not in out:
                out.append(p)
            c //= p
        p += 1
    if c > 1:
        out.append(c)
    return out


def moncor_certificate(d: int, field: Field = QQ) -> MembershipCertificate:
    """Certificate that ``c * prod x_i_j`` lies in I_d(d, 2d-1), built by induction on d.

    Step: embed the (d-1)-certificate on rows 2..d and columns 1..2d-3, multiply
    through by the remaining entries, and replace each ``d! A'_gamma`` by the
    inclusion-exclusion combination of the maximal permanents P_beta.
    """
    if d < 1:
        raise ValueError("d must be positive")
    n = 2 * d - 1
    ring = _generic(d, n, field).ring
    target = ring.one
    for x in ring.gens():
        target = target * x
    if d == 1:
        return MembershipCertificate(1, target, [(0, ring.one)], "moncor d=1")
    prev = moncor_certificate(d - 1, field)
    pring = prev.target.ring
    sub_ring_map = {
        "x_%d_%d" % (i, j): ring.var("x_%d_%d" % (i + 1, j))
        for i in range(1, d)
        for j in range(1, 2 * d - 2)
    }
    prev_sels = list(selectors(d - 1, 2 * d - 3, d - 1))
    parts = _parts(d, n, field, 1)
    row1 = [ring.var("x_1_%d" % j) for j in range(1, n + 1)]
    extra = ring.one
    for i in range(2, d + 1):
        extra = extra * ring.var("x_%d_%d" % (i, 2 * d - 2)) * ring.var("x_%d_%d" % (i, 2 * d - 1))
    betas = list(combinations(range(n), d))
    beta_index = {cols: k for k, (_, cols) in enumerate(selectors(d, n, d))}
    sign = (-1) ** (d - 1)
    coeffs: dict = {}
    for idx, q_prev in prev.pairs:
        gamma = prev_sels[idx][1]  # (d-1)-subset of columns 0..2d-4
        q = q_prev.substitute(sub_ring_map, ring) if q_prev.ring == pring else q_prev
        inside = ring.one
        for j in gamma:
            inside = inside * row1[j]
        lead = q * extra * inside
        gset = set(gamma)
        for beta in betas:
            i = len(gset.intersection(beta))
            scal = sign * (-1) ** i * math.factorial(i) * math.factorial(d - i - 1)
            mono = ring.one
            for j in range(n):
                if j not in beta:
                    mono = mono * row1[j]
            term = lead * mono * scal
            k = beta_index[beta]
            coeffs[k] = coeffs[k] + term if k in coeffs else term
    pairs = [(k, coeffs[k]) for k in sorted(coeffs) if not coeffs[k].is_zero()]
    return MembershipCertificate(prev.c * math.factorial(d), target, pairs, "moncor d=%d" % d)


# --------------------------------------------------------------------------
# the d x (d+1) structure


def dplus1_forms(d: int, field: Field = QQ) -> dict:
    """B_{r,p,q}, L_p, W_r, f_p = det L_p and g_r = det W_r for the generic d x (d+1) matrix.

    Indices in the returned tables are 1-based.  P_q is the maximal
    permanent omitting column q and B_{r,p,q} its derivative in x_r_p.
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    n = d + 1
    M = _generic(d, n, field)
    ring = M.ring
    P = {q: permanent(M.submatrix(list(range(d)), [j for j in range(n) if j != q - 1])) for q in range(1, n + 1)}
    B = {}
    for r in range(1, d + 1):
        for p in range(1, n + 1):
            for q in range(1, n + 1):
                B[(r, p, q)] = P[q].derivative("x_%d_%d" % (r, p))
    for (r, p, q), v in B.items():
        if v != B[(r, q, p)]:
            raise AssertionError("B_{%d,%d,%d} is not symmetric" % (r, p, q))
        if p == q and not v.is_zero():
            raise AssertionError("B_{%d,%d,%d} is nonzero" % (r, p, p))
    L = {}
    f = {}
    for p in range(1, n + 1):
        others = [s for s in range(1, n + 1) if s != p]
        L[p] = Matrix._raw([[B[(r, s, p)] for s in others] for r in range(1, d + 1)], ring=ring)
        f[p] = determinant(L[p])
    W = {}
    g = {}
    for r in range(1, d + 1):
        W[r] = Matrix._raw([[B[(r, p, q)] for q in range(1, n + 1)] for p in range(1, n + 1)], ring=ring)
        g[r] = determinant(W[r])
    return {"ring": ring, "P": P, "B": B, "L": L, "f": f, "W": W, "g": g}


def _cofactor(Mx: Matrix, i: int, j: int) -> Poly:
    rows = [r for r in range(Mx.m) if r != i]
    cols = [c for c in range(Mx.n) if c != j]
    minor = determinant(Mx.submatrix(rows, cols)) if rows else Mx.ring.one
    return minor if (i + j) % 2 == 0 else -minor


def verify_structj(d: int, field: Field = QQ, perturb: bool = False) -> dict:
    """Check x_i_j f_j and x_i_j g_i against explicit cofactor combinations of the P_q.

    x_i_j f_j = sum_s C_s P_s with C_s the cofactors of L_j along row i;
    x_i_j g_i = sum_q C_q P_q with C_q the cofactors of W_i along row j.
    ``perturb`` adds 1 to one cofactor as a negative control.
    """
    forms = dplus1_forms(d, field)
    ring, P, L, W, f, g = forms["ring"], forms["P"], forms["L"], forms["W"], forms["f"], forms["g"]
    n = d + 1
    checked = 0
    failures = []
    for i in range(1, d + 1):
        for j in range(1, n + 1):
            x = ring.var("x_%d_%d" % (i, j))
            others = [s for s in range(1, n + 1) if s != j]
            combo = ring.zero
            for col, s in enumerate(others):
                cof = _cofactor(L[j], i - 1, col)
                if perturb and i == 1 and j == 1 and col == 1:
                    cof = cof + 1
                combo += cof * P[s]
            checked += 1
            if combo != x * f[j]:
                failures.append("x_%d_%d*f_%d" % (i, j, j))
            combo = ring.zero
            for q in range(1, n + 1):
                combo += _cofactor(W[i], j - 1, q - 1) * P[q]
            checked += 1
            if combo != x * g[i]:
                failures.append("x_%d_%d*g_%d" % (i, j, i))
    return {"pass": not failures, "checked": checked, "failures": failures}


def j_ideal(d: int, field: Field = QQ) -> IdealBasis:
    """P_1..P_{d+1}, then f_1..f_{d+1}, then g_1..g_d."""
    forms = dplus1_forms(d, field)
    n = d + 1
    gens = [forms["P"][q] for q in range(1, n + 1)]
    gens += [forms["f"][p] for p in range(1, n + 1)]
    gens += [forms["g"][r] for r in range(1, d + 1)]
    return IdealBasis(forms["ring"], gens, "J_%d" % d)


# --------------------------------------------------------------------------
# primes of type v


@dataclass(frozen=True)
class TypeSpec:
    v: tuple

    def __post_init__(self):
        v = tuple(int(x) for x in self.v)
        if not v or any(x < 1 for x in v) or any(a < b for a, b in zip(v, v[1:])):
            raise ValueError("type must be a weakly decreasing sequence of positive integers")
        object.__setattr__(self, "v", v)

    @property
    def s(self) -> int:
        return sum(self.v)

    @property
    def l(self) -> int:
        return len(self.v)

    def d_prime(self) -> int:
        return self.s - self.l + 1

    def e(self, d: int) -> int:
        return d - self.d_prime()

    def normalized(self) -> "TypeSpec":
        """Drop 1s (they do not change the prime); the empty type is written (1)."""
        v = tuple(x for x in self.v if x > 1)
        return TypeSpec(v or (1,))


@dataclass(frozen=True)
class TypePlacement:
    """M' rows/cols plus blocks; all indices 1-based.  Block k has size v_k."""

    rows: tuple
    cols: tuple
    row_blocks: tuple
    col_blocks: tuple


def _check_placement(d: int, m: int, n: int, spec: TypeSpec, pl: TypePlacement) -> None:
    e = spec.e(d)
    if spec.s > min(m, n) or spec.d_prime() > d:
        raise ValueError("type %s does not fit d=%d, %dx%d" % (spec.v, d, m, n))
    if len(pl.rows) + len(pl.cols) + e != m + n:
        raise ValueError("M' must satisfy m'+n'+e = m+n (e=%d)" % e)
    if len(set(pl.rows)) != len(pl.rows) or len(set(pl.cols)) != len(pl.cols):
        raise ValueError("repeated index in M'")
    if any(not 1 <= i <= m for i in pl.rows) or any(not 1 <= j <= n for j in pl.cols):
        raise ValueError("M' index out of range")
    if len(pl.row_blocks) != spec.l or len(pl.col_blocks) != spec.l:
        raise ValueError("need one row block and one column block per entry of v")
    used_r: set = set()
    used_c: set = set()
    for size, rb, cb in zip(spec.v, pl.row_blocks, pl.col_blocks):
        if len(rb) != size or len(cb) != size:
            raise ValueError("block sizes must match v")
        if not set(rb) <= set(pl.rows) or not set(cb) <= set(pl.cols):
            raise ValueError("blocks must lie inside M'")
        if used_r & set(rb) or used_c & set(cb):
            raise ValueError("blocks must be disjoint")
        used_r |= set(rb)
        used_c |= set(cb)


def type_placements(d: int, m: int, n: int, spec: TypeSpec):
    """Every placement of ``spec`` (blocks listed in increasing order of first index)."""
    e = spec.e(d)
    target = m + n - e
    for mp in range(spec.s, m + 1):
        np_ = target - mp
        if not spec.s <= np_ <= n:
            continue
        for rows in combinations(range(1, m + 1), mp):
            for cols in combinations(range(1, n + 1), np_):
                for rb in _ordered_blocks(rows, spec.v):
                    for cb in _ordered_blocks(cols, spec.v, distinct_sizes_only=False):
                        yield TypePlacement(rows, cols, rb, cb)


def _ordered_blocks(pool, sizes, distinct_sizes_only=True):
    """Disjoint blocks of the given sizes from ``pool``; equal-size blocks are unordered."""

    def rec(k, avail, last_equal):
        if k == len(sizes):
            yield ()
            return
        for blk in combinations(avail, sizes[k]):
            if distinct_sizes_only and last_equal is not None and k > 0 and sizes[k] == sizes[k - 1] and blk < last_equal:
                continue
            rest = [x for x in avail if x not in blk]
            for tail in rec(k + 1, rest, blk):
                yield (blk,) + tail

    return rec(0, list(pool), None)


def default_placement(d: int, m: int, n: int, spec: TypeSpec) -> TypePlacement:
    """M' takes leading rows and columns (rows first); blocks are consecutive."""
    e = spec.e(d)
    mp = m
    np_ = n - e
    if np_ < spec.s:
        np_ = spec.s
        mp = m + n - e - np_
    rows = tuple(range(1, mp + 1))
    cols = tuple(range(1, np_ + 1))
    rb, cb = [], []
    start = 1
    for size in spec.v:
        rb.append(tuple(range(start, start + size)))
        cb.append(tuple(range(start, start + size)))
        start += size
    return TypePlacement(rows, cols, tuple(rb), tuple(cb))


def type_v_prime(d: int, m: int, n: int, spec: TypeSpec | Sequence[int],
                 placement: TypePlacement | None = None, field: Field = QQ) -> IdealBasis:
    """Block permanents of M' plus every entry of M' outside the blocks.

    Entries of M outside M' are not generators.
    """
    if not isinstance(spec, TypeSpec):
        spec = TypeSpec(tuple(spec))
    if placement is None:
        placement = default_placement(d, m, n, spec)
    _check_placement(d, m, n, spec, placement)
    M = _generic(m, n, field)
    gens = []
    in_block = set()
    for rb, cb in zip(placement.row_blocks, placement.col_blocks):
        sub = M.submatrix([i - 1 for i in rb], [j - 1 for j in cb])
        gens.append(permanent(sub))
        in_block |= {(i, j) for i in rb for j in cb}
    for i in placement.rows:
        for j in placement.cols:
            if (i, j) not in in_block:
                gens.append(M.rows[i - 1][j - 1])
    return IdealBasis(M.ring, gens, "type %s prime" % (spec.v,))
