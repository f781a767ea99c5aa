"""Finite-field searches: nowhere-zero witnesses, coefficient extraction and
exhaustive enumeration of permanental varieties with component tagging.

Field elements of F_q are the integer codes of :mod:`permlab.scalars`
(residues for prime fields, ``sum c_j p^j`` for extensions); "canonical
order" means increasing code.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Iterable, Sequence

from . import kernels
from .permcore import Matrix, determinant, permanent
from .polyring import Poly, PolyRing
from .scalars import Field, Scalar, field_parse, is_prime

__all__ = [
    "WitnessReport",
    "VarietyResult",
    "ComponentTag",
    "field_of_size",
    "p_poly",
    "c_alpha",
    "repeat_columns",
    "reduce_q",
    "vanishes_everywhere",
    "find_witness",
    "polylink_agrees",
    "classify_no_witness",
    "enumerate_no_witness",
    "variety_enumerate",
    "classify_solution",
    "classify_points",
    "random_invertible",
    "alpha_vectors",
]


def field_of_size(q: int) -> Field:
    """F_q for a prime power q (prime fields as ``F<p>``, others as ``GF<p>^<k>``)."""
    if q < 2:
        raise ValueError("q must be at least 2")
    if is_prime(q):
        return field_parse("F%d" % q)
    for p in range(2, q + 1):
        if q % p == 0:
            break
    k = 0
    r = q
    while r % p == 0:
        r //= p
        k += 1
    if r != 1:
        raise ValueError("%d is not a prime power" % q)
    return field_parse("GF%d^%d" % (p, k))


def _finite(F: Field) -> int:
    if not F.is_finite:
        raise ValueError("a finite field is required, got %s" % F)
    return F.q


# --------------------------------------------------------------------------
# P_A and its coefficients


def _x_ring(F: Field, n: int) -> PolyRing:
    return PolyRing(F, ["X_%d" % j for j in range(1, n + 1)])


def p_poly(A: Matrix, primed: bool = False) -> Poly:
    """prod_i (sum_j a_ij X_j), times X_1...X_n when ``primed``."""
    if A.symbolic:
        raise ValueError("p_poly needs a scalar matrix")
    R = _x_ring(A.field, A.n)
    X = R.gens()
    out = R.one
    for row in A.rows:
        lin = R.zero
        for a, x in zip(row, X):
            if not A.field.is_zero(a):
                lin = lin + x.scale(a)
        out = out * lin
    if primed:
        for x in X:
            out = out * x
    return out


def repeat_columns(A: Matrix, alpha: Sequence[int]) -> Matrix:
    """Column j repeated alpha_j times, in column order."""
    if len(alpha) != A.n or any(a < 0 for a in alpha):
        raise ValueError("alpha must have one non-negative entry per column")
    cols = [j for j, a in enumerate(alpha) for _ in range(a)]
    if not cols:
        raise ValueError("alpha must have a positive sum")
    return A.submatrix(list(range(A.m)), cols)


def _multiset_permutations(items: list) -> Iterable[tuple]:
    items = sorted(items)
    n = len(items)
    out = [None] * n
    counts: dict = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    keys = sorted(counts)

    def rec(pos):
        if pos == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out[pos] = k
                yield from rec(pos + 1)
                counts[k] += 1

    return rec(0)


def c_alpha(A: Matrix, alpha: Sequence[int], method: str = "expand"):
    """Coefficient of X^alpha in P_A, by expansion or by summing over coset representatives."""
    alpha = tuple(alpha)
    if len(alpha) != A.n or any(a < 0 for a in alpha) or sum(alpha) != A.m:
        raise ValueError("alpha must be a length-%d vector with sum %d" % (A.n, A.m))
    F = A.field
    if method == "expand":
        return p_poly(A).coefficient_of(alpha)
    if method != "coset":
        raise ValueError("unknown method %r" % method)
    # a coset of S_d / prod S_alpha_i is a distinct arrangement of the column labels
    labels = [j for j, a in enumerate(alpha) for _ in range(a)]
    total = F.zero
    for arrangement in _multiset_permutations(labels):
        prod = F.one
        for i, j in enumerate(arrangement):
            prod = F.mul(prod, A.rows[i][j])
            if F.is_zero(prod):
                break
        total = F.add(total, prod)
    return Scalar(F, total)


def alpha_vectors(n: int, d: int) -> Iterable[tuple[int, ...]]:
    """All non-negative integer vectors of length n summing to d."""
    for cut in combinations(range(d + n - 1), n - 1):
        prev = -1
        out = []
        for c in cut + (d + n - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def reduce_q(f: Poly, q: int | None = None) -> Poly:
    """Apply x^q = x: exponents e >= q become ((e-1) mod (q-1)) + 1."""
    F = f.ring.field
    if q is None:
        q = _finite(F)
    ring = f.ring
    out: dict = {}
    for key, c in f.terms.items():
        exps = [((e - 1) % (q - 1)) + 1 if e >= q else e for e in ring.unpack(key)]
        k2 = ring.pack(exps)
        if k2 in out:
            v = F.add(out[k2], c)
            if F.is_zero(v):
                del out[k2]
            else:
                out[k2] = v
        else:
            out[k2] = c
    return Poly(ring, out)


def vanishes_everywhere(f: Poly) -> bool:
    """Exhaustive check that f is zero at every point of F_q^n."""
    F = f.ring.field
    q = _finite(F)
    for pt in product(range(q), repeat=f.ring.nvars):
        if not F.is_zero(_eval_codes(f, pt)):
            return False
    return True


def _eval_codes(f: Poly, pt) -> object:
    F = f.ring.field
    ring = f.ring
    total = F.zero
    for key, c in f.terms.items():
        term = c
        for v, e in zip(pt, ring.unpack(key)):
            if e:
                term = F.mul(term, F.pow(v, e))
        total = F.add(total, term)
    return total


# --------------------------------------------------------------------------
# witnesses


@dataclass
class WitnessReport:
    matrix: Matrix
    q: int
    witness: tuple | None
    nodes: int
    exceeded: bool = False
    runtime_ms: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None

    def to_json(self) -> dict:
        F = self.matrix.field
        return {
            "q": self.q,
            "matrix": self.matrix.text_rows(),
            "witness": None if self.witness is None else [F.format(x) for x in self.witness],
            "nodes": self.nodes,
            "budget_exceeded": self.exceeded,
        }


def _tables(F: Field):
    if F.q is None or F.q > 256:
        return None
    return F.tables()


def _witness_generic(rows, F: Field, budget: int):
    q = F.q
    d = len(rows)
    n = len(rows[0])
    last = [max((j for j in range(n) if not F.is_zero(rows[i][j])), default=-1) for i in range(d)]
    if min(last) < 0:
        return None, 0, False
    nodes = 0
    sums = [[F.zero] * d]
    x: list = []
    # explicit stack over coordinates; values 1..q-1 in code order
    stack = [1]
    while stack:
        j = len(stack) - 1
        v = stack[j]
        if v >= q:
            stack.pop()
            if x:
                x.pop()
                sums.pop()
            if stack:
                stack[-1] += 1
            continue
        nodes += 1
        if budget and nodes > budget:
            return None, nodes, True
        new = [F.add(s, F.mul(rows[i][j], v)) for i, s in enumerate(sums[-1])]
        if any(F.is_zero(new[i]) for i in range(d) if last[i] == j):
            stack[-1] += 1
            continue
        if j == n - 1:
            return tuple(x + [v]), nodes, False
        x.append(v)
        sums.append(new)
        stack.append(1)
    return None, nodes, False


def find_witness(A: Matrix, budget: int = 0) -> WitnessReport:
    """Lexicographically first X in (F_q^*)^n with AX fully supported, or none."""
    F = A.field
    q = _finite(F)
    t0 = time.perf_counter()
    tabs = _tables(F)
    if tabs is not None:
        w, nodes, exceeded = kernels.find_witness([list(r) for r in A.rows], q, tabs[0], tabs[1], budget)
    else:
        w, nodes, exceeded = _witness_generic(A.rows, F, budget)
    ms = int((time.perf_counter() - t0) * 1000)
    return WitnessReport(A, q, w, nodes, exceeded, ms)


def polylink_agrees(A: Matrix) -> bool:
    """A witness exists exactly when P'_A does not reduce to zero under x^q = x."""
    found = find_witness(A).found
    return found == (not reduce_q(p_poly(A, primed=True)).is_zero())


# --------------------------------------------------------------------------
# matrices without witnesses


def classify_no_witness(A: Matrix) -> str:
    """zero-row, classified-two-column, or unclassified."""
    F = A.field
    z = F.is_zero
    if any(all(z(x) for x in row) for row in A.rows):
        return "zero-row"
    nonzero_cols = [j for j in range(A.n) if any(not z(r[j]) for r in A.rows)]
    if len(nonzero_cols) != 2:
        return "unclassified"
    a, b = nonzero_cols
    if any(z(r[a]) or z(r[b]) for r in A.rows):
        return "unclassified"
    ratios = sorted(F.div(r[b], r[a]) for r in A.rows)
    units = sorted(x for x in range(F.q) if not z(x))
    return "classified-two-column" if ratios == units else "unclassified"


def _decode_matrix(flat: Sequence[int], d: int, n: int, F: Field) -> Matrix:
    return Matrix._raw([list(flat[i * n:(i + 1) * n]) for i in range(d)], field=F)


def enumerate_no_witness(d: int, n: int, q: int, max_matrices: int = 10 ** 8) -> list[tuple[Matrix, str]]:
    """Every d x n matrix over F_q with no witness, tagged by :func:`classify_no_witness`."""
    F = field_of_size(q)
    if q ** (d * n) > max_matrices:
        raise OverflowError("q^(dn) = %d exceeds the budget %d" % (q ** (d * n), max_matrices))
    tabs = _tables(F)
    if tabs is None:
        raise ValueError("field too large for the exhaustive sweep")
    flats = kernels.nowitness_sweep(d, n, q, tabs[0], tabs[1])
    out = []
    for flat in flats:
        M = _decode_matrix(flat, d, n, F)
        out.append((M, classify_no_witness(M)))
    return out


def random_invertible(d: int, F: Field, rng: random.Random) -> Matrix:
    """Uniform invertible matrix by rejection sampling."""
    while True:
        rows = [[F.random(rng) for _ in range(d)] for _ in range(d)]
        M = Matrix._raw(rows, field=F)
        if not determinant(M).is_zero():
            return M


# --------------------------------------------------------------------------
# varieties


@dataclass
class VarietyResult:
    d: int
    m: int
    n: int
    field: Field
    codes: list
    nodes: int
    exceeded: bool

    def __len__(self) -> int:
        return len(self.codes)

    def rows_of(self, code_tuple) -> list[list[int]]:
        q = self.field.q
        return [[(c // q ** r) % q for c in code_tuple] for r in range(self.m)]

    def matrices(self) -> Iterable[Matrix]:
        for ct in self.codes:
            yield Matrix._raw(self.rows_of(ct), field=self.field)


def variety_enumerate(d: int, m: int, n: int, q: int, budget: int = 0, partitions: int = 1) -> VarietyResult:
    """All m x n matrices over F_q with vanishing d x d subpermanents.

    The first column's range is split into ``partitions`` consecutive slices
    whose results are concatenated in order, so the output does not depend
    on the split.
    """
    F = field_of_size(q)
    tabs = _tables(F)
    if tabs is None:
        raise ValueError("field too large for table kernels")
    if not 1 <= d <= min(m, n):
        raise ValueError("need 1 <= d <= min(m, n)")
    ncodes = q ** m
    partitions = max(1, min(partitions, ncodes))
    bounds = [ncodes * k // partitions for k in range(partitions + 1)]
    codes: list = []
    nodes = 0
    exceeded = False
    for lo, hi in zip(bounds, bounds[1:]):
        remaining = budget - nodes if budget else 0
        if budget and remaining <= 0:
            exceeded = True
            break
        sols, nd, ex = kernels.variety_dfs(d, m, n, q, tabs[0], tabs[1], remaining, lo, hi)
        codes.extend(sols)
        nodes += nd
        if ex:
            exceeded = True
            break
    return VarietyResult(d, m, n, F, codes, nodes, exceeded)


# --------------------------------------------------------------------------
# component tags


@dataclass(frozen=True)
class ComponentTag:
    tag: str
    placement: tuple = field(default=())

    def __str__(self) -> str:
        return self.tag


CONTEXTS = {(2, 3), (3, 5), (4, 4)}


class _Point:
    """A scalar matrix with cached zero pattern and small permanents/minors."""

    __slots__ = ("rows", "F", "m", "n", "zero")

    def __init__(self, rows, F: Field):
        self.rows = rows
        self.F = F
        self.m = len(rows)
        self.n = len(rows[0])
        z = F.is_zero
        self.zero = [[z(x) for x in r] for r in rows]

    def all_zero(self, cells) -> bool:
        zero = self.zero
        return all(zero[i][j] for i, j in cells)

    def perm(self, rows, cols):
        F = self.F
        total = F.zero
        a = self.rows
        for sigma in permutations(cols):
            prod = F.one
            for i, j in zip(rows, sigma):
                prod = F.mul(prod, a[i][j])
            total = F.add(total, prod)
        return total

    def minor2(self, r1, r2, c1, c2):
        F = self.F
        a = self.rows
        return F.sub(F.mul(a[r1][c1], a[r2][c2]), F.mul(a[r1][c2], a[r2][c1]))

    def perm2(self, r1, r2, c1, c2):
        F = self.F
        a = self.rows
        return F.add(F.mul(a[r1][c1], a[r2][c2]), F.mul(a[r1][c2], a[r2][c1]))


def _zero_column(pt: _Point):
    for j in range(pt.n):
        if all(pt.zero[i][j] for i in range(pt.m)):
            return (j + 1,)
    return None


def _zero_row(pt: _Point):
    for i in range(pt.m):
        if all(pt.zero[i]):
            return (i + 1,)
    return None


def _row_pair_permanents(pt: _Point):
    z = pt.F.is_zero
    for r1, r2 in combinations(range(pt.m), 2):
        if all(z(pt.perm2(r1, r2, c1, c2)) for c1, c2 in combinations(range(pt.n), 2)):
            return (r1 + 1, r2 + 1)
    return None


def _rank_le_1(pt: _Point, cols) -> bool:
    z = pt.F.is_zero
    return all(
        z(pt.minor2(r1, r2, c1, c2)) for r1, r2 in combinations(range(pt.m), 2) for c1, c2 in combinations(cols, 2)
    )


def _minors_on_4_columns(pt: _Point):
    for cols in combinations(range(pt.n), 4):
        if _rank_le_1(pt, cols):
            return tuple(c + 1 for c in cols)
    return None


def _minors_2x2(pt: _Point):
    return () if _rank_le_1(pt, range(pt.n)) else None


def _type1(pt: _Point):
    m, n = pt.m, pt.n
    for rs in combinations(range(m), 3):
        for cs in combinations(range(n), 3):
            if pt.all_zero([(i, j) for i in rs for j in cs]):
                return ("3x3", rs, cs)
    for rs in combinations(range(m), 2):
        if pt.all_zero([(i, j) for i in rs for j in range(n)]):
            return ("2x4", rs)
    for cs in combinations(range(n), 2):
        if pt.all_zero([(i, j) for i in range(m) for j in cs]):
            return ("4x2", cs)
    return None


def _type2(pt: _Point):
    z = pt.F.is_zero
    m, n = pt.m, pt.n
    shapes = [(rs, tuple(range(n))) for rs in combinations(range(m), 3)]
    shapes += [(tuple(range(m)), cs) for cs in combinations(range(n), 3)]
    for R, C in shapes:
        for br in combinations(R, 2):
            for bc in combinations(C, 2):
                rest = [(i, j) for i in R for j in C if not (i in br and j in bc)]
                if pt.all_zero(rest) and z(pt.perm2(br[0], br[1], bc[0], bc[1])):
                    return (R, C, br, bc)
    return None


def _type3(pt: _Point):
    z = pt.F.is_zero
    m, n = pt.m, pt.n
    for rs in combinations(range(m), 3):
        (r0,) = [i for i in range(m) if i not in rs]
        for cs in combinations(range(n), 3):
            (c0,) = [j for j in range(n) if j not in cs]
            rest = [(r0, j) for j in range(n)] + [(i, c0) for i in range(m)]
            if pt.all_zero(rest) and z(pt.perm(rs, cs)):
                return (rs, cs)
    return None


def _type22(pt: _Point):
    z = pt.F.is_zero
    m, n = pt.m, pt.n
    for r1 in combinations(range(m), 2):
        if 0 not in r1:
            continue  # unordered split of the rows
        r2 = tuple(i for i in range(m) if i not in r1)
        for c1 in combinations(range(n), 2):
            c2 = tuple(j for j in range(n) if j not in c1)
            off = [(i, j) for i in r1 for j in c2] + [(i, j) for i in r2 for j in c1]
            if (
                pt.all_zero(off)
                and z(pt.perm2(r1[0], r1[1], c1[0], c1[1]))
                and z(pt.perm2(r2[0], r2[1], c2[0], c2[1]))
            ):
                return (r1, c1, r2, c2)
    return None


def j3_vanishes(rows, F: Field) -> bool:
    """All 11 generators of J_3 vanish at a 3 x 4 scalar matrix."""
    pt = _Point(rows, F)
    z = F.is_zero
    d, n = 3, 4
    P = {}
    for q in range(n):
        cols = tuple(j for j in range(n) if j != q)
        P[q] = pt.perm((0, 1, 2), cols)
        if not z(P[q]):
            return False
    B = {}
    for r in range(d):
        rr = [i for i in range(d) if i != r]
        for p in range(n):
            for q in range(n):
                if p == q:
                    B[(r, p, q)] = F.zero
                else:
                    cc = [j for j in range(n) if j not in (p, q)]
                    B[(r, p, q)] = pt.perm2(rr[0], rr[1], cc[0], cc[1])
    for p in range(n):
        others = [s for s in range(n) if s != p]
        L = Matrix._raw([[B[(r, s, p)] for s in others] for r in range(d)], field=F)
        if not determinant(L).is_zero():
            return False
    for r in range(d):
        W = Matrix._raw([[B[(r, p, q)] for q in range(n)] for p in range(n)], field=F)
        if not determinant(W).is_zero():
            return False
    return True


def _type3a(pt: _Point):
    F = pt.F
    for r0 in range(pt.m):
        if all(pt.zero[r0]):
            rest = [list(pt.rows[i]) for i in range(pt.m) if i != r0]
            if len(rest) == 3 and len(rest[0]) == 4 and j3_vanishes(rest, F):
                return ("row", r0 + 1)
    for c0 in range(pt.n):
        if all(pt.zero[i][c0] for i in range(pt.m)):
            rest = [[pt.rows[i][j] for i in range(pt.m)] for j in range(pt.n) if j != c0]
            if len(rest) == 3 and len(rest[0]) == 4 and j3_vanishes(rest, F):
                return ("column", c0 + 1)
    return None


def _checks(context: tuple[int, int], F: Field):
    char3 = F.char == 3
    if context == (2, 3):
        return [("zero-column", _zero_column), ("zero-row", _zero_row)]
    if context == (3, 5):
        out = [("zero-column", _zero_column), ("zero-row", _zero_row), ("row-pair-permanents", _row_pair_permanents)]
        if char3:
            out.append(("minors-on-4-columns", _minors_on_4_columns))
        return out
    if context == (4, 4):
        out = [
            ("type-1", _type1),
            ("type-2", _type2),
            ("type-3", _type3),
            ("type-2-2", _type22),
            ("type-3A", _type3a),
        ]
        if char3:
            out.append(("minors-2x2", _minors_2x2))
        return out
    raise ValueError("unknown classification context %r" % (context,))


def classify_solution(M: Matrix, context: tuple[int, int]) -> ComponentTag:
    """First matching component tag in priority order, or ``unclassified``."""
    context = tuple(context)
    if context not in CONTEXTS:
        raise ValueError("unknown classification context %r" % (context,))
    if M.symbolic or (M.m, M.n) != context:
        raise ValueError("a %dx%d scalar matrix is required for context %r" % (context[0], context[1], context))
    return _classify_rows(M.rows, M.field, _checks(context, M.field))


def _classify_rows(rows, F, checks) -> ComponentTag:
    pt = _Point(rows, F)
    for tag, fn in checks:
        where = fn(pt)
        if where is not None:
            return ComponentTag(tag, where)
    return ComponentTag("unclassified")


def classify_points(result: VarietyResult, context: tuple[int, int]) -> dict:
    """Tag counts plus the unclassified points of an enumeration."""
    context = tuple(context)
    if (result.m, result.n) != context:
        raise ValueError("enumeration shape %dx%d does not match context %r" % (result.m, result.n, context))
    checks = _checks(context, result.field)
    counts: dict = {tag: 0 for tag, _ in checks}
    counts["unclassified"] = 0
    unclassified = []
    for ct in result.codes:
        rows = result.rows_of(ct)
        tag = _classify_rows(rows, result.field, checks)
        counts[tag.tag] += 1
        if tag.tag == "unclassified":
            unclassified.append(rows)
    return {"counts": counts, "unclassified": unclassified}
