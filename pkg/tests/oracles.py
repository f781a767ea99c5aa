"""Independent test oracles that share no code path with the engines they check."""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from permlab.polyring import Poly


def _monomials_in_degree(nvars: int, deg: int):
    for combo in itertools.combinations_with_replacement(range(nvars), deg):
        exps = [0] * nvars
        for i in combo:
            exps[i] += 1
        yield tuple(exps)


def _grading(exps, blocks):
    return tuple(sum(exps[i] for i in blk) for blk in blocks)


def linear_membership(f: Poly, gens: list[Poly], blocks: list[list[int]]) -> bool:
    """Decide f in <gens> by linear algebra inside one multidegree.

    ``blocks`` lists variable-index groups; every generator and ``f`` must be
    homogeneous for the grading by block degrees.  ``f`` is a member iff it
    lies in the span of ``m * g`` over monomials ``m`` with ``m * g`` in the
    multidegree of ``f``.  Elimination is done with plain field operations
    on dictionaries.
    """
    ring = f.ring
    F = ring.field
    if f.is_zero():
        return True
    degs = {_grading(ring.unpack(k), blocks) for k in f.terms}
    if len(degs) != 1:
        raise ValueError("target is not multihomogeneous")
    target = degs.pop()
    total = f.degree()
    spanning = []
    for g in gens:
        gd = {_grading(ring.unpack(k), blocks) for k in g.terms}
        if len(gd) != 1:
            raise ValueError("generator is not multihomogeneous")
        gdeg = gd.pop()
        need = tuple(a - b for a, b in zip(target, gdeg))
        if any(x < 0 for x in need):
            continue
        for exps in _monomials_in_degree(ring.nvars, total - g.degree()):
            if _grading(exps, blocks) == need:
                spanning.append(ring.monomial(exps) * g)
    # echelon form keyed by pivot monomial
    pivots: dict = {}

    def reduce_vec(vec: dict) -> dict:
        vec = dict(vec)
        while vec:
            lead = max(vec)
            if lead not in pivots:
                return vec
            row = pivots[lead]
            c = vec[lead]
            for k, v in row.items():
                nv = F.sub(vec.get(k, F.zero), F.mul(c, v))
                if F.is_zero(nv):
                    vec.pop(k, None)
                else:
                    vec[k] = nv
        return vec

    for h in spanning:
        vec = reduce_vec(h.terms)
        if vec:
            lead = max(vec)
            inv = F.inv(vec[lead])
            pivots[lead] = {k: F.mul(v, inv) for k, v in vec.items()}
    return not reduce_vec(f.terms)


def matrix_blocks(m: int, n: int) -> list[list[int]]:
    """Row blocks and column blocks for the generic m x n ring (variables row-major)."""
    rows = [[i * n + j for j in range(n)] for i in range(m)]
    cols = [[i * n + j for i in range(m)] for j in range(n)]
    return rows + cols


def brute_permanent(rows):
    """Permanent by summing over all permutations (exact for ints and Fractions)."""
    n = len(rows)
    total = 0
    for sigma in itertools.permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= rows[i][sigma[i]]
        total += prod
    return total


def rational_roots(coeffs_low_to_high):
    """Rational roots of an integer polynomial by the rational root theorem."""
    cs = [Fraction(c) for c in coeffs_low_to_high]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        raise ValueError("zero polynomial")
    roots = set()
    while cs and cs[0] == 0:
        roots.add(Fraction(0))
        cs.pop(0)
    den = 1
    for c in cs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in cs]
    a0, an = abs(ints[0]), abs(ints[-1])

    def divisors(x):
        return [d for d in range(1, x + 1) if x % d == 0]

    for pnum in divisors(a0):
        for qden in divisors(an):
            for s in (1, -1):
                r = Fraction(s * pnum, qden)
                if sum(c * r ** i for i, c in enumerate(ints)) == 0:
                    roots.add(r)
    return roots
