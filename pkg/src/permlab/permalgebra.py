"""The matrix H of column-multiset permanents and its rank bound.

Row i and column J (a weakly increasing (d-1)-tuple of column indices) of
H hold the permanent of the generic d x d matrix whose columns are i
followed by J, with repeated columns allowed.  Every column of H is a
combination of the d rows of the generic matrix, so all (d+1)-minors of H
vanish.
"""

from __future__ import annotations

import math
from itertools import combinations, combinations_with_replacement

from .permcore import Matrix, determinant, permanent
from .polyring import PolyRing
from .scalars import QQ, Field

__all__ = ["multisets", "build_h", "verify_h_rank", "verify_column_span", "abstract_h23_specialization"]


def multisets(n: int, k: int) -> list[tuple[int, ...]]:
    """Weakly increasing k-tuples from 1..n in lexicographic order."""
    return list(combinations_with_replacement(range(1, n + 1), k))


def build_h(d: int, n: int, field: Field = QQ) -> dict:
    """``{"matrix": H, "generic": M, "columns": [J, ...]}`` with H of shape n x C(n+d-2, d-1)."""
    if d < 2 or n < 1:
        raise ValueError("need d >= 2 and n >= 1")
    M = Matrix.generic(d, n, field)
    cols = multisets(n, d - 1)
    cache: dict = {}
    grid = []
    for i in range(1, n + 1):
        row = []
        for J in cols:
            key = tuple(sorted((i,) + J))
            if key not in cache:
                cache[key] = permanent(M.submatrix(list(range(d)), [j - 1 for j in key]))
            row.append(cache[key])
        grid.append(row)
    H = Matrix._raw(grid, ring=M.ring)
    if len(cols) != math.comb(n + d - 2, d - 1):
        raise AssertionError("multiset count mismatch")
    return {"matrix": H, "generic": M, "columns": cols}


def verify_h_rank(d: int, n: int, field: Field = QQ, stop_on_failure: bool = True) -> dict:
    """Expand every (d+1) x (d+1) minor of H and check it is the zero polynomial."""
    built = build_h(d, n, field)
    H = built["matrix"]
    k = d + 1
    checked = 0
    failures = []
    if k > min(H.m, H.n):
        return {"pass": True, "minors": 0, "failures": []}
    for rows in combinations(range(H.m), k):
        for cols in combinations(range(H.n), k):
            checked += 1
            if not determinant(H.submatrix(rows, cols)).is_zero():
                failures.append({"rows": [r + 1 for r in rows], "columns": [list(built["columns"][c]) for c in cols]})
                if stop_on_failure:
                    return {"pass": False, "minors": checked, "failures": failures}
    return {"pass": not failures, "minors": checked, "failures": failures}


def verify_column_span(d: int, n: int, field: Field = QQ) -> dict:
    """Check column J of H equals sum_r (row r of the generic matrix) * perm(rows != r, columns J)."""
    built = build_h(d, n, field)
    H, M, cols = built["matrix"], built["generic"], built["columns"]
    bad = []
    for c, J in enumerate(cols):
        coeffs = []
        for r in range(d):
            others = [x for x in range(d) if x != r]
            coeffs.append(permanent(M.submatrix(others, [j - 1 for j in J])) if others else M.ring.one)
        for i in range(n):
            combo = M.ring.zero
            for r in range(d):
                combo += M.rows[r][i] * coeffs[r]
            if combo != H.rows[i][c]:
                bad.append((i + 1, list(J)))
    return {"pass": not bad, "columns": len(cols), "failures": bad}


def abstract_h23_specialization(field: Field = QQ) -> dict:
    """det of the symmetric 3x3 matrix of symbols A_i_j, with off-diagonal symbols set to 0."""
    names = ["A_%d_%d" % (i, j) for i in range(1, 4) for j in range(i, 4)]
    ring = PolyRing(field, names)

    def sym(i, j):
        a, b = min(i, j), max(i, j)
        return ring.var("A_%d_%d" % (a, b))

    Hs = Matrix._raw([[sym(i, j) for j in range(1, 4)] for i in range(1, 4)], ring=ring)
    det = determinant(Hs)
    zeroed = {"A_%d_%d" % (i, j): ring.zero for i in range(1, 4) for j in range(i + 1, 4)}
    special = det.substitute(zeroed)
    expected = sym(1, 1) * sym(2, 2) * sym(3, 3)
    return {"pass": special == expected, "determinant": str(det), "specialized": str(special)}
