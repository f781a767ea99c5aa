"""Pure-Python reference implementations of the hot kernels.

Every function here has a compiled twin in ``_kernels.pyx`` with the same
signature and the same output, including node counts.  Finite-field
arithmetic is passed in as flat ``q*q`` add/mul tables indexed ``a*q + b``.
"""

from __future__ import annotations

from itertools import combinations, permutations

BACKEND = "python"


def ryser_mod(rows, p: int) -> int:
    """Permanent of an integer matrix modulo ``p`` by Gray-code Ryser."""
    n = len(rows)
    if n == 0:
        return 1 % p
    a = [[x % p for x in row] for row in rows]
    sums = [0] * n
    total = 0
    sign = -1 if n % 2 else 1
    gray = 0
    # subset k of the Gray sequence differs from subset k-1 in bit ctz(k)
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            for i in range(n):
                sums[i] += a[i][j]
        else:
            for i in range(n):
                sums[i] -= a[i][j]
        prod = 1
        for s in sums:
            prod = prod * s % p
            if not prod:
                break
        if bin(gray).count("1") % 2:
            total -= prod
        else:
            total += prod
    return (sign * total) % p


def _digits(code: int, q: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(code % q)
        code //= q
    return out


def _small_perm(vals, rows, cols, q, add, mul, perms) -> int:
    total = 0
    for sigma in perms:
        prod = 1
        for r, s in zip(rows, sigma):
            prod = mul[prod * q + vals[cols[s]][r]]
            if not prod:
                break
        if prod:
            total = add[total * q + prod]
    return total


def variety_dfs(d: int, m: int, n: int, q: int, add: bytes, mul: bytes,
                budget: int = 0, first_lo: int = 0, first_hi: int = -1):
    """All ``m x n`` matrices over F_q whose ``d x d`` subpermanents vanish.

    Columns are assigned left to right as codes ``sum_r v_r q^r``; a node is
    one candidate column tested at one depth.  Returns ``(solutions, nodes,
    exceeded)`` where each solution is a tuple of ``n`` column codes.  The
    first column ranges over ``[first_lo, first_hi)`` so callers can split
    the search.  ``budget`` caps the node count (0 means unlimited).
    """
    ncodes = q ** m
    if first_hi < 0 or first_hi > ncodes:
        first_hi = ncodes
    digits = [_digits(c, q, m) for c in range(ncodes)]
    row_sets = list(combinations(range(m), d))
    perms = list(permutations(range(d)))
    col_sets = [list(combinations(range(j), d - 1)) for j in range(n)]
    chosen = [0] * n
    vals = [None] * n
    solutions = []
    nodes = 0

    def ok(j: int) -> bool:
        for prev in col_sets[j]:
            cols = prev + (j,)
            for rows in row_sets:
                if _small_perm(vals, rows, cols, q, add, mul, perms):
                    return False
        return True

    stack_codes = [None] * n
    depth = 0
    stack_codes[0] = iter(range(first_lo, first_hi))
    if n == 0 or first_lo >= first_hi:
        return solutions, 0, False
    while depth >= 0:
        try:
            c = next(stack_codes[depth])
        except StopIteration:
            depth -= 1
            continue
        nodes += 1
        if budget and nodes > budget:
            return solutions, nodes, True
        chosen[depth] = c
        vals[depth] = digits[c]
        if depth + 1 >= d and not ok(depth):
            continue
        if depth == n - 1:
            solutions.append(tuple(chosen))
        else:
            depth += 1
            stack_codes[depth] = iter(range(ncodes))
    return solutions, nodes, False


def find_witness(A, q: int, add: bytes, mul: bytes, budget: int = 0):
    """Lexicographically first ``X`` in ``(F_q^*)^n`` with ``AX`` fully supported.

    ``A`` is a list of rows of element codes.  Returns ``(X or None, nodes,
    exceeded)``.
    """
    d = len(A)
    n = len(A[0]) if d else 0
    if n == 0:
        return (None if d else ()), 0, False
    # rows whose last nonzero entry sits in column j must be nonzero once j is set
    last = [-1] * d
    for i in range(d):
        for j in range(n):
            if A[i][j]:
                last[i] = j
    if any(x < 0 for x in last):
        return None, 0, False
    closing = [[i for i in range(d) if last[i] == j] for j in range(n)]
    sums = [[0] * d for _ in range(n + 1)]
    x = [0] * n
    nodes = 0
    j = 0
    x[0] = 0
    while j >= 0:
        x[j] += 1
        if x[j] >= q:
            x[j] = 0
            j -= 1
            continue
        nodes += 1
        if budget and nodes > budget:
            return None, nodes, True
        base = sums[j]
        nxt = sums[j + 1]
        xj = x[j]
        for i in range(d):
            nxt[i] = add[base[i] * q + mul[A[i][j] * q + xj]]
        if any(nxt[i] == 0 for i in closing[j]):
            continue
        if j == n - 1:
            return tuple(x), nodes, False
        j += 1
        x[j] = 0
    return None, nodes, False


def nowitness_sweep(d: int, n: int, q: int, add: bytes, mul: bytes):
    """Every ``d x n`` matrix over F_q (row-major code tuples) with no witness."""
    out = []
    total = q ** (d * n)
    for code in range(total):
        flat = _digits(code, q, d * n)[::-1]
        A = [flat[i * n:(i + 1) * n] for i in range(d)]
        w, _, _ = find_witness(A, q, add, mul)
        if w is None:
            out.append(tuple(flat))
    return out
