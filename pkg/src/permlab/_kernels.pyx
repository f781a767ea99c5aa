# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pure.py`` for the reference semantics."""

from libc.stdint cimport int64_t, uint8_t, uint32_t
from libc.stdlib cimport malloc, free
from itertools import combinations, permutations

BACKEND = "cython"


def ryser_mod(rows, long long p):
    cdef int n = len(rows)
    if n == 0:
        return 1 % p
    if n > 62:
        raise ValueError("matrix too large for the compiled Ryser kernel")
    if p < 2 or p >= (1LL << 31):
        raise ValueError("modulus must lie in [2, 2^31)")
    cdef int64_t *a = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *sums = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int i, j, parity
    cdef unsigned long long k, gray = 0, top = 1ULL << n
    cdef int64_t prod, total = 0
    cdef object v
    try:
        for i in range(n):
            for j in range(n):
                v = rows[i][j] % p
                a[i * n + j] = v
            sums[i] = 0
        parity = 0
        k = 1
        while k < top:
            j = 0
            while not ((k >> j) & 1):
                j += 1
            gray ^= (1ULL << j)
            if (gray >> j) & 1:
                parity ^= 1
                for i in range(n):
                    sums[i] += a[i * n + j]
                    if sums[i] >= p:
                        sums[i] -= p
            else:
                parity ^= 1
                for i in range(n):
                    sums[i] -= a[i * n + j]
                    if sums[i] < 0:
                        sums[i] += p
            prod = 1
            for i in range(n):
                prod = prod * sums[i] % p
                if prod == 0:
                    break
            if parity:
                total -= prod
                if total < 0:
                    total += p
            else:
                total += prod
                if total >= p:
                    total -= p
            k += 1
        if n % 2:
            total = (p - total) % p
        return total
    finally:
        free(a)
        free(sums)


cdef struct VCtx:
    int d, m, n, q, nrow_sets, nperms
    const uint8_t *add
    const uint8_t *mul
    int *row_sets       # nrow_sets * d
    int *perms          # nperms * d
    uint8_t *digits     # ncodes * m
    int *chosen


cdef inline int _small_perm(VCtx *c, int *rows, int *cols) nogil:
    cdef int total = 0, prod, s, i, q = c.q
    cdef int *sigma
    for s in range(c.nperms):
        sigma = c.perms + s * c.d
        prod = 1
        for i in range(c.d):
            prod = c.mul[prod * q + c.digits[c.chosen[cols[sigma[i]]] * c.m + rows[i]]]
            if prod == 0:
                break
        if prod:
            total = c.add[total * q + prod]
    return total


cdef int _column_ok(VCtx *c, int j, int *combo, int *cols) nogil:
    # every (d-1)-subset of columns < j, completed by j, against every row set
    cdef int k = c.d - 1, t, r, i
    for t in range(k):
        combo[t] = t
    while True:
        for t in range(k):
            cols[t] = combo[t]
        cols[k] = j
        for r in range(c.nrow_sets):
            if _small_perm(c, c.row_sets + r * c.d, cols):
                return 0
        # next combination of k elements from range(j)
        i = k - 1
        while i >= 0 and combo[i] == j - k + i:
            i -= 1
        if i < 0:
            return 1
        combo[i] += 1
        for t in range(i + 1, k):
            combo[t] = combo[t - 1] + 1


def variety_dfs(int d, int m, int n, int q, const uint8_t[::1] add, const uint8_t[::1] mul,
                long long budget=0, long long first_lo=0, long long first_hi=-1):
    cdef long long ncodes = q ** m
    if first_hi < 0 or first_hi > ncodes:
        first_hi = ncodes
    if n == 0 or first_lo >= first_hi:
        return [], 0, False
    if ncodes > (1 << 30):
        raise ValueError("column space too large")
    row_sets = list(combinations(range(m), d))
    perms = list(permutations(range(d)))
    cdef VCtx c
    c.d, c.m, c.n, c.q = d, m, n, q
    c.nrow_sets = len(row_sets)
    c.nperms = len(perms)
    c.add = &add[0]
    c.mul = &mul[0]
    c.row_sets = <int *> malloc(max(1, c.nrow_sets * d) * sizeof(int))
    c.perms = <int *> malloc(c.nperms * d * sizeof(int))
    c.digits = <uint8_t *> malloc(ncodes * m * sizeof(uint8_t))
    c.chosen = <int *> malloc(n * sizeof(int))
    cdef long long *cursor = <long long *> malloc(n * sizeof(long long))
    cdef int *combo = <int *> malloc((d + 1) * sizeof(int))
    cdef int *cols = <int *> malloc((d + 1) * sizeof(int))
    cdef long long code, x, nodes = 0
    cdef int i, r, depth
    cdef bint exceeded = False
    solutions = []
    try:
        for i, rs in enumerate(row_sets):
            for r in range(d):
                c.row_sets[i * d + r] = rs[r]
        for i, pm in enumerate(perms):
            for r in range(d):
                c.perms[i * d + r] = pm[r]
        for code in range(ncodes):
            x = code
            for r in range(m):
                c.digits[code * m + r] = x % q
                x //= q
        depth = 0
        cursor[0] = first_lo - 1
        while depth >= 0:
            cursor[depth] += 1
            if cursor[depth] >= (first_hi if depth == 0 else ncodes):
                depth -= 1
                continue
            nodes += 1
            if budget and nodes > budget:
                exceeded = True
                break
            c.chosen[depth] = cursor[depth]
            if depth + 1 >= d and d >= 1 and not _column_ok(&c, depth, combo, cols):
                continue
            if depth == n - 1:
                solutions.append(tuple([c.chosen[i] for i in range(n)]))
            else:
                depth += 1
                cursor[depth] = -1
        return solutions, nodes, exceeded
    finally:
        free(c.row_sets)
        free(c.perms)
        free(c.digits)
        free(c.chosen)
        free(cursor)
        free(combo)
        free(cols)


cdef long long _witness(const uint8_t *A, int d, int n, int q, const uint8_t *add,
                        const uint8_t *mul, long long budget, int *closing_end,
                        int *x, int *sums, bint *exceeded) nogil:
    # closing_end[j] marks rows whose last nonzero entry is column j (bitmask)
    cdef long long nodes = 0
    cdef int j = 0, i, v
    cdef bint bad
    x[0] = 0
    while j >= 0:
        x[j] += 1
        if x[j] >= q:
            x[j] = 0
            j -= 1
            continue
        nodes += 1
        if budget and nodes > budget:
            exceeded[0] = True
            return -nodes
        bad = False
        for i in range(d):
            v = add[sums[j * d + i] * q + mul[A[i * n + j] * q + x[j]]]
            sums[(j + 1) * d + i] = v
            if v == 0 and (closing_end[j] >> i) & 1:
                bad = True
        if bad:
            continue
        if j == n - 1:
            return nodes
        j += 1
        x[j] = 0
    return -nodes - 1


cdef int _prepare(const uint8_t *A, int d, int n, int *closing_end) nogil:
    cdef int i, j, last
    for j in range(n):
        closing_end[j] = 0
    for i in range(d):
        last = -1
        for j in range(n):
            if A[i * n + j]:
                last = j
        if last < 0:
            return 0
        closing_end[last] |= 1 << i
    return 1


def find_witness(A, int q, const uint8_t[::1] add, const uint8_t[::1] mul, long long budget=0):
    cdef int d = len(A)
    cdef int n = len(A[0]) if d else 0
    if n == 0:
        return (None if d else ()), 0, False
    if d > 30:
        raise ValueError("too many rows for the compiled witness kernel")
    cdef uint8_t *a = <uint8_t *> malloc(d * n)
    cdef int *closing = <int *> malloc(n * sizeof(int))
    cdef int *x = <int *> malloc(n * sizeof(int))
    cdef int *sums = <int *> calloc_ints((n + 1) * d)
    cdef bint exceeded = False
    cdef long long res
    cdef int i, j
    try:
        for i in range(d):
            for j in range(n):
                a[i * n + j] = A[i][j]
        if not _prepare(a, d, n, closing):
            return None, 0, False
        res = _witness(a, d, n, q, &add[0], &mul[0], budget, closing, x, sums, &exceeded)
        if exceeded:
            return None, -res, True
        if res > 0:
            return tuple([x[j] for j in range(n)]), res, False
        return None, -res - 1, False
    finally:
        free(a)
        free(closing)
        free(x)
        free(sums)


cdef int *calloc_ints(int count):
    cdef int *p = <int *> malloc(count * sizeof(int))
    cdef int i
    for i in range(count):
        p[i] = 0
    return p


def nowitness_sweep(int d, int n, int q, const uint8_t[::1] add, const uint8_t[::1] mul):
    cdef int cells = d * n
    cdef long long total = 1, code, y
    cdef int t
    for t in range(cells):
        total *= q
    cdef uint8_t *a = <uint8_t *> malloc(cells)
    cdef int *closing = <int *> malloc(n * sizeof(int))
    cdef int *x = <int *> malloc(n * sizeof(int))
    cdef int *sums = calloc_ints((n + 1) * d)
    cdef bint exceeded = False
    cdef long long res
    out = []
    try:
        for code in range(total):
            y = code
            for t in range(cells - 1, -1, -1):
                a[t] = y % q
                y //= q
            if _prepare(a, d, n, closing):
                res = _witness(a, d, n, q, &add[0], &mul[0], 0, closing, x, sums, &exceeded)
                if res > 0:
                    continue
            out.append(tuple([a[t] for t in range(cells)]))
        return out
    finally:
        free(a)
        free(closing)
        free(x)
        free(sums)
