# cython: language_level=3
"""Compiled kernels; same contract as ``_pykernels``.

All arithmetic is on C ``long long``.  The perimeter caps keep every
intermediate below 2**63: scan values stay under P**2; in the audit the
largest product is the projection cross term, at most 4 * (P/2)**5.
"""
from libc.math cimport sqrt

ctypedef long long i64

SCAN_LIMIT = 1_000_000
AUDIT_LIMIT = 10_000


cdef inline i64 _isqrt(i64 n) noexcept nogil:
    cdef i64 s = <i64>sqrt(<double>n)
    while s * s > n:
        s -= 1
    while (s + 1) * (s + 1) <= n:
        s += 1
    return s


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef inline i64 _gcd(i64 x, i64 y) noexcept nogil:
    # binary gcd; the audit spends most of its time here
    cdef unsigned long long u = x if x >= 0 else -x
    cdef unsigned long long v = y if y >= 0 else -y
    cdef unsigned long long t
    cdef int shift
    if u == 0:
        return <i64>v
    if v == 0:
        return <i64>u
    shift = __builtin_ctzll(u | v)
    u >>= __builtin_ctzll(u)
    while v:
        v >>= __builtin_ctzll(v)
        if u > v:
            t = u
            u = v
            v = t
        v -= u
    return <i64>(u << shift)


cdef inline void _reduce(i64* n, i64* d) noexcept nogil:
    cdef i64 g = _gcd(n[0], d[0])
    if g > 1:
        n[0] //= g
        d[0] //= g


def _check(i64 max_perimeter, i64 limit):
    if not 1 <= max_perimeter <= limit:
        raise ValueError(f"max_perimeter must be in [1, {limit}], got {max_perimeter}")


def condition_scan(i64 max_perimeter):
    _check(max_perimeter, SCAN_LIMIT)
    cdef i64 P = max_perimeter, a, b, c, s
    out = []
    for a in range(1, P + 1):
        if 2 * a + 2 > P:
            break
        for c in range(1, P - a):
            s = a * (a + c)
            b = _isqrt(s)
            if a + b + c > P:
                break
            if b * b == s:
                out.append((a, b, c))
    return out


def naive_condition_scan(i64 max_perimeter):
    _check(max_perimeter, SCAN_LIMIT)
    cdef i64 P = max_perimeter, a, b, c
    out = []
    for a in range(1, P + 1):
        for b in range(1, P - a + 1):
            for c in range(1, P - a - b + 1):
                if b * b == a * (a + c):
                    out.append((a, b, c))
    return out


def trig_audit(i64 max_perimeter):
    _check(max_perimeter, AUDIT_LIMIT)
    cdef i64 P = max_perimeter, a, b, c, lo, hi
    cdef i64 na, da, nb, db, n2, d2, hb, ha, p1, q1, p2, q2, ps, qs
    cdef i64 valid = 0, cond_valid = 0, trig = 0, mismatch = 0, proj_fail = 0
    cdef bint cond, ok
    with nogil:
        for a in range(1, P + 1):
            for b in range(1, P - a + 1):
                lo = a - b if a > b else b - a
                lo += 1
                hi = a + b - 1
                if P - a - b < hi:
                    hi = P - a - b
                for c in range(lo, hi + 1):
                    valid += 1
                    cond = b * b == a * (a + c)
                    na = b * b + c * c - a * a
                    da = 2 * b * c
                    _reduce(&na, &da)
                    nb = c * c + a * a - b * b
                    db = 2 * c * a
                    _reduce(&nb, &db)
                    n2 = 2 * na * na - da * da
                    d2 = da * da
                    _reduce(&n2, &d2)
                    hb = b
                    ha = 2 * a
                    _reduce(&hb, &ha)
                    ok = n2 == nb and d2 == db and na == hb and da == ha
                    if cond:
                        cond_valid += 1
                    if ok:
                        trig += 1
                    if cond != ok:
                        mismatch += 1
                    p1 = a * nb
                    q1 = db
                    _reduce(&p1, &q1)
                    p2 = b * na
                    q2 = da
                    _reduce(&p2, &q2)
                    ps = p1 * q2 + p2 * q1
                    qs = q1 * q2
                    _reduce(&ps, &qs)
                    if not (qs == 1 and ps == c):
                        proj_fail += 1
    cdef i64 cond_all = 0, easy_fail = 0, form_mismatch = 0
    cdef bint formable, full
    for a, b, c in condition_scan(P):
        cond_all += 1
        if not (a < b + c and b < a + c):
            easy_fail += 1
        formable = c <= a or (a < c and c < 3 * a)
        full = a < b + c and b < a + c and c < a + b
        if formable != full:
            form_mismatch += 1
    return {
        "valid": valid,
        "condition_valid": cond_valid,
        "trig": trig,
        "trig_mismatch": mismatch,
        "projection_fail": proj_fail,
        "condition_all": cond_all,
        "easy_inequality_fail": easy_fail,
        "formability_mismatch": form_mismatch,
    }
