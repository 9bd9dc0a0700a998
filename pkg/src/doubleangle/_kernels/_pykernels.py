"""Pure-Python kernels; reference behaviour for the compiled module."""
from math import gcd, isqrt

SCAN_LIMIT = 1_000_000
AUDIT_LIMIT = 10_000


def _check(max_perimeter, limit):
    if not 1 <= max_perimeter <= limit:
        raise ValueError(f"max_perimeter must be in [1, {limit}], got {max_perimeter}")


def condition_scan(max_perimeter):
    """Triples with ``b*b == a*(a+c)`` and perimeter <= bound, b found by isqrt."""
    _check(max_perimeter, SCAN_LIMIT)
    out = []
    P = max_perimeter
    for a in range(1, P + 1):
        if 2 * a + 2 > P:  # b > a and c >= 1
            break
        for c in range(1, P - a):
            s = a * (a + c)
            b = isqrt(s)
            if a + b + c > P:
                break
            if b * b == s:
                out.append((a, b, c))
    return out


def naive_condition_scan(max_perimeter):
    """Same set as :func:`condition_scan` by a plain triple loop."""
    _check(max_perimeter, SCAN_LIMIT)
    out = []
    P = max_perimeter
    for a in range(1, P + 1):
        for b in range(1, P - a + 1):
            for c in range(1, P - a - b + 1):
                if b * b == a * (a + c):
                    out.append((a, b, c))
    return out


def _reduced(n, d):
    g = gcd(n, d)
    return n // g, d // g


def trig_audit(max_perimeter):
    """Exhaustive exact-cosine audit over every triangle with perimeter <= bound.

    Rationals are carried as reduced (num, den) integer pairs.
    """
    _check(max_perimeter, AUDIT_LIMIT)
    P = max_perimeter
    valid = cond_valid = trig = mismatch = proj_fail = 0
    for a in range(1, P + 1):
        for b in range(1, P - a + 1):
            lo = abs(a - b) + 1
            hi = min(a + b - 1, P - a - b)
            for c in range(lo, hi + 1):
                valid += 1
                cond = b * b == a * (a + c)
                na, da = _reduced(b * b + c * c - a * a, 2 * b * c)
                nb, db = _reduced(c * c + a * a - b * b, 2 * c * a)
                n2, d2 = _reduced(2 * na * na - da * da, da * da)
                ok = n2 == nb and d2 == db and (na, da) == _reduced(b, 2 * a)
                cond_valid += cond
                trig += ok
                mismatch += cond != ok
                p1, q1 = _reduced(a * nb, db)
                p2, q2 = _reduced(b * na, da)
                ps, qs = _reduced(p1 * q2 + p2 * q1, q1 * q2)
                proj_fail += not (qs == 1 and ps == c)
    cond_all = easy_fail = form_mismatch = 0
    for a, b, c in condition_scan(P):
        cond_all += 1
        easy_fail += not (a < b + c and b < a + c)
        formable = c <= a or a < c < 3 * a
        full = a < b + c and b < a + c and c < a + b
        form_mismatch += formable != full
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
