"""Exact coefficient counts, averages, and the leading growth constants.

Everything is computed in exact arithmetic end to end: counts are Python
integers and averages/constants are fractions.Fraction values (the k = 7
growth constant has a 22-digit denominator, so machine floats and fixed
width integers are out of the question).  Decimals appear only in display
code.
"""

import os
from fractions import Fraction
from math import factorial

from .partitions import enumerate_partitions, enumerate_staircase_interval
from .rankpoly import interval_count

_ckn_memo = {}
_bkm_memo = {}


def c_kn(k, n):
    """Number of partitions of rank n with exactly k parts.

    Recurrence: remove the last column (k parts of 1) or the last part.
    """
    if k < 0 or n < 0:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    if n < k:
        return 0
    key = (k, n)
    cached = _ckn_memo.get(key)
    if cached is None:
        cached = c_kn(k - 1, n - 1) + c_kn(k, n - k)
        _ckn_memo[key] = cached
    return cached


def _weighted_partitions(k, n, m):
    """Length-k partitions lam with rank(lam) + m * lam_1 = n."""
    if k == 0:
        return [()] if n == 0 else []
    out = []
    for first in range(1, n + 1):
        rest = n - (m + 1) * first
        if rest < 0:
            break
        if rest < k - 1 or rest > (k - 1) * first:
            continue
        for tail in _bounded_partitions(rest, k - 1, first):
            out.append((first,) + tail)
    return out


def _bounded_partitions(n, parts, max_part):
    if parts == 0:
        return [()] if n == 0 else []
    out = []
    lo = max(1, -(-n // parts))
    hi = min(max_part, n - (parts - 1))
    for v in range(hi, lo - 1, -1):
        for tail in _bounded_partitions(n - v, parts - 1, v):
            out.append((v,) + tail)
    return out


def _count_slice(lams):
    return sum(interval_count(lam) for lam in lams)


def worker_count():
    """Worker cap from YL_THREADS; absent, empty or 0 means single-threaded."""
    raw = os.environ.get("YL_THREADS", "").strip()
    if not raw:
        return 1
    n = int(raw)
    return max(n, 1)


def C_kn(k, n, m=0):
    """Total interval size over length-k partitions with rank + m * first = n.

    Sums interval_count over the matching partitions; with YL_THREADS > 1
    the partitions are sliced across a process pool (each worker keeps its
    own memo, results are identical either way).
    """
    if k < 1:
        raise ValueError("k must be positive")
    lams = _weighted_partitions(k, n, m)
    workers = worker_count()
    if workers > 1 and len(lams) >= 4 * workers:
        from multiprocessing import Pool

        slices = [lams[i::workers] for i in range(workers)]
        with Pool(workers) as pool:
            return sum(pool.map(_count_slice, slices))
    return _count_slice(lams)


def A_kn(k, n):
    """Average interval size over length-k partitions of rank n, exact."""
    denom = c_kn(k, n)
    if denom == 0:
        raise ZeroDivisionError(f"no partitions of rank {n} with {k} parts")
    return Fraction(C_kn(k, n), denom)


def A_le_kn(k, n):
    """Average interval size over partitions of rank n with at most k parts."""
    if n < 1:
        raise ValueError("n must be positive")
    num = sum(C_kn(j, n) for j in range(1, k + 1) if c_kn(j, n))
    den = sum(c_kn(j, n) for j in range(1, k + 1))
    return Fraction(num, den)


def falling_factorial(p, q):
    """p (p - 1) .. (p - q + 1) for nonnegative integer q <= p."""
    if q < 0 or p < q:
        raise ValueError("need 0 <= q <= p")
    out = 1
    for i in range(q):
        out *= p - i
    return out


def b_recursive(k, m):
    """Leading singular coefficient by its quadratic recursion, exact.

    b(0, m) = 1 and
    b(k, m) = sum over r = 1..k of b(k-r, r+m) b(r-1, m) / ((m+k)(m+r)).
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    if k == 0:
        return Fraction(1)
    key = (k, m)
    cached = _bkm_memo.get(key)
    if cached is None:
        cached = sum(
            b_recursive(k - r, r + m) * b_recursive(r - 1, m)
            / ((m + k) * (m + r))
            for r in range(1, k + 1)
        )
        _bkm_memo[key] = cached
    return cached


def b_direct(k, m):
    """Same constant as a closed sum over the staircase-to-rectangle interval.

    (1 / (m+k)_k) times the sum of 1/(lam_1 .. lam_k) over the interval.
    """
    if k < 0 or m < 0:
        raise ValueError("k and m must be nonnegative")
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for lam in enumerate_staircase_interval(k, m):
        part_product = 1
        for p in lam:
            part_product *= p
        total += Fraction(1, part_product)
    return total / falling_factorial(m + k, k)


def g_k(k):
    """First-order growth constant of the average interval size at length k.

    ((k-1)! / (2k-1)!) times the sum of reciprocal part products over the
    k-row staircase-to-rectangle interval at offset 0.
    """
    if k < 1:
        raise ValueError("k must be positive")
    total = Fraction(0)
    for lam in enumerate_staircase_interval(k, 0):
        part_product = 1
        for p in lam:
            part_product *= p
        total += Fraction(1, part_product)
    return total * factorial(k - 1) / factorial(2 * k - 1)


def convergence_table(k, n_values):
    """Exact rows tracking A_{k,n} against its predicted leading term.

    Each row is a dict with n, the count c, the total C, the average A
    (Fraction) and ratio = A / (g_k * n^k) (Fraction); rows where no
    partition exists are skipped.
    """
    if k < 1:
        raise ValueError("k must be positive")
    gk = g_k(k)
    rows = []
    for n in n_values:
        c = c_kn(k, n)
        if c == 0:
            continue
        big_c = C_kn(k, n)
        avg = Fraction(big_c, c)
        rows.append(
            {
                "n": n,
                "c": c,
                "C": big_c,
                "A": avg,
                "ratio": avg / (gk * n**k),
            }
        )
    return rows


def fraction_str(q):
    """Serialize a Fraction as 'num/den' (or plain 'num' for integers)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fraction_decimal(q, digits=12):
    """Decimal approximation of a Fraction as a string, no float round trip."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, rem = divmod(q.numerator, q.denominator)
    scaled = (rem * 10**digits + q.denominator // 2) // q.denominator
    frac = str(scaled).rjust(digits, "0").rstrip("0")
    return f"{sign}{whole}.{frac}" if frac else f"{sign}{whole}"
