"""Hot loops for exhaustive subset scans.

Each kernel walks a contiguous range [lo, hi) of subset masks of an n-element
group and reduces to plain integers (or fills an int64 histogram), so chunked
results combine by addition and every parallel schedule produces identical
totals.

Group translation is precompiled into flat arrays: entry e*rank + i of
keep/up/wrap/down rotates digit i of a mask by the i-th digit of element e.
Masks stay below 2**28, comfortably inside int64.

The numba decorator is optional; without it the same functions run as plain
Python (the drivers then pass lists instead of numpy arrays).
"""

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(f):
            return f

        return wrap


@njit(cache=True, nogil=True)
def _translate(m, e, rank, keep, up, wrap, down):
    for i in range(rank):
        j = e * rank + i
        m = ((m & keep[j]) << up[j]) | ((m & wrap[j]) >> down[j])
    return m


@njit(cache=True, nogil=True)
def _popcount(m):
    c = 0
    while m:
        m &= m - 1
        c += 1
    return c


@njit(cache=True, nogil=True)
def scan_mstd(lo, hi, n, rank, keep, up, wrap, down, neg, full):
    """Count subsets in [lo, hi) with more sums than differences."""
    count = 0
    for s in range(lo, hi):
        summ = 0
        diff = 0
        diff_full = False
        for a in range(n):
            if (s >> a) & 1:
                summ |= _translate(s, a, rank, keep, up, wrap, down)
                diff |= _translate(s, neg[a], rank, keep, up, wrap, down)
                if diff == full:
                    # |A-A| = |G| already rules the subset out
                    diff_full = True
                    break
        if not diff_full and _popcount(summ) > _popcount(diff):
            count += 1
    return count


@njit(cache=True, nogil=True)
def scan_avoiding(lo, hi, n, rank, keep, up, wrap, down, dred, srow, ns):
    """Count subsets avoiding every difference in dred and every sum in srow.

    dred holds one representative per {d, -d} pair; srow is flattened with
    srow[j*n + a] = index of (s_j - a).
    """
    count = 0
    for s in range(lo, hi):
        ok = True
        for jd in range(len(dred)):
            t = _translate(s, dred[jd], rank, keep, up, wrap, down)
            if s & t:
                ok = False
                break
        if ok and ns > 0:
            for a in range(n):
                if (s >> a) & 1:
                    for js in range(ns):
                        if (s >> srow[js * n + a]) & 1:
                            ok = False
                            break
                    if not ok:
                        break
        if ok:
            count += 1
    return count


@njit(cache=True, nogil=True)
def scan_full_sumset_avoiding(lo, hi, n, rank, keep, up, wrap, down, d, full):
    """Count subsets with d not in A-A and A+A equal to the whole group."""
    count = 0
    for s in range(lo, hi):
        t = _translate(s, d, rank, keep, up, wrap, down)
        if s & t:
            continue
        summ = 0
        for a in range(n):
            if (s >> a) & 1:
                summ |= _translate(s, a, rank, keep, up, wrap, down)
                if summ == full:
                    break
        if summ == full:
            count += 1
    return count


@njit(cache=True, nogil=True)
def scan_histogram(lo, hi, n, rank, keep, up, wrap, down, neg, out):
    """Fill out[(n - |A+A|), (n - |A-A|)] += 1 for subsets in [lo, hi)."""
    for s in range(lo, hi):
        summ = 0
        diff = 0
        for a in range(n):
            if (s >> a) & 1:
                summ |= _translate(s, a, rank, keep, up, wrap, down)
                diff |= _translate(s, neg[a], rank, keep, up, wrap, down)
        out[n - _popcount(summ), n - _popcount(diff)] += 1


@njit(cache=True, nogil=True)
def scan_containment(lo, hi, n, rank, keep, up, wrap, down, neg, full):
    """Violation counts for the two-sided containment of the MSTD family.

    First count: subsets with A+A = G and A-A != G that are not MSTD.
    Second count: MSTD subsets with A-A = G. Both must come back zero.
    """
    v_left = 0
    v_right = 0
    for s in range(lo, hi):
        summ = 0
        diff = 0
        for a in range(n):
            if (s >> a) & 1:
                summ |= _translate(s, a, rank, keep, up, wrap, down)
                diff |= _translate(s, neg[a], rank, keep, up, wrap, down)
        mstd = _popcount(summ) > _popcount(diff)
        if summ == full and diff != full and not mstd:
            v_left += 1
        if mstd and diff == full:
            v_right += 1
    return v_left, v_right
