# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contracts as the _pykernels fallbacks.

GF(2) polynomials are uint64 bitmasks (degree <= 62), so the divisor scans
run entirely in machine words.  The order-tie scan keeps Python integers
for the (overflowing) power products but drives the pair loop in C.
"""

cdef extern from *:
    int __builtin_clzll(unsigned long long) nogil


cdef inline int _bitlen(unsigned long long x) nogil:
    if x == 0:
        return 0
    return 64 - __builtin_clzll(x)


cdef inline int _divides(unsigned long long g, int d, unsigned long long f) nogil:
    cdef unsigned long long a = f
    cdef int la = _bitlen(a)
    while la > d:
        a ^= g << (la - 1 - d)
        la = _bitlen(a)
    return a == 0


def divisor_count_gf2(f):
    """Number of monic divisors of the GF(2) polynomial with bitmask f.

    Divisors of degree d <= n/2 pair off with the complementary degree n-d,
    so only the lower half is scanned and doubled; an even n counts its
    middle degree once.
    """
    if f <= 0:
        raise ValueError(f"bitmask must encode a nonzero polynomial, got {f}")
    if f >> 63:
        raise ValueError("compiled kernel handles degrees up to 62")
    cdef unsigned long long cf = f
    cdef int n = _bitlen(cf) - 1
    cdef int d, count
    cdef unsigned long long g
    cdef long long total = 0
    for d in range(n // 2 + 1):
        count = 0
        for g in range(<unsigned long long> 1 << d, <unsigned long long> 2 << d):
            if _divides(g, d, cf):
                count += 1
        total += count if 2 * d == n else 2 * count
    return total


def max_tau_gf2(n):
    """Exhaustive divisor-count maximum over all 2**n monic GF(2) degree-n
    polynomials; returns (max, bitmasks attaining it, ascending)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    if n > 62:
        raise ValueError("compiled kernel handles degrees up to 62")
    cdef int cn = n
    cdef unsigned long long f, g
    cdef int d, count
    cdef long long t, best = 0
    arg = []
    for f in range(<unsigned long long> 1 << cn, <unsigned long long> 2 << cn):
        t = 0
        for d in range(cn // 2 + 1):
            count = 0
            for g in range(<unsigned long long> 1 << d, <unsigned long long> 2 << d):
                if _divides(g, d, f):
                    count += 1
            t += count if 2 * d == cn else 2 * count
        if t > best:
            best = t
            arg = [f]
        elif t == best:
            arg.append(f)
    return best, arg


def find_order_tie(bound):
    """Exact pairwise order scan over the (s, r) grid [1..bound]**2.

    Two grid points tie exactly when (rb+1)**sa * ra**sb equals
    (ra+1)**sb * rb**sa; the first tying pair is returned as
    (sa, ra, sb, rb), or None when all pairs are strictly ordered.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    cdef int b = bound
    cdef int sa, ra, sb, rb, i, j, npts
    pows = [[1] * (b + 1) for _ in range(b + 2)]
    for base in range(1, b + 2):
        row = pows[base]
        for e in range(1, b + 1):
            row[e] = row[e - 1] * base
    points = [(s, r) for s in range(1, b + 1) for r in range(1, b + 1)]
    npts = len(points)
    for i in range(npts):
        sa = points[i][0]
        ra = points[i][1]
        pow_ra = pows[ra]
        pow_ra1 = pows[ra + 1]
        for j in range(i + 1, npts):
            sb = points[j][0]
            rb = points[j][1]
            if pows[rb + 1][sa] * pow_ra[sb] == pow_ra1[sb] * pows[rb][sa]:
                return sa, ra, sb, rb
    return None
