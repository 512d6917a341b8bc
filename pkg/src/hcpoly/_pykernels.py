"""Pure-Python kernels; same contracts as the compiled _speedups module.

GF(2) polynomials travel as int bitmasks, bit i holding the coefficient of
t**i, so a monic polynomial of degree n is an integer in [2**n, 2**(n+1)).
Multiplication-free long division is iterated XOR of shifted divisors.
"""

from __future__ import annotations


def divisor_count_gf2(f: int) -> int:
    """Number of monic divisors of the GF(2) polynomial with bitmask f.

    Divisors of degree d <= n/2 pair off with the complementary degree n-d,
    so only the lower half is scanned and doubled; an even n counts its
    middle degree once.
    """
    if f <= 0:
        raise ValueError(f"bitmask must encode a nonzero polynomial, got {f}")
    n = f.bit_length() - 1
    total = 0
    for d in range(n // 2 + 1):
        count = 0
        for g in range(1 << d, 2 << d):
            a = f
            while a.bit_length() > d:
                a ^= g << (a.bit_length() - 1 - d)
            if a == 0:
                count += 1
        total += count if 2 * d == n else 2 * count
    return total


def max_tau_gf2(n: int) -> tuple[int, list[int]]:
    """Exhaustive divisor-count maximum over all 2**n monic GF(2) degree-n
    polynomials; returns (max, bitmasks attaining it, ascending)."""
    if n < 0:
        raise ValueError(f"degree must be nonnegative, got {n}")
    best = 0
    arg: list[int] = []
    for f in range(1 << n, 2 << n):
        t = divisor_count_gf2(f)
        if t > best:
            best = t
            arg = [f]
        elif t == best:
            arg.append(f)
    return best, arg


def find_order_tie(bound: int) -> tuple[int, int, int, int] | None:
    """Exact pairwise order scan over the (s, r) grid [1..bound]**2.

    Two grid points tie exactly when (rb+1)**sa * ra**sb equals
    (ra+1)**sb * rb**sa; the first tying pair is returned as
    (sa, ra, sb, rb), or None when all pairs are strictly ordered.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    points = [(s, r) for s in range(1, bound + 1) for r in range(1, bound + 1)]
    pows = [[1] * (bound + 1) for _ in range(bound + 2)]
    for base in range(1, bound + 2):
        row = pows[base]
        for e in range(1, bound + 1):
            row[e] = row[e - 1] * base
    for i, (sa, ra) in enumerate(points):
        pow_ra = pows[ra]
        pow_ra1 = pows[ra + 1]
        for j in range(i + 1, len(points)):
            sb, rb = points[j]
            if pows[rb + 1][sa] * pow_ra[sb] == pow_ra1[sb] * pows[rb][sa]:
                return sa, ra, sb, rb
    return None
