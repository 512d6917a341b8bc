"""The distinguished family of divisor maximizers and its parameter set.

For a real x > 1, a monic h maximizing tau(f) / q**(deg f / x) over all
monic f is a "superior" maximizer; such h are simultaneously maximizers of
tau at their own degree, and their exponents come from a closed formula.
The maximizing exponent on irreducibles of degree k jumps exactly when
q**(k/x) hits a rational (m+1)/m, i.e. when x lies in

    S = { s * log(q) / log(1 + 1/r) : integers s, r >= 1 },

so S is parameterized by grid points (s, r) independent of q.  Everything
here compares such points, walks them in increasing order, and builds the
superior polynomials and their half-step relatives sitting at each point.
All decisions are big-integer comparisons: x(a) < x(b) iff

    (rb+1)**sa * ra**sb < (ra+1)**sb * rb**sa,

obtained by exponentiating sa*sb / (log-denominators) away.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import total_ordering
from math import comb
from typing import Iterator, NamedTuple

from . import kernels
from .divisor_core import ExponentPattern, pattern
from .irreducibles import count_irreducibles, ensure_prime_power


@total_ordering
@dataclass(frozen=True, eq=True)
class SPoint:
    """Grid point (s, r) standing for x = s*log(q)/log(1+1/r)."""

    s: int
    r: int

    def __post_init__(self) -> None:
        if self.s < 1 or self.r < 1:
            raise ValueError(f"grid point needs s, r >= 1, got ({self.s}, {self.r})")

    def __lt__(self, other: "SPoint") -> bool:
        return spoint_compare(self, other) < 0


def spoint_compare(a: SPoint, b: SPoint) -> int:
    """-1, 0, or 1 as x(a) <, ==, > x(b); exact integer arithmetic only."""
    lhs = (b.r + 1) ** a.s * a.r**b.s
    rhs = (a.r + 1) ** b.s * b.r**a.s
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


def iter_spoints() -> Iterator[SPoint]:
    """All grid points in increasing x order, forever.

    Best-first frontier walk: x grows in s and in r separately, so the
    smallest unseen point is always a neighbor of an emitted one.
    """
    seen = {(1, 1)}
    frontier = [SPoint(1, 1)]
    while True:
        point = heapq.heappop(frontier)
        yield point
        for s, r in ((point.s + 1, point.r), (point.s, point.r + 1)):
            if (s, r) not in seen:
                seen.add((s, r))
                heapq.heappush(frontier, SPoint(s, r))


def enumerate_spoints(count: int) -> list[SPoint]:
    """The count smallest grid points, ascending."""
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    out = []
    for point in iter_spoints():
        if len(out) == count:
            break
        out.append(point)
    return out


def verify_pair_uniqueness(bound: int) -> tuple[bool, tuple[SPoint, SPoint] | None]:
    """Exhaustively check that x is injective on the grid [1..bound]**2.

    Runs the exact comparator on every pair; returns (True, None) or
    (False, first tying pair).
    """
    tie = kernels.find_order_tie(bound)
    if tie is None:
        return True, None
    sa, ra, sb, rb = tie
    return False, (SPoint(sa, ra), SPoint(sb, rb))


def _exponent_at(s: int, r: int, k: int) -> int:
    """Largest m >= 0 with (r+1)**k * m**s <= r**k * (m+1)**s.

    This is floor(1 / (q**(k/x) - 1)) at x = s*log(q)/log(1+1/r); the q
    dependence cancels, leaving a monotone integer predicate searched by
    doubling plus bisection.
    """
    rk = r**k
    rk1 = (r + 1) ** k

    def holds(m: int) -> bool:
        return rk1 * m**s <= rk * (m + 1) ** s

    if not holds(1):
        return 0
    hi = 2
    while holds(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def exponent_at(point: SPoint, q: int, k: int) -> int:
    """Exponent taken on degree-k irreducibles by the superior maximizer."""
    ensure_prime_power(q)
    if k < 1:
        raise ValueError(f"irreducible degree must be positive, got {k}")
    return _exponent_at(point.s, point.r, k)


@dataclass(frozen=True)
class ShcPolynomial:
    """The unique superior maximizer at one grid point over F_q.

    exponents[k-1] is the shared exponent on every degree-k irreducible;
    the tuple stops before the first zero.  Exponents end exactly at
    degree s (where the value is r), and tau/degree close over the whole
    field's irreducible counts.
    """

    point: SPoint
    q: int
    exponents: tuple[int, ...]
    degree: int
    tau: int

    def to_pattern(self) -> ExponentPattern:
        return pattern(
            self.q,
            {k: (a,) * count_irreducibles(self.q, k) for k, a in enumerate(self.exponents, 1)},
        )


def shc_pattern(point: SPoint, q: int) -> ShcPolynomial:
    """Build the superior maximizer at this grid point by closed formula."""
    ensure_prime_power(q)
    exponents = []
    k = 1
    while True:
        a = _exponent_at(point.s, point.r, k)
        if a == 0:
            break
        exponents.append(a)
        k += 1
    if len(exponents) < point.s or exponents[point.s - 1] != point.r:
        raise AssertionError(f"exponent formula broken at {point}: {exponents}")
    degree = 0
    tau = 1
    for k, a in enumerate(exponents, 1):
        pi_k = count_irreducibles(q, k)
        degree += k * a * pi_k
        tau *= (a + 1) ** pi_k
    return ShcPolynomial(point, q, tuple(exponents), degree, tau)


class SshcEntry(NamedTuple):
    """One half-step family member: drop v degree-s exponents by one."""

    v: int
    degree: int
    tau: int
    multiplicity: int


def sshc_family(point: SPoint, q: int) -> tuple[SshcEntry, ...]:
    """The 2**pi(s) half-step maximizers hanging off one grid point.

    Entry v (0 <= v <= pi(s)) lowers the exponent from r to r-1 on v of
    the pi(s) irreducibles of degree s, reaching degree deg(h) - v*s with
    tau scaled by (r/(r+1))**v; each choice of the v irreducibles attains
    the same values, whence the binomial multiplicity.  v = 0 is the
    superior maximizer itself; v = pi(s) is the previous one.
    """
    h = shc_pattern(point, q)
    s, r = point.s, point.r
    pi_s = count_irreducibles(q, s)
    entries = []
    for v in range(pi_s + 1):
        scaled = h.tau * r**v
        if scaled % (r + 1) ** v:
            raise AssertionError(f"family tau not integral at {point}, v={v}")
        entries.append(
            SshcEntry(v, h.degree - v * s, scaled // (r + 1) ** v, comb(pi_s, v))
        )
    return tuple(entries)


def sshc_pattern(point: SPoint, q: int, v: int) -> ExponentPattern:
    """Canonical exponent pattern of family entry v at this grid point."""
    h = shc_pattern(point, q)
    pi_s = count_irreducibles(q, point.s)
    if not (0 <= v <= pi_s):
        raise ValueError(f"v must lie in 0..{pi_s}, got {v}")
    classes = {k: [a] * count_irreducibles(q, k) for k, a in enumerate(h.exponents, 1)}
    lowered = classes[point.s]
    for i in range(v):
        lowered[i] -= 1
    return pattern(q, classes)


def phi_maximizers(point: SPoint, k: int) -> frozenset[int]:
    """Integer exponents maximizing m -> (m+1) / q**(m*k/x) at this point.

    The maximum sits at j = floor(1/(q**(k/x)-1)); it is shared with j-1
    exactly when the defining inequality holds with equality, which is a
    pure integer identity independent of q.
    """
    if k < 1:
        raise ValueError(f"irreducible degree must be positive, got {k}")
    s, r = point.s, point.r
    j = _exponent_at(s, r, k)
    if j and (r + 1) ** k * j**s == r**k * (j + 1) ** s:
        return frozenset((j - 1, j))
    return frozenset((j,))


def sshc_certificate(point: SPoint, q: int, deg_f: int, tau_f: int) -> int:
    """Compare tau_f / q**(deg_f/x) against the superior maximizer's value.

    Returns -1, 0, or 1 as the candidate's score is below, at, or above
    the maximizer's.  Exact: raising both scores to the power s*log(q)
    turns them into the integer products compared here.  0 certifies
    membership in the half-step family; 1 is impossible for realizable
    (deg_f, tau_f) pairs.
    """
    h = shc_pattern(point, q)
    s, r = point.s, point.r
    lhs = tau_f**s * (r + 1) ** h.degree * r**deg_f
    rhs = h.tau**s * (r + 1) ** deg_f * r**h.degree
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0
