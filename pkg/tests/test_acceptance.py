"""End-to-end acceptance checks.

Each test prints one summary line (visible under pytest -s) and asserts the
same condition, so the suite both reports and gates.  Runtime ceilings are
part of the conditions where stated.
"""

import math
import random
import time
from math import comb
from pathlib import Path

from hcpoly.bounds import verify_T_bounds
from hcpoly.cli import main
from hcpoly.divisor_core import (
    brute_force_T,
    pattern,
    pattern_degree,
    pattern_tau,
    pattern_union,
    exponents_monotone,
    raw_polynomial_T,
)
from hcpoly.gf_poly import order_key
from hcpoly.hc_engine import MARKER_NONE, MARKER_SHC, hc_table
from hcpoly.irreducibles import count_irreducibles, enumerate_irreducibles
from hcpoly.superior import (
    enumerate_spoints,
    exponent_at,
    shc_pattern,
    sshc_family,
    verify_pair_uniqueness,
)

DATA = Path(__file__).parent / "data"


def _report(num: int, label: str, ok: bool, extra: str = "") -> bool:
    tail = f" ({extra})" if extra else ""
    print(f"acceptance {num} [{label}]: {'PASS' if ok else 'FAIL'}{tail}")
    return ok


def test_acceptance_1_irreducible_listing(capsys):
    start = time.perf_counter()
    code = main(["irreducibles", "--q", "2", "--max-degree", "5"])
    out, _ = capsys.readouterr()
    elapsed = time.perf_counter() - start
    expected = (DATA / "irreducibles_q2_maxdeg5.txt").read_text()
    keys = [order_key(p) for p in enumerate_irreducibles(2, 5).primes]
    ok = (
        code == 0
        and out == expected
        and len(out.splitlines()) == 15
        and keys == [2, 3, 7, 11, 13, 19, 25, 31, 37, 41, 47, 55, 59, 61]
        and elapsed < 1.0
    )
    with capsys.disabled():
        assert _report(1, "irreducible listing, q=2, degrees 1..5", ok, f"{elapsed:.2f}s")


def test_acceptance_2_divisor_maximum_table(capsys):
    start = time.perf_counter()
    code = main(["hc-table", "--q", "2", "--max-degree", "39", "--explicit"])
    out, _ = capsys.readouterr()
    elapsed = time.perf_counter() - start
    expected = (DATA / "hc_table_q2_maxdeg39.txt").read_text()
    records = hc_table(2, 39)
    shc = {r.degree for r in records if r.marker == MARKER_SHC}
    degree_39_rows = [line for line in out.splitlines() if line.endswith("\t39\t9408")]
    ok = (
        code == 0
        and out == expected
        and len(degree_39_rows) == 8
        and shc == {2, 4, 6, 8, 14, 16, 18, 20, 32, 34, 36}
        and elapsed < 10.0
    )
    with capsys.disabled():
        assert _report(2, "divisor-maximum table, q=2, degrees 1..39", ok, f"{elapsed:.2f}s")


def test_acceptance_3_oracle_equivalence(capsys):
    start = time.perf_counter()
    problems = []

    records = hc_table(2, 45)
    oracle = brute_force_T(2, 45)
    for n in range(46):
        if records[n].tau != oracle[n].tau or set(records[n].patterns) != set(
            oracle[n].patterns
        ):
            problems.append(f"pattern oracle q=2 degree {n}")

    records3 = hc_table(3, 25)
    oracle3 = brute_force_T(3, 25)
    for n in range(26):
        if records3[n].tau != oracle3[n].tau or set(records3[n].patterns) != set(
            oracle3[n].patterns
        ):
            problems.append(f"pattern oracle q=3 degree {n}")

    raw = raw_polynomial_T(2, 14)
    for n in range(15):
        if raw[n].tau != records[n].tau:
            problems.append(f"raw oracle q=2 degree {n}")
        if len(raw[n].maximizers) != records[n].total_polynomials:
            problems.append(f"raw oracle count q=2 degree {n}")

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 120.0
    with capsys.disabled():
        assert _report(
            3,
            "engine vs pattern oracle (q=2 to 45, q=3 to 25) and raw oracle (q=2 to 14)",
            ok,
            problems[0] if problems else f"{elapsed:.1f}s",
        )


def test_acceptance_4_family_counts_and_gaps(capsys):
    problems = []
    points = enumerate_spoints(11)
    prev_degree, prev_tau = 0, 1
    for point in points[:8]:
        family = sshc_family(point, 2)
        pi_s = count_irreducibles(2, point.s)
        if sum(e.multiplicity for e in family) != 2**pi_s:
            problems.append(f"family size at ({point.s},{point.r})")
        if [e.multiplicity for e in family] != [comb(pi_s, v) for v in range(pi_s + 1)]:
            problems.append(f"multiplicities at ({point.s},{point.r})")
        last = family[-1]
        if (last.degree, last.tau) != (prev_degree, prev_tau):
            problems.append(f"predecessor mismatch at ({point.s},{point.r})")
        prev_degree, prev_tau = family[0].degree, family[0].tau

    degrees = [shc_pattern(point, 2).degree for point in points]
    gaps = [b - a for a, b in zip(degrees, degrees[1:])]
    if gaps != [2, 2, 2, 6, 2, 2, 2, 12, 2, 2]:
        problems.append(f"gap sequence {gaps}")
    for point, gap in zip(points[1:], gaps):
        if gap != point.s * count_irreducibles(2, point.s):
            problems.append(f"gap formula at ({point.s},{point.r})")

    ok = not problems
    with capsys.disabled():
        assert _report(
            4,
            "half-step family counts, telescoping, and superior degree gaps",
            ok,
            problems[0] if problems else "",
        )


def test_acceptance_5_bound_certificates(capsys):
    problems = []
    certs2 = verify_T_bounds(2, 39, hc_table(2, 39))
    certs3 = verify_T_bounds(3, 25, hc_table(3, 25))
    for q, certs in ((2, certs2), (3, certs3)):
        for cert in certs:
            if not cert.ok:
                problems.append(f"certificate q={q} N={cert.N}")
            if cert.u:
                a_u = exponent_at(cert.point, q, cert.u)
                if 4 * a_u * (a_u + 2) < 3 * (a_u + 1) ** 2:
                    problems.append(f"width inequality q={q} N={cert.N}")

    five = certs2[4]
    a_u = exponent_at(five.point, 2, five.u)
    equality = (
        five.anchor_tau == 18
        and five.T == 12
        and five.anchor_tau * a_u == five.T * (a_u + 1)
        and abs(five.epsilon_approx() - math.log(1.5)) < 1e-12
    )
    if not equality:
        problems.append("upper bound not attained at q=2, N=5")

    ok = not problems
    with capsys.disabled():
        assert _report(
            5,
            "two-sided certificates (q=2 to 39, q=3 to 25), equality at N=5",
            ok,
            problems[0] if problems else "",
        )


def test_acceptance_6_grid_order_uniqueness(capsys):
    start = time.perf_counter()
    passed, witness = verify_pair_uniqueness(50)
    elapsed = time.perf_counter() - start
    ok = passed and witness is None and elapsed < 5.0
    with capsys.disabled():
        assert _report(
            6,
            "2500 grid points pairwise strictly ordered",
            ok,
            f"{elapsed:.2f}s",
        )


def test_acceptance_7_unmarked_unique_degrees(capsys):
    records = hc_table(2, 39)
    problems = []
    for n in (10, 30, 38):
        record = records[n]
        if record.total_polynomials != 1:
            problems.append(f"degree {n} has {record.total_polynomials} polynomials")
        if record.marker != MARKER_NONE:
            problems.append(f"degree {n} is marked {record.marker}")
    unmarked_unique = {
        r.degree
        for r in records
        if r.degree >= 1 and r.marker == MARKER_NONE and r.total_polynomials == 1
    }
    if unmarked_unique != {10, 30, 38}:
        problems.append(f"unmarked-unique set is {sorted(unmarked_unique)}")
    ok = not problems
    with capsys.disabled():
        assert _report(
            7,
            "degrees 10, 30, 38 unique and unmarked",
            ok,
            problems[0] if problems else "",
        )


def test_acceptance_8_property_suites(capsys):
    problems = []

    for record in hc_table(2, 30):
        for p in record.patterns:
            if not exponents_monotone(p):
                problems.append(f"monotonicity at degree {record.degree}")

    for q in (2, 3, 5):
        for n in range(1, 9):
            total = sum(
                d * count_irreducibles(q, d) for d in range(1, n + 1) if n % d == 0
            )
            if total != q**n:
                problems.append(f"degree identity q={q} n={n}")

    rng = random.Random(87539319)
    for case in range(1000):
        q = rng.choice((2, 3, 4, 5))
        left: dict[int, list[int]] = {}
        right: dict[int, list[int]] = {}
        for k in range(1, rng.randint(2, 6)):
            available = min(count_irreducibles(q, k), 4)
            take = rng.randint(0, available)
            exps = [rng.randint(1, 5) for _ in range(take)]
            split = rng.randint(0, take)
            if exps[:split]:
                left[k] = exps[:split]
            if exps[split:]:
                right[k] = exps[split:]
        a, b = pattern(q, left), pattern(q, right)
        u = pattern_union(a, b)
        if pattern_tau(u) != pattern_tau(a) * pattern_tau(b):
            problems.append(f"tau multiplicativity case {case}")
        if pattern_degree(u) != pattern_degree(a) + pattern_degree(b):
            problems.append(f"degree additivity case {case}")

    ok = not problems
    with capsys.disabled():
        assert _report(
            8,
            "monotonicity to degree 30, degree identity, 1000 disjoint unions",
            ok,
            problems[0] if problems else "",
        )
