import pytest

from hcpoly.divisor_core import brute_force_T
from hcpoly.hc_engine import hc_table
from hcpoly.irreducibles import enumerate_irreducibles


@pytest.fixture(scope="session")
def tbl_q2():
    return enumerate_irreducibles(2, 8)


@pytest.fixture(scope="session")
def tbl_q3():
    return enumerate_irreducibles(3, 5)


@pytest.fixture(scope="session")
def records_q2():
    return hc_table(2, 39)


@pytest.fixture(scope="session")
def records_q3():
    return hc_table(3, 25)


@pytest.fixture(scope="session")
def oracle_q2():
    return brute_force_T(2, 39)
