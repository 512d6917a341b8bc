import hcpoly


def test_all_exports_resolve():
    missing = [name for name in hcpoly.__all__ if not hasattr(hcpoly, name)]
    assert not missing
    assert hcpoly.__version__ == "0.1.0"


def test_all_is_sorted_and_unique():
    assert list(hcpoly.__all__) == sorted(set(hcpoly.__all__))
