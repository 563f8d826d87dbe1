import pytest

from hopfdouble.cyclotomic import root_of_unity
from hopfdouble import catalog
from hopfdouble.pairing import catalog_pairing
from hopfdouble.double import build_double


class Bundle:
    """One algebra with its dual, pairing, and built double."""

    def __init__(self, A):
        self.algebra = A
        self.dual = catalog.dual_of(A)
        self.pairing = catalog_pairing(A, self.dual)
        self.double = build_double(A, self.dual, self.pairing)
        self.fixture = catalog.double_fixture(A)


@pytest.fixture(scope="session")
def taft3():
    return Bundle(catalog.taft(3, root_of_unity(3, 1)))


@pytest.fixture(scope="session")
def taft5():
    return Bundle(catalog.taft(5, root_of_unity(5, 1)))


@pytest.fixture(scope="session")
def sweedler_bundle():
    return Bundle(catalog.sweedler())


@pytest.fixture(scope="session")
def h4_21():
    return Bundle(catalog.hnzmt(catalog.HnParams(4, root_of_unity(4, 1), 2, 1)))


@pytest.fixture(scope="session")
def h12_42():
    return Bundle(catalog.hnzmt(catalog.HnParams(12, root_of_unity(12, 1), 4, 2)))


@pytest.fixture(scope="session")
def t421_bundle():
    return Bundle(catalog.t421(root_of_unity(4, 1)))


@pytest.fixture(scope="session")
def uq3():
    return Bundle(catalog.uqsl2(3, root_of_unity(3, 1)))


@pytest.fixture(scope="session")
def uq5():
    return Bundle(catalog.uqsl2(5, root_of_unity(5, 1)))
