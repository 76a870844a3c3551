import pytest

import semifd as sf


@pytest.fixture(scope="session")
def braid3():
    return sf.enumerate_monoid(sf.braid(3), 8)


@pytest.fixture(scope="session")
def free2():
    return sf.enumerate_monoid(sf.free(2), 8)


@pytest.fixture(scope="session")
def nat1():
    return sf.enumerate_monoid(sf.nat(1), 14)


@pytest.fixture(scope="session")
def nat2():
    return sf.enumerate_monoid(sf.nat(2), 12)
