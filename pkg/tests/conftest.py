import pytest

from moufang.enumerator import EnumerationTask, enumerate_magmas
from moufang.generators import cyclic_group, jordan_left_zero
from moufang.magma import IdentityKind, Magma

CM = frozenset({IdentityKind.COMMUTATIVE, IdentityKind.CENTRAL_MOUFANG})


@pytest.fixture
def one():
    return Magma.from_rows([[0]])


@pytest.fixture
def chain2():
    return Magma.from_rows([[0, 0], [0, 1]])


@pytest.fixture
def z2():
    return Magma.from_rows([[0, 1], [1, 0]])


@pytest.fixture
def z3():
    return cyclic_group(3)


@pytest.fixture
def non_moufang():
    """Commutative but fails the central Moufang identity at (0,0,0)."""
    return Magma.from_rows([[1, 1], [1, 0]])


@pytest.fixture(scope="session")
def jordan32():
    return jordan_left_zero(3, 2)


def cm_corpus(max_order):
    out = []
    for n in range(1, max_order + 1):
        out.extend(enumerate_magmas(EnumerationTask(n, CM)))
    return out


@pytest.fixture(scope="session")
def corpus3():
    return cm_corpus(3)


@pytest.fixture(scope="session")
def corpus4():
    return cm_corpus(4)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for name in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[name])
