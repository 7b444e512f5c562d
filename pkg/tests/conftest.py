import pytest

from gpknit import library
from gpknit.corpus import full_corpus

# criterion number -> (passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def corpus():
    return full_corpus(0)


@pytest.fixture
def a2():
    return library.a2()


@pytest.fixture
def dual():
    return library.dual_numbers()


@pytest.fixture
def hereditary():
    return library.hereditary_a2()


@pytest.fixture
def a3():
    return library.cyclic_nakayama(3)


@pytest.fixture
def cluster4():
    return library.cluster_tilted_4()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
