import pytest

from cyclesets.classify import build_pq, cyclic_cycle_set

ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def acceptance():
    return ACCEPTANCE


@pytest.fixture(scope="session")
def size6():
    """Z_2 x_G Z_3 with gamma0 = (0, 1)."""
    return build_pq(2, 3, (0, 1))


@pytest.fixture(scope="session")
def size6_uni():
    """Z_2 x_G Z_3 with gamma0 = (1, 2), which is uniconnected."""
    return build_pq(2, 3, (1, 2))


@pytest.fixture
def cyclic():
    return cyclic_cycle_set


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({detail})")
