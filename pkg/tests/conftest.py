import pytest

from zalpha import order

# criterion number -> (description, passed)
ACCEPTANCE_RESULTS: dict[int, tuple[str, bool]] = {}


@pytest.fixture
def acceptance_record():
    def record(number: int, description: str, passed: bool):
        ACCEPTANCE_RESULTS[number] = (description, passed)

    return record


@pytest.fixture
def fresh_alpha_cache():
    order.clear_cache()
    yield
    order.clear_cache()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        desc, ok = ACCEPTANCE_RESULTS[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {desc}")
