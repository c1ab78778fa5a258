from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "golden"


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN_DIR


@pytest.fixture(scope="session")
def holq8_result():
    """The symbolic Hol(Q8) pipeline, shared because it takes several seconds."""
    from resolvents.elliptic import holq8_pipeline
    return holq8_pipeline()


@pytest.fixture(scope="session")
def sample_point():
    from resolvents.elliptic import point_new, curve_new
    return point_new(curve_new(1, 1), 0, 1)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
