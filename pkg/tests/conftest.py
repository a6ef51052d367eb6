import pytest

from fibrometer import corpus
from fibrometer.presentation import BraidWord, braid_to_presentation


@pytest.fixture
def trefoil():
    return corpus.load("trefoil")


@pytest.fixture
def figure_eight():
    return corpus.load("figure_eight")


@pytest.fixture
def bs12():
    return corpus.load("bs12")


@pytest.fixture
def free2_10():
    return corpus.load("free2_10")


@pytest.fixture
def free2_11():
    return corpus.load("free2_11")


@pytest.fixture
def trefoil_braid():
    return braid_to_presentation(BraidWord(2, (1, 1, 1)))


CORPUS = corpus.names()


@pytest.fixture(params=CORPUS)
def fixture_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
