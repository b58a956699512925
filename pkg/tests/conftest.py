import pytest
from hypothesis import strategies as st

from cechspaces import FiniteClosureSpace, Span, SpaceMap, inclusion, pseudo_interval

# -- named spaces ---------------------------------------------------------


@pytest.fixture
def n3():
    return FiniteClosureSpace([0, 1, 2], {0: [0, 1], 1: [1, 2], 2: [2]})


@pytest.fixture
def z3():
    return FiniteClosureSpace([0, 1, 2], {0: [0, 1], 1: [0, 1, 2], 2: [1, 2]})


@pytest.fixture
def sierpinski():
    return FiniteClosureSpace(["a", "b"], {"a": ["a"], "b": ["a", "b"]})


@pytest.fixture
def interval():
    return pseudo_interval()


@pytest.fixture
def indiscrete_pair_span():
    A = FiniteClosureSpace([1])
    X = FiniteClosureSpace.indiscrete([0, 1])
    Y = FiniteClosureSpace.indiscrete([1, 2])
    return Span(A, SpaceMap(A, Y, {1: 1}), SpaceMap(A, X, {1: 1}))


def make_ex1_span(Y=None):
    i = inclusion(pseudo_interval(), ["p", "q"])
    Y = Y if Y is not None else FiniteClosureSpace.indiscrete([0, 1])
    return Span(i.domain, SpaceMap.constant(i.domain, Y, 0), i)


@pytest.fixture
def ex1_span():
    return make_ex1_span()


# -- hypothesis strategies ------------------------------------------------


@st.composite
def closure_spaces(draw, max_size=6, min_size=0):
    n = draw(st.integers(min_size, max_size))
    masks = [draw(st.integers(0, (1 << n) - 1)) | (1 << k) for k in range(n)]
    return FiniteClosureSpace.from_masks(range(n), masks)


@st.composite
def spaces_with_subsets(draw, max_size=6):
    space = draw(closure_spaces(max_size=max_size))
    pick = draw(st.lists(st.sampled_from(space.points), unique=True) if len(space) else st.just([]))
    return space, frozenset(pick)


@st.composite
def maps_between(draw, max_size=4):
    X = draw(closure_spaces(max_size=max_size))
    Y = draw(closure_spaces(max_size=max_size, min_size=1 if len(X) else 0))
    values = [draw(st.sampled_from(Y.points)) for _ in X.points]
    return SpaceMap(X, Y, dict(zip(X.points, values)))


# -- acceptance summary ---------------------------------------------------

_ACCEPTANCE = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _ACCEPTANCE.append((marker.args[0], marker.args[1], report.outcome))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_ACCEPTANCE):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {verdict}  {title}")
