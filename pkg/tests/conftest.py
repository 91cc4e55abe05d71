import pytest

from hopfforge import FreeAlgebra, make_example


@pytest.hookimpl(tryfirst=True, hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # expose the call-phase outcome so the acceptance suite can print its
    # one-line-per-criterion verdicts
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


@pytest.fixture(scope="session")
def z2():
    return make_example("z2", degree_bound=8)


@pytest.fixture(scope="session")
def z3():
    return make_example("z3", degree_bound=8)


@pytest.fixture(scope="session")
def laurent():
    return make_example("z", degree_bound=8)


@pytest.fixture(scope="session")
def h4():
    return make_example("sweedler", degree_bound=8)


@pytest.fixture(scope="session")
def idempotent():
    return make_example("idempotent", degree_bound=8)


@pytest.fixture
def free_gx():
    return FreeAlgebra(["g", "x"])
