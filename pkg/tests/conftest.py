import numpy as np
import pytest

FIG1 = "bcaacaabcaaababca"
FIG1_MUS = [(4, 5), (5, 8), (6, 9), (7, 11), (10, 12), (13, 14)]


@pytest.fixture(scope="session")
def fig1_index():
    from compactsus import build_index

    return build_index(FIG1)


def random_texts(count, seed, max_n=200, sigmas=(1, 2, 4, 26)):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        sigma = int(rng.choice(sigmas))
        yield rng.integers(0, sigma, n)


_acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.module.__name__.endswith("test_acceptance"):
        detail = dict(item.user_properties).get("detail", "")
        if rep.failed:
            msg = str(call.excinfo.value).splitlines()
            detail = (detail + " | " if detail else "") + (msg[0] if msg else "assertion failed")
        _acceptance[item.name] = ("PASS" if rep.passed else "FAIL", detail)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        status, detail = _acceptance[name]
        terminalreporter.write_line(f"{status}  {name}  {detail}")
