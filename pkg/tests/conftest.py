import pytest

from tcore.congruences import SeriesBank


def direct_product(step, exponent, length):
    """prod_{n>=1} (1 - q^(step n))^exponent by multiplying one binomial factor at a time."""
    coeffs = [1] + [0] * (length - 1)
    for n in range(1, length):
        k = step * n
        if k >= length:
            break
        for _ in range(exponent):
            coeffs = [c - (coeffs[i - k] if i >= k else 0) for i, c in enumerate(coeffs)]
    return coeffs


def convolve(f, g):
    n = min(len(f), len(g))
    return [sum(f[i] * g[m - i] for i in range(m + 1)) for m in range(n)]


@pytest.fixture(scope="session")
def bank():
    return SeriesBank()


def pytest_configure(config):
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    # A criterion passes only if its call phase passes and no phase fails.
    report = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None and (report.when == "call" or report.failed):
        results = item.config._criteria
        key = tuple(mark.args)
        results[key] = results.get(key, True) and report.passed


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), ok in sorted(results.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
    passed = sum(results.values())
    terminalreporter.write_line(f"{passed}/{len(results)} criteria pass")
