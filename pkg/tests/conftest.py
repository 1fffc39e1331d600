import pytest

from almostbalanced import _kernels_py

try:
    from almostbalanced import _kernels as _kernels_c
except ImportError:  # extension not built
    _kernels_c = None

KERNEL_MODULES = [pytest.param(_kernels_py, id="python")]
if _kernels_c is not None:
    KERNEL_MODULES.append(pytest.param(_kernels_c, id="cython"))

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.fixture(scope="module", params=KERNEL_MODULES)
def kernel_module(request):
    return request.param


@pytest.fixture(scope="module", params=KERNEL_MODULES)
def backend(request):
    """Run the test body with the codec wired to one specific kernel module."""
    from almostbalanced import kernels

    with pytest.MonkeyPatch.context() as mp:
        for name in ("map_interval", "shortest_digits", "walk", "count_vectors", "cumulative"):
            mp.setattr(kernels, name, getattr(request.param, name))
        yield request.param


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = _acceptance.get(report.nodeid)
    if marker is not None:
        marker["outcome"] = report.outcome
        marker["seconds"] = report.duration


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            number, title = m.args
            _acceptance[item.nodeid] = {"number": number, "title": title, "outcome": "not run"}


def pytest_terminal_summary(terminalreporter):
    rows = sorted(_acceptance.values(), key=lambda r: r["number"])
    if not rows or all(r["outcome"] == "not run" for r in rows):
        return
    terminalreporter.section("acceptance criteria")
    for r in rows:
        status = {"passed": "PASS", "failed": "FAIL"}.get(r["outcome"], r["outcome"].upper())
        secs = f" ({r['seconds']:.2f}s)" if "seconds" in r else ""
        terminalreporter.write_line(f"criterion {r['number']:>2}: {status}  {r['title']}{secs}")
