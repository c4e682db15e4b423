import time

import pytest

from rigmat.rigidity import generic_rigidity_matroid

_results: dict[int, dict] = {}


@pytest.fixture(scope="session")
def generic():
    """generic(n, m) -> certified generic rigidity matroid (cached per session)."""
    return generic_rigidity_matroid


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or rep.when not in ("setup", "call"):
        return
    number, title = mark.args
    entry = _results.setdefault(number, {"title": title, "ok": True, "seconds": 0.0, "note": ""})
    if rep.failed:
        entry["ok"] = False
        entry["note"] = str(rep.longrepr).strip().splitlines()[-1][:100]
    if rep.when == "call":
        entry["seconds"] += rep.duration
        for name, value in rep.user_properties:
            if name == "acceptance_note":
                entry["note"] = value


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(_results):
        r = _results[number]
        status = "PASS" if r["ok"] else "FAIL"
        note = f"  [{r['note']}]" if r["note"] else ""
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {r['title']} "
                                    f"({r['seconds']:.1f}s){note}")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
