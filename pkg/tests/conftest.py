"""Collects acceptance-criterion outcomes and prints one line per criterion."""


_CRITERIA = {}
_OUTCOMES = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            number, title = mark.args
            _CRITERIA[item.nodeid] = (number, title)


def pytest_runtest_logreport(report):
    key = _CRITERIA.get(report.nodeid)
    if key is None:
        return
    state = _OUTCOMES.setdefault(key[0], {"title": key[1], "failed": 0, "passed": 0, "skipped": []})
    if report.failed:
        state["failed"] += 1
    elif report.skipped:
        reason = report.longrepr[2] if isinstance(report.longrepr, tuple) else str(report.longrepr)
        state["skipped"].append(reason)
    elif report.when == "call":
        state["passed"] += 1


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        st = _OUTCOMES[number]
        if st["failed"]:
            verdict = "FAIL"
        elif st["skipped"]:
            verdict = "SKIP"
        else:
            verdict = "PASS"
        line = f"AC{number:<2} {verdict}  {st['title']}"
        if st["skipped"]:
            line += f"  ({st['skipped'][0]})"
        terminalreporter.write_line(line)
