import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            num, title = mark.args
            _CRITERIA.setdefault(num, {"title": title, "ok": True, "ran": 0})
            item.user_properties.append(("criterion", num))


def pytest_runtest_logreport(report):
    nums = [v for k, v in report.user_properties if k == "criterion"]
    if not nums:
        return
    entry = _CRITERIA[nums[0]]
    if report.when == "call":
        entry["ran"] += 1
    if report.failed or (report.when == "call" and report.skipped):
        entry["ok"] = False


def pytest_terminal_summary(terminalreporter):
    ran = {n: e for n, e in _CRITERIA.items() if e["ran"] or not e["ok"]}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ran):
        e = ran[num]
        terminalreporter.write_line(f"criterion {num}: {'PASS' if e['ok'] else 'FAIL'}  {e['title']}")
