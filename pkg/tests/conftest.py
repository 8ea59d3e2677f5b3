import pytest

from narayana.polyomino import AreaWord

BIG_TEXT = "0b 1 1b 2 2b 3 2 2 2b 1 1b 2 1 1 1b 2 2b 2 2"
BIG_UPPER = "NNNEEENEENEEENNEEEE"
BIG_LOWER = "EEENEENNEENEEENEENN"

_acceptance: dict[int, dict] = {}


@pytest.fixture
def big_word():
    return AreaWord.parse(BIG_TEXT)


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    entry = _acceptance.setdefault(number, {"title": title, "passed": True, "ran": False})
    if call.when == "call" or call.excinfo is not None:
        entry["ran"] = True
        if call.excinfo is not None:
            entry["passed"] = False


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        entry = _acceptance[number]
        status = "PASS" if entry["passed"] and entry["ran"] else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  {entry['title']}")
