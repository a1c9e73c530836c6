from collections import OrderedDict

import pytest

# criterion number -> list of (check name, passed, detail)
ACCEPTANCE: "OrderedDict[int, list]" = OrderedDict()


@pytest.fixture
def criterion():
    def record(number: int, name: str, passed: bool, detail: str = "") -> None:
        ACCEPTANCE.setdefault(number, []).append((name, passed, detail))
        status = "PASS" if passed else "FAIL"
        print(f"{status} criterion {number} [{name}] {detail}".rstrip())
        assert passed, f"criterion {number} [{name}] failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        checks = ACCEPTANCE[number]
        failed = [c for c in checks if not c[1]]
        status = "FAIL" if failed else "PASS"
        note = "; ".join(f"{name}: {detail}" for name, _, detail in failed)
        line = f"{status} criterion {number} ({len(checks) - len(failed)}/{len(checks)} checks)"
        terminalreporter.write_line(line + (f" -- {note}" if note else ""))
