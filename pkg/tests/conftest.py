import time

import acceptance_log

_START = time.perf_counter()


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(acceptance_log.RESULTS):
        title, ok, secs = acceptance_log.RESULTS[n]
        tr.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.2f} s)")
    total = time.perf_counter() - _START
    verdict = "PASS" if total < 120 else "FAIL"
    tr.write_line(f"suite runtime: {verdict}  {total:.1f} s (budget 120 s)")
