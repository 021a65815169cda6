"""Shared pass/fail record for the acceptance criteria."""
import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}
TIME_LIMIT = 10.0


@contextmanager
def criterion(number: int, title: str):
    """Time a criterion block and record one PASS/FAIL line for it."""
    start = time.perf_counter()
    detail = {"text": ""}
    try:
        yield detail
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        _record(number, title, False, elapsed, f"{type(exc).__name__}: {exc}".splitlines()[0])
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < TIME_LIMIT
    _record(number, title, ok, elapsed, detail["text"] if ok else f"took {elapsed:.2f}s")
    assert ok, f"criterion {number} exceeded {TIME_LIMIT}s ({elapsed:.2f}s)"


def _record(number, title, ok, elapsed, text):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} [{elapsed:.2f}s]"
    if text:
        line += f"  {text}"
    RESULTS[number] = line
    print(line)
