"""Acceptance criteria over the worked examples, one test per criterion.

Every criterion records a PASS/FAIL line that the terminal summary prints.
Equality is exact throughout.  Each case must finish within CASE_LIMIT
seconds and the whole file within SUITE_LIMIT.
"""

import time

import pytest

from realzeta.selftest import (
    CRITERIA,
    SUITE_INPUTS,
    property_failures,
    random_polynomials,
    run_criterion,
    source_of,
)

CASE_LIMIT = 5.0
SUITE_LIMIT = 60.0
RESULTS: list[str] = []
_started = time.perf_counter()


def _record(number: int, title: str, passed: bool, detail: str, seconds: float) -> None:
    line = f"{'PASS' if passed else 'FAIL'} criterion {number:>2}: {title} ({seconds:.2f}s)"
    if detail:
        line += f" -- {detail}"
    RESULTS.append(line)
    print(line)


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA if n != 10])
def test_criterion(number):
    result = run_criterion(number)
    _record(result.number, result.title, result.passed, result.detail, result.seconds)
    assert result.seconds < CASE_LIMIT
    assert result.passed, result.detail


def test_criterion_10_property_suites():
    cases = [(text, source_of(text)) for text in SUITE_INPUTS]
    cases += [(f.to_str(), f) for f in random_polynomials()]
    failures, slow = [], []
    total = 0.0
    for label, source in cases:
        start = time.perf_counter()
        failures += [f"{label}: {name}" for name in property_failures(source)]
        elapsed = time.perf_counter() - start
        total += elapsed
        if elapsed >= CASE_LIMIT:
            slow.append(f"{label} took {elapsed:.2f}s")
    detail = "; ".join(failures + slow)
    _record(10, f"property suites on {len(cases)} inputs", not detail, detail, total)
    assert not slow, slow
    assert not failures, failures


def test_suite_runtime():
    assert time.perf_counter() - _started < SUITE_LIMIT
