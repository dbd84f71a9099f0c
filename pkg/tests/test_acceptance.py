"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The lines are collected into an "acceptance criteria" section of the pytest
summary. ``python tests/test_acceptance.py`` prints them without pytest.
"""

import pytest

from brauer.checks import ACCEPTANCE, WORKED_EXAMPLE
from brauer.partitions import Partition

# wall-clock ceilings where the criteria name one
BUDGET = {1: 10, 3: 30, 6: 300, 8: 120}


@pytest.mark.slow
@pytest.mark.parametrize("number", sorted(ACCEPTANCE), ids=lambda k: f"criterion_{k:02d}")
def test_criterion(number, acceptance_log):
    name, fn = ACCEPTANCE[number]
    result = fn()
    line = f"[{number:2d}] {result.line()}"
    acceptance_log.append(line)
    print("\n" + line)
    assert result.checked > 0
    assert result.passed, "\n".join(result.failures[:10])
    if number in BUDGET:
        assert result.seconds < BUDGET[number], f"{name} took {result.seconds:.1f}s"


def test_worked_example_is_the_expected_partition():
    assert WORKED_EXAMPLE == Partition((10, 10, 9, 9, 8, 5, 3, 3))


if __name__ == "__main__":
    failed = 0
    for k in sorted(ACCEPTANCE):
        r = ACCEPTANCE[k][1]()
        failed += not r.passed
        print(f"[{k:2d}] {r.line()}")
    raise SystemExit(1 if failed else 0)
