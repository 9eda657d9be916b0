from collections import Counter

import pytest

from marypoly.mseq import MSeq

TEST_SEQS = ["2", "3", "5", "2,3;4", "4,6;2"]


def brute_partitions(parts, n):
    """Counter {number_of_parts: count} over partitions of n into the given parts."""
    parts = sorted(set(parts), reverse=True)
    out = Counter()

    def go(rest, idx, used):
        if rest == 0:
            out[used] += 1
            return
        for i in range(idx, len(parts)):
            p = parts[i]
            for c in range(1, rest // p + 1):
                go(rest - c * p, i + 1, used + c)

    go(n, 0, 0)
    return out


@pytest.fixture(params=TEST_SEQS)
def mseq(request):
    return MSeq.parse(request.param)


_CRITERIA: list[str] = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion; shown in the summary."""

    def emit(name, passed, detail=""):
        line = f"{'PASS' if passed else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
        _CRITERIA.append(line)
        print(line)
        return passed

    return emit


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
