import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from treearith import RawTree, canonize, unrank

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


def T(i: int):
    return unrank(i)


def trees(max_leaves: int = 12):
    nested = st.recursive(
        st.just([]), lambda kids: st.lists(kids, min_size=1, max_size=4), max_leaves=max_leaves
    )
    return nested.map(lambda n: canonize(RawTree.from_nested(n)))


@pytest.fixture(scope="session")
def golden():
    rows = [line.split("\t") for line in (DATA / "golden_codes.tsv").read_text().splitlines()]
    return {int(i): code for i, code in rows}


_results = []


def record(criterion: str, passed: bool, detail: str = "") -> None:
    _results.append((criterion, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _results:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
