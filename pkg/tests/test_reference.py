"""Every worked reference table must reproduce."""

import pytest

from aci_betti.reference import CASES, find, run_case


@pytest.mark.parametrize("case", CASES, ids=[c.name for c in CASES])
def test_case_reproduces(case):
    result = run_case(case)
    assert result.actual == case.expected
    assert result.bounds == case.bounds
    assert result.ok


def test_names_are_unique():
    names = [c.name for c in CASES]
    assert len(names) == len(set(names))


def test_find():
    assert find("ghost-4448-aci") is not None
    assert find("no-such-case") is None
