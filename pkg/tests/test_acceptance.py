"""One test per acceptance criterion; each prints its pass/fail line.

Criteria 2 and 4 are strict expected failures: the seeded samples hit
instances where the stated equivalence or closed form does not hold.  The
pinned tests below check that the failures are exactly those instances.
"""

from functools import lru_cache

import pytest

from blockradio.acceptance import CRITERIA, family_sweep
from blockradio.families import ExtendedStar, closed_form_rn

from conftest import ACCEPTANCE_LINES

KNOWN_FAILURES = {
    2: "a*/b* does not imply (c) on some non-tree block graphs",
    4: "closed form fails for extended stars with m=2, k=1, n>=3",
}


@lru_cache(maxsize=None)
def result(n):
    r = CRITERIA[n]()
    ACCEPTANCE_LINES.append(r.line())
    return r


@pytest.mark.parametrize(
    "n",
    [pytest.param(n, marks=pytest.mark.xfail(strict=True, reason=KNOWN_FAILURES[n])) if n in KNOWN_FAILURES else n
     for n in sorted(CRITERIA)],
)
def test_criterion(n):
    r = result(n)
    print(r.line())
    assert r.passed, r.line()


def test_criterion_2_failures_are_one_sided():
    r = result(2)
    assert "(a)(b)(c) vs (a)+pairs disagreements 0" in r.detail
    assert "routes=(False, False, True)" in r.detail


def test_criterion_4_failures_are_two_branch_stars():
    r = result(4)
    gap = {s for s in family_sweep() if isinstance(s, ExtendedStar) and s.m == 2 and s.k == 1 and s.n >= 3}
    assert "named 4/4" in r.detail
    total = len(family_sweep())
    assert f"sweep {total - len(gap)}/{total}" in r.detail
    failing = r.detail.split("failing: ", 1)[1].split("; ")
    want = [f"{s.label()}: LB={closed_form_rn(s)} closed={closed_form_rn(s)} NotCertified" for s in gap]
    assert sorted(failing) == sorted(want)
