"""Acceptance gate: one pass/fail line per criterion.

Lines are printed with capture disabled so they appear in ``pytest -v`` output.
Run ``bvgroups selftest`` for the same report outside pytest.
"""

import pytest

from bvgroups import acceptance


@pytest.mark.parametrize("number", sorted(acceptance.CRITERIA))
def test_criterion(number, capsys):
    res = acceptance.run(number, quick=False)
    with capsys.disabled():
        print("\n" + res.line())
        for f in res.failures[:5]:
            print(f"    {f}")
    assert res.passed, res.detail
