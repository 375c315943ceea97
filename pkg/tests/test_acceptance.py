"""Exit criteria: each criterion runs at zero tolerance and prints a pass/fail line."""

import filecmp

import pytest

from diagsurf import verify
from diagsurf.cli import run


@pytest.mark.parametrize("crit", verify.CRITERIA, ids=lambda c: c.__name__)
def test_criterion(crit):
    result = crit()
    print(result.summary)
    for line in result.lines:
        if line.startswith("FAIL"):
            print("   ", line)
    assert result.passed, "\n".join(result.lines)


def test_criterion_10_determinism(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert run(["verify-all", "--quiet", "--out", str(a)]) == 0
    assert run(["verify-all", "--quiet", "--out", str(b)]) == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    assert "verify.log" in names and len(names) > 1
    match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
    ok = not mismatch and not errors
    print(f"[{'PASS' if ok else 'FAIL'}] criterion 10: verify-all output byte-identical across runs ({len(match)} files)")
    assert ok
