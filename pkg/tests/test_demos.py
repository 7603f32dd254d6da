"""Every demo script runs to completion."""

import runpy
from pathlib import Path

import pytest

DEMOS = sorted((Path(__file__).parent.parent / "demos").glob("*.py"))


@pytest.mark.parametrize("script", DEMOS, ids=lambda p: p.name)
def test_demo_runs(script):
    runpy.run_path(str(script), run_name="__main__")


def test_demos_exist():
    assert len(DEMOS) == 6
