"""Shared fixtures: line configurations and short constructors."""

import pytest

from unirank3.arith import rat
from unirank3.classical import LineConfig

ALPHAS = ("0", "1/2", "1", "3/2", "2", "5/2")


@pytest.fixture(scope="session")
def configs():
    return {a: LineConfig(rat(a)) for a in ALPHAS}
