from __future__ import annotations

import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from tricrit.propagation import enumerate_propagation_paths


@pytest.fixture(scope="session")
def p6_run():
    """The full reference enumeration, shared by the acceptance checks."""
    t0 = time.monotonic()
    result = enumerate_propagation_paths(["P6"], 25)
    return result, time.monotonic() - t0
