"""
Pytest configuration and shared fixtures for pnilrep tests.
"""

from pathlib import Path

import numpy as np
import pytest

from pnilrep.duals import label_for
from pnilrep.groups import law_for
from pnilrep.padic import DualPoint


@pytest.fixture
def fixtures_dir() -> Path:
    """Return the path to the test fixtures directory."""
    return Path(__file__).parent / "fixtures"


@pytest.fixture
def golden_h1(fixtures_dir: Path) -> Path:
    """Return the path to the golden H₁ dual report."""
    return fixtures_dir / "h1_p3_n1.json"


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so every test run draws the same samples."""
    return np.random.default_rng(20240611)


@pytest.fixture
def h1():
    return law_for("h1")


@pytest.fixture
def make_label():
    """Build a label from a law id and component text, e.g. ("h1", 3, "1,1,1/3")."""

    def build(law_id: str, prime: int, text: str, dim: int = 1):
        law = law_for(law_id, dim)
        return label_for(law, DualPoint.parse(text, prime))

    return build


@pytest.fixture(autouse=True)
def single_thread(monkeypatch):
    """Keep PNILREP_THREADS from the environment out of config tests."""
    monkeypatch.delenv("PNILREP_THREADS", raising=False)
