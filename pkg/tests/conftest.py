"""Shared fixtures and golden data."""

import pytest
import structlog

from weaving.config import settings
from weaving.laurent import LaurentPoly
from weaving.reference import W3N_VALUES, WP2_JONES, WP2_VALUES

__all__ = ["W3N_VALUES", "WP2_JONES", "WP2_VALUES"]


@pytest.fixture(autouse=True)
def _reset_logging():
    """Drop any logger configuration bound to a captured stream."""
    yield
    structlog.reset_defaults()


@pytest.fixture
def small_chunks(monkeypatch):
    """Force the oracle onto its multi-worker path even for small diagrams."""
    monkeypatch.setattr(settings, "chunk_states", 64)
    return settings


@pytest.fixture
def wp2_jones() -> dict[int, LaurentPoly]:
    return {p: LaurentPoly.parse(text) for p, text in WP2_JONES.items()}
