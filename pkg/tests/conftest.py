"""Shared fixtures.

The full enumeration to h = 12 is computed once per session and reused
by the acceptance and enumeration tests; its wall time is recorded so
the acceptance budget can be asserted without rerunning the search.
"""

from __future__ import annotations

import time

import pytest

from bechex.enumeration import _levels, _report_from_pairs, _traced

FULL_DEPTH = 12
KEEP_KEYS_DEPTH = 8


class EnumerationSession:
    """Reports for 2..12 plus raw shape keys for the shallow levels."""

    def __init__(self):
        t0 = time.perf_counter()
        self.reports = {}
        self.keys = {}
        self.counts = {}
        for h, keys in _levels(FULL_DEPTH):
            self.counts[h] = len(keys)
            if h <= KEEP_KEYS_DEPTH:
                self.keys[h] = keys
            if h >= 2:
                self.reports[h] = _report_from_pairs(h, _traced(keys))
        self.seconds = time.perf_counter() - t0


@pytest.fixture(scope="session")
def enumeration_session() -> EnumerationSession:
    return EnumerationSession()
