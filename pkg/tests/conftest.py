import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from semitotal import random_connected

DEEP = os.environ.get("SEMITOTAL_DEEP") == "1"


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "deep: exhaustive order-8 contraction sweeps, enable with SEMITOTAL_DEEP=1",
    )


def pytest_collection_modifyitems(config, items):
    if DEEP:
        return
    skip = pytest.mark.skip(reason="set SEMITOTAL_DEEP=1 for the order-8 sweep")
    for item in items:
        if "deep" in item.keywords:
            item.add_marker(skip)


@st.composite
def connected_graphs_st(draw, min_n=2, max_n=9):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.2, 0.35, 0.5, 0.7]))
    seed = draw(st.integers(0, 2**20))
    return random_connected(n, p, seed)
