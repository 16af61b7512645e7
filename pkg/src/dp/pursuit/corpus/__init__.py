from .checks import Check, CheckResult, check_dict
from .crosscheck import CheckSummary, CrosscheckReport, crosscheck
from .enumerate import (connected_count, enumerate_connected,
                        enumerate_connected_bipartite, sample_connected)
from .fixtures import FixtureId, fixture, fixture_dict
from .graph6 import from_graph6, read_graph6, to_graph6

__all__ = [
    "Check",
    "CheckResult",
    "CheckSummary",
    "CrosscheckReport",
    "FixtureId",
    "check_dict",
    "connected_count",
    "crosscheck",
    "enumerate_connected",
    "enumerate_connected_bipartite",
    "fixture",
    "fixture_dict",
    "from_graph6",
    "read_graph6",
    "sample_connected",
    "to_graph6",
]
