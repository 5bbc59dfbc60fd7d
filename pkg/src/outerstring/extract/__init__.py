"""Executable structure-extraction procedures with verified step traces."""

from .brackets import attempt_bracket_system
from .cliques import attempt_clique_system, find_system
from .core import (bfs_supported, find_skeleton_supported,
                   intersecting_gap_pair, mcguinness)
from .report import BoundParams, ExtractionReport, StepFailure, StepRecord

__all__ = [
    "BoundParams", "ExtractionReport", "StepFailure", "StepRecord",
    "mcguinness", "intersecting_gap_pair", "bfs_supported",
    "find_skeleton_supported", "attempt_bracket_system",
    "attempt_clique_system", "find_system",
]
