"""Exact-rational hyperplane arrangements and their concept classes."""

from .core import (
    EUCLIDEAN,
    KLEIN,
    Arrangement,
    CellMap,
    Hyperplane,
    arrangement_from_json,
    arrangement_to_json,
    cells,
    validate,
)
from .sweep import direction_sequence, run_sweep, sweep, sweep_klein

__all__ = [
    "EUCLIDEAN",
    "KLEIN",
    "Arrangement",
    "CellMap",
    "Hyperplane",
    "arrangement_from_json",
    "arrangement_to_json",
    "cells",
    "direction_sequence",
    "run_sweep",
    "sweep",
    "sweep_klein",
    "validate",
]
