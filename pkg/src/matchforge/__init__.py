"""Worst-case instrumentation for greedy maximum-cardinality matching."""

__version__ = "0.1.0"
