"""Exact zeta-function, enumerator and matroid computations for short linear
codes over small finite fields."""

__version__ = "0.1.0"
