"""Exact combinatorics of Harder-Narasimhan strata for reductive groups."""

__version__ = "0.1.0"
