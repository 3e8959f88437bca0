"""Exact enumerative invariants of Looijenga pairs and their open-string duals."""

__version__ = "0.1.0"
