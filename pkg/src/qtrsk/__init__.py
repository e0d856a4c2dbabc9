"""Exact (q,t)-randomized dual RSK: local rules, growths, and identity checks."""

__version__ = "0.1.0"
