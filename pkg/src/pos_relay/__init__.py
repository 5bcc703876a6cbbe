"""Finality-only proof-of-stake chain relay, simulator, and cost accounting."""

__version__ = "0.1.0"
