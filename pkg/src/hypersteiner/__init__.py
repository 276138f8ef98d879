"""Steiner hypertrees and hypergraph orientation problems."""

__version__ = "0.1.0"
