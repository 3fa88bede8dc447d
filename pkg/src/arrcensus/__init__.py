"""Exact census of hyperplane arrangement classes via discriminantal cones."""

__version__ = "0.1.0"
