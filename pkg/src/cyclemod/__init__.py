"""Constructive extraction of path and cycle families with controlled
length patterns (length condition, semi-length condition, consecutive
lengths) from graphs with modest minimum-degree hypotheses."""

__version__ = "0.1.0"
