"""gridlines: construct and verify point sets with at most k points per line."""

__version__ = "0.1.0"
