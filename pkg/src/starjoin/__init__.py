"""starjoin - star-join graphs with small local and large global chromatic number."""

__version__ = "0.1.0"
