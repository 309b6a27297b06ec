"""Executable skew meadows: zero-totalized division, inversion rings and
finite regular rings, with an exhaustive law-checking harness."""

__version__ = "0.1.0"
