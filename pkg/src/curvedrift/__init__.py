"""Certified upper bounds for asymptotic translation lengths on curve complexes."""

__version__ = "0.1.0"
