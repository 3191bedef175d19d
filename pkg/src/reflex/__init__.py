"""Exact computation of (co)exponents and reflexponents of complex reflection
groups, and brute-force verification of their generating-function identities."""
__version__ = "0.1.0"
