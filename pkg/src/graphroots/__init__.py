"""Roots and efficient roots of knotted-graph pairs in triangulated
3-manifolds: normal sphere enumeration, compression moves, budgets, and
desk-scale recognition."""

__version__ = "0.1.0"

from .pair import InputError, Pair, parse_pair, write_pair  # noqa: F401
