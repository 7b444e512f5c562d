"""Gorenstein projective modules over quadratic monomial algebras."""

__version__ = "0.1.0"
