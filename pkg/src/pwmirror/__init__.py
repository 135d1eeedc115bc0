"""Perverse mixed Hodge polynomials, the mirror P=W check, and an exact
Laurent-polynomial toolkit for toric Landau-Ginzburg superpotentials."""

__version__ = "0.1.0"
