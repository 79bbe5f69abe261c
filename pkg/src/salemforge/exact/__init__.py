"""Exact arithmetic core: integer/rational polynomials and matrices,
finite fields, real algebraic numbers, integer factorization."""

from . import fppoly, intfactor, intmatrix, intpoly, realalg

__all__ = ["intpoly", "intmatrix", "fppoly", "realalg", "intfactor"]
