"""Exact computations for B = k<x,y>/(y^{r+1}): word algebras, Bratteli towers,
ordered K-theory in Z[alpha], the quiver embedding, point modules and the
Penrose half-tile coding."""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
