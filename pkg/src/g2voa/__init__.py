"""Exact computations in U(G2), U(G2^(1)) and the vacuum modules N(k, 0) at
levels -5/3, -4/3, -2/3: structure constants, PBW normal ordering, singular
vectors, Zhu images, zero-weight polynomials and the resulting highest weights.
"""
from .rootsys import DomainError

__version__ = "0.1.0"
__all__ = ["DomainError", "__version__"]
