"""Exact generating functions for the generalized Euler and class numbers s_{m,n}."""

from .arith import factor, jacobi, kronecker, landau_residual, squarefree_decompose
from .closedform import build, predicted_L, recurrence_residual, s_coefficients
from .dirichlet import L_minus, L_plus
from .signedperm import count

__all__ = [
    "factor",
    "jacobi",
    "kronecker",
    "landau_residual",
    "squarefree_decompose",
    "build",
    "predicted_L",
    "recurrence_residual",
    "s_coefficients",
    "L_minus",
    "L_plus",
    "count",
]

__version__ = "0.1.0"
