"""Exact-arithmetic toolkit for graded Lie algebras of CR quadrics.

Builds the fundamental graded algebra of a vector-valued hermitian form,
computes its maximal pseudocomplex (Tanaka) prolongation, analyses the
result (Killing form, radical, graded Levi decomposition), and decides
grading-reversal symmetry properties of simple graded factors through
root-system and Weyl-group computations.

All arithmetic is exact over the rationals / Gaussian rationals.
"""

__version__ = "0.1.0"

from .scalars import GaussRational
from .matrices import ExactMatrix

__all__ = ["GaussRational", "ExactMatrix", "__version__"]
