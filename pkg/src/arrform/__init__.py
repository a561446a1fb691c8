"""Exact tools for hyperplane arrangements: formality, weak perspective
representations, planar rigidity, Jacobian saturations, and graded Betti
tables of the module of derivations annihilating the defining polynomial."""

from arrform._kernel import BACKEND as kernel_backend

__version__ = "0.1.0"
__all__ = ["kernel_backend", "__version__"]
