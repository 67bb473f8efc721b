"""Exact combinatorial Hopf algebras of labeled rooted forests and of words."""

from .forests import Family, Forest, enumerate_forests, parse
from .linear import GradedBialgebra, LinComb, Tensor, check_axioms

__all__ = ["Family", "Forest", "GradedBialgebra", "LinComb", "Tensor", "check_axioms", "enumerate_forests", "parse"]
