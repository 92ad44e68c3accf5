"""Exact computer algebra for the restricted two-parameter quantum group."""

from .algebra import AlgebraElement, Params, TensorElement
from .cyclotomic import Cyclo, CycloContext
from .duality import Theory

__all__ = ["Params", "AlgebraElement", "TensorElement", "Cyclo",
           "CycloContext", "Theory"]
