"""Endomorphisms with restricted range of finite independence algebras.

Enumerates T(A, B) for sets and GF(p) vector spaces, evaluates the
closed-form descriptions of its regular elements, Green's relations,
extended Green's relations and ideals, and checks them against brute force.
"""

from .algebra import Cardinal, SetModel, VecModel, closure, extend_to_basis
from .endo import Endo, compose
from .instances import corpus_instance, load_instance
from .semigroup import classify_instance, enumerate_semigroup

__all__ = [
    "Cardinal",
    "Endo",
    "SetModel",
    "VecModel",
    "classify_instance",
    "closure",
    "compose",
    "corpus_instance",
    "enumerate_semigroup",
    "extend_to_basis",
    "load_instance",
]
