"""Exact q-arithmetic, root systems, quantum-group checks and exceptional algebras."""

from .qarith import LaurentPoly, QScalar, evaluate, q_binomial, q_factorial, q_number
from .rootsys import LieType, cartan_matrix, generate_roots, lie_dimension
from .weylgrp import weyl_order, weyl_catalan, lattice_automorphism_order
from .qgroup import check_relations, qdim_roots, qdim_typeA
from .exalg import derivation_dimension, magic_square_check, octonion_algebra

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "QScalar",
    "evaluate",
    "q_number",
    "q_factorial",
    "q_binomial",
    "LieType",
    "cartan_matrix",
    "generate_roots",
    "lie_dimension",
    "weyl_order",
    "weyl_catalan",
    "lattice_automorphism_order",
    "check_relations",
    "qdim_typeA",
    "qdim_roots",
    "derivation_dimension",
    "magic_square_check",
    "octonion_algebra",
]
