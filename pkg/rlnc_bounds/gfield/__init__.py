"""
Arithmétique des corps finis et algèbre linéaire dense sur GF(q).
"""
from .field import (
    CONWAY_POLYNOMIALS,
    FieldElement,
    GaloisField,
    factor_order,
    get_field,
    is_prime,
    is_supported_order,
    uniform_sample,
)
from .matrix import MatrixGF, batch_rank, matrix_rank

__all__ = [
    'CONWAY_POLYNOMIALS',
    'FieldElement',
    'GaloisField',
    'factor_order',
    'get_field',
    'is_prime',
    'is_supported_order',
    'uniform_sample',
    'MatrixGF',
    'batch_rank',
    'matrix_rank',
]
