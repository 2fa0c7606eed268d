"""
Matrices denses sur GF(q) et calcul de rang par élimination exacte.
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from rlnc_bounds.gfield.field import GaloisField
from rlnc_bounds.utils.exceptions import FieldArithmeticError


@dataclass(frozen=True)
class MatrixGF:
    """
    Matrice dense immuable sur GF(q), stockée ligne par ligne.

    Attributes:
        rows (int): Nombre de lignes
        cols (int): Nombre de colonnes
        entries (Tuple[int, ...]): rows·cols entiers canoniques, ordre ligne-major
        field (GaloisField): Corps de base

    Example:
        >>> gf = GaloisField(3)
        >>> MatrixGF.from_rows([[1, 2], [2, 1]], gf).rank()
        1
    """
    rows: int
    cols: int
    entries: Tuple[int, ...]
    field: GaloisField

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Dimensions négatives")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} coefficients pour une matrice {self.rows}x{self.cols}"
            )
        if any(not 0 <= v < self.field.order for v in self.entries):
            raise FieldArithmeticError(f"Coefficient hors de GF({self.field.order})")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], field: GaloisField) -> 'MatrixGF':
        """Construit une matrice à partir d'une liste de lignes."""
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        if any(len(row) != n_cols for row in rows):
            raise ValueError("Lignes de longueurs différentes")
        return cls(n_rows, n_cols, tuple(int(v) for row in rows for v in row), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], dim: int, field: GaloisField) -> 'MatrixGF':
        """Construit une matrice dim × len(columns) à partir de ses colonnes."""
        return cls(dim, len(columns),
                   tuple(int(col[i]) for i in range(dim) for col in columns), field)

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def rank(self) -> int:
        """Rang sur GF(q) ; la matrice n'est pas modifiée."""
        return matrix_rank(self)


def matrix_rank(matrix: MatrixGF) -> int:
    """
    Calcule le rang d'une matrice par élimination de Gauss exacte.

    Travaille sur une copie ; 0 ≤ rang ≤ min(rows, cols).
    """
    gf = matrix.field
    work = matrix.to_rows()
    rank = 0
    for col in range(matrix.cols):
        pivot = next((i for i in range(rank, matrix.rows) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = gf.inv(work[rank][col])
        work[rank] = [gf.mul(inv, v) for v in work[rank]]
        for i in range(rank + 1, matrix.rows):
            factor = work[i][col]
            if factor:
                work[i] = [gf.sub(a, gf.mul(factor, b)) for a, b in zip(work[i], work[rank])]
        rank += 1
        if rank == matrix.rows:
            break
    return rank


def batch_rank(field: GaloisField, columns: Sequence[np.ndarray], dim: int,
               batch: int = 0) -> np.ndarray:
    """
    Rang d'un lot de matrices dim × len(columns), une par ligne du lot.

    Chaque colonne est un tableau (B, dim). Les colonnes sont insérées une à
    une dans une base échelonnée par lot : basis[b, p] a son premier
    coefficient non nul, normalisé à 1, en position p.

    Args:
        field (GaloisField): Corps de base
        columns (Sequence[np.ndarray]): Colonnes de forme (B, dim)
        dim (int): Nombre de lignes des matrices
        batch (int, optional): Taille du lot quand columns est vide

    Returns:
        np.ndarray: Rangs, forme (B,)
    """
    if not columns:
        return np.zeros(batch, dtype=np.int64)
    batch = columns[0].shape[0]
    basis = np.zeros((batch, dim, dim), dtype=np.int64)
    has_pivot = np.zeros((batch, dim), dtype=bool)
    for column in columns:
        vector = np.array(column, dtype=np.int64, copy=True)
        pending = np.ones(batch, dtype=bool)
        for p in range(dim):
            coeff = vector[:, p]
            nonzero = pending & (coeff != 0)
            reduce_mask = nonzero & has_pivot[:, p]
            if reduce_mask.any():
                scaled = field.mul_array(coeff[reduce_mask][:, None], basis[reduce_mask, p, :])
                vector[reduce_mask] = field.sub_array(vector[reduce_mask], scaled)
            new_mask = nonzero & ~has_pivot[:, p]
            if new_mask.any():
                inv = field.inv_array(coeff[new_mask])
                basis[new_mask, p, :] = field.mul_array(inv[:, None], vector[new_mask])
                has_pivot[new_mask, p] = True
                pending &= ~new_mask
    return has_pivot.sum(axis=1)
