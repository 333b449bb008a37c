"""Exact rational linear algebra on small sparse and dense matrices."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

SparseVector = dict  # index -> Fraction, zero entries absent


def sparse_add(target: dict, vec: dict, scale=1) -> None:
    """In-place target += scale * vec, dropping entries that cancel."""
    if not scale:
        return
    for key, val in vec.items():
        new = target.get(key, 0) + scale * val
        if new:
            target[key] = new
        else:
            target.pop(key, None)


class EchelonBasis:
    """Incremental row reduction that remembers how each reduced row was built.

    Vectors are fed one at a time. An independent vector is accepted and
    receives the next basis index; a dependent one is expressed as a
    combination of previously accepted vectors.
    """

    def __init__(self):
        self._rows: dict = {}  # pivot -> (row, combination of accepted indices)
        self.size = 0

    def reduce(self, vec: dict) -> tuple[dict, dict]:
        residual = dict(vec)
        combo: dict = {}
        for pivot in sorted(self._rows):
            coeff = residual.get(pivot)
            if not coeff:
                continue
            row, row_combo = self._rows[pivot]
            sparse_add(residual, row, -coeff)
            sparse_add(combo, row_combo, coeff)
        return residual, combo

    def add(self, vec: dict) -> tuple[int | None, dict]:
        """Return (new index, {}) if vec is independent, else (None, coefficients)."""
        residual, combo = self.reduce(vec)
        if not residual:
            return None, combo
        index = self.size
        self.size += 1
        pivot = min(residual)
        lead = Fraction(residual[pivot])
        row = {k: Fraction(v) / lead for k, v in residual.items()}
        # residual = vec - sum(combo) and vec is the new basis element
        row_combo = {k: -Fraction(v) / lead for k, v in combo.items()}
        row_combo[index] = 1 / lead
        self._rows[pivot] = (row, row_combo)
        return index, {}


def rank(vectors: Iterable[dict]) -> int:
    basis = EchelonBasis()
    for vec in vectors:
        basis.add(vec)
    return basis.size


def dense_to_sparse(row: Sequence) -> dict:
    return {i: Fraction(v) for i, v in enumerate(row) if v}


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    return rank(dense_to_sparse(row) for row in matrix)


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns of a dense matrix."""
    rows = [[Fraction(v) for v in row] for row in matrix]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pick = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pick is None:
            continue
        rows[r], rows[pick] = rows[pick], rows[r]
        lead = rows[r][c]
        rows[r] = [v / lead for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of {x : matrix x = 0}, one vector per free column."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    reduced, pivots = rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(vec)
    return basis


class SpanSolver:
    """Express vectors in a fixed family of sparse vectors, exactly."""

    def __init__(self, generators: Sequence[dict]):
        self._basis = EchelonBasis()
        self.count = len(generators)
        for vec in generators:
            index, _ = self._basis.add(vec)
            if index is None:
                raise ValueError("generators are linearly dependent")

    def solve(self, target: dict) -> list[Fraction] | None:
        residual, combo = self._basis.reduce(target)
        if residual:
            return None
        return [Fraction(combo.get(i, 0)) for i in range(self.count)]
