"""Moore matrices and exact linear algebra over F_(q^m).

Matrices are numpy int64 arrays of element indices; the owning tower is passed
explicitly.  Row/column indices are 0-based here; reports and docs speaking of
"the (h+1)-th row" follow the 1-based convention of the generator layouts.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .fieldtower import Element, FieldTower


def as_matrix(entries, rows: int, cols: int) -> np.ndarray:
    M = np.asarray(entries, dtype=np.int64).reshape(rows, cols)
    return M


def matrix_to_json(tower: FieldTower, M: np.ndarray) -> list:
    """Nested arrays of element coordinate arrays, row-major."""
    return [[tower.element_to_json(int(x)) for x in row] for row in M]


def matrix_from_json(tower: FieldTower, obj) -> np.ndarray:
    return np.array(
        [[tower.element_from_json(x) for x in row] for row in obj], dtype=np.int64
    )


def moore_matrix(tower: FieldTower, alpha: Sequence[Element], k: int) -> np.ndarray:
    """k x n matrix whose i-th row is alpha raised componentwise to q^i."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(alpha) == 0:
        raise ValueError("alpha must be non-empty")
    a = np.asarray(alpha, dtype=np.int64)
    return np.stack([tower.frob_many(a, i) for i in range(k)])


def modified_moore_matrix(
    tower: FieldTower, alpha: Sequence[Element], k: int, h: int, t: int
) -> np.ndarray:
    """Moore matrix with row h replaced by alpha^[t] (t is the absolute q-power)."""
    if not 0 <= h <= k - 1:
        raise ValueError(f"h = {h} out of range [0, {k - 1}]")
    if t < 0:
        raise ValueError("t must be >= 0")
    M = moore_matrix(tower, alpha, k)
    M[h] = tower.frob_many(np.asarray(alpha, dtype=np.int64), t)
    return M


def matmul(tower: FieldTower, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Exact matrix product over F_(q^m)."""
    ra, ca = A.shape
    rb, cb = B.shape
    if ca != rb:
        raise ValueError("shape mismatch")
    out = np.zeros((ra, cb), dtype=np.int64)
    for i in range(ra):
        for j in range(cb):
            acc = 0
            for s in range(ca):
                acc = tower.add(acc, tower.mul(int(A[i, s]), int(B[s, j])))
            out[i, j] = acc
    return out


def det_fqm(tower: FieldTower, M: np.ndarray) -> Element:
    """Determinant by Gaussian elimination over the field; exact."""
    M = np.array(M, dtype=np.int64)
    r, c = M.shape
    if r != c:
        raise ValueError("determinant of a non-square matrix")
    det = 1
    for col in range(c):
        piv = next((i for i in range(col, r) if M[i, col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            M[[col, piv]] = M[[piv, col]]
            det = tower.neg(det)
        pv = int(M[col, col])
        det = tower.mul(det, pv)
        pinv = tower.inv(pv)
        for i in range(col + 1, r):
            f = int(M[i, col])
            if f:
                f = tower.mul(f, pinv)
                for j in range(col, c):
                    M[i, j] = tower.sub(int(M[i, j]), tower.mul(f, int(M[col, j])))
    return det


def rank_fqm(tower: FieldTower, M: np.ndarray) -> int:
    """Rank over F_(q^m) by elimination."""
    M = np.array(M, dtype=np.int64)
    if M.size == 0:
        return 0
    r, c = M.shape
    rank = 0
    for col in range(c):
        piv = next((i for i in range(rank, r) if M[i, col] != 0), None)
        if piv is None:
            continue
        M[[rank, piv]] = M[[piv, rank]]
        pinv = tower.inv(int(M[rank, col]))
        for i in range(rank + 1, r):
            f = int(M[i, col])
            if f:
                f = tower.mul(f, pinv)
                for j in range(col, c):
                    M[i, j] = tower.sub(int(M[i, j]), tower.mul(f, int(M[rank, j])))
        rank += 1
        if rank == r:
            break
    return rank


def nullspace_fqm(tower: FieldTower, M: np.ndarray) -> np.ndarray:
    """Rows form a basis of the right null space {x : M x^T = 0}; echelonized."""
    M = np.array(M, dtype=np.int64)
    r, c = M.shape
    # reduced row echelon form
    pivots = []
    row = 0
    for col in range(c):
        piv = next((i for i in range(row, r) if M[i, col] != 0), None)
        if piv is None:
            continue
        M[[row, piv]] = M[[piv, row]]
        pinv = tower.inv(int(M[row, col]))
        for j in range(c):
            M[row, j] = tower.mul(int(M[row, j]), pinv)
        for i in range(r):
            if i != row and M[i, col] != 0:
                f = int(M[i, col])
                for j in range(c):
                    M[i, j] = tower.sub(int(M[i, j]), tower.mul(f, int(M[row, j])))
        pivots.append(col)
        row += 1
        if row == r:
            break
    free = [j for j in range(c) if j not in pivots]
    basis = np.zeros((len(free), c), dtype=np.int64)
    for bi, j in enumerate(free):
        basis[bi, j] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = tower.neg(int(M[ri, j]))
    return basis


def moore_det_product(tower: FieldTower, alpha: Sequence[Element]) -> Element:
    """Closed-form Moore determinant.

    alpha_1 * prod over j = 1..k-1 and all (b_1..b_j) in F_q^j of
    (alpha_(j+1) - sum_i b_i alpha_i); enumerates the coefficient tuples
    literally, so it stays an independent oracle for det_fqm.
    """
    k = len(alpha)
    if k < 1:
        raise ValueError("alpha must be non-empty")
    acc = int(alpha[0])
    for j in range(1, k):
        for bs in product(range(tower.q), repeat=j):
            s = 0
            for b, a in zip(bs, alpha):
                s = tower.add(s, tower.mul(tower.lift_fq(b), int(a)))
            acc = tower.mul(acc, tower.sub(int(alpha[j]), s))
            if acc == 0:
                return 0
    return acc
