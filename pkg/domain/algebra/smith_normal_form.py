# domain/algebra/smith_normal_form.py
"""Smith normal form over the integers, with a determinantal-divisor oracle.

Matrices are numpy arrays of dtype object so every entry stays an exact
Python integer.
"""
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class SmithNormalForm:
    """D = left @ M @ right with left, right unimodular"""
    diagonal: np.ndarray
    invariants: Tuple[int, ...]
    left: np.ndarray
    right: np.ndarray
    rank: int


def as_integer_matrix(M) -> np.ndarray:
    arr = np.array(M, dtype=object)
    if arr.ndim == 1 and arr.size == 0:
        return arr.reshape(0, 0)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-dimensional matrix, got shape {arr.shape}")
    return np.vectorize(int, otypes=[object])(arr) if arr.size else arr


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def _smallest_nonzero(A: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    best = None
    rows, cols = A.shape
    for i in range(t, rows):
        for j in range(t, cols):
            v = abs(A[i, j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def _swap_rows(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[[i, j], :] = A[[j, i], :]


def _swap_cols(A: np.ndarray, i: int, j: int) -> None:
    if i != j:
        A[:, [i, j]] = A[:, [j, i]]


def smith_normal_form(M) -> SmithNormalForm:
    """Diagonalize by unimodular row and column operations.

    The pivot is always the entry of least absolute value in the remaining
    block; rows and columns are reduced by it until the pivot divides its
    whole row, column and trailing block.
    """
    A = as_integer_matrix(M).copy()
    rows, cols = A.shape
    L, R = _identity(rows), _identity(cols)

    t = 0
    while t < min(rows, cols):
        position = _smallest_nonzero(A, t)
        if position is None:
            break
        i, j = position
        _swap_rows(A, t, i)
        _swap_rows(L, t, i)
        _swap_cols(A, t, j)
        _swap_cols(R, t, j)

        while True:
            pivot = A[t, t]
            clean = True
            for i in range(t + 1, rows):
                q = A[i, t] // pivot
                if q:
                    A[i, :] -= q * A[t, :]
                    L[i, :] -= q * L[t, :]
                clean = clean and A[i, t] == 0
            for j in range(t + 1, cols):
                q = A[t, j] // pivot
                if q:
                    A[:, j] -= q * A[:, t]
                    R[:, j] -= q * R[:, t]
                clean = clean and A[t, j] == 0
            if not clean:
                # a remainder smaller than the pivot becomes the new pivot
                best = None
                for i in range(t, rows):
                    if A[i, t] and (best is None or abs(A[i, t]) < best[0]):
                        best = (abs(A[i, t]), i, t)
                for j in range(t, cols):
                    if A[t, j] and (best is None or abs(A[t, j]) < best[0]):
                        best = (abs(A[t, j]), t, j)
                _, i, j = best
                _swap_rows(A, t, i)
                _swap_rows(L, t, i)
                _swap_cols(A, t, j)
                _swap_cols(R, t, j)
                continue
            offender = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i, j] % pivot),
                None,
            )
            if offender is None:
                break
            A[t, :] += A[offender[0], :]
            L[t, :] += L[offender[0], :]

        if A[t, t] < 0:
            A[t, :] = -A[t, :]
            L[t, :] = -L[t, :]
        t += 1

    invariants = tuple(int(A[k, k]) for k in range(t))
    return SmithNormalForm(diagonal=A, invariants=invariants, left=L, right=R, rank=t)


def integer_determinant(M) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination"""
    A = [[int(v) for v in row] for row in as_integer_matrix(M).tolist()]
    n = len(A)
    if n == 0:
        return 1
    sign, previous = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // previous
        previous = A[k][k]
    return sign * A[n - 1][n - 1]


def determinantal_divisors(M) -> List[int]:
    """d_k = gcd of all k x k minors, for k = 1..min(rows, cols)"""
    A = as_integer_matrix(M)
    rows, cols = A.shape
    divisors = []
    for k in range(1, min(rows, cols) + 1):
        d = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                d = gcd(d, integer_determinant(A[np.ix_(r, c)]))
        divisors.append(d)
    return divisors


def invariants_from_divisors(divisors: Sequence[int]) -> Tuple[int, ...]:
    """Invariant factors d_k / d_(k-1) up to the rank"""
    out = []
    previous = 1
    for d in divisors:
        if d == 0:
            break
        out.append(d // previous)
        previous = d
    return tuple(out)
