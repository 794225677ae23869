"""Exact integer linear algebra behind the main-eigenvalue decision.

Whether every eigenvalue of a signed graph is main reduces to two integer
computations: the rank of the walk matrix [j, Aj, ..., A^{n-1}j] equals the
number of main eigenvalues, and the degree of charpoly / gcd(charpoly,
charpoly') equals the number of distinct eigenvalues (the minimal polynomial
of a symmetric matrix is squarefree).  Everything here runs over arbitrary
precision integers, so the accept/reject decision involves no tolerances.

Matrices are plain lists of rows of Python ints; polynomials are coefficient
lists in ascending powers ([] is the zero polynomial).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

IntMatrix = list[list[int]]
IntPoly = list[int]

__all__ = [
    "IntMatrix",
    "IntPoly",
    "MainProfile",
    "char_poly",
    "distinct_eigenvalue_count",
    "main_profile",
    "poly_degree",
    "poly_derivative",
    "poly_gcd",
    "rank_exact",
    "walk_matrix",
]


def _check_square(a: IntMatrix) -> int:
    n = len(a)
    if n == 0 or any(len(row) != n for row in a):
        raise ValueError("matrix must be square and nonempty")
    return n


def is_symmetric(a: IntMatrix) -> bool:
    n = _check_square(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


# ---------------------------------------------------------------------------
# Characteristic polynomial (Faddeev-LeVerrier, exact integer divisions)
# ---------------------------------------------------------------------------


def char_poly(a: IntMatrix) -> IntPoly:
    """Monic characteristic polynomial det(xI - A), ascending coefficients.

    Uses the Faddeev-LeVerrier recurrence; each trace division is exact over
    the integers.  Object-dtype numpy arrays keep the inner products in C
    loops while retaining arbitrary precision.
    """
    n = _check_square(a)
    A = np.array([[int(x) for x in row] for row in a], dtype=object)
    B = np.eye(n, dtype=object)
    desc = [1]  # coefficients of x^n, x^{n-1}, ...
    for k in range(1, n + 1):
        B = np.dot(A, B)
        tr = int(np.trace(B))
        if tr % k:
            raise ArithmeticError("Faddeev-LeVerrier trace division not exact")
        c = -(tr // k)
        desc.append(c)
        idx = np.diag_indices(n)
        B[idx] = B[idx] + c
    return [int(c) for c in reversed(desc)]


# ---------------------------------------------------------------------------
# Integer polynomial utilities (primitive pseudo-remainder gcd)
# ---------------------------------------------------------------------------


def poly_degree(p: IntPoly) -> int:
    """Degree, with deg 0 for constants; raises on the zero polynomial."""
    q = _trim(p)
    if not q:
        raise ValueError("zero polynomial has no degree")
    return len(q) - 1


def _trim(p: IntPoly) -> IntPoly:
    k = len(p)
    while k and p[k - 1] == 0:
        k -= 1
    return list(p[:k])


def poly_derivative(p: IntPoly) -> IntPoly:
    return _trim([i * c for i, c in enumerate(p)][1:])


def _content(p: IntPoly) -> int:
    return math.gcd(*(abs(c) for c in p)) if p else 0


def _primitive(p: IntPoly) -> IntPoly:
    p = _trim(p)
    if not p:
        return p
    c = _content(p)
    p = [x // c for x in p]
    if p[-1] < 0:
        p = [-x for x in p]
    return p


def _pseudo_rem(a: IntPoly, b: IntPoly) -> IntPoly:
    # prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a  divided by b.
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [lb * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lr * bc
        r = _trim(r)
        if not r:
            break
    return r


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of integer polynomials via the primitive pseudo-remainder
    sequence (content stripped at every step to control coefficient growth)."""
    a, b = _primitive(a), _primitive(b)
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a, b = b, _primitive(r)
    return a


def distinct_eigenvalue_count(p: IntPoly) -> int:
    """Number of distinct roots of a characteristic polynomial of a symmetric
    integer matrix: deg p - deg gcd(p, p')."""
    q = _trim(p)
    if not q:
        raise ValueError("zero polynomial")
    if len(q) == 1:
        raise ValueError("constant polynomial has no eigenvalues")
    g = poly_gcd(q, poly_derivative(q))
    return (len(q) - 1) - (len(g) - 1)


# ---------------------------------------------------------------------------
# Walk matrix and exact rank
# ---------------------------------------------------------------------------


def walk_matrix(a: IntMatrix) -> IntMatrix:
    """Columns j, Aj, A^2 j, ..., A^{n-1} j where j is the all-ones vector."""
    n = _check_square(a)
    cols = [[1] * n]
    for _ in range(n - 1):
        prev = cols[-1]
        cols.append([sum(a[i][k] * prev[k] for k in range(n)) for i in range(n)])
    return [[cols[k][i] for k in range(n)] for i in range(n)]


def rank_exact(m: IntMatrix) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    if not m or not m[0]:
        raise ValueError("matrix must be nonempty")
    a = [[int(x) for x in row] for row in m]
    n_rows, n_cols = len(a), len(a[0])
    if any(len(row) != n_cols for row in a):
        raise ValueError("ragged matrix")
    prev = 1
    pr = 0
    for pc in range(n_cols):
        piv_row = next((i for i in range(pr, n_rows) if a[i][pc] != 0), None)
        if piv_row is None:
            continue
        if piv_row != pr:
            a[pr], a[piv_row] = a[piv_row], a[pr]
        piv = a[pr][pc]
        row_p = a[pr]
        for i in range(pr + 1, n_rows):
            row_i = a[i]
            f = row_i[pc]
            for j in range(pc + 1, n_cols):
                row_i[j] = (piv * row_i[j] - f * row_p[j]) // prev
            row_i[pc] = 0
        prev = piv
        pr += 1
        if pr == n_rows:
            break
    return pr


# ---------------------------------------------------------------------------
# The decision procedure
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MainProfile:
    """Exact main-eigenvalue bookkeeping for one signed adjacency matrix."""

    main_count: int
    distinct_count: int
    all_main: bool


def main_profile(a: IntMatrix) -> MainProfile:
    """Exact decision: main_count = rank of the walk matrix, distinct_count
    from the squarefree degree of the characteristic polynomial.

    This is the authoritative accept/reject for every certificate; the float
    classifier is advisory only.
    """
    if not is_symmetric(a):
        raise ValueError("main_profile requires a symmetric matrix")
    mc = rank_exact(walk_matrix(a))
    dc = distinct_eigenvalue_count(char_poly(a))
    return MainProfile(main_count=mc, distinct_count=dc, all_main=mc == dc)
