"""Floating-point spectral engine.

A cyclic Jacobi eigensolver (rotations until every off-diagonal entry is
below tol * ||A||_F) provides orthonormal bases per eigenspace, which the
main-eigenvalue classifier needs: an eigenvalue group is main when the
projection of the all-ones vector onto its eigenspace has norm above a
threshold.  The classifier is advisory; for integer inputs the exact module
is authoritative.

Closed-form spectra for the two graph families live here as well: the cubic
for the clique-with-pendants family and the secular equation
sum_i m_i/(x + t_i) = 1 for complete multipartite graphs, with the roots
bracketed between consecutive poles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .graphs import MultipartiteParams

__all__ = [
    "EigenSystem",
    "MultipartiteSpectrum",
    "SnrSpectrum",
    "SpectrumGroup",
    "SpectrumReport",
    "classify_main",
    "eigen_sym",
    "multipartite_secular_roots",
    "multipartite_spectrum",
    "snr_cubic_roots",
    "snr_spectrum",
]


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues with an orthonormal column system."""

    eigenvalues: np.ndarray
    vectors: np.ndarray
    residual_bound: float


def eigen_sym(a, tol: float = 1e-12, max_sweeps: int = 60) -> EigenSystem:
    """Eigendecomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Rotations repeat until every off-diagonal magnitude drops below
    tol * ||A||_F.  Raises on non-symmetric input (asymmetry above 1e-12).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    A = np.array(a, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError("matrix must be square")
    n = A.shape[0]
    if n == 0:
        raise ValueError("matrix must be nonempty")
    if np.max(np.abs(A - A.T), initial=0.0) > 1e-12:
        raise ValueError("matrix is not symmetric")
    A0 = A.copy()
    V = np.eye(n)
    fro = np.linalg.norm(A, "fro")
    if fro > 0:
        threshold = tol * fro
        for _ in range(max_sweeps):
            off = np.max(np.abs(A - np.diag(np.diag(A))))
            if off < threshold:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = A[p, q]
                    if abs(apq) < threshold / (2 * n):
                        continue
                    theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                    c = 1.0 / math.sqrt(t * t + 1.0)
                    s = t * c
                    col_p = A[:, p].copy()
                    col_q = A[:, q].copy()
                    A[:, p] = c * col_p - s * col_q
                    A[:, q] = s * col_p + c * col_q
                    row_p = A[p, :].copy()
                    row_q = A[q, :].copy()
                    A[p, :] = c * row_p - s * row_q
                    A[q, :] = s * row_p + c * row_q
                    A[p, q] = 0.0
                    A[q, p] = 0.0
                    col_p = V[:, p].copy()
                    col_q = V[:, q].copy()
                    V[:, p] = c * col_p - s * col_q
                    V[:, q] = s * col_p + c * col_q
        else:
            raise RuntimeError("Jacobi iteration failed to converge")
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    w = w[order]
    V = V[:, order]
    residual = float(np.max(np.linalg.norm(A0 @ V - V * w, axis=0), initial=0.0))
    return EigenSystem(eigenvalues=w, vectors=V, residual_bound=residual)


@dataclass(frozen=True)
class SpectrumGroup:
    value: float
    multiplicity: int
    is_main: bool
    main_mass: float


@dataclass(frozen=True)
class SpectrumReport:
    """Eigenvalues grouped into eigenspaces with a main flag per group."""

    groups: tuple[SpectrumGroup, ...]
    n: int


def classify_main(es: EigenSystem, group_eps: float | None = None,
                  main_eps: float | None = None) -> SpectrumReport:
    """Merge near-equal eigenvalues into eigenspace groups and flag each group
    as main when ||Q^T j||_2 exceeds the threshold.

    The projection norm does not depend on the basis chosen inside the
    eigenspace, so the flags are basis-invariant.
    """
    w = es.eigenvalues
    n = len(w)
    radius = float(np.max(np.abs(w), initial=0.0))
    if group_eps is None:
        group_eps = 1e-8 * max(1.0, radius)
    if main_eps is None:
        main_eps = 1e-8 * math.sqrt(n)
    if group_eps <= 0 or main_eps <= 0:
        raise ValueError("tolerances must be positive")
    j = np.ones(n)
    groups: list[SpectrumGroup] = []
    start = 0
    for i in range(1, n + 1):
        if i < n and w[i] - w[i - 1] <= group_eps:
            continue
        block = es.vectors[:, start:i]
        mass = float(np.linalg.norm(block.T @ j))
        groups.append(SpectrumGroup(
            value=float(np.mean(w[start:i])),
            multiplicity=i - start,
            is_main=mass > main_eps,
            main_mass=mass,
        ))
        start = i
    return SpectrumReport(groups=tuple(groups), n=n)


# ---------------------------------------------------------------------------
# Clique-with-pendants spectrum: x^3 - (n-r-2)x^2 - (n-1)x + r(n-r-2) = 0
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SnrSpectrum:
    """Spectrum layout of the clique-with-pendants graph: eigenvalue 0 with
    multiplicity r-1, eigenvalue -1 with multiplicity n-r-2, plus three simple
    cubic roots in (-inf, 0), (0, sqrt r), (sqrt r, +inf)."""

    n: int
    r: int
    zero_mult: int
    minus_one_mult: int
    cubic_roots: tuple[float, float, float]

    def as_multiset(self) -> list[float]:
        vals = [0.0] * self.zero_mult + [-1.0] * self.minus_one_mult
        vals.extend(self.cubic_roots)
        return sorted(vals)


def snr_cubic_roots(n: int, r: int) -> tuple[float, float, float]:
    """The three simple eigenvalues of the clique-with-pendants graph, one per
    bracket (-inf, 0), (0, sqrt r), (sqrt r, +inf).

    The sign chart pins the brackets: f(0) = r(n-r-2) > 0 and
    f(sqrt r) = (1+r-n) sqrt(r) < 0 whenever n >= r+3.
    """
    if r < 1 or n < r + 3:
        raise ValueError(f"need r >= 1 and n >= r+3, got n={n} r={r}")

    def f(x: float) -> float:
        return x ** 3 - (n - r - 2) * x ** 2 - (n - 1) * x + r * (n - r - 2)

    sq = math.sqrt(r)
    lo = brentq(f, -float(n), 0.0, xtol=1e-14, rtol=8.9e-16)
    mid = brentq(f, 0.0, sq, xtol=1e-14, rtol=8.9e-16)
    hi = brentq(f, sq, float(n), xtol=1e-14, rtol=8.9e-16)
    roots = (float(lo), float(mid), float(hi))
    for x in roots:
        if abs(f(x)) >= 1e-10 * (1.0 + abs(x) ** 3):
            raise RuntimeError(f"cubic residual too large at {x}")
    return roots


def snr_spectrum(n: int, r: int) -> SnrSpectrum:
    roots = snr_cubic_roots(n, r)
    return SnrSpectrum(n=n, r=r, zero_mult=r - 1, minus_one_mult=n - r - 2,
                       cubic_roots=roots)


# ---------------------------------------------------------------------------
# Complete multipartite spectrum: poles at -t_i, secular roots between them
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultipartiteSpectrum:
    """Spectrum layout of a complete multipartite graph: eigenvalue 0 with
    multiplicity b = sum(m_i - l_i), eigenvalue -t_i with multiplicity l_i - 1,
    and s simple secular roots with exactly one positive."""

    params: MultipartiteParams
    zero_mult: int
    ti_mults: tuple[tuple[int, int], ...]  # (-t_i, l_i - 1)
    secular_roots: tuple[float, ...]  # descending: positive root first

    def as_multiset(self) -> list[float]:
        vals = [0.0] * self.zero_mult
        for val, mult in self.ti_mults:
            vals.extend([float(val)] * mult)
        vals.extend(self.secular_roots)
        return sorted(vals)


def multipartite_secular_roots(p: MultipartiteParams) -> list[float]:
    """Roots of sum_i m_i/(x + t_i) = 1, ordered descending (the unique
    positive root first, then one root between each pair of consecutive
    poles -t_k and -t_{k+1})."""
    t = p.sizes
    m = p.group_sizes
    s = p.s
    if s == 1:
        # m1/(x + t1) = 1 solves exactly to (l1 - 1) t1.
        return [float(m[0] - t[0])]

    def h(x: float) -> float:
        return sum(mi / (x + ti) for mi, ti in zip(m, t)) - 1.0

    roots = [float(brentq(h, 0.0, float(p.n), xtol=1e-14, rtol=8.9e-16))]
    inner: list[float] = []
    for k in range(s - 1):
        a_pole, b_pole = -float(t[k]), -float(t[k + 1])
        delta = (b_pole - a_pole) / 4.0
        lo, hi = a_pole + delta, b_pole - delta
        while h(lo) <= 0.0:
            delta /= 2.0
            lo = a_pole + delta
        while h(hi) >= 0.0:
            hi = b_pole - (b_pole - hi) / 2.0
        inner.append(float(brentq(h, lo, hi, xtol=1e-14, rtol=8.9e-16)))
    # Bracket k sits between -t_k and -t_{k+1}; descending order wants the
    # rightmost (largest) first.
    roots.extend(sorted(inner, reverse=True))
    for x in roots:
        scale = 1.0 + sum(mi / abs(x + ti) for mi, ti in zip(m, t))
        if abs(h(x)) >= 1e-10 * scale:
            raise RuntimeError(f"secular residual too large at {x}")
    return roots


def multipartite_spectrum(p: MultipartiteParams) -> MultipartiteSpectrum:
    roots = multipartite_secular_roots(p)
    t, l, m = p.sizes, p.counts, p.group_sizes
    b = sum(mi - li for mi, li in zip(m, l))
    spectrum = MultipartiteSpectrum(
        params=p,
        zero_mult=b,
        ti_mults=tuple((-ti, li - 1) for ti, li in zip(t, l)),
        secular_roots=tuple(roots),
    )
    if len(spectrum.as_multiset()) != p.n:
        raise RuntimeError("multiplicity bookkeeping does not sum to n")
    positives = [x for x in roots if x > 0]
    if p.n > 1 and sum(l) > 1 and len(positives) != 1:
        raise RuntimeError("expected exactly one positive eigenvalue")
    # Pole interlacing: t_s < -root_2 < t_{s-1} < ... < -root_s < t_1.
    for idx in range(1, p.s):
        neg = -roots[idx]
        if not (t[p.s - idx] < neg < t[p.s - idx - 1]):
            raise RuntimeError("secular roots do not interlace the poles")
    return spectrum
