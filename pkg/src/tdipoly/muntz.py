"""Least-squares approximation of x^M by lacunary monomials on a grid in [0, 1].

The exponents are {0} together with the primes and twice the primes.  Their
span is dilation invariant but not translation invariant, and x^M for M
outside the set can be approximated ever better while staying outside the
span.  The fits here are plain grid least squares; they do not compute
uniform best approximations.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class TargetInSet(ValueError):
    pass


class RankDeficient(ValueError):
    pass


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = False
    return [int(i) for i in np.flatnonzero(sieve)]


def muntz_exponents(bound: int) -> list[int]:
    if bound < 0:
        raise ValueError("bound must be >= 0")
    ps = primes_upto(bound)
    return sorted({0, *ps, *(2 * p for p in ps if 2 * p <= bound)})


@dataclass(frozen=True)
class FitReport:
    exponent_bound: int
    exponents: tuple
    coefficients: tuple
    sum_sq_residual: float
    sup_grid_error: float
    grid_size: int
    max_orthogonality: float  # max |<col, r>| / (|col| |target|)

    def row(self) -> str:
        return (
            f"{self.exponent_bound} | {len(self.exponents)} | "
            f"{self.sum_sq_residual:.6g} | {self.sup_grid_error:.6g}"
        )


def grid(grid_size: int) -> np.ndarray:
    return np.linspace(0.0, 1.0, grid_size)


def least_squares_fit(exponents, target: int, grid_size: int, bound: int | None = None) -> FitReport:
    """Fit x^target by sum c_e x^e over the grid with Householder QR on unit-norm columns."""
    E = sorted(set(int(e) for e in exponents))
    if target in E:
        raise TargetInSet(f"x^{target} already lies in the span")
    if grid_size < len(E) + 1:
        raise RankDeficient(f"grid of {grid_size} points is too small for {len(E)} exponents")
    x = grid(grid_size)
    A = x[:, None] ** np.array(E, dtype=float)[None, :]
    t = x**target
    norms = np.linalg.norm(A, axis=0)
    if np.any(norms == 0):
        raise RankDeficient("a column vanishes on the grid")
    Q, R = np.linalg.qr(A / norms)
    diag = np.abs(np.diag(R))
    if np.any(diag == 0) or not np.all(np.isfinite(diag)):
        raise RankDeficient("columns are linearly dependent at working precision")
    scaled = np.linalg.solve(R, Q.T @ t) if len(E) else np.zeros(0)
    coeffs = scaled / norms
    # residual from the orthogonal projection, which stays accurate when R is ill conditioned
    r = t - Q @ (Q.T @ t)
    tn = np.linalg.norm(t)
    ortho = float(np.max(np.abs((A / norms).T @ r)) / tn) if len(E) else 0.0
    return FitReport(
        exponent_bound=max(E) if bound is None else bound,
        exponents=tuple(E),
        coefficients=tuple(float(c) for c in coeffs),
        sum_sq_residual=float(r @ r),
        sup_grid_error=float(np.max(np.abs(r))),
        grid_size=grid_size,
        max_orthogonality=ortho,
    )


def run_demo(target: int, bounds, grid_size: int) -> list[FitReport]:
    bounds = list(bounds)
    if any(b2 <= b1 for b1, b2 in zip(bounds, bounds[1:])):
        raise ValueError("bounds must be strictly increasing")
    if bounds and target in muntz_exponents(bounds[-1]):
        raise TargetInSet(f"{target} is one of the exponents up to {bounds[-1]}")
    return [least_squares_fit(muntz_exponents(b), target, grid_size, bound=b) for b in bounds]


def format_table(reports: list[FitReport]) -> str:
    lines = ["bound | #exponents | sum_sq_residual | sup_grid_error"]
    lines += [r.row() for r in reports]
    return "\n".join(lines) + "\n"
