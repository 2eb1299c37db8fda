"""Translation, dilation, derivatives and unit-step differences on polynomials."""
from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from math import comb
from typing import Sequence

from .multiindex import DimensionError, factorial, multi_index, simplex
from .polynomial import Polynomial, linear_combination, monomial_value, point


class OperatorMode(enum.Enum):
    DERIVATIVE = "d"
    DIFFERENCE = "diff"


def _check_point(p: Polynomial, y: Sequence) -> tuple:
    if len(y) != p.d:
        raise DimensionError(f"point of dimension {len(y)} for polynomial in {p.d} variables")
    return point(y)


def _check_index(p: Polynomial, a: Sequence[int]) -> tuple:
    a = multi_index(a)
    if len(a) != p.d:
        raise DimensionError(f"multi-index of dimension {len(a)} for polynomial in {p.d} variables")
    return a


def translate(p: Polynomial, y: Sequence) -> Polynomial:
    """x -> p(x + y), by binomial expansion of every term."""
    y = _check_point(p, y)
    out: dict = {}
    for a, c in p.items():
        # per-variable expansion of (x_k + y_k)^a_k as {j: coefficient of x_k^j}
        factors = []
        for e, yk in zip(a, y):
            factors.append([(j, comb(e, j) * yk ** (e - j)) for j in range(e + 1) if yk or j == e])
        for combo in itertools.product(*factors):
            v = c
            for _, f in combo:
                v *= f
            key = tuple(j for j, _ in combo)
            out[key] = out.get(key, 0) + v
    return Polynomial(p.d, out)


def dilate(p: Polynomial, lam: Sequence) -> Polynomial:
    """x -> p(lam * x) with the componentwise product; each c_a becomes c_a * lam^a."""
    lam = _check_point(p, lam)
    out = {}
    for a, c in p.items():
        v = c
        for x, e in zip(lam, a):
            v *= x**e
        out[a] = v
    return Polynomial(p.d, out)


def affine_map(p: Polynomial, a: Sequence, b: Sequence) -> Polynomial:
    """x -> p(a * x + b)."""
    return dilate(translate(p, b), a)


def partial(p: Polynomial, a: Sequence[int]) -> Polynomial:
    a = _check_index(p, a)
    out = {}
    for b, c in p.items():
        if any(bk < ak for bk, ak in zip(b, a)):
            continue
        v = c
        for bk, ak in zip(b, a):
            for j in range(ak):
                v *= bk - j
        out[tuple(bk - ak for bk, ak in zip(b, a))] = v
    return Polynomial(p.d, out)


def _delta_axis(p: Polynomial, k: int) -> Polynomial:
    """p(x + e_k) - p(x); only the k-th exponent moves."""
    out: dict = {}
    for a, c in p.items():
        e = a[k]
        for j in range(e):
            key = a[:k] + (j,) + a[k + 1:]
            out[key] = out.get(key, 0) + c * comb(e, j)
    return Polynomial(p.d, out)


def difference(p: Polynomial, a: Sequence[int]) -> Polynomial:
    """Iterated unit-step difference Delta^a = Delta_1^a_1 ... Delta_d^a_d."""
    a = _check_index(p, a)
    for k, n in enumerate(a):
        for _ in range(n):
            if p.is_zero():
                return p
            p = _delta_axis(p, k)
    return p


def apply_operator(P: Polynomial, p: Polynomial, mode: OperatorMode) -> Polynomial:
    """P(d) p or P(Delta) p: sum of c_a * (d^a p or Delta^a p) over the terms of P."""
    if P.d != p.d:
        raise DimensionError(f"dimension mismatch: {P.d} != {p.d}")
    mode = OperatorMode(mode)
    step = partial if mode is OperatorMode.DERIVATIVE else difference
    out = Polynomial.zero(p.d)
    for a, c in P.items():
        out = out + c * step(p, a)
    return out


def taylor_coefficients(p: Polynomial) -> dict:
    """a -> (d^a p)(0), which is a! times the coefficient of x^a."""
    return {a: factorial(a) * c for a, c in p.items()}


def taylor_expansion(p: Polynomial, y: Sequence) -> Polynomial:
    """Sum over |a| <= deg p of q_a(y)/a! * d^a p.

    Equal to translate(p, y) for every polynomial; kept separate so the two
    routes can be checked against each other.
    """
    y = _check_point(p, y)
    deg = max((sum(a) for a, _ in p.items()), default=0)
    coeffs, polys = [], []
    for a in simplex(p.d, deg):
        w = monomial_value(a, y)
        if w:
            coeffs.append(Fraction(w, factorial(a)))
            polys.append(partial(p, a))
    return linear_combination(coeffs, polys, p.d)
