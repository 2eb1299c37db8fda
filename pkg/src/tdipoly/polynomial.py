"""Sparse multivariate polynomials over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .multiindex import DimensionError, grlex_key, multi_index

Point = tuple  # tuple of Fraction


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or string")
    return Fraction(value)


def point(coords: Iterable) -> Point:
    return tuple(as_fraction(c) for c in coords)


class Polynomial:
    """Immutable sparse polynomial in d variables with Fraction coefficients.

    Terms are stored as a dict from exponent tuples to nonzero coefficients;
    the zero polynomial has no terms.
    """

    __slots__ = ("d", "_terms", "_hash")

    def __init__(self, d: int, terms: Optional[Mapping] = None):
        if d < 1:
            raise ValueError("dimension must be >= 1")
        self.d = d
        clean = {}
        for a, c in (terms or {}).items():
            a = tuple(a)
            if len(a) != d:
                raise DimensionError(f"exponent {a} does not have dimension {d}")
            c = as_fraction(c)
            if c:
                clean[a] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, d: int, terms: dict) -> "Polynomial":
        # terms already validated and free of zeros
        p = cls.__new__(cls)
        p.d = d
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, d: int) -> "Polynomial":
        return cls._raw(d, {})

    @classmethod
    def constant(cls, c, d: int) -> "Polynomial":
        return cls(d, {(0,) * d: c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.d == other.d and self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "Polynomial") -> None:
        if self.d != other.d:
            raise DimensionError(f"dimension mismatch: {self.d} != {other.d}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, other)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return mul(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __pow__(self, n: int):
        out = Polynomial.constant(1, self.d)
        for _ in range(n):
            out = mul(out, self)
        return out

    def __call__(self, *coords):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = coords[0]
        return evaluate(self, point(coords))

    def __repr__(self) -> str:
        return f"Polynomial({self.d}, {format_poly(self)!r})"

    def __str__(self) -> str:
        return format_poly(self)


def monomial(a: Sequence[int], coeff=1) -> Polynomial:
    a = multi_index(a)
    return Polynomial(len(a), {a: coeff})


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    out = dict(p._terms)
    for a, c in q._terms.items():
        s = out.get(a, 0) + c
        if s:
            out[a] = s
        else:
            out.pop(a, None)
    return Polynomial._raw(p.d, out)


def scale(c, p: Polynomial) -> Polynomial:
    c = as_fraction(c)
    if not c:
        return Polynomial.zero(p.d)
    return Polynomial._raw(p.d, {a: c * v for a, v in p._terms.items()})


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    p._check(q)
    out: dict = {}
    for a, c in p._terms.items():
        for b, e in q._terms.items():
            k = tuple(x + y for x, y in zip(a, b))
            out[k] = out.get(k, 0) + c * e
    return Polynomial._raw(p.d, {k: v for k, v in out.items() if v})


def linear_combination(coeffs: Iterable, polys: Iterable[Polynomial], d: int) -> Polynomial:
    out: dict = {}
    for c, p in zip(coeffs, polys):
        c = as_fraction(c)
        if not c:
            continue
        for a, v in p._terms.items():
            out[a] = out.get(a, 0) + c * v
    return Polynomial._raw(d, {k: v for k, v in out.items() if v})


def evaluate(p: Polynomial, pt: Sequence) -> Fraction:
    if len(pt) != p.d:
        raise DimensionError(f"point of dimension {len(pt)} for polynomial in {p.d} variables")
    pt = point(pt)
    total = Fraction(0)
    for a, c in p._terms.items():
        term = c
        for x, e in zip(pt, a):
            if e:
                term *= x**e
        total += term
    return total


def monomial_value(a: Sequence[int], pt: Sequence[Fraction]) -> Fraction:
    """q_a(pt), with 0**0 == 1."""
    v = Fraction(1)
    for x, e in zip(pt, a):
        if e:
            v *= x**e
    return v


def support(p: Polynomial) -> set:
    return set(p._terms)


def coefficient(p: Polynomial, a: Sequence[int]) -> Fraction:
    return p._terms.get(tuple(a), Fraction(0))


def total_degree(p: Polynomial) -> Optional[int]:
    if not p._terms:
        return None
    return max(sum(a) for a in p._terms)


def degree_vector(p: Polynomial) -> tuple:
    """Per-variable degrees; all zeros for the zero polynomial."""
    if not p._terms:
        return (0,) * p.d
    return tuple(max(a[k] for a in p._terms) for k in range(p.d))


def leading_index(p: Polynomial):
    return max(p._terms, key=grlex_key)


class SingularSystem(ValueError):
    """The evaluation matrix does not have full column rank."""


class Inconsistent(ValueError):
    """The values cannot be matched by any polynomial on the allowed support."""


def fit_from_values(points: Sequence, values: Sequence, allowed_support: Iterable) -> Polynomial:
    """Interpolate the polynomial supported in `allowed_support` taking `values` at `points`."""
    support_list = sorted({multi_index(a) for a in allowed_support}, key=grlex_key, reverse=True)
    pts = [point(x) for x in points]
    vals = [as_fraction(v) for v in values]
    if len(pts) != len(vals):
        raise ValueError("points and values differ in length")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")
    if len(pts) < len(support_list):
        raise SingularSystem(f"{len(pts)} points cannot determine {len(support_list)} coefficients")
    if not pts:
        raise ValueError("need at least one point to fix the dimension")
    d = len(pts[0])
    if any(len(x) != d for x in pts):
        raise DimensionError("points have mixed dimensions")
    if any(len(a) != d for a in support_list):
        raise DimensionError("support indices do not match the point dimension")
    matrix = [[monomial_value(a, x) for a in support_list] for x in pts]
    try:
        solution = linalg.solve(matrix, vals)
    except linalg.RankDeficient as exc:
        raise SingularSystem(str(exc)) from exc
    except linalg.NoSolution as exc:
        raise Inconsistent(str(exc)) from exc
    return Polynomial(d, dict(zip(support_list, solution)))


# --- text form ----------------------------------------------------------------


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(a: Sequence[int]) -> str:
    parts = []
    for k, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"x{k}")
        elif e > 1:
            parts.append(f"x{k}^{e}")
    return "*".join(parts)


def format_poly(p: Polynomial) -> str:
    """Canonical text: graded-lex descending, '-' folded into the separator."""
    if not p._terms:
        return "0"
    out = []
    for i, a in enumerate(sorted(p._terms, key=grlex_key, reverse=True)):
        c = p._terms[a]
        mono = format_monomial(a)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_ALIASES = {"x": 1, "y": 2, "z": 3}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.i)

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def nat(self) -> int:
        start = self.i
        while self.peek().isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected a natural number")
        return int(self.text[start:self.i])

    def var(self) -> int:
        ch = self.peek()
        if ch not in _ALIASES:
            self.error("expected a variable")
        self.i += 1
        if ch == "x" and self.peek().isdigit():
            start = self.i
            k = self.nat()
            if k < 1:
                self.i = start
                self.error("variable index must be >= 1")
            return k
        return _ALIASES[ch]

    def power(self, mono: dict):
        k = self.var()
        e = 1
        self.ws()
        if self.peek() == "^":
            self.i += 1
            self.ws()
            e = self.nat()
        mono[k] = mono.get(k, 0) + e

    def mono(self, mono: dict):
        self.power(mono)
        while True:
            save = self.i
            self.ws()
            if self.peek() != "*":
                self.i = save
                return
            self.i += 1
            self.ws()
            self.power(mono)

    def term(self):
        mono: dict = {}
        coeff = Fraction(1)
        if self.peek().isdigit():
            num = self.nat()
            save = self.i
            self.ws()
            if self.peek() == "/":
                self.i += 1
                self.ws()
                den_pos = self.i
                den = self.nat()
                if den == 0:
                    self.i = den_pos
                    self.error("zero denominator")
                coeff = Fraction(num, den)
            else:
                self.i = save
                coeff = Fraction(num)
            save = self.i
            self.ws()
            if self.peek() == "*":
                self.i += 1
                self.ws()
                self.mono(mono)
            else:
                self.i = save
        elif self.peek() in _ALIASES:
            self.mono(mono)
        else:
            self.error("expected a term")
        return coeff, mono

    def poly(self):
        terms = []
        self.ws()
        sign = 1
        if self.peek() in "+-" and self.peek():
            sign = -1 if self.peek() == "-" else 1
            self.i += 1
            self.ws()
        c, m = self.term()
        terms.append((sign * c, m))
        while True:
            self.ws()
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error("expected '+', '-' or end of input")
            self.i += 1
            self.ws()
            c, m = self.term()
            terms.append(((-1 if ch == "-" else 1) * c, m))
        return terms


def parse(text: str, d: Optional[int] = None) -> Polynomial:
    """Parse a polynomial; d defaults to the highest variable index used (at least 1)."""
    terms = _Parser(text).poly()
    used = max((k for _, m in terms for k in m), default=1)
    if d is None:
        d = used
    elif used > d:
        raise ParseError(f"variable x{used} exceeds dimension {d}", text, 0)
    out: dict = {}
    for c, m in terms:
        a = tuple(m.get(k, 0) for k in range(1, d + 1))
        out[a] = out.get(a, 0) + c
    return Polynomial(d, out)


def infer_dimension(text: str) -> int:
    return parse(text).d
