"""Finite-dimensional polynomial subspaces and the invariant hulls of a polynomial.

A :class:`PolySpace` holds the reduced row-echelon basis of a span, with
columns ordered graded-lex descending.  The reduced basis is unique for the
span, so dataclass equality is span equality.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from .linalg import Echelon
from .multiindex import (
    DimensionError,
    LowerSet,
    box,
    contains,
    downward_closure,
    enumeration_key,
    grlex_key,
    truncate,
    union,
    unit,
)
from .operators import partial
from .polynomial import Polynomial, degree_vector, format_poly, monomial, parse


@dataclass(frozen=True)
class PolySpace:
    d: int
    rows: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def support(self) -> tuple:
        """Monomials used by some element of the space, graded-lex descending."""
        idx = {a for r in self.rows for a, _ in r.items()}
        return tuple(sorted(idx, key=grlex_key, reverse=True))

    def matrix(self) -> list[list[Fraction]]:
        cols = self.support
        return [[r.terms.get(a, Fraction(0)) for a in cols] for r in self.rows]

    def __contains__(self, p: Polynomial) -> bool:
        return space_contains(self, p)

    def dumps(self) -> str:
        return "".join(format_poly(r) + "\n" for r in self.rows)

    @classmethod
    def loads(cls, text: str, d: Optional[int] = None) -> "PolySpace":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if d is None:
            d = max((parse(ln).d for ln in lines), default=1)
        return span_basis([parse(ln, d) for ln in lines], d)


def _echelon(space: Optional[PolySpace] = None) -> Echelon:
    ech = Echelon(key=grlex_key)
    if space is not None:
        for r in space.rows:
            ech.rows[max(r.terms, key=grlex_key)] = r.terms
    return ech


def _freeze(ech: Echelon, d: int) -> PolySpace:
    rows = tuple(Polynomial(d, row) for _, row in ech.sorted_rows())
    return PolySpace(d, rows)


def span_basis(gens: Iterable[Polynomial], d: Optional[int] = None) -> PolySpace:
    gens = list(gens)
    if d is None:
        if not gens:
            raise ValueError("dimension needed for an empty generator list")
        d = gens[0].d
    ech = _echelon()
    for g in gens:
        if g.d != d:
            raise DimensionError(f"dimension mismatch: {g.d} != {d}")
        ech.insert(g.terms)
    return _freeze(ech, d)


class SpanBuilder:
    """Mutable accumulator used by the sampling oracles."""

    def __init__(self, d: int):
        self.d = d
        self._ech = _echelon()

    @property
    def dim(self) -> int:
        return len(self._ech)

    def add(self, p: Polynomial) -> bool:
        return self._ech.insert(p.terms)

    def basis(self) -> list[Polynomial]:
        return [Polynomial(self.d, row) for _, row in self._ech.sorted_rows()]

    def freeze(self) -> PolySpace:
        return _freeze(self._ech, self.d)


def space_contains(V: PolySpace, p: Polynomial) -> bool:
    if V.d != p.d:
        raise DimensionError(f"dimension mismatch: {V.d} != {p.d}")
    return not _echelon(V).reduce(p.terms)


def is_subspace(V: PolySpace, W: PolySpace) -> bool:
    return all(space_contains(W, r) for r in V.rows)


def space_sum(V: PolySpace, W: PolySpace) -> PolySpace:
    return span_basis(V.rows + W.rows, V.d)


def monomial_span(indices: Iterable[Sequence[int]], d: int) -> PolySpace:
    return span_basis([monomial(a) for a in indices], d)


def monomial_rank_check(S: Iterable[Sequence[int]], d: Optional[int] = None) -> bool:
    """Build the span of {x^a : a in S} and confirm its dimension is |S|."""
    S = {tuple(a) for a in S}
    if d is None:
        d = len(next(iter(S))) if S else 1
    return monomial_span(S, d).dim == len(S)


def tau_orbit(p: Polynomial) -> PolySpace:
    """Smallest translation invariant space holding p: the span of all derivatives."""
    gens = [partial(p, a) for a in box(degree_vector(p))]
    return span_basis([g for g in gens if g], p.d)


def sigma_orbit(p: Polynomial) -> PolySpace:
    """Smallest dilation invariant space holding p: the monomials of its support."""
    return monomial_span(p.terms, p.d)


def tausigma_orbit(p: Polynomial) -> LowerSet:
    return downward_closure(p.terms, p.d)


def tdi_closure(gens: Iterable[Polynomial], d: Optional[int] = None) -> LowerSet:
    gens = list(gens)
    if d is None:
        d = gens[0].d if gens else 1
    out = LowerSet.empty(d)
    for g in gens:
        if g.d != d:
            raise DimensionError(f"dimension mismatch: {g.d} != {d}")
        out = union(out, tausigma_orbit(g))
    return out


def lowerset_span(omega: LowerSet, degree: int) -> PolySpace:
    """Monomial span over the members of omega of total degree <= degree."""
    return monomial_span(truncate(omega, degree), omega.d)


def omega_of_space(V: PolySpace) -> set:
    """Indices a with x^a in V.  Only the support can hold such monomials."""
    ech = _echelon(V)
    return {a for a in V.support if not ech.reduce({a: 1})}


def is_translation_invariant(V: PolySpace) -> bool:
    ech = _echelon(V)
    for r in V.rows:
        for k in range(V.d):
            if ech.reduce(partial(r, unit(k, V.d)).terms):
                return False
    return True


def is_dilation_invariant(V: PolySpace) -> bool:
    ech = _echelon(V)
    return all(not ech.reduce({a: 1}) for r in V.rows for a in r.terms)


def is_tdi(V: PolySpace) -> bool:
    return is_translation_invariant(V) and is_dilation_invariant(V)


class Membership(NamedTuple):
    member: bool
    witness: Optional[tuple] = None


def lowerset_member(p: Polynomial, omega: LowerSet) -> Membership:
    """Is support(p) inside omega?  If not, name the first offending index."""
    if p.d != omega.d:
        raise DimensionError(f"dimension mismatch: {p.d} != {omega.d}")
    outside = [a for a in p.terms if not contains(omega, a)]
    if not outside:
        return Membership(True)
    return Membership(False, min(outside, key=enumeration_key))
