"""Multi-indices, the componentwise order, and staircase (lower) sets.

A multi-index is a plain tuple of non-negative ints.  Extended multi-indices
may also carry :data:`INF`, which compares above every natural number.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, Union

INF = math.inf

Entry = Union[int, float]
MultiIndex = tuple
ExtendedMultiIndex = tuple


class DimensionError(ValueError):
    pass


def check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise DimensionError(f"dimension mismatch: {len(a)} != {len(b)}")


def multi_index(entries: Iterable[int]) -> MultiIndex:
    a = tuple(int(e) for e in entries)
    if not a:
        raise ValueError("multi-index must have dimension >= 1")
    if any(e < 0 for e in a):
        raise ValueError(f"negative entry in multi-index {a}")
    return a


def extended_index(entries: Iterable[Entry]) -> ExtendedMultiIndex:
    out = []
    for e in entries:
        if e == INF:
            out.append(INF)
        elif isinstance(e, float) and not e.is_integer():
            raise ValueError(f"non-integral entry {e}")
        elif e < 0:
            raise ValueError(f"negative entry {e}")
        else:
            out.append(int(e))
    if not out:
        raise ValueError("multi-index must have dimension >= 1")
    return tuple(out)


def leq(a: Sequence[Entry], b: Sequence[Entry]) -> bool:
    check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def order(a: Sequence[int]) -> int:
    """|a|, the total degree of the monomial x^a."""
    return sum(a)


def factorial(a: Sequence[int]) -> int:
    return math.prod(math.factorial(e) for e in a)


def add(a: Sequence[int], b: Sequence[int]) -> MultiIndex:
    check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def unit(k: int, d: int) -> MultiIndex:
    """e_k, with k counted from 0."""
    return tuple(1 if i == k else 0 for i in range(d))


def enumeration_key(a: Sequence[Entry]):
    """Graded order used for enumeration: total degree first, then x1-heavy first.

    (0,0) < (1,0) < (0,1) < (2,0) < (1,1) < (0,2) < ...
    """
    return (sum(a), tuple(-e for e in a))


def grlex_key(a: Sequence[int]):
    """Standard graded-lex key (x1 > x2 > ...); larger key means larger monomial."""
    return (sum(a), tuple(a))


def simplex(d: int, degree: int) -> Iterator[MultiIndex]:
    """All multi-indices of dimension d with |a| <= degree, in enumeration order."""
    for total in range(degree + 1):
        yield from _compositions(total, d)


def _compositions(total: int, d: int) -> Iterator[MultiIndex]:
    if d == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, d - 1):
            yield (first,) + rest


def box(a: Sequence[int]) -> Iterator[MultiIndex]:
    """The initial section [a] for finite a."""
    return itertools.product(*(range(e + 1) for e in a))


def _maximal(points: Iterable[ExtendedMultiIndex]) -> tuple:
    pts = sorted(set(points), key=enumeration_key)
    keep = [p for p in pts if not any(q != p and leq(p, q) for q in pts)]
    return tuple(keep)


@dataclass(frozen=True)
class LowerSet:
    """Downward-closed subset of N^d stored as a union of initial sections.

    Generators are kept normalized (no generator below another) and sorted in
    enumeration order, so two lower sets are equal iff their fields are equal.
    """

    d: int
    generators: tuple = ()

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        gens = []
        for g in self.generators:
            g = extended_index(g)
            if len(g) != self.d:
                raise DimensionError(f"generator {g} has dimension {len(g)}, expected {self.d}")
            gens.append(g)
        object.__setattr__(self, "generators", _maximal(gens))

    @classmethod
    def empty(cls, d: int) -> "LowerSet":
        return cls(d, ())

    @classmethod
    def full(cls, d: int) -> "LowerSet":
        return cls(d, ((INF,) * d,))

    def __contains__(self, a) -> bool:
        return contains(self, a)

    def is_empty(self) -> bool:
        return not self.generators

    def is_finite(self) -> bool:
        return all(e != INF for g in self.generators for e in g)

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "generators": [["inf" if e == INF else e for e in g] for g in self.generators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, data: dict) -> "LowerSet":
        try:
            d = int(data["d"])
            gens = [
                tuple(INF if e == "inf" else _as_nat(e) for e in g) for g in data["generators"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed lower set: {exc}") from exc
        return cls(d, tuple(gens))

    @classmethod
    def loads(cls, text: str) -> "LowerSet":
        return cls.from_json(json.loads(text))

    def __str__(self) -> str:
        return self.dumps()


def _as_nat(e) -> int:
    if isinstance(e, bool) or not isinstance(e, int):
        raise ValueError(f"generator entry must be a natural or 'inf', got {e!r}")
    if e < 0:
        raise ValueError(f"negative generator entry {e}")
    return e


def downward_closure(S: Iterable[Sequence[int]], d: int) -> LowerSet:
    pts = [multi_index(a) for a in S]
    for a in pts:
        if len(a) != d:
            raise DimensionError(f"{a} does not have dimension {d}")
    return LowerSet(d, tuple(pts))


def contains(omega: LowerSet, a: Sequence[int]) -> bool:
    if len(a) != omega.d:
        raise DimensionError(f"dimension mismatch: {len(a)} != {omega.d}")
    return any(leq(a, g) for g in omega.generators)


def union(o1: LowerSet, o2: LowerSet) -> LowerSet:
    if o1.d != o2.d:
        raise DimensionError(f"dimension mismatch: {o1.d} != {o2.d}")
    return LowerSet(o1.d, o1.generators + o2.generators)


def slab(k: int, bound: int, d: int) -> LowerSet:
    """Z_k = {b : b_k <= bound}; the axis k is 1-based."""
    if not 1 <= k <= d:
        raise ValueError(f"invalid axis {k} for dimension {d}")
    if bound == INF or bound < 0:
        raise ValueError("slab bound must be a finite natural")
    gen = tuple(int(bound) if i == k - 1 else INF for i in range(d))
    return LowerSet(d, (gen,))


def enveloping_slabs(omega: LowerSet, a: Sequence[int]) -> LowerSet:
    """The union of slabs {b : b_k < a_k}, which holds omega but misses a."""
    a = multi_index(a)
    if contains(omega, a):
        raise ValueError(f"{a} lies in the lower set; no enveloping slabs exist")
    out = LowerSet.empty(omega.d)
    for k, ak in enumerate(a, start=1):
        if ak >= 1:
            out = union(out, slab(k, ak - 1, omega.d))
    return out


def truncate(omega: LowerSet, D: int) -> list:
    """Members of omega with total degree <= D, in enumeration order."""
    if D < 0:
        raise ValueError("degree bound must be >= 0")
    if omega.is_empty():
        return []
    return [b for b in simplex(omega.d, D) if contains(omega, b)]


def minimal_outside(omega: LowerSet) -> list:
    """Minimal elements of the complement N^d minus omega (finite by Dickson's lemma).

    Each minimal element m is either 0 or m - e_k lies in omega for every k
    with m_k > 0.  Its coordinates are therefore bounded by the finite
    generator entries plus one, which gives a finite search box.
    """
    d = omega.d
    if omega.is_empty():
        return [(0,) * d]
    caps = []
    for k in range(d):
        finite = [g[k] for g in omega.generators if g[k] != INF]
        caps.append(max(finite) + 1 if finite else 0)
    candidates = [m for m in box(caps) if not contains(omega, m)]
    minimal = [
        m
        for m in candidates
        if all(
            m[k] == 0 or contains(omega, m[:k] + (m[k] - 1,) + m[k + 1:]) for k in range(d)
        )
    ]
    return sorted(minimal, key=enumeration_key)
