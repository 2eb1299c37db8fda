"""Sampling oracles for the orbit formulas and the pointwise-closure demonstrator.

The oracles never look at derivatives or supports: they span actual
translates and dilates at pseudo-random rational points until the span stops
growing.  They are therefore an independent route to the same spaces that
:mod:`tdipoly.spaces` computes by formula.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .multiindex import DimensionError, LowerSet, enveloping_slabs, simplex, truncate
from .operators import difference, dilate, translate
from .polynomial import (
    Polynomial,
    as_fraction,
    evaluate,
    fit_from_values,
    format_poly,
    parse,
    point,
)
from .rng import SplitMix64, derive_seed
from .spaces import Membership, PolySpace, SpanBuilder, lowerset_member

TAG_TAU, TAG_SIGMA, TAG_TAUSIGMA, TAG_POINTS = 1, 2, 3, 4


@dataclass(frozen=True)
class TrialConfig:
    seed: int
    trials: int
    d: int
    degree_bound: int
    coefficient_height: int = 9

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.degree_bound < 0:
            raise ValueError("degree_bound must be >= 0")
        if self.coefficient_height < 1:
            raise ValueError("coefficient_height must be >= 1")
        if self.d < 1:
            raise ValueError("d must be >= 1")


def random_point(rng: SplitMix64, d: int, height: int) -> tuple:
    return tuple(rng.rational(height) for _ in range(d))


def random_polynomial(cfg: TrialConfig, omega: Optional[LowerSet] = None) -> Polynomial:
    """Support drawn from the allowed indices up to degree_bound, nonzero rational coefficients."""
    if omega is None:
        candidates = list(simplex(cfg.d, cfg.degree_bound))
    else:
        if omega.d != cfg.d:
            raise DimensionError(f"dimension mismatch: {omega.d} != {cfg.d}")
        candidates = truncate(omega, cfg.degree_bound)
    if not candidates:
        return Polynomial.zero(cfg.d)
    rng = SplitMix64(cfg.seed)
    n = rng.randint(1, len(candidates))
    chosen = rng.sample(candidates, n)
    return Polynomial(cfg.d, {a: rng.rational(cfg.coefficient_height) for a in chosen})


def _stabilized(builder: SpanBuilder, batch) -> PolySpace:
    """Call batch(k) for k = 0, 1, ... until two batches in a row add nothing."""
    idle, k = 0, 0
    while idle < 2:
        grew = batch(k)
        idle = 0 if grew else idle + 1
        k += 1
    return builder.freeze()


def _orbit_oracle(p: Polynomial, cfg: TrialConfig, tag: int, move) -> PolySpace:
    builder = SpanBuilder(p.d)
    if p.is_zero():
        return builder.freeze()

    def batch(k: int) -> bool:
        rng = SplitMix64(derive_seed(cfg.seed, tag, k))
        grew = False
        for _ in range(cfg.trials):
            y = random_point(rng, p.d, cfg.coefficient_height)
            grew |= builder.add(move(p, y))
        return grew

    return _stabilized(builder, batch)


def oracle_tau(p: Polynomial, cfg: TrialConfig) -> PolySpace:
    """Span of translates of p at random points, grown until stable."""
    return _orbit_oracle(p, cfg, TAG_TAU, translate)


def oracle_sigma(p: Polynomial, cfg: TrialConfig) -> PolySpace:
    """Span of dilates of p at random points, grown until stable."""
    return _orbit_oracle(p, cfg, TAG_SIGMA, dilate)


def oracle_tausigma(p: Polynomial, cfg: TrialConfig) -> PolySpace:
    """Least space holding p and closed under sampled translations and dilations.

    Each round moves every current basis row (cycling so that at least
    `trials` translates and `trials` dilates are drawn) and stops after two
    rounds that add nothing.
    """
    builder = SpanBuilder(p.d)
    if p.is_zero():
        return builder.freeze()
    builder.add(p)

    def batch(k: int) -> bool:
        rng = SplitMix64(derive_seed(cfg.seed, TAG_TAUSIGMA, k))
        basis = builder.basis()
        grew = False
        for j in range(max(cfg.trials, len(basis))):
            b = basis[j % len(basis)]
            grew |= builder.add(translate(b, random_point(rng, p.d, cfg.coefficient_height)))
            grew |= builder.add(dilate(b, random_point(rng, p.d, cfg.coefficient_height)))
        return grew

    return _stabilized(builder, batch)


@dataclass(frozen=True)
class DeltaReport:
    result: Polynomial
    divisible_by: tuple  # per axis: is the result divisible by x_k


def delta_power(p: Polynomial, N: Sequence[int]) -> DeltaReport:
    r = difference(p, N)
    div = tuple(all(a[k] >= 1 for a in r.terms) for k in range(p.d))
    return DeltaReport(r, div)


class SequenceNotInSpace(ValueError):
    def __init__(self, index: int, witness: tuple):
        self.index = index
        self.witness = witness
        super().__init__(f"sequence element {index} has the monomial {witness} outside the lower set")


class ConvergenceCheckFailed(ValueError):
    """The last sequence element is not within tolerance of the limit on the grid."""


@dataclass(frozen=True)
class Verdict:
    member: bool
    witness: Optional[tuple] = None
    enveloping: Optional[LowerSet] = None
    notes: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "member": self.member,
            "witness": list(self.witness) if self.witness is not None else None,
            "enveloping": self.enveloping.to_json() if self.enveloping is not None else None,
            "notes": self.notes,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def check_closure(
    omega: LowerSet,
    sequence: Sequence[Polynomial],
    limit: Polynomial,
    grid: Sequence,
    tolerance,
) -> Verdict:
    """Grid-level check that a sequence in the monomial span over omega and its limit behave.

    Convergence is only examined on the finite grid, so this demonstrates the
    closure statement on given data; it cannot certify pointwise convergence
    on all of R^d.
    """
    tolerance = as_fraction(tolerance)
    grid = [point(x) for x in grid]
    if not grid:
        raise ValueError("grid must not be empty")
    if len(set(grid)) != len(grid):
        raise ValueError("grid points must be pairwise distinct")
    if not sequence:
        raise ValueError("sequence must not be empty")
    for x in grid:
        if len(x) != omega.d:
            raise DimensionError(f"grid point {x} does not have dimension {omega.d}")
    if limit.d != omega.d:
        raise DimensionError(f"dimension mismatch: {limit.d} != {omega.d}")
    for i, p in enumerate(sequence):
        if p.d != omega.d:
            raise DimensionError(f"sequence element {i} has dimension {p.d}, expected {omega.d}")
        m = lowerset_member(p, omega)
        if not m.member:
            raise SequenceNotInSpace(i, m.witness)

    targets = [evaluate(limit, x) for x in grid]
    residuals = [max(abs(evaluate(p, x) - t) for x, t in zip(grid, targets)) for p in sequence]
    notes = {"residuals": [str(r) for r in residuals], "tolerance": str(tolerance)}
    if residuals[-1] > tolerance:
        raise ConvergenceCheckFailed(
            f"last residual {residuals[-1]} exceeds tolerance {tolerance} on the grid"
        )

    m: Membership = lowerset_member(limit, omega)
    if m.member:
        return Verdict(True, notes=notes)
    return Verdict(False, m.witness, enveloping_slabs(omega, m.witness), notes)


def verdict_consistent(omega: LowerSet, verdict: Verdict, degree: int = 10) -> bool:
    """omega inside the enveloping slabs (on a degree truncation) and witness outside them."""
    if verdict.member:
        return verdict.witness is None and verdict.enveloping is None
    env = verdict.enveloping
    inside = set(truncate(omega, degree)) <= set(truncate(env, degree))
    return inside and verdict.witness not in env and verdict.witness not in omega


def limit_fit(value_table: Sequence, omega: LowerSet, D: int) -> Polynomial:
    """Recover a degree <= D polynomial supported in omega from (point, value) pairs."""
    allowed = truncate(omega, D)
    points = [point(x) for x, _ in value_table]
    values = [as_fraction(v) for _, v in value_table]
    if len(points) < len(allowed):
        raise ValueError(f"need at least {len(allowed)} values, got {len(points)}")
    if not points:
        return Polynomial.zero(omega.d)
    return fit_from_values(points, values, allowed)


# --- scenario files -----------------------------------------------------------


@dataclass(frozen=True)
class Scenario:
    omega: LowerSet
    sequence: tuple
    limit: Polynomial
    grid: tuple
    tolerance: Fraction

    def run(self) -> Verdict:
        return check_closure(self.omega, self.sequence, self.limit, self.grid, self.tolerance)


def load_scenario(text: str) -> Scenario:
    data = json.loads(text)
    try:
        omega = LowerSet.from_json(data["omega"])
        d = omega.d
        sequence = tuple(parse(s, d) for s in data["sequence"])
        limit = parse(data["limit"], d)
        grid = tuple(point(_rational(c) for c in x) for x in data["grid"])
        tolerance = _rational(data["tolerance"])
    except KeyError as exc:
        raise ValueError(f"scenario is missing field {exc}") from exc
    return Scenario(omega, sequence, limit, grid, tolerance)


def _rational(v) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float):
        raise ValueError(f"expected an integer or rational string, got {v!r}")
    return Fraction(v)


def dump_scenario(s: Scenario) -> str:
    return json.dumps(
        {
            "omega": s.omega.to_json(),
            "sequence": [format_poly(p) for p in s.sequence],
            "limit": format_poly(s.limit),
            "grid": [[str(c) for c in x] for x in s.grid],
            "tolerance": str(s.tolerance),
        },
        indent=2,
    )

