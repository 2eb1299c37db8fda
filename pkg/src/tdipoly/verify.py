"""Seeded equivalence suites: formula route vs. sampling oracle, and operator identities."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .harness import TAG_POINTS, TrialConfig, oracle_sigma, oracle_tau, oracle_tausigma, random_point, random_polynomial
from .multiindex import factorial, simplex
from .operators import difference, taylor_expansion, translate
from .polynomial import Polynomial, format_poly, monomial, total_degree
from .rng import SplitMix64, derive_seed
from .spaces import lowerset_span, sigma_orbit, tau_orbit, tausigma_orbit

SUITES = ("lemma2", "lemma3", "corollary6", "taylor", "delta")


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{self.name}: {self.passed}/{self.total} {status}"


def trial_config(seed: int, i: int, trials: int, d: Optional[int], deg: int, height: int) -> TrialConfig:
    """Config of trial i; per-trial seeds are seed + i and d cycles 1..3 when unset."""
    return TrialConfig(seed + i, trials, d if d is not None else 1 + i % 3, deg, height)


def check_translation_orbit(p: Polynomial, cfg: TrialConfig) -> bool:
    return tau_orbit(p) == oracle_tau(p, cfg)


def check_dilation_orbit(p: Polynomial, cfg: TrialConfig) -> bool:
    formula = sigma_orbit(p)
    return formula == oracle_sigma(p, cfg) and formula.dim == len(p.terms)


def check_tdi_orbit(p: Polynomial, cfg: TrialConfig) -> bool:
    deg = total_degree(p) or 0
    return lowerset_span(tausigma_orbit(p), deg) == oracle_tausigma(p, cfg)


def check_taylor(p: Polynomial, cfg: TrialConfig) -> bool:
    rng = SplitMix64(derive_seed(cfg.seed, TAG_POINTS))
    y = random_point(rng, p.d, cfg.coefficient_height)
    return translate(p, y) == taylor_expansion(p, y)


def check_delta(p: Polynomial, cfg: TrialConfig) -> bool:
    rng = SplitMix64(derive_seed(cfg.seed, TAG_POINTS))
    small = list(simplex(p.d, 3))
    a = small[rng.randbelow(len(small))]
    b = small[rng.randbelow(len(small))]
    ab = tuple(x + y for x, y in zip(a, b))
    composed = difference(difference(p, a), b) == difference(p, ab)
    commute = difference(difference(p, b), a) == difference(difference(p, a), b)
    on_monomial = difference(monomial(a), a) == Polynomial.constant(factorial(a), p.d)
    return composed and commute and on_monomial


CHECKS: dict[str, Callable[[Polynomial, TrialConfig], bool]] = {
    "lemma2": check_translation_orbit,
    "lemma3": check_dilation_orbit,
    "corollary6": check_tdi_orbit,
    "taylor": check_taylor,
    "delta": check_delta,
}


def run_suite(
    name: str,
    seed: int,
    trials: int,
    d: Optional[int] = None,
    deg: int = 4,
    height: int = 9,
    count: Optional[int] = None,
) -> SuiteResult:
    """Run `count` (default `trials`) random cases; `trials` is also the oracle batch size."""
    check = CHECKS[name]
    result = SuiteResult(name)
    for i in range(trials if count is None else count):
        cfg = trial_config(seed, i, trials, d, deg, height)
        p = random_polynomial(cfg)
        result.total += 1
        if check(p, cfg):
            result.passed += 1
        else:
            result.failures.append((cfg.seed, format_poly(p)))
    return result


def report(results: list[SuiteResult], header: str) -> str:
    lines = [header]
    for r in results:
        lines.append(r.line())
        for seed, p in r.failures:
            lines.append(f"  failed seed={seed} p={p}")
    total = sum(r.total for r in results)
    passed = sum(r.passed for r in results)
    lines.append(f"total: {passed}/{total}")
    return "\n".join(lines) + "\n"
