import time

import numpy as np
import pytest

from tdipoly.muntz import (
    RankDeficient,
    TargetInSet,
    format_table,
    grid,
    least_squares_fit,
    muntz_exponents,
    run_demo,
)

from oracles.muntz_projection import exponents as oracle_exponents

# from oracles/muntz_projection.py (120-digit Gram-Schmidt), target 8, grid 512
ORACLE = {
    10: (4.1910026020083276e-9, 1.0806477010782648e-5),
    30: (2.2322734448362681e-17, 7.3629408991620057e-10),
    100: (1.0490083746362331e-23, 7.1895631550651247e-13),
}


@pytest.mark.parametrize(
    "bound, expected",
    [(12, [0, 2, 3, 4, 5, 6, 7, 10, 11]), (1, [0]), (4, [0, 2, 3, 4])],
)
def test_exponents(bound, expected):
    assert muntz_exponents(bound) == expected


def test_exponents_agree_with_oracle_list():
    for b in (10, 30, 100):
        assert muntz_exponents(b) == oracle_exponents(b)
    assert len(muntz_exponents(100)) == 41


def test_constant_fit_is_grid_mean():
    rep = least_squares_fit([0], 8, 512)
    assert rep.coefficients[0] == pytest.approx(np.mean(grid(512) ** 8), rel=1e-12)
    assert 0 < rep.sup_grid_error < 1


def test_nesting():
    small = least_squares_fit([0, 2, 3], 8, 200)
    big = least_squares_fit([0, 2, 3, 5, 7], 8, 200)
    assert big.sum_sq_residual <= small.sum_sq_residual


def test_errors():
    with pytest.raises(TargetInSet):
        least_squares_fit([0, 7], 7, 100)
    with pytest.raises(TargetInSet):
        run_demo(7, [10], 512)
    with pytest.raises(RankDeficient):
        least_squares_fit([0, 2, 3], 8, 3)
    with pytest.raises(ValueError):
        run_demo(8, [30, 10], 512)


def test_demo_against_oracle():
    reports = run_demo(8, [10, 30, 100], 512)
    objectives = [r.sum_sq_residual for r in reports]
    assert objectives[0] > objectives[1] > objectives[2]
    assert ORACLE[10][0] > ORACLE[30][0] > ORACLE[100][0]
    for r in reports[:2]:
        assert r.sum_sq_residual == pytest.approx(ORACLE[r.exponent_bound][0], rel=1e-6)
        assert r.sup_grid_error == pytest.approx(ORACLE[r.exponent_bound][1], rel=1e-5)
    # at bound 100 double precision sits above the true objective but below bound 30
    assert objectives[2] < ORACLE[30][0]


def test_residual_orthogonality():
    for r in run_demo(8, [10, 30, 100], 512):
        assert r.max_orthogonality <= 1e-8


def test_fit_reproduces_sup_error():
    rep = least_squares_fit(muntz_exponents(10), 8, 512)
    x = grid(512)
    fitted = sum(c * x**e for c, e in zip(rep.coefficients, rep.exponents))
    assert np.max(np.abs(fitted - x**8)) == pytest.approx(rep.sup_grid_error, rel=1e-6)


def test_deterministic_and_fast():
    t = time.perf_counter()
    a = run_demo(8, [10, 30, 100], 512)
    assert time.perf_counter() - t < 5
    assert a == run_demo(8, [10, 30, 100], 512)


def test_table():
    table = format_table(run_demo(8, [10], 512))
    assert table.splitlines()[0] == "bound | #exponents | sum_sq_residual | sup_grid_error"
    assert table.splitlines()[1] == "10 | 8 | 4.191e-09 | 1.08065e-05"
