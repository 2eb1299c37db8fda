"""High-precision orthogonal projection of x^M onto lacunary monomials on a grid.

Independent of tdipoly.muntz: uses mpmath at 120 digits, twice-iterated
modified Gram-Schmidt, and its own prime list.  Run directly to print the
values frozen in test_muntz.py.
"""
import mpmath as mp

PRIMES_UPTO_100 = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                   53, 59, 61, 67, 71, 73, 79, 83, 89, 97]


def exponents(bound):
    ps = [p for p in PRIMES_UPTO_100 if p <= bound]
    return sorted({0} | set(ps) | {2 * p for p in ps if 2 * p <= bound})


def projection_residual(bound, target=8, grid_size=512, dps=120):
    with mp.workdps(dps):
        xs = [mp.mpf(i) / (grid_size - 1) for i in range(grid_size)]
        basis = []
        for e in exponents(bound):
            v = [x**e for x in xs]
            for _ in range(2):
                for q in basis:
                    c = mp.fsum(a * b for a, b in zip(v, q))
                    v = [a - c * b for a, b in zip(v, q)]
            n = mp.sqrt(mp.fsum(a * a for a in v))
            basis.append([a / n for a in v])
        r = [x**target for x in xs]
        for q in basis:
            c = mp.fsum(a * b for a, b in zip(r, q))
            r = [a - c * b for a, b in zip(r, q)]
        return float(mp.fsum(a * a for a in r)), float(max(abs(a) for a in r))


if __name__ == "__main__":
    for b in (10, 30, 100):
        print(b, *projection_residual(b))
