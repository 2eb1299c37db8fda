"""Exact linear algebra over the rationals."""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Sequence


class RankDeficient(ValueError):
    pass


class NoSolution(ValueError):
    pass


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row-echelon form and pivot columns.

    The pivot in each column is the first nonzero entry at or below the
    current row, so results do not depend on anything but row order.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(rref(matrix)[1])


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction]:
    """Solve an (over)determined system with full column rank exactly."""
    ncols = len(matrix[0]) if matrix else 0
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    if ncols == 0:
        if any(Fraction(b) for b in rhs):
            raise NoSolution("nonzero values but no admissible monomials")
        return []
    reduced, pivots = rref(aug)
    if ncols in pivots:
        if len(pivots) - 1 < ncols:
            raise RankDeficient(f"column rank {len(pivots) - 1} < {ncols}")
        raise NoSolution("system is inconsistent")
    if len(pivots) < ncols:
        raise RankDeficient(f"column rank {len(pivots)} < {ncols}")
    return [reduced[i][ncols] for i in range(ncols)]


class Echelon:
    """Incrementally maintained reduced echelon basis of sparse vectors.

    Vectors are dicts from column keys to Fractions.  The pivot of a row is
    its largest key under `key`; every row is normalized to 1 at its pivot and
    is zero at all other pivots, so the basis is canonical for its span.
    """

    def __init__(self, key=None):
        self.key = key
        self.rows: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        for piv, row in self.rows.items():
            c = v.get(piv)
            if c:
                for k, x in row.items():
                    s = v.get(k, 0) - c * x
                    if s:
                        v[k] = s
                    else:
                        v.pop(k, None)
        return v

    def insert(self, vec: dict) -> bool:
        """Add vec to the span; returns True iff the dimension grew."""
        r = self.reduce(vec)
        if not r:
            return False
        piv = max(r, key=self.key)
        inv = 1 / r[piv]
        r = {k: x * inv for k, x in r.items()}
        for row in self.rows.values():
            c = row.get(piv)
            if c:
                for k, x in r.items():
                    s = row.get(k, 0) - c * x
                    if s:
                        row[k] = s
                    else:
                        row.pop(k, None)
        self.rows[piv] = r
        return True

    def extend(self, vecs: Iterable[dict]) -> int:
        return sum(self.insert(v) for v in vecs)

    def sorted_rows(self, reverse: bool = True) -> list[tuple[Hashable, dict]]:
        return sorted(self.rows.items(), key=lambda kv: self.key(kv[0]), reverse=reverse)

