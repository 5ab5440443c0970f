"""Shared helpers for the test suite: seeded generators and slow oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from fpskit.rings import Matrix
from fpskit.series import TruncatedSeries


def rand_fraction(rng: random.Random, lo: int = -9, hi: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        value = Fraction(rng.randint(lo, hi), rng.randint(1, 9))
        if value or not nonzero:
            return value


def rand_series(
    rng: random.Random,
    order: int,
    nonzero_c0: bool = False,
    valuation_one: bool = False,
    unit_c0: bool = False,
) -> TruncatedSeries:
    coeffs = [rand_fraction(rng) for _ in range(order)]
    if nonzero_c0 and not coeffs[0]:
        coeffs[0] = Fraction(rng.randint(1, 9))
    if unit_c0:
        coeffs[0] = Fraction(1)
    if valuation_one:
        coeffs[0] = Fraction(0)
        if not coeffs[1]:
            coeffs[1] = Fraction(rng.randint(1, 5))
    return TruncatedSeries(coeffs)


def cofactor_det(matrix: Matrix):
    """Independent determinant oracle: recursive cofactor expansion."""
    n = matrix.rows
    assert n == matrix.cols
    rows = matrix.to_rows()

    def expand(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = rows[0][0] * 0
        for j, head in enumerate(rows[0]):
            if not head:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = head * expand(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return expand(rows)
