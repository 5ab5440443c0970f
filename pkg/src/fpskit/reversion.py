"""Stepwise truncated powers of a series and the reversion they generate.

Starting from a series s with invertible constant term, the ladder keeps the
polynomials obtained by multiplying by s and truncating one degree further at
each step.  Reading the top coefficients backwards produces the mirror
polynomials, whose constant terms assemble into the unique series q(t) with
q = t*s(q) -- the compositional inverse of x/s(x).  The module also carries
the classical coefficient formula for powers of q, the identity linking both
computations, the full two-variable generating function of the mirrors, and
the interpolation of composition iterates f, f(f), ... through a continuous
exponent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    BadRange,
    BadValuation,
    IndexOutOfRange,
    InsufficientPrecision,
    NonInvertibleConstantTerm,
    NotTangentToIdentity,
)
from .rings import Matrix, MultiPoly
from .series import TruncatedSeries, _mul_trunc


@dataclass(frozen=True)
class TruncationLadder:
    """Polynomials partials[n] of degree <= n-1 and their mirrors (1-based)."""

    source: TruncatedSeries
    partials: tuple[tuple, ...]
    mirrors: tuple[tuple, ...]

    @property
    def n_max(self) -> int:
        return len(self.partials)

    def partial(self, n: int) -> tuple:
        if not 1 <= n <= self.n_max:
            raise IndexOutOfRange(f"ladder holds steps 1..{self.n_max}")
        return self.partials[n - 1]

    def mirror(self, n: int) -> tuple:
        if not 1 <= n <= self.n_max:
            raise IndexOutOfRange(f"ladder holds steps 1..{self.n_max}")
        return self.mirrors[n - 1]

    def mirror_constant(self, n: int):
        """Constant term of the n-th mirror = top coefficient of partial n."""
        return self.mirror(n)[0]


def build_ladder(s: TruncatedSeries, n_max: int) -> TruncationLadder:
    """Run the truncated-product recursion up to step n_max."""
    if n_max < 1:
        raise BadRange("n_max must be at least 1")
    if s.order < n_max:
        raise InsufficientPrecision(
            f"need {n_max} coefficients of s, only {s.order} known"
        )
    if not s.coeffs[0]:
        raise NonInvertibleConstantTerm("constant term of s must be nonzero")
    partials = [(s.coeffs[0],)]
    for k in range(2, n_max + 1):
        prev = partials[-1]
        partials.append(tuple(_mul_trunc(prev, s.coeffs, k)))
    mirrors = [tuple(reversed(p)) for p in partials]
    return TruncationLadder(source=s, partials=tuple(partials), mirrors=tuple(mirrors))


def fixed_point_series(ladder: TruncationLadder, check: bool = True) -> TruncatedSeries:
    """The series q(t) of mirror constant terms, with q = t*s(q) verified."""
    n = ladder.n_max
    zero = ladder.source.coeffs[0] * 0
    q = TruncatedSeries([zero] + [ladder.mirror_constant(m) for m in range(1, n + 1)])
    if check:
        rhs = ladder.source.compose(q.truncate(n)).shift_up(1)
        if q != rhs:
            raise AssertionError("ladder series fails q = t*s(q)")
    return q


def reversion_coefficient(s: TruncatedSeries, n: int, k: int):
    """Coefficient of t^n in q^{k+1}: (k+1)/n times [x^{n-k-1}] of s^n."""
    if not 0 <= k < n:
        raise IndexOutOfRange("need 0 <= k < n")
    if n > s.order:
        raise InsufficientPrecision(f"need s to order {n}, have {s.order}")
    target = n - k - 1
    power = [s.coeffs[0] * 0 + 1]
    for _ in range(n):
        power = _mul_trunc(power, s.coeffs[: target + 1], target + 1)
    return power[target] * Fraction(k + 1, n)


def reversion_identity_sides(p: TruncatedSeries, n: int, k: int):
    """Both sides of n*[x^n](q^k) = k*[x^{n-k}]((x/p)^n), computed independently.

    The left side reverts p (Newton) and raises the result to the k-th power;
    the right side never reverts: it expands powers of x/p directly.
    """
    if p.order < n + 1:
        raise InsufficientPrecision(f"need p to order {n + 1}, have {p.order}")
    if k < 0 or n < k:
        raise IndexOutOfRange("need 0 <= k <= n")
    q = p.revert()
    lhs = n * q.int_pow(k).coeff(n)
    if k == 0:
        return lhs, lhs * 0  # the right side carries an explicit factor k
    ratio = p.shift_down(1).invert()  # x/p as a genuine power series
    rhs = k * ratio.int_pow(n).coeff(n - k)
    return lhs, rhs


def mirror_as_poly(ladder: TruncationLadder, n: int, var: str = "x") -> MultiPoly:
    poly = MultiPoly.constant(0)
    x = MultiPoly.variable(var)
    for j, c in enumerate(ladder.mirror(n)):
        if c:
            poly = poly + MultiPoly.coerce(c) * x**j
    return poly


def ladder_generating_sides(
    ladder: TruncationLadder, var: str = "x"
) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Sum of mirror polynomials against t^n, and q/(1 - x*q), as t-series.

    Both sides live over polynomials in `var`; their equality is the
    two-variable generating identity for the mirror family.
    """
    n = ladder.n_max
    zero = MultiPoly.constant(0)
    lhs = TruncatedSeries([zero] + [mirror_as_poly(ladder, m, var) for m in range(1, n + 1)])
    q = fixed_point_series(ladder, check=False).map_coefficients(MultiPoly.coerce)
    x = MultiPoly.variable(var)
    rhs = TruncatedSeries([zero] * (n + 1))
    q_power = q
    for k in range(n):
        rhs = rhs + q_power * x**k
        if k != n - 1:
            q_power = q_power * q
    return lhs, rhs


def exp_ladder_identity(n: int, k: int) -> bool:
    """Exact check of the power-sum identity the exponential ladder satisfies."""
    if not n > k > 1:
        raise BadRange("identity requires n > k > 1")
    lhs = Fraction(k + 1) * (n - k) * Fraction(n) ** (n - 2 - k)
    rhs = Fraction(0)
    for m in range(k, n):
        rhs += (
            comb(n - k, n - m)
            * Fraction(m) ** (m - 1 - k)
            * Fraction(n - m) ** (n - m - 1)
        )
    rhs *= k
    return lhs == rhs


def _lagrange_basis(nodes: list[int]) -> list[list[Fraction]]:
    """Coefficient lists of the Lagrange basis polynomials on integer nodes."""
    basis = []
    for m, node_m in enumerate(nodes):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j, node_j in enumerate(nodes):
            if j == m:
                continue
            # multiply num by (x - node_j)
            num = [Fraction(0)] + num
            shifted = [c * (-node_j) for c in num[1:]] + [Fraction(0)]
            num = [a + b for a, b in zip(num, shifted)]
            denom *= node_m - node_j
        basis.append([c / denom for c in num])
    return basis


def iterate_interpolation(f: TruncatedSeries, n_max: int) -> list[tuple]:
    """Polynomials C_n(x) with C_n(m) = [t^n] of the m-fold iterate of f.

    f must be tangent to the identity (f = t + higher order).  C_n has degree
    at most n-1 and is produced by exact Lagrange interpolation on the nodes
    x = 0..n-1; the degree bound makes those nodes sufficient.  Entry n-1 of
    the returned list is the coefficient tuple of C_n in ascending powers.
    """
    if f.coeffs[0] or f.coeffs[1] != 1:
        raise NotTangentToIdentity("need f = t + higher-order terms")
    if f.order < n_max + 1:
        raise InsufficientPrecision(f"need f to order {n_max + 1}, have {f.order}")
    iterates = [TruncatedSeries.identity(f.order)]
    for _ in range(n_max - 1):
        iterates.append(f.compose(iterates[-1]))
    polys = []
    for n in range(1, n_max + 1):
        nodes = list(range(n))
        values = [iterates[m].coeff(n) for m in nodes]
        basis = _lagrange_basis(nodes)
        coeffs = [values[0] * 0 for _ in range(n)]
        for value, base in zip(values, basis):
            for i, b in enumerate(base):
                if b:
                    coeffs[i] = coeffs[i] + value * b
        polys.append(tuple(coeffs))
    return polys


def evaluate_poly(coeffs, point):
    """Horner evaluation of a coefficient tuple at an exact point."""
    total = coeffs[-1] * 0
    for c in reversed(coeffs):
        total = total * point + c
    return total


def composition_matrix(f: TruncatedSeries, size: int) -> Matrix:
    """Upper-triangular matrix whose row k lists the coefficients of f^k.

    Entry (k, j) is [x^{j+1}] of f**(k+1) (plain power, not iterate).  With
    f o g meaning f(g(x)), the map is multiplicative in the same order:
    M(f o g) = M(f) * M(g); series coefficient rows act on the right.
    """
    if f.coeffs[0] or not f.coeffs[1]:
        raise BadValuation("composition matrix needs valuation exactly 1")
    if f.order < size + 1:
        raise InsufficientPrecision(f"need f to order {size + 1}, have {f.order}")
    rows = []
    power = TruncatedSeries.constant(1, f.order)
    for _ in range(size):
        power = power * f
        rows.append([power.coeff(j) for j in range(1, size + 1)])
    return Matrix.from_rows(rows)


def matrix_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.rows:
        raise BadRange("inner dimensions differ")
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = a.entry(i, 0) * b.entry(0, j)
            for t in range(1, a.cols):
                acc = acc + a.entry(i, t) * b.entry(t, j)
            row.append(acc)
        rows.append(row)
    return Matrix.from_rows(rows)
