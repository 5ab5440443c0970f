"""Sequence transforms, Hankel determinants, and Jacobi continued fractions.

The inverse transform sends a(t) to a/(1 + t*a); its integer iterates
interpolate to a polynomial family in a continuous exponent x, computed here
symbolically.  Hankel matrices of (shifted) sequences feed exact determinant
transforms, the Dodgson condensation recurrence, and the continued-fraction
expansion whose levels carry the level/descent weights of Motzkin paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import (
    BadRange,
    InsufficientDepth,
    InsufficientSequence,
    SingularExpansion,
    ZeroConstantTerm,
    ZeroPivot,
)
from .rings import Matrix, MultiPoly, det, format_rational
from .series import TruncatedSeries


# -- inverse and binomial transforms ------------------------------------------


def inverse_transform(a: TruncatedSeries) -> TruncatedSeries:
    """a / (1 + t*a); the defining identity (1+ta)(1 - t*I[a]) = 1."""
    denom = a.shift_up(1) + TruncatedSeries.constant(1, a.order + 1)
    return a * denom.invert()


def inverse_transform_iterates(a: TruncatedSeries, m: int) -> TruncatedSeries:
    """m-fold application of the inverse transform (m >= 0)."""
    if m < 0:
        raise BadRange("iterate count must be nonnegative")
    out = a
    for _ in range(m):
        out = inverse_transform(out)
    return out


def inverse_transform_symbolic(a: TruncatedSeries, var: str = "x") -> TruncatedSeries:
    """a / (1 + x*t*a) over polynomials in `var`: coefficient k has degree <= k.

    Specializing the variable to an integer m reproduces the m-fold iterate.
    """
    x = MultiPoly.variable(var)
    lifted = a.map_coefficients(MultiPoly.coerce)
    denom = lifted.shift_up(1) * x + TruncatedSeries.constant(
        MultiPoly.constant(1), a.order + 1
    )
    return lifted * denom.invert()


def binomial_transform(seq, x) -> list:
    """b_k = sum of C(k,n) * a_n * x^(k-n); x = 0 is the identity."""
    x = Fraction(x) if not isinstance(x, MultiPoly) else x
    out = []
    for k in range(len(seq)):
        acc = seq[0] * 0
        for n in range(k + 1):
            term = comb(k, n) * seq[n]
            if k - n:
                term = term * x ** (k - n)
            acc = acc + term
        out.append(acc)
    return out


def binomial_transform_series(a: TruncatedSeries, x) -> TruncatedSeries:
    """Same transform through the generating function (1-xt)^-1 * a(t/(1-xt))."""
    order = a.order
    geom = TruncatedSeries([Fraction(x) ** n for n in range(order)])
    inner = geom.shift_up(1).truncate(order)  # t/(1-xt)
    return a.compose(inner) * geom


# -- Hankel machinery -----------------------------------------------------------


@dataclass(frozen=True)
class HankelSpec:
    """An n x n Hankel matrix over seq shifted by k: entry (i,j) = seq[i+j+k]."""

    seq: tuple
    shift: int
    size: int

    def __post_init__(self):
        if self.size < 1 or self.shift < 0:
            raise BadRange("need size >= 1 and shift >= 0")
        needed = 2 * self.size - 2 + self.shift
        if needed >= len(self.seq):
            raise InsufficientSequence(
                f"need sequence entries up to index {needed}, have {len(self.seq)}"
            )
        object.__setattr__(self, "seq", tuple(self.seq))

    def matrix(self) -> Matrix:
        return Matrix.from_rows(
            [
                [self.seq[i + j + self.shift] for j in range(self.size)]
                for i in range(self.size)
            ]
        )


def hankel_det(seq, shift: int, size: int):
    return det(HankelSpec(tuple(seq), shift, size).matrix())


def hankel_transform(seq, shift: int, n_max: int) -> list:
    """Determinants of the shifted Hankel matrices of sizes 1..n_max."""
    return [hankel_det(seq, shift, n) for n in range(1, n_max + 1)]


def hankel_minor_det(seq, rows, cols):
    """Minor with row indices `rows` and column indices `cols` of (seq[i+j])."""
    if len(rows) != len(cols):
        raise BadRange("minor needs as many rows as columns")
    top = max(rows) + max(cols)
    if top >= len(seq):
        raise InsufficientSequence(f"need sequence entries up to index {top}")
    return det(Matrix.from_rows([[seq[i + j] for j in cols] for i in rows]))


def dodgson_violations(seq, k_max: int, n_max: int) -> list:
    """All (k, n) in range where the condensation identity fails (d_{k,0} = 1).

    Checks d_{k-1,n+1} * d_{k+1,n-1} = d_{k-1,n} * d_{k+1,n} - d_{k,n}^2 for
    1 <= k <= k_max, 1 <= n <= n_max, whenever the sequence is long enough.
    """
    one = seq[0] * 0 + 1

    def d(k, n):
        return one if n == 0 else hankel_det(seq, k, n)

    bad = []
    for k in range(1, k_max + 1):
        for n in range(1, n_max + 1):
            if 2 * (n + 1) - 2 + (k - 1) >= len(seq):
                continue
            lhs = d(k - 1, n + 1) * d(k + 1, n - 1)
            rhs = d(k - 1, n) * d(k + 1, n) - d(k, n) * d(k, n)
            if lhs != rhs:
                bad.append((k, n))
    return bad


def dodgson_check(seq, k_max: int, n_max: int) -> bool:
    return not dodgson_violations(seq, k_max, n_max)


def hankel_transform_condensed(seq, n_max: int) -> list:
    """Unshifted Hankel transform via the condensation recurrence.

    Builds d_{k,n} from the seeds d_{k,0} = 1, d_{k,1} = seq[k]; raises
    ZeroPivot when an interior determinant vanishes, in which case callers
    fall back to direct determinants (the source of truth either way).
    """
    if n_max < 1:
        raise BadRange("n_max must be at least 1")
    if 2 * n_max - 2 >= len(seq):
        raise InsufficientSequence(f"need {2 * n_max - 1} entries, have {len(seq)}")
    one = seq[0] * 0 + 1
    table = {(k, 0): one for k in range(2 * n_max - 1)}
    for k in range(2 * n_max - 1):
        table[(k, 1)] = seq[k]
    for n in range(1, n_max):
        for k in range(2 * (n_max - n) - 1):
            pivot = table[(k + 2, n - 1)]
            if not pivot:
                raise ZeroPivot(f"vanishing interior determinant at k={k + 2}, n={n - 1}")
            value = table[(k, n)] * table[(k + 2, n)] - table[(k + 1, n)] ** 2
            if isinstance(value, MultiPoly):
                table[(k, n + 1)] = value.exact_div(pivot)
            else:
                table[(k, n + 1)] = value / pivot
    return [table[(0, n)] for n in range(1, n_max + 1)]


# -- Jacobi continued fractions ---------------------------------------------------


@dataclass(frozen=True)
class JFraction:
    """Finite continued fraction d0 / (1 - p0*u - q0*u^2 / (1 - p1*u - ...)).

    p has entries 0..depth, q entries 0..depth-1; the contraction agrees with
    its source series through coefficient u^(2*depth+1).
    """

    d0: object
    p: tuple
    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(self.p))
        object.__setattr__(self, "q", tuple(self.q))
        if len(self.p) != len(self.q) + 1:
            raise BadRange("need exactly one more level weight than descent weight")

    @property
    def depth(self) -> int:
        return len(self.q)

    def to_json_obj(self) -> dict:
        def enc(v):
            return v.to_json_obj() if isinstance(v, MultiPoly) else format_rational(v)

        return {
            "d0": enc(self.d0),
            "p": [enc(v) for v in self.p],
            "q": [enc(v) for v in self.q],
        }


def jfraction_expand(d: TruncatedSeries, depth: int) -> JFraction:
    """Peel the continued-fraction weights of d(u) down to the given depth.

    Each level consumes two orders of precision, so d must be known to order
    2*depth + 2.  A vanishing descent weight before the last level means the
    sequence is not generic and raises SingularExpansion.
    """
    if depth < 0:
        raise BadRange("depth must be nonnegative")
    if d.order < 2 * depth + 2:
        raise InsufficientDepth(
            f"need order {2 * depth + 2} to expand to depth {depth}, have {d.order}"
        )
    d0 = d.coeffs[0]
    if not d0:
        raise ZeroConstantTerm("series needs a nonzero constant term")
    current = d * _ring_reciprocal(d0)
    p_list = []
    q_list = []
    for level in range(depth + 1):
        # current has constant term 1; 1 - 1/current = p*u + q*u^2*(next tail)
        r = TruncatedSeries.constant(1, current.order) - current.invert()
        p_list.append(r.coeff(1))
        if level == depth:
            break
        q_h = r.coeff(2)
        if not q_h:
            raise SingularExpansion(f"descent weight at level {level} vanishes")
        q_list.append(q_h)
        current = TruncatedSeries(r.coeffs[2:]) * _ring_reciprocal(q_h)
    return JFraction(d0=d0, p=tuple(p_list), q=tuple(q_list))


def _ring_reciprocal(value):
    if isinstance(value, MultiPoly):
        return MultiPoly.constant(Fraction(1) / value.constant_value())
    return Fraction(1) / Fraction(value)


def jfraction_contract(jf: JFraction, order: int) -> TruncatedSeries:
    """Evaluate the finite continued fraction bottom-up as a series in u.

    Valid through order 2*depth + 2; beyond that the truncation of the
    fraction would start to disagree with any series it was peeled from.
    """
    if order < 1:
        raise BadRange("order must be at least 1")
    if order > 2 * jf.depth + 2:
        raise InsufficientDepth(
            f"depth {jf.depth} pins coefficients only up to u^{2 * jf.depth + 1}"
        )
    one = MultiPoly.constant(1) if _jf_symbolic(jf) else Fraction(1)
    zero = one * 0
    current = None
    for level in range(jf.depth, -1, -1):
        coeffs = [one] + [zero] * (order - 1)
        if order >= 2:
            coeffs[1] = zero - jf.p[level]
        denom = TruncatedSeries(coeffs)
        if current is not None:
            correction = (current * jf.q[level]).shift_up(2).truncate(order)
            denom = denom - correction
        current = denom.invert()
    return current * jf.d0


def _jf_symbolic(jf: JFraction) -> bool:
    return (
        isinstance(jf.d0, MultiPoly)
        or any(isinstance(v, MultiPoly) for v in jf.p)
        or any(isinstance(v, MultiPoly) for v in jf.q)
    )


def principal_minor_product(jf: JFraction, k: int):
    """Closed form of the (k+1) x (k+1) leading Hankel minor of the contraction.

    d0^(k+1) * q0^k * q1^(k-1) * ... * q_{k-1}; no level weight appears.
    """
    if k < 0:
        raise BadRange("k must be nonnegative")
    if k > jf.depth:
        raise InsufficientDepth(f"need descent weights up to q_{k - 1}, depth {jf.depth}")
    total = jf.d0 * 0 + 1
    for _ in range(k + 1):
        total = total * jf.d0
    for i in range(k):
        for _ in range(k - i):
            total = total * jf.q[i]
    return total


# -- determinant bounds for the symbolic iterate ----------------------------------


def iterate_hankel_degree(seq, shift: int, size: int, var: str = "x") -> int:
    """Degree in `var` of the shifted Hankel determinant of the symbolic iterate.

    The input sequence must start with a nonzero entry (the generic case);
    the returned degree is bounded by the shift.
    """
    seq = [Fraction(v) for v in seq]
    if not seq or not seq[0]:
        raise BadRange("need a sequence with nonzero leading entry")
    needed = 2 * size - 1 + shift
    if len(seq) < needed:
        raise InsufficientSequence(f"need {needed} entries, have {len(seq)}")
    symbolic = inverse_transform_symbolic(TruncatedSeries(seq), var)
    spec = HankelSpec(tuple(symbolic.coeffs), shift, size)
    value = det(spec.matrix())
    return MultiPoly.coerce(value).degree(var)


def mirror_hankel_s1_independent(n: int) -> bool:
    """Whether the n x n determinant of mirror polynomials drops the letter s1.

    Builds the ladder of a fully symbolic series s0 + s1 x + ... and takes the
    determinant of the matrix whose (i, j) entry is the mirror polynomial of
    index 1 + i + j, viewed in the ring with the extra variable x.
    """
    from .reversion import build_ladder, mirror_as_poly
    from .series import letter_series

    if n < 1:
        raise BadRange("n must be at least 1")
    top = 2 * n - 1
    s = letter_series(top)
    ladder = build_ladder(s, top)
    entries = {}
    for m in range(1, top + 1):
        entries[m] = mirror_as_poly(ladder, m, "x")
    matrix = Matrix.from_rows(
        [[entries[1 + i + j] for j in range(n)] for i in range(n)]
    )
    value = det(matrix)
    return MultiPoly.coerce(value).derivative("s1").is_zero()
