"""Truncated formal power series over an exact coefficient ring.

A series holds coefficients c[0..N-1] and is known modulo x^N; N is the
truncation order.  Operations return the order that is provable from their
inputs (min of the operand orders; derivative loses one) and never invent
unknown coefficients.  Coefficients are Fraction or MultiPoly; a series is
normalized so all its coefficients live in the same ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .errors import (
    BadConstantTerm,
    BadRange,
    BadValuation,
    EmptyCoefficients,
    InsufficientPrecision,
    MalformedRational,
    NonInvertibleConstantTerm,
    NonzeroConstantTermInner,
)
from .rings import MultiPoly, format_rational, invert_unit, is_unit, parse_rational


def _normalize(coeffs: Iterable) -> tuple:
    coeffs = list(coeffs)
    if not coeffs:
        raise EmptyCoefficients("a series needs at least one coefficient")
    if any(isinstance(c, MultiPoly) for c in coeffs):
        return tuple(MultiPoly.coerce(c) for c in coeffs)
    return tuple(Fraction(c) for c in coeffs)


# Low-level helpers on plain coefficient lists.  They treat their inputs as
# exact polynomials (zero beyond the stored length), so callers are in charge
# of truncating to a provable order first; series_revert relies on this and
# re-validates its final answer by composition.


def _mul_trunc(a, b, order: int) -> list:
    zero = a[0] * 0
    out = [zero] * order
    for i, ai in enumerate(a):
        if i >= order:
            break
        if not ai:
            continue
        top = min(order - i, len(b))
        for j in range(top):
            if b[j]:
                out[i + j] += ai * b[j]
    return out


def _inv_trunc(a, order: int) -> list:
    lead = invert_unit(a[0])
    out = [lead] + [lead * 0] * (order - 1)
    for n in range(1, order):
        acc = out[0] * 0
        top = min(n, len(a) - 1)
        for j in range(1, top + 1):
            if a[j]:
                acc += a[j] * out[n - j]
        out[n] = -lead * acc
    return out


def _compose_trunc(outer, inner, order: int) -> list:
    zero = outer[0] * 0
    result = [zero] * order
    result[0] = result[0] + outer[-1]
    for k in range(len(outer) - 2, -1, -1):
        result = _mul_trunc(result, inner, order)
        result[0] = result[0] + outer[k]
    return result


class TruncatedSeries:
    """Coefficient vector with its truncation order; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        object.__setattr__(self, "coeffs", _normalize(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def constant(cls, value, order: int) -> TruncatedSeries:
        if order < 1:
            raise BadRange("order must be at least 1")
        return cls([value] + [0] * (order - 1))

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series x (truncated)."""
        if order < 2:
            raise BadRange("identity needs order >= 2")
        return cls([0, 1] + [0] * (order - 2))

    # -- basic queries -------------------------------------------------------

    def coeff(self, n: int):
        if n < 0:
            raise BadRange("negative coefficient index")
        if n >= self.order:
            raise InsufficientPrecision(
                f"coefficient {n} beyond truncation order {self.order}"
            )
        return self.coeffs[n]

    def valuation(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return self.order

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.order != other.order:
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self):
        def show(c):
            return format_rational(c) if isinstance(c, Fraction) else f"({c!r})"

        parts = []
        for i, c in enumerate(self.coeffs):
            if not c and self.order > 1:
                continue
            if i == 0:
                parts.append(show(c))
            elif i == 1:
                parts.append(f"{show(c)}*x")
            else:
                parts.append(f"{show(c)}*x^{i}")
        body = " + ".join(parts) if parts else "0"
        return f"<{body} + O(x^{self.order})>"

    # -- ring operations -----------------------------------------------------

    def _binary(self, other: TruncatedSeries, op: Callable) -> TruncatedSeries:
        order = min(self.order, other.order)
        return TruncatedSeries(
            [op(a, b) for a, b in zip(self.coeffs[:order], other.coeffs[:order])]
        )

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries([c * other for c in self.coeffs])
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return TruncatedSeries(
            _mul_trunc(self.coeffs[:order], other.coeffs[:order], order)
        )

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, MultiPoly)):
            return TruncatedSeries([other * c for c in self.coeffs])
        return NotImplemented

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * other.invert()

    def invert(self) -> TruncatedSeries:
        """1/self; requires an invertible constant term."""
        if not is_unit(self.coeffs[0]):
            raise NonInvertibleConstantTerm(
                "constant term must be a unit to invert a series"
            )
        return TruncatedSeries(_inv_trunc(self.coeffs, self.order))

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """self(inner); inner must have no constant term."""
        if inner.coeffs[0]:
            raise NonzeroConstantTermInner(
                "inner series of a composition needs zero constant term"
            )
        order = min(self.order, inner.order)
        return TruncatedSeries(
            _compose_trunc(self.coeffs[:order], inner.coeffs[:order], order)
        )

    def revert(self) -> TruncatedSeries:
        """Compositional inverse by Newton iteration, precision doubling.

        The result q satisfies self(q) = x modulo x^order; that identity is
        re-checked at full order before returning.
        """
        if self.order < 2 or self.coeffs[0]:
            raise BadValuation("reversion needs valuation exactly 1")
        if not self.coeffs[1]:
            raise BadValuation("reversion needs valuation exactly 1")
        if not is_unit(self.coeffs[1]):
            raise NonInvertibleConstantTerm("linear coefficient must be a unit")
        n = self.order
        p = list(self.coeffs)
        dp = [p[i] * i for i in range(1, len(p))]
        zero = p[0] * 0
        q = [zero, invert_unit(p[1])]
        order = 2
        while order < n:
            order = min(2 * order, n)
            q = q + [zero] * (order - len(q))
            pq = _compose_trunc(p[:order], q, order)
            pq[1] = pq[1] - 1  # p(q) - x
            dpq = _compose_trunc(dp[: max(order - 1, 1)], q, order)
            correction = _mul_trunc(pq, _inv_trunc(dpq, order), order)
            q = [qi - ci for qi, ci in zip(q, correction)]
        result = TruncatedSeries(q)
        check = self.compose(result)
        if any(check.coeffs[i] != (1 if i == 1 else 0) for i in range(n)):
            raise AssertionError("Newton reversion failed its composition check")
        return result

    # -- exp / log / powers ----------------------------------------------------

    def exp(self) -> TruncatedSeries:
        if self.coeffs[0]:
            raise BadConstantTerm("exp needs zero constant term")
        n = self.order
        a = self.coeffs
        out = [a[0] * 0 + 1]
        for m in range(1, n):
            acc = a[0] * 0
            for j in range(1, m + 1):
                if a[j]:
                    acc += (a[j] * j) * out[m - j]
            out.append(acc * Fraction(1, m))
        return TruncatedSeries(out)

    def log(self) -> TruncatedSeries:
        if self.coeffs[0] != 1:
            raise BadConstantTerm("log needs constant term 1")
        if self.order == 1:
            return TruncatedSeries([self.coeffs[0] * 0])
        # log a = integral of a'/a, which keeps the full order.
        quotient = self.derivative() * self.truncate(self.order - 1).invert()
        return quotient.integrate()

    def pow(self, exponent) -> TruncatedSeries:
        """self**exponent for rational exponent; needs constant term 1."""
        if self.coeffs[0] != 1:
            raise BadConstantTerm("rational powers need constant term 1")
        exponent = Fraction(exponent)
        return (self.log() * exponent).exp()

    def int_pow(self, exponent: int) -> TruncatedSeries:
        """Repeated multiplication; no constant-term restriction."""
        if exponent < 0:
            raise BadRange("negative integer power; invert first")
        result = TruncatedSeries.constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    # -- calculus ---------------------------------------------------------------

    def derivative(self) -> TruncatedSeries:
        if self.order < 2:
            raise InsufficientPrecision("derivative of an order-1 series is unknown")
        return TruncatedSeries(
            [self.coeffs[i] * i for i in range(1, self.order)]
        )

    def integrate(self) -> TruncatedSeries:
        out = [self.coeffs[0] * 0]
        for i, c in enumerate(self.coeffs):
            out.append(c * Fraction(1, i + 1))
        return TruncatedSeries(out)

    # -- reshaping ----------------------------------------------------------------

    def truncate(self, k: int) -> TruncatedSeries:
        if k < 1:
            raise BadRange("truncation order must be at least 1")
        if k > self.order:
            raise InsufficientPrecision(
                f"cannot extend a series known mod x^{self.order} to order {k}"
            )
        return TruncatedSeries(self.coeffs[:k])

    def shift_up(self, m: int = 1) -> TruncatedSeries:
        """Multiply by x^m; the order grows by m."""
        if m < 0:
            raise BadRange("shift must be nonnegative")
        zero = self.coeffs[0] * 0
        return TruncatedSeries([zero] * m + list(self.coeffs))

    def shift_down(self, m: int = 1) -> TruncatedSeries:
        """Divide by x^m; needs valuation >= m."""
        if m < 0:
            raise BadRange("shift must be nonnegative")
        if any(self.coeffs[i] for i in range(min(m, self.order))):
            raise BadValuation(f"valuation below {m}; cannot divide by x^{m}")
        if self.order <= m:
            raise InsufficientPrecision("nothing left after the shift")
        return TruncatedSeries(self.coeffs[m:])

    def map_coefficients(self, fn: Callable) -> TruncatedSeries:
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def agrees_with(self, other: TruncatedSeries, order: int | None = None) -> bool:
        """Coefficientwise equality through min(order, both truncations)."""
        k = min(self.order, other.order)
        if order is not None:
            k = min(k, order)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(k))

    # -- serialization ---------------------------------------------------------------

    def to_json_obj(self) -> dict:
        def encode(c):
            if isinstance(c, MultiPoly):
                return c.to_json_obj()
            return format_rational(c)

        return {"order": self.order, "coeffs": [encode(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj) -> TruncatedSeries:
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise MalformedRational("series JSON needs an object with 'coeffs'")
        coeffs = []
        for item in obj["coeffs"]:
            if isinstance(item, str):
                coeffs.append(parse_rational(item))
            elif isinstance(item, list):
                coeffs.append(MultiPoly.from_json_obj(item))
            else:
                raise MalformedRational(f"bad coefficient entry: {item!r}")
        series = cls(coeffs)
        declared = obj.get("order")
        if declared is not None and declared != series.order:
            raise MalformedRational(
                f"declared order {declared} does not match {series.order} coefficients"
            )
        return series


def letter_series(count: int, prefix: str = "s") -> TruncatedSeries:
    """s0 + s1*x + ... with fresh symbolic letters as coefficients."""
    if count < 1:
        raise BadRange("need at least one letter")
    names = tuple(sorted(f"{prefix}{i}" for i in range(count)))
    coeffs = [
        MultiPoly.monomial({f"{prefix}{i}": 1}).with_variables(names)
        for i in range(count)
    ]
    return TruncatedSeries(coeffs)
