"""Exact scalars, sparse multivariate polynomials, and exact determinants.

Scalars are `fractions.Fraction` (arbitrary precision, always reduced,
denominator positive), aliased as `Rational`.  Polynomials keep a map from
exponent vectors to nonzero rational coefficients over a sorted tuple of
variable names, so equal polynomials have identical term maps.  Determinants
never leave the ring: Bareiss elimination with exact divisions for polynomial
entries, ordinary Gaussian elimination over the field for rational entries.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    MalformedRational,
    MissingVariable,
    NonInvertibleConstantTerm,
    NonSquare,
)

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (den omitted when 1); normalizes, e.g. "2/4" -> 1/2."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise MalformedRational(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise MalformedRational(f"zero denominator: {text!r}") from None


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class MultiPoly:
    """Sparse multivariate polynomial over Fraction in named variables.

    Canonical form: variables sorted by name, exponent tuples of the same
    length as the variable tuple, no stored zero coefficients.  Instances
    are treated as immutable; every operation returns a new polynomial.
    Scalars (int, Fraction) coerce automatically in arithmetic.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Iterable[str], terms: Mapping[tuple, Fraction]):
        variables = tuple(variables)
        if tuple(sorted(variables)) != variables:
            raise ValueError("variables must be sorted by name")
        clean = {}
        for expo, coeff in terms.items():
            coeff = Fraction(coeff)
            if len(expo) != len(variables):
                raise ValueError("exponent arity does not match variable list")
            if coeff:
                clean[tuple(expo)] = coeff
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value) -> MultiPoly:
        value = Fraction(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def variable(cls, name: str) -> MultiPoly:
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, powers: Mapping[str, int], coeff=1) -> MultiPoly:
        names = tuple(sorted(powers))
        expo = tuple(powers[v] for v in names)
        return cls(names, {expo: Fraction(coeff)})

    @staticmethod
    def coerce(value) -> MultiPoly:
        if isinstance(value, MultiPoly):
            return value
        return MultiPoly.constant(value)

    # -- alignment ---------------------------------------------------------

    def with_variables(self, variables: tuple[str, ...]) -> MultiPoly:
        """Re-express over a (sorted) superset of the current variables."""
        if variables == self.variables:
            return self
        positions = []
        for name in self.variables:
            if name not in variables:
                raise ValueError(f"cannot drop variable {name}")
            positions.append(variables.index(name))
        width = len(variables)
        terms = {}
        for expo, coeff in self.terms.items():
            new = [0] * width
            for pos, e in zip(positions, expo):
                new[pos] = e
            terms[tuple(new)] = coeff
        return MultiPoly(variables, terms)

    def _aligned(self, other: MultiPoly):
        if self.variables == other.variables:
            return self, other
        merged = tuple(sorted(set(self.variables) | set(other.variables)))
        return self.with_variables(merged), other.with_variables(merged)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = MultiPoly.constant(other)
        a, b = self._aligned(other)
        terms = dict(a.terms)
        for expo, coeff in b.terms.items():
            acc = terms.get(expo, 0) + coeff
            if acc:
                terms[expo] = acc
            else:
                terms.pop(expo, None)
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (MultiPoly, int, Fraction)):
            return NotImplemented
        return self + (-MultiPoly.coerce(other))

    def __rsub__(self, other):
        return MultiPoly.coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Fraction(other)
            if not other:
                return MultiPoly(self.variables, {})
            return MultiPoly(
                self.variables, {e: c * other for e, c in self.terms.items()}
            )
        a, b = self._aligned(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                expo = tuple(x + y for x, y in zip(e1, e2))
                acc = out.get(expo, 0) + c1 * c2
                if acc:
                    out[expo] = acc
                else:
                    out.pop(expo, None)
        return MultiPoly(a.variables, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = MultiPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base if exponent > 1 else base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.constant(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._aligned(other)
        return a.terms == b.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self, variable: str | None = None) -> int:
        """Total degree, or degree in one variable; zero polynomial -> -1."""
        if not self.terms:
            return -1
        if variable is None:
            return max(sum(e) for e in self.terms)
        if variable not in self.variables:
            return 0
        idx = self.variables.index(variable)
        return max(e[idx] for e in self.terms)

    def evaluate(self, assignment: Mapping[str, Fraction]) -> Fraction:
        for name in self.variables:
            if name not in assignment and self.degree(name) > 0:
                raise MissingVariable(f"no value for {name}")
        total = Fraction(0)
        for expo, coeff in self.terms.items():
            term = coeff
            for name, e in zip(self.variables, expo):
                if e:
                    term *= Fraction(assignment[name]) ** e
            total += term
        return total

    def substitute(self, assignment: Mapping[str, Fraction]) -> MultiPoly:
        """Partially evaluate some variables, keeping the rest symbolic."""
        keep = tuple(v for v in self.variables if v not in assignment)
        out = MultiPoly(keep, {})
        for expo, coeff in self.terms.items():
            scalar = coeff
            kept = []
            for name, e in zip(self.variables, expo):
                if name in assignment:
                    scalar *= Fraction(assignment[name]) ** e
                else:
                    kept.append(e)
            out = out + MultiPoly(keep, {tuple(kept): scalar})
        return out

    def derivative(self, variable: str) -> MultiPoly:
        if variable not in self.variables:
            return MultiPoly(self.variables, {})
        idx = self.variables.index(variable)
        terms: dict[tuple, Fraction] = {}
        for expo, coeff in self.terms.items():
            e = expo[idx]
            if not e:
                continue
            new = list(expo)
            new[idx] = e - 1
            key = tuple(new)
            terms[key] = terms.get(key, Fraction(0)) + coeff * e
        return MultiPoly(self.variables, terms)

    def coefficient_of(self, variable: str, power: int) -> MultiPoly:
        """Coefficient of variable**power, as a polynomial in the others."""
        if variable not in self.variables:
            return self if power == 0 else MultiPoly(self.variables, {})
        idx = self.variables.index(variable)
        keep = tuple(v for v in self.variables if v != variable)
        terms = {}
        for expo, coeff in self.terms.items():
            if expo[idx] == power:
                terms[expo[:idx] + expo[idx + 1 :]] = coeff
        return MultiPoly(keep, terms)

    # -- exact division (Bareiss support) -----------------------------------

    def exact_div(self, divisor: MultiPoly) -> MultiPoly:
        """Divide by an exact polynomial divisor; raises if not divisible."""
        divisor = MultiPoly.coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if divisor.is_constant():
            return self * (Fraction(1) / divisor.constant_value())
        a, b = self._aligned(divisor)
        remainder = dict(a.terms)
        lead_b = max(b.terms)
        lead_b_coeff = b.terms[lead_b]
        quotient: dict[tuple, Fraction] = {}
        while remainder:
            lead_r = max(remainder)
            expo = tuple(x - y for x, y in zip(lead_r, lead_b))
            if any(e < 0 for e in expo):
                raise ArithmeticError("inexact polynomial division")
            coeff = remainder[lead_r] / lead_b_coeff
            quotient[expo] = coeff
            for eb, cb in b.terms.items():
                key = tuple(x + y for x, y in zip(expo, eb))
                acc = remainder.get(key, Fraction(0)) - coeff * cb
                if acc:
                    remainder[key] = acc
                else:
                    remainder.pop(key, None)
        return MultiPoly(a.variables, quotient)

    # -- serialization -----------------------------------------------------

    def to_json_obj(self) -> list:
        out = []
        for expo in sorted(self.terms, reverse=True):
            monomial = {
                name: e for name, e in zip(self.variables, expo) if e
            }
            out.append(
                {"coeff": format_rational(self.terms[expo]), "monomial": monomial}
            )
        return out

    @classmethod
    def from_json_obj(cls, obj) -> MultiPoly:
        if not isinstance(obj, list):
            raise MalformedRational("polynomial JSON must be a list of terms")
        total = cls.constant(0)
        for item in obj:
            coeff = parse_rational(item["coeff"])
            powers = {str(k): int(v) for k, v in item.get("monomial", {}).items()}
            total = total + cls.monomial(powers, coeff)
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo in sorted(self.terms, reverse=True):
            factors = []
            for name, e in zip(self.variables, expo):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            coeff = self.terms[expo]
            if not factors:
                parts.append(format_rational(coeff))
            elif coeff == 1:
                parts.append("*".join(factors))
            elif coeff == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(format_rational(coeff) + "*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


def invert_unit(value):
    """Multiplicative inverse of a ring unit (nonzero rational or constant poly)."""
    if isinstance(value, MultiPoly):
        if not value.is_constant() or value.is_zero():
            raise NonInvertibleConstantTerm(f"not a unit: {value!r}")
        return MultiPoly.constant(Fraction(1) / value.constant_value())
    value = Fraction(value)
    if not value:
        raise NonInvertibleConstantTerm("zero is not invertible")
    return Fraction(1) / value


def is_unit(value) -> bool:
    if isinstance(value, MultiPoly):
        return value.is_constant() and not value.is_zero()
    return bool(value)


class Matrix:
    """Dense row-major matrix over an exact ring (Fraction or MultiPoly)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> Matrix:
        rows = [list(r) for r in rows]
        n = len(rows)
        m = len(rows[0]) if rows else 0
        if any(len(r) != m for r in rows):
            raise ValueError("ragged rows")
        return cls(n, m, [v for r in rows for v in r])

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list]:
        return [
            self.entries[i * self.cols : (i + 1) * self.cols]
            for i in range(self.rows)
        ]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.to_rows()!r})"


def _is_rational_matrix(m: Matrix) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in m.entries)


def det_gauss(m: Matrix) -> Fraction:
    """Determinant over the fraction field; rational entries only."""
    if m.rows != m.cols:
        raise NonSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    n = m.rows
    rows = [[Fraction(v) for v in r] for r in m.to_rows()]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def _exact_quotient(value, divisor):
    if isinstance(value, MultiPoly) or isinstance(divisor, MultiPoly):
        return MultiPoly.coerce(value).exact_div(MultiPoly.coerce(divisor))
    return Fraction(value) / Fraction(divisor)


def det_bareiss(m: Matrix):
    """Fraction-free determinant; every interior division is exact."""
    if m.rows != m.cols:
        raise NonSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    n = m.rows
    rows = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not rows[k][k]:
            pivot = next((r for r in range(k + 1, n) if rows[r][k]), None)
            if pivot is None:
                return rows[0][0] * 0
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                value = rows[k][k] * rows[i][j] - rows[i][k] * rows[k][j]
                rows[i][j] = value if prev == 1 else _exact_quotient(value, prev)
            rows[i][k] = 0
        prev = rows[k][k]
    return rows[n - 1][n - 1] if sign > 0 else -rows[n - 1][n - 1]


def det(m: Matrix):
    """Exact determinant: Gaussian over rationals, Bareiss over polynomials."""
    if _is_rational_matrix(m):
        return det_gauss(m)
    return det_bareiss(m)
