"""Semidirect product of unit series with tangent-to-identity diffeos.

Pairs (A, alpha) with A(0) = 1, alpha(0) = 0, alpha'(0) = 1 multiply by
(A, alpha)(B, beta) = (A * (B o alpha), beta o alpha).  One-parameter
subgroups pair A with x * A**tau; sliding tau from 0 to 1 deforms the
multiplicative inverse 1/A continuously into the compositional inverse of
x*A, with a second variant using the antiderivative of A**tau instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import BadConstantTerm, BadValuation
from .series import TruncatedSeries


@dataclass(frozen=True)
class UnitDiffeoPair:
    """Group element: a unit series and a diffeo tangent to the identity."""

    unit: TruncatedSeries
    diffeo: TruncatedSeries

    def __post_init__(self):
        if self.unit.coeffs[0] != 1:
            raise BadConstantTerm("unit part must have constant term 1")
        if self.diffeo.order < 2 or self.diffeo.coeffs[0] or self.diffeo.coeffs[1] != 1:
            raise BadValuation("diffeo part must be x + higher-order terms")


def identity_pair(order: int) -> UnitDiffeoPair:
    return UnitDiffeoPair(
        unit=TruncatedSeries.constant(1, order),
        diffeo=TruncatedSeries.identity(order),
    )


def pair_mul(g: UnitDiffeoPair, h: UnitDiffeoPair) -> UnitDiffeoPair:
    return UnitDiffeoPair(
        unit=g.unit * h.unit.compose(g.diffeo),
        diffeo=h.diffeo.compose(g.diffeo),
    )


def pair_inv(g: UnitDiffeoPair) -> UnitDiffeoPair:
    reverted = g.diffeo.revert()
    return UnitDiffeoPair(
        unit=g.unit.compose(reverted).invert(),
        diffeo=reverted,
    )


def power_coupled_pair(a: TruncatedSeries, tau) -> UnitDiffeoPair:
    """The pair (A, x * A**tau) from the one-parameter family."""
    if a.coeffs[0] != 1:
        raise BadConstantTerm("need constant term 1")
    return UnitDiffeoPair(unit=a, diffeo=a.pow(Fraction(tau)).shift_up(1))


def diffeo_to_coupled(alpha: TruncatedSeries, tau) -> UnitDiffeoPair:
    """Embed a diffeo as ((alpha/x)**(1/tau), alpha); tau must be nonzero."""
    tau = Fraction(tau)
    if not tau:
        raise BadConstantTerm("embedding needs tau != 0")
    unit = alpha.shift_down(1).pow(1 / tau)
    return UnitDiffeoPair(unit=unit, diffeo=alpha.truncate(unit.order))


def inversion_reversion_path(a: TruncatedSeries, tau) -> TruncatedSeries:
    """F_tau = 1 / (A o (x*A**tau)^<-1>); F_0 = 1/A, x*F_1 reverts x*A."""
    if a.coeffs[0] != 1:
        raise BadConstantTerm("need constant term 1")
    inner = a.pow(Fraction(tau)).shift_up(1).revert()
    return a.compose(inner.truncate(a.order)).invert()


def integral_variant_path(a: TruncatedSeries, tau) -> TruncatedSeries:
    """G_tau = 1 / (A o (integral of A**tau)^<-1>); same endpoints via integrals."""
    if a.coeffs[0] != 1:
        raise BadConstantTerm("need constant term 1")
    inner = a.pow(Fraction(tau)).integrate().revert()
    return a.compose(inner.truncate(a.order)).invert()
