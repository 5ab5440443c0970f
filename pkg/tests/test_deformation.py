"""Group structure of unit/diffeo pairs and the two deformation paths."""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial

import pytest

from conftest import rand_fraction
from fpskit.deformation import (
    UnitDiffeoPair,
    diffeo_to_coupled,
    identity_pair,
    integral_variant_path,
    inversion_reversion_path,
    pair_inv,
    pair_mul,
    power_coupled_pair,
)
from fpskit.errors import BadConstantTerm, BadValuation
from fpskit.reversion import _lagrange_basis
from fpskit.series import TruncatedSeries

ORDER = 12


def rand_unit(rng, order=ORDER):
    return TruncatedSeries([Fraction(1)] + [rand_fraction(rng) for _ in range(order - 1)])


def rand_diffeo(rng, order=ORDER):
    return TruncatedSeries(
        [Fraction(0), Fraction(1)] + [rand_fraction(rng) for _ in range(order - 2)]
    )


def pairs_agree(g, h):
    unit_order = min(g.unit.order, h.unit.order)
    diffeo_order = min(g.diffeo.order, h.diffeo.order)
    return g.unit.truncate(unit_order) == h.unit.truncate(
        unit_order
    ) and g.diffeo.truncate(diffeo_order) == h.diffeo.truncate(diffeo_order)


def test_pair_validation():
    with pytest.raises(BadConstantTerm):
        UnitDiffeoPair(TruncatedSeries([2, 0, 0]), TruncatedSeries([0, 1, 0]))
    with pytest.raises(BadValuation):
        UnitDiffeoPair(TruncatedSeries([1, 0, 0]), TruncatedSeries([0, 2, 0]))


def test_neutral_element():
    rng = random.Random(40)
    g = UnitDiffeoPair(rand_unit(rng), rand_diffeo(rng))
    e = identity_pair(ORDER)
    assert pairs_agree(pair_mul(e, g), g)
    assert pairs_agree(pair_mul(g, e), g)


def test_two_sided_inverse():
    rng = random.Random(41)
    for _ in range(5):
        g = UnitDiffeoPair(rand_unit(rng), rand_diffeo(rng))
        e = identity_pair(ORDER)
        assert pairs_agree(pair_mul(g, pair_inv(g)), e)
        assert pairs_agree(pair_mul(pair_inv(g), g), e)


def test_unit_only_inverse_is_series_inverse():
    rng = random.Random(42)
    a = rand_unit(rng)
    g = UnitDiffeoPair(a, TruncatedSeries.identity(ORDER))
    inv = pair_inv(g)
    assert inv.unit == a.invert()
    assert inv.diffeo == TruncatedSeries.identity(ORDER)


def test_associativity():
    rng = random.Random(43)
    for _ in range(5):
        g = UnitDiffeoPair(rand_unit(rng), rand_diffeo(rng))
        h = UnitDiffeoPair(rand_unit(rng), rand_diffeo(rng))
        f = UnitDiffeoPair(rand_unit(rng), rand_diffeo(rng))
        assert pairs_agree(pair_mul(pair_mul(g, h), f), pair_mul(g, pair_mul(h, f)))


def test_coupled_pair_at_zero_is_unit_copy():
    rng = random.Random(44)
    a = rand_unit(rng)
    g = power_coupled_pair(a, 0)
    assert g.unit == a
    assert g.diffeo == TruncatedSeries.identity(ORDER + 1)


def test_coupled_pair_simple_instance():
    a = TruncatedSeries([1, 1, 0, 0])
    g = power_coupled_pair(a, 1)
    assert g.diffeo == TruncatedSeries([0, 1, 1, 0, 0])


def test_coupled_family_closure():
    rng = random.Random(45)
    for tau in (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(-1), Fraction(3)):
        a, b = rand_unit(rng), rand_unit(rng)
        product = pair_mul(power_coupled_pair(a, tau), power_coupled_pair(b, tau))
        assert pairs_agree(product, power_coupled_pair(product.unit, tau))
        inverse = pair_inv(power_coupled_pair(a, tau))
        assert pairs_agree(inverse, power_coupled_pair(inverse.unit, tau))


def test_diffeo_embedding_respects_products():
    rng = random.Random(46)
    for tau in (Fraction(1), Fraction(1, 2), Fraction(-2)):
        alpha, beta = rand_diffeo(rng), rand_diffeo(rng)
        lhs = diffeo_to_coupled(beta.compose(alpha), tau)
        rhs = pair_mul(diffeo_to_coupled(alpha, tau), diffeo_to_coupled(beta, tau))
        assert pairs_agree(lhs, rhs)


def test_deformation_endpoint_zero():
    rng = random.Random(47)
    a = rand_unit(rng)
    assert inversion_reversion_path(a, 0) == a.invert()


def test_deformation_endpoint_one():
    rng = random.Random(48)
    a = rand_unit(rng)
    f1 = inversion_reversion_path(a, 1)
    reverted = a.shift_up(1).revert()
    assert f1.shift_up(1).truncate(ORDER) == reverted.truncate(ORDER)


def test_deformation_half_agrees_with_group_inverse_route():
    # second pipeline: the unit part of the group inverse of (A, x A^tau)
    rng = random.Random(49)
    for tau in (Fraction(1, 2), Fraction(1, 3), Fraction(2)):
        a = rand_unit(rng)
        direct = inversion_reversion_path(a, tau)
        via_group = pair_inv(power_coupled_pair(a, tau)).unit
        assert direct.truncate(via_group.order) == via_group


def test_integral_variant_endpoints():
    rng = random.Random(50)
    a = rand_unit(rng)
    assert integral_variant_path(a, 0) == a.invert()
    g1 = integral_variant_path(a, 1)
    target = a.integrate().revert()
    assert g1.integrate().truncate(ORDER) == target.truncate(ORDER)


def test_integral_variant_closed_form_quadratic():
    # oracle: the reversion of x + x^2/2 is sqrt(1+2x) - 1, expanded binomially
    a = TruncatedSeries([1, 1] + [0] * (ORDER - 2))
    integral = a.integrate()  # x + x^2/2
    reverted = integral.revert()
    expected = [Fraction(0)]
    for n in range(1, integral.order):
        falling = Fraction(1)
        for i in range(n):
            falling *= Fraction(1, 2) - i
        expected.append(falling * 2**n / factorial(n))
    assert reverted == TruncatedSeries(expected)


def test_path_coefficients_are_polynomial_in_tau():
    # coefficient k of F_tau fits a degree <= k polynomial exactly and
    # predicts a fresh tau value
    rng = random.Random(51)
    a = rand_unit(rng, 8)
    for k in range(1, 6):
        nodes = [Fraction(i) for i in range(k + 2)]
        values = [inversion_reversion_path(a, t).coeff(k) for t in nodes]
        basis = _lagrange_basis([int(t) for t in nodes])
        poly = [Fraction(0)] * (k + 2)
        for value, base in zip(values, basis):
            for i, b in enumerate(base):
                poly[i] += value * b
        assert poly[k + 1] == 0  # degree <= k
        fresh = Fraction(7, 2)
        predicted = sum(c * fresh**i for i, c in enumerate(poly))
        assert predicted == inversion_reversion_path(a, fresh).coeff(k)
