import random
from fractions import Fraction

import pytest

from tropcox.ratfield import (RatFn, valuation, leading_coefficient,
                              field_arithmetic, parse_ratfn, format_ratfn)


def t(k=1):
    return RatFn.t_power(k)


def test_valuation_examples():
    assert valuation(t(2) + t(3)) == 2
    assert valuation(RatFn(7, 1)) == 0
    assert valuation((t(1) + t(2)) / t(3)) == -2


def test_valuation_of_zero_rejected():
    with pytest.raises(ValueError):
        valuation(RatFn(0, 1))
    with pytest.raises(ValueError):
        leading_coefficient(RatFn(0, 1))


def test_leading_coefficient_examples():
    assert leading_coefficient(3 * t(2) + t(3)) == 3
    assert leading_coefficient((2 * t(1)) / (RatFn(4, 1) + t(1))) == Fraction(1, 2)
    assert leading_coefficient(-t(-1)) == -1


def test_arithmetic_examples():
    assert valuation(field_arithmetic(t(2), t(3), "mul")) == 5
    assert field_arithmetic(t(1), -t(1), "add").is_zero()
    s = field_arithmetic(t(1) + t(2), -t(1), "add")
    assert s == t(2)
    assert valuation(s) == 2


def test_division():
    f = (t(2) + t(3)) / (1 + t(1))
    assert f == t(2)
    with pytest.raises(ZeroDivisionError):
        field_arithmetic(t(1), RatFn(0, 1), "div")


def _random_ratfn(rng):
    def poly():
        deg = rng.randrange(0, 4)
        c = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(deg + 1)]
        return tuple(c)
    while True:
        num, den = poly(), poly()
        if any(num) and any(den):
            return RatFn(num, den)


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_valuation_laws_random(seed):
    rng = random.Random(seed)
    for _ in range(400):
        f, g = _random_ratfn(rng), _random_ratfn(rng)
        assert valuation(f * g) == valuation(f) + valuation(g)
        assert leading_coefficient(f * g) == leading_coefficient(f) * leading_coefficient(g)
        s = f + g
        if not s.is_zero():
            assert valuation(s) >= min(valuation(f), valuation(g))
            if valuation(f) != valuation(g):
                assert valuation(s) == min(valuation(f), valuation(g))


def test_field_axioms_random():
    rng = random.Random(99)
    for _ in range(100):
        f, g, h = (_random_ratfn(rng) for _ in range(3))
        assert (f + g) * h == f * h + g * h
        assert (f / g) * g == f
        assert f - f == RatFn(0, 1)


def test_parse_format_roundtrip():
    cases = [
        "3*t^2 + t^3",
        "(3*t^2 + t^3)/(1 + 2*t)",
        "7",
        "-t",
        "(1)/(t^3)",
        "1 - 2*t + t^2",
    ]
    for s in cases:
        f = parse_ratfn(s)
        assert parse_ratfn(format_ratfn(f)) == f


def test_format_is_canonical():
    f = parse_ratfn("(2*t^2 + 2*t^3)/(2 + 4*t)")
    g = parse_ratfn("(t^2 + t^3)/(1 + 2*t)")
    assert f == g
    assert format_ratfn(f) == format_ratfn(g)


def test_truncated_series():
    f = (1 + t(1)) / (1 - t(1))
    coeffs = f.truncated(3)
    assert coeffs == {0: 1, 1: 2, 2: 2, 3: 2}
    g = t(2) / (1 + t(1))
    assert g.truncated(4) == {2: 1, 3: -1, 4: 1}
