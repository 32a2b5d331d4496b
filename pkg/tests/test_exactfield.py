"""Field axioms, Galois symmetry, embeddings and serialization of the exact
number types."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from davisspin.exactfield import (GoldenNumber, GoldenComplex, QuadExtNumber,
                                  TowerMismatchError, ZERO, ONE, TAU, SQRT5,
                                  KAPPA_RADICAND, golden_mul, golden_inverse,
                                  golden_sqrt, galois_conjugate, real_embed,
                                  quadext_mul)

fractions_st = st.fractions(min_value=-20, max_value=20, max_denominator=16)
golden_st = st.builds(GoldenNumber, fractions_st, fractions_st)
nonzero_golden_st = golden_st.filter(lambda g: not g.is_zero())
complex_st = st.builds(GoldenComplex, golden_st, golden_st)
nonzero_complex_st = complex_st.filter(lambda z: not z.is_zero())


def test_defining_relation():
    assert TAU * TAU == TAU + 1
    assert SQRT5 == 2 * TAU - 1
    assert SQRT5 * SQRT5 == GoldenNumber(5)


@given(x=golden_st, y=golden_st, z=golden_st)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert golden_mul(x, y) == golden_mul(y, x)
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO


@given(x=nonzero_golden_st)
def test_multiplicative_inverse(x):
    assert golden_mul(x, golden_inverse(x)) == ONE


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        golden_inverse(ZERO)


@given(x=golden_st, y=golden_st)
def test_galois_is_ring_automorphism(x, y):
    assert galois_conjugate(x + y) == galois_conjugate(x) + galois_conjugate(y)
    assert galois_conjugate(golden_mul(x, y)) == golden_mul(
        galois_conjugate(x), galois_conjugate(y))
    assert galois_conjugate(galois_conjugate(x)) == x


def test_galois_on_tau():
    assert galois_conjugate(TAU) == 1 - TAU
    assert galois_conjugate(SQRT5) == -SQRT5


@given(x=golden_st, y=golden_st)
def test_real_embed_is_homomorphism(x, y):
    scale = max(1.0, abs(real_embed(x)), abs(real_embed(y)),
                abs(real_embed(x * y)))
    assert abs(real_embed(x + y) - (real_embed(x) + real_embed(y))) <= 1e-12 * scale
    assert abs(real_embed(x * y) - real_embed(x) * real_embed(y)) <= 1e-12 * scale


@given(x=golden_st)
def test_sign_matches_real_embedding(x):
    embedded = real_embed(x)
    if abs(embedded) > 1e-9:
        assert x.sign() == (1 if embedded > 0 else -1)


@given(x=golden_st)
def test_sqrt_of_square_roundtrip(x):
    root = golden_sqrt(x * x)
    assert root is not None
    assert root * root == x * x
    assert root.sign() >= 0


def test_sqrt_examples():
    assert golden_sqrt(GoldenNumber(4)) == GoldenNumber(2)
    assert golden_sqrt(TAU + 1) == TAU
    assert golden_sqrt(GoldenNumber(5)) == SQRT5
    assert golden_sqrt(TAU - 1) is None
    assert golden_sqrt(GoldenNumber(2)) is None
    assert golden_sqrt(GoldenNumber(-1)) is None
    assert golden_sqrt(ZERO) == ZERO


@given(x=golden_st)
def test_string_serialization_roundtrip(x):
    text = str(x)
    assert GoldenNumber.from_string(text) == x
    parts = text.split(" + ")
    assert len(parts) == 2 and parts[1].endswith("*t")


@given(x=golden_st)
def test_json_serialization_roundtrip(x):
    assert GoldenNumber.from_json(x.to_json()) == x


@given(x=golden_st, y=golden_st)
def test_canonical_form_unique(x, y):
    if x == y:
        assert str(x) == str(y) and hash(x) == hash(y)
    else:
        assert str(x) != str(y)


@given(x=complex_st, y=complex_st, z=complex_st)
def test_complex_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(x=nonzero_complex_st)
def test_complex_inverse(x):
    assert x * x.inverse() == GoldenComplex(1, 0)


@given(x=complex_st, y=complex_st)
def test_complex_conjugation_and_galois(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).galois() == x.galois() * y.galois()
    assert x.galois().galois() == x
    assert x.norm() == (x * x.conjugate()).re


def test_complex_imaginary_unit():
    i = GoldenComplex(0, 1)
    assert i * i == GoldenComplex(-1, 0)
    z = GoldenComplex(TAU, 1 - TAU)
    assert GoldenComplex.from_json(z.to_json()) == z


@given(bx=golden_st, ex=golden_st, by=golden_st, ey=golden_st)
def test_quadext_arithmetic(bx, ex, by, ey):
    d = KAPPA_RADICAND
    x = QuadExtNumber(bx, ex, d)
    y = QuadExtNumber(by, ey, d)
    assert quadext_mul(x, y) == quadext_mul(y, x)
    assert (x + y) - y == x
    kappa = QuadExtNumber(0, 1, d)
    assert kappa * kappa == d
    if not x.is_zero():
        assert x * x.inverse() == 1


def test_quadext_tower_mismatch():
    x = QuadExtNumber(1, 1, KAPPA_RADICAND)
    y = QuadExtNumber(1, 1, GoldenNumber(2))
    with pytest.raises(TowerMismatchError):
        quadext_mul(x, y)
    # purely-base values belong to every tower
    z = QuadExtNumber(TAU, 0, GoldenNumber(2))
    assert x * z == x * TAU


def test_quadext_sign_and_embedding():
    d = KAPPA_RADICAND
    kappa = QuadExtNumber(0, 1, d)
    assert kappa.sign() > 0
    assert (-kappa).sign() < 0
    x = QuadExtNumber(-3, 1, d)  # sqrt(1+3tau) = 2.437... < 3
    assert x.sign() < 0
    assert abs(real_embed(x) - (-3 + (1 + 3 * (1 + 5 ** 0.5) / 2) ** 0.5)) < 1e-12
    assert QuadExtNumber(TAU, 0, d).golden_part() == TAU
    with pytest.raises(ValueError):
        kappa.golden_part()


@settings(max_examples=25)
@given(x=golden_st, k=st.integers(min_value=-3, max_value=6))
def test_powers(x, k):
    if x.is_zero() and k < 0:
        return
    direct = ONE
    base = x if k >= 0 else x.inverse()
    for _ in range(abs(k)):
        direct = direct * base
    assert x ** k == direct
