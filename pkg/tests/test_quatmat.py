"""Quaternion algebra, the two matrix groups, the double covers eta4/eta2,
and the ball/hyperboloid geometry they act on."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from davisspin.exactfield import (GoldenNumber, GoldenComplex, QuadExtNumber,
                                  KAPPA_RADICAND, ZERO, ONE, TAU, SQRT5)
from davisspin.quatmat import (Quaternion, QUAT_ONE, SpinMatrix4, SpinMatrix2,
                               LorentzMatrix5, LorentzMatrix3, BallPoint,
                               BallPoint2, HyperboloidPoint, HyperboloidPoint2,
                               APEX, APEX2, InvalidElementError, DomainError,
                               eta4, eta2, verify_lift, spin_matrix_relations,
                               act_ball, act_ball2, zeta, zeta_inv, zeta2,
                               zeta2_inv)
from davisspin import icosa

HALF = Fraction(1, 2)

fractions_st = st.fractions(min_value=-4, max_value=4, max_denominator=6)
golden_st = st.builds(GoldenNumber, fractions_st, fractions_st)
quaternion_st = st.builds(Quaternion, golden_st, golden_st, golden_st, golden_st)
nonzero_quaternion_st = quaternion_st.filter(lambda q: not q.is_zero())

KAPPA = QuadExtNumber(0, 1, KAPPA_RADICAND)


def golden_boost() -> SpinMatrix4:
    return SpinMatrix4(Quaternion(SQRT5 * HALF), Quaternion(HALF),
                       Quaternion(HALF), Quaternion(SQRT5 * HALF))


def reflection_lift() -> SpinMatrix4:
    return SpinMatrix4(
        Quaternion(0, (1 + TAU) * KAPPA, KAPPA, -TAU * KAPPA),
        Quaternion(TAU, -1 - 3 * TAU, 0, 1 + 2 * TAU),
        Quaternion(TAU, 1 + 3 * TAU, 0, -1 - 2 * TAU),
        Quaternion(0, -(1 + TAU) * KAPPA, KAPPA, TAU * KAPPA),
        scale_sq=GoldenNumber(-HALF * HALF, HALF * HALF))


def spin_generators() -> list[SpinMatrix4]:
    return [SpinMatrix4.diagonal(icosa.G1, QUAT_ONE),
            SpinMatrix4.diagonal(icosa.G2, QUAT_ONE),
            SpinMatrix4.diagonal(QUAT_ONE, icosa.G1),
            SpinMatrix4.diagonal(QUAT_ONE, icosa.G2),
            golden_boost(),
            reflection_lift()]


@given(p=quaternion_st, q=quaternion_st, r=quaternion_st)
def test_quaternion_ring_axioms(p, q, r):
    assert p + q == q + p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (q + r) * p == q * p + r * p
    assert p * QUAT_ONE == p and QUAT_ONE * p == p


def test_quaternion_units():
    i = Quaternion(0, 1)
    j = Quaternion(0, 0, 1)
    k = Quaternion(0, 0, 0, 1)
    assert i * i == j * j == k * k == -QUAT_ONE
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k
    assert i * j * k == -QUAT_ONE


@given(p=quaternion_st, q=quaternion_st)
def test_quaternion_conjugate_and_norm(p, q):
    assert (p * q).conjugate() == q.conjugate() * p.conjugate()
    assert (p * q).norm_sq() == p.norm_sq() * q.norm_sq()
    assert (p.conjugate() * p).re == p.norm_sq()


@given(p=nonzero_quaternion_st)
def test_quaternion_inverse(p):
    assert p * p.inverse() == QUAT_ONE
    assert p.inverse() * p == QUAT_ONE


def test_quaternion_power():
    assert icosa.G1 ** 5 == -QUAT_ONE
    assert icosa.G1 ** 10 == QUAT_ONE
    assert icosa.G1 ** -1 == icosa.G1.inverse()


def test_spinmatrix4_membership_enforced():
    with pytest.raises(InvalidElementError):
        SpinMatrix4(QUAT_ONE, QUAT_ONE, Quaternion(0), QUAT_ONE)
    with pytest.raises(InvalidElementError):
        SpinMatrix4.diagonal(Quaternion(0, 0, 1, 1), QUAT_ONE)


def test_spinmatrix4_group_operations():
    boost = golden_boost()
    assert boost.is_member()
    assert boost * boost.inverse() == SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE)
    assert boost ** 2 == boost * boost
    assert spin_matrix_relations(boost)


def test_spinmatrix4_scale_factor():
    lift = reflection_lift()
    assert lift.is_member()
    assert lift.scale_sq == (TAU - 1) * Fraction(1, 4)
    square = lift * lift
    assert square.normalized().scale_sq == ONE
    identity = SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE)
    assert square == -identity


def test_eta4_identity_and_minus_identity():
    identity = SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE)
    assert eta4(identity) == LorentzMatrix5.identity()
    assert eta4(-identity) == LorentzMatrix5.identity()


def test_eta4_rotation_by_i_pair():
    i = Quaternion(0, 1)
    image = eta4(SpinMatrix4.diagonal(i, i))
    assert image == LorentzMatrix5(
        ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, -1, 0, 0),
         (0, 0, 0, -1, 0), (0, 0, 0, 0, 1)))


def test_eta4_recovers_hardcoded_rotation():
    lift = SpinMatrix4.diagonal(icosa.G1, QUAT_ONE)
    expected = LorentzMatrix5(tuple(
        tuple(value * HALF for value in row) for row in
        ((TAU, -1, 1 - TAU, 0, 0),
         (1, TAU, 0, -1 + TAU, 0),
         (-1 + TAU, 0, TAU, -1, 0),
         (0, 1 - TAU, 1, TAU, 0),
         (0, 0, 0, 0, GoldenNumber(2)))))
    assert eta4(lift) == expected
    assert verify_lift(lift, expected)
    assert not verify_lift(golden_boost(), expected)


def test_eta4_homomorphism_on_words():
    rng = random.Random(5)
    generators = spin_generators()
    identity = SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE)
    for _ in range(60):
        x = identity
        for _ in range(rng.randrange(1, 4)):
            x = x * generators[rng.randrange(len(generators))]
        y = generators[rng.randrange(len(generators))]
        assert eta4(x * y) == eta4(x) * eta4(y)
        assert eta4(-x) == eta4(x)
        assert spin_matrix_relations(x)


def test_eta4_kernel_is_plus_minus_identity():
    identity = SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE)
    assert eta4(identity) == LorentzMatrix5.identity()
    assert eta4(-identity) == LorentzMatrix5.identity()
    for p_label in icosa.CLASS_LABELS:
        for q_label in icosa.CLASS_LABELS:
            p = icosa.class_representative(p_label)
            q = icosa.class_representative(q_label)
            if (p, q) in ((QUAT_ONE, QUAT_ONE), (-QUAT_ONE, -QUAT_ONE)):
                continue
            image = eta4(SpinMatrix4.diagonal(p, q), validate_output=False)
            assert image != LorentzMatrix5.identity(), (p_label, q_label)
    mixed = SpinMatrix4.diagonal(QUAT_ONE, -QUAT_ONE)
    assert eta4(mixed) != LorentzMatrix5.identity()


def test_eta4_rejects_non_member():
    bad = SpinMatrix4.diagonal(Quaternion(2), QUAT_ONE, validate=False)
    with pytest.raises(InvalidElementError):
        eta4(bad)


def test_ball_and_hyperboloid_domains():
    with pytest.raises(DomainError):
        BallPoint(QUAT_ONE)
    with pytest.raises(DomainError):
        HyperboloidPoint((0, 0, 0, 0, -1))
    with pytest.raises(DomainError):
        HyperboloidPoint((1, 0, 0, 0, 1))
    with pytest.raises(DomainError):
        zeta(Quaternion(1, 1))


def test_zeta_examples_and_roundtrip():
    assert zeta(Quaternion(0)) == APEX
    half_point = zeta(Quaternion(HALF))
    assert half_point == HyperboloidPoint(
        (Fraction(4, 3), 0, 0, 0, Fraction(5, 3)))
    assert zeta_inv(half_point) == BallPoint(Quaternion(HALF))
    assert zeta_inv(APEX) == BallPoint(Quaternion(0))


@given(q=st.builds(Quaternion,
                   *(st.fractions(min_value=-1, max_value=1, max_denominator=8)
                     for _ in range(4))))
def test_zeta_roundtrip_on_random_ball_points(q):
    if (ONE - q.norm_sq()).sign() <= 0:
        return
    assert zeta_inv(zeta(q)) == BallPoint(q)


def test_act_ball_examples():
    diag = SpinMatrix4.diagonal(icosa.G1, icosa.G2)
    assert act_ball(diag, Quaternion(0)) == BallPoint(Quaternion(0))
    boosted = act_ball(golden_boost(), Quaternion(0))
    assert boosted == BallPoint(Quaternion((2 * TAU - 1) * Fraction(1, 5)))
    with pytest.raises(DomainError):
        act_ball(diag, QUAT_ONE)


def test_zeta_equivariance_exact():
    rng = random.Random(11)
    generators = spin_generators()[:5]
    points = [Quaternion(0), Quaternion(HALF), Quaternion(0, HALF, HALF),
              Quaternion(Fraction(1, 3), 0, 0, Fraction(1, 3))]
    for _ in range(40):
        word = generators[rng.randrange(5)] * generators[rng.randrange(5)]
        for q in points:
            moved = act_ball(word, q)
            assert zeta(moved) == eta4(word).apply(zeta(q))


def test_zeta_equivariance_float():
    rng = random.Random(13)
    generators = spin_generators()
    for _ in range(100):
        word = generators[rng.randrange(len(generators))]
        word = word * generators[rng.randrange(len(generators))]
        coords = [rng.uniform(-0.4, 0.4) for _ in range(4)]
        (a, b), (c, d) = word.real()

        def fmul(p, q):
            return (p[0]*q[0] - p[1]*q[1] - p[2]*q[2] - p[3]*q[3],
                    p[0]*q[1] + p[1]*q[0] + p[2]*q[3] - p[3]*q[2],
                    p[0]*q[2] - p[1]*q[3] + p[2]*q[0] + p[3]*q[1],
                    p[0]*q[3] + p[1]*q[2] - p[2]*q[1] + p[3]*q[0])

        numerator = tuple(x + y for x, y in zip(fmul(a, coords), b))
        denominator = tuple(x + y for x, y in zip(fmul(c, coords), d))
        norm = sum(v * v for v in denominator)
        den_inv = (denominator[0] / norm, -denominator[1] / norm,
                   -denominator[2] / norm, -denominator[3] / norm)
        moved = fmul(numerator, den_inv)

        def lift(point):
            inv = 1.0 / (1.0 - sum(v * v for v in point))
            return [2 * v * inv for v in point] + [(1 + sum(v*v for v in point)) * inv]

        matrix = eta4(word).real()
        expected = [sum(matrix[i][j] * lift(coords)[j] for j in range(5))
                    for i in range(5)]
        assert max(abs(u - v) for u, v in zip(lift(moved), expected)) < 1e-9


def two_dim_generators() -> list[SpinMatrix2]:
    rotation = SpinMatrix2(GoldenComplex(Fraction(3, 5), Fraction(4, 5)),
                           GoldenComplex(ZERO, ZERO))
    quarter_turn = SpinMatrix2(GoldenComplex(ZERO, ONE), GoldenComplex(ZERO, ZERO))
    boost = SpinMatrix2(GoldenComplex(SQRT5 * HALF, ZERO),
                        GoldenComplex(GoldenNumber(HALF), ZERO))
    return [rotation, quarter_turn, boost]


def test_spinmatrix2_membership_enforced():
    with pytest.raises(InvalidElementError):
        SpinMatrix2(GoldenComplex(2, 0), GoldenComplex(0, 0))
    with pytest.raises(InvalidElementError):
        SpinMatrix2(GoldenComplex(1, 0), GoldenComplex(0, 0),
                    c=GoldenComplex(1, 0), d=GoldenComplex(1, 0))


def test_eta2_identity_and_quarter_turn():
    identity = SpinMatrix2(GoldenComplex(1, 0), GoldenComplex(0, 0))
    assert eta2(identity) == LorentzMatrix3(
        ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    quarter_turn = two_dim_generators()[1]
    assert eta2(quarter_turn) == LorentzMatrix3(
        ((-1, 0, 0), (0, -1, 0), (0, 0, 1)))
    assert eta2(-quarter_turn) == eta2(quarter_turn)


def test_eta2_homomorphism_and_equivariance():
    rng = random.Random(7)
    generators = two_dim_generators()
    points = [GoldenComplex(0, 0), GoldenComplex(GoldenNumber(HALF), ZERO),
              GoldenComplex(ZERO, GoldenNumber(Fraction(1, 3)))]
    for _ in range(50):
        x = generators[rng.randrange(3)] * generators[rng.randrange(3)]
        y = generators[rng.randrange(3)]
        assert eta2(x * y) == eta2(x) * eta2(y)
        for z in points:
            assert zeta2(act_ball2(x, z)) == eta2(x).apply(zeta2(z))


def test_zeta2_examples_and_roundtrip():
    assert zeta2(GoldenComplex(0, 0)) == APEX2
    point = zeta2(GoldenComplex(GoldenNumber(HALF), ZERO))
    assert point == HyperboloidPoint2((Fraction(4, 3), 0, Fraction(5, 3)))
    assert zeta2_inv(point) == BallPoint2(GoldenComplex(GoldenNumber(HALF), ZERO))
    with pytest.raises(DomainError):
        BallPoint2(GoldenComplex(1, 0))
    with pytest.raises(DomainError):
        HyperboloidPoint2((0, 0, -1))


def test_verify_lift_dimension_mismatch():
    with pytest.raises(TypeError):
        verify_lift(SpinMatrix4.diagonal(QUAT_ONE, QUAT_ONE),
                    LorentzMatrix3(((1, 0, 0), (0, 1, 0), (0, 0, 1))))
