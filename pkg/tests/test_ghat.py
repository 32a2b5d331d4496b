"""Structure of the order-28,800 symmetry group: element arithmetic,
conjugacy classes, minus-pairing, and coset witnesses."""

import random

import pytest

from davisspin.quatmat import QUAT_ONE
from davisspin import ghat, icosa


def random_element(rng: random.Random) -> ghat.GhatElement:
    elements = icosa.enumerate_2I()
    return ghat.GhatElement(elements[rng.randrange(120)],
                            elements[rng.randrange(120)],
                            rng.randrange(2))


def test_group_order_and_class_count():
    assert ghat.group_order() == 28800
    classes = ghat.conjugacy_classes()
    assert len(classes) == 54
    assert sum(cls.size for cls in classes) == 28800
    assert len({cls.name for cls in classes}) == 54


def test_element_arithmetic_axioms():
    rng = random.Random(6)
    for _ in range(200):
        x, y, z = (random_element(rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * ghat.IDENTITY == x
        assert ghat.IDENTITY * x == x
        assert x * x.inverse() == ghat.IDENTITY
        assert x.inverse() * x == ghat.IDENTITY
        assert ghat.ghat_mul(x, y) == x * y


def test_twist_relation():
    s = ghat.S_INVOLUTION
    assert s * s == ghat.IDENTITY
    rng = random.Random(8)
    elements = icosa.enumerate_2I()
    for _ in range(100):
        p = elements[rng.randrange(120)]
        q = elements[rng.randrange(120)]
        pair = ghat.GhatElement(p, q, 0)
        conjugated = s * pair * s
        assert conjugated == ghat.GhatElement(icosa.alpha_inverse(q),
                                              icosa.alpha(p), 0)


def test_center():
    central = ghat.center()
    assert len(central) == 2
    assert ghat.IDENTITY in central
    assert ghat.MINUS_ONE in central


def test_identity_and_minus_one_classes():
    identity_class = ghat.class_of_element(ghat.IDENTITY)
    assert identity_class.name == "1×1"
    assert identity_class.size == 1
    minus_class = ghat.class_of_element(ghat.MINUS_ONE)
    assert minus_class.name == "2×2"
    assert minus_class.size == 1
    assert ghat.minus_class(identity_class) is minus_class


def test_coset_classes():
    cosets = [cls for cls in ghat.conjugacy_classes() if cls.is_coset]
    assert len(cosets) == 9
    assert {cls.name for cls in cosets} == {
        f"[1×{label}]" for label in icosa.CLASS_LABELS}
    assert sum(cls.size for cls in cosets) == 14400
    for cls in cosets:
        witness = ghat.coset_witness(cls)
        assert witness.eps == 1
        assert witness.p == QUAT_ONE
        assert ghat.class_of_element(witness) is cls


def test_coset_witness_rejects_subgroup_class():
    with pytest.raises(ValueError):
        ghat.coset_witness(ghat.class_by_name("1×1"))


def test_subgroup_class_names_follow_merging():
    subgroup = [cls for cls in ghat.conjugacy_classes() if not cls.is_coset]
    assert len(subgroup) == 45
    merged = [cls for cls in subgroup if "+" in cls.name]
    unmerged = [cls for cls in subgroup if "+" not in cls.name]
    assert len(merged) == 36
    assert len(unmerged) == 9
    for cls in merged:
        first, second = cls.name.split("+")
        x, y = first.split("×")
        sx, sy = second.split("×")
        assert (sx, sy) == (ghat.star_label(y), ghat.star_label(x))


def test_class_membership_consistency():
    rng = random.Random(9)
    for _ in range(150):
        x = random_element(rng)
        h = random_element(rng)
        assert ghat.class_name(h * x * h.inverse()) == ghat.class_name(x)


def test_class_sizes_divide_group_order():
    for cls in ghat.conjugacy_classes():
        assert cls.representative.order() == cls.order
        assert 28800 % cls.size == 0
        assert len(cls.member_codes) == cls.size


def test_minus_pairing_involution():
    classes = ghat.conjugacy_classes()
    self_paired = 0
    for cls in classes:
        partner = ghat.minus_class(cls)
        assert ghat.minus_class(partner) is cls
        if partner is cls:
            self_paired += 1
    assert self_paired == 14


def test_normalize_class_name():
    assert ghat.normalize_class_name("3×3") == "3×3"
    assert ghat.normalize_class_name("10B×6+6×10A") == "6×10A+10B×6"
    assert ghat.normalize_class_name("5B×1+1×5A") == "1×5A+5B×1"
    assert ghat.normalize_class_name("[1×5A]") == "[1×5A]"
    with pytest.raises(KeyError):
        ghat.normalize_class_name("7×1")
    with pytest.raises(KeyError):
        ghat.normalize_class_name("[2×3]")


def test_spot_class_examples():
    g1 = icosa.G1
    assert ghat.class_name(ghat.GhatElement(g1, QUAT_ONE, 0)) == "1×10B+10A×1"
    assert ghat.class_name(ghat.GhatElement(QUAT_ONE, g1, 0)) == "1×10A+10B×1"
    assert ghat.S_INVOLUTION.order() == 2
    assert ghat.class_name(ghat.S_INVOLUTION) == "[1×2]"
    assert ghat.SIGMA_STAR.order() == 4
    assert ghat.class_name(ghat.SIGMA_STAR) == "[1×1]"
    assert ghat.class_by_name("[1×2]").order == 2
    assert ghat.class_by_name("[1×1]").order == 4


def test_power_map():
    cls = ghat.class_by_name("1×10A+10B×1")
    assert ghat.power_map(cls, 2).order == 5
    assert ghat.power_map(cls, 5).order == 2
    assert ghat.power_map(cls, 10) is ghat.class_by_name("1×1")
