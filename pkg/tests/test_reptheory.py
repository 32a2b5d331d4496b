"""The nine irreducibles of the binary icosahedral group, induction and
extension to the full group, and the 54-character table."""

import random

import pytest

from davisspin.exactfield import GoldenComplex, GoldenNumber, TAU
from davisspin import ghat, icosa, reptheory
from davisspin.reptheory import (NotExtendableError, character_of,
                                 chartable_ghat, decompose, extend_character,
                                 galois_permutation, galois_rep, homcheck,
                                 induce_character, inner_product,
                                 orthogonality_checks, psi1, rep2_of_2I,
                                 rep_of_2I, sym_power, tensor, REP_STAR)

SPINORIAL_DIMS = [4, 4, 8, 12, 12, 12, 12, 12, 16, 16, 20,
                  20, 24, 24, 32, 36, 36, 40, 48, 60]


def test_psi1_embeds_the_quaternions():
    from davisspin.quatmat import Quaternion
    image = psi1(Quaternion(0, 1))
    assert image[0][0] == GoldenComplex(0, 1)
    assert image[1][1] == GoldenComplex(0, -1)
    x = Quaternion(0, 0, 1, 0)
    y = Quaternion(0, 0, 0, 1)
    assert reptheory._mat_mul(psi1(x), psi1(y)) == psi1(x * y)


def test_full_table_reproduction():
    for label in icosa.REP_LABELS:
        rep = rep_of_2I(label)
        character = character_of(rep)
        for class_label in icosa.CLASS_LABELS:
            assert character.value_at(class_label) == GoldenComplex.coerce(
                icosa.char_2I(label, class_label)), (label, class_label)


def test_homomorphism_property_of_reps():
    assert homcheck(rep2_of_2I(), pairs=200, seed=1)
    for label in icosa.REP_LABELS:
        assert homcheck(rep_of_2I(label), pairs=40, seed=2), label


def test_sym_power_and_tensor_examples():
    two = rep2_of_2I()
    three = sym_power(two, 2)
    assert reptheory._mat_trace(
        three.image(icosa.class_representative("5A"))) == GoldenComplex.coerce(1 - TAU)
    four_prime = sym_power(two, 3)
    assert reptheory._mat_trace(four_prime.image(
        icosa.class_representative("2"))) == GoldenComplex(-4, 0)
    mixed = tensor(two, galois_rep(two))
    assert reptheory._mat_trace(
        mixed.image(icosa.class_representative("5A"))) == GoldenComplex(-1, 0)
    assert mixed.dimension == 4


def test_rep_star_is_an_involution():
    for label in icosa.REP_LABELS:
        assert REP_STAR[REP_STAR[label]] == label
    assert REP_STAR["2"] == "2'"
    assert REP_STAR["3'"] == "3"
    assert REP_STAR["4'"] == "4'"


def test_rep_of_unknown_label():
    with pytest.raises(KeyError):
        rep_of_2I("7")
    with pytest.raises(ValueError):
        sym_power(rep_of_2I("3"), 2)


def test_induced_character_examples():
    induced = induce_character("1", "2")
    assert induced.dimension == GoldenNumber(4)
    assert induced.spinorial
    for cls in ghat.conjugacy_classes():
        if cls.is_coset:
            assert induced.value_at(cls.name) == GoldenComplex(0, 0)
    big = induce_character("5", "6")
    assert big.dimension == GoldenNumber(60)
    assert big.spinorial
    with pytest.raises(KeyError):
        induce_character("1", "x")


def test_induced_value_matches_subgroup_formula():
    induced = induce_character("2", "3")
    for cls in ghat.conjugacy_classes():
        if cls.is_coset:
            continue
        rep = cls.representative
        x, y = icosa.class_of(rep.p), icosa.class_of(rep.q)
        expected = (icosa.char_2I("2", x) * icosa.char_2I("3", y)
                    + icosa.char_2I("3'", x) * icosa.char_2I("2'", y))
        assert induced.value_at(cls.name) == GoldenComplex.coerce(expected)


def test_extend_trivial_character():
    plus = extend_character("1", "1", 1)
    assert all(value == GoldenComplex(1, 0) for value in plus.values)
    minus = extend_character("1", "1", -1)
    negatives = [name for name, value in zip(minus.class_names, minus.values)
                 if value == GoldenComplex(-1, 0)]
    assert len(negatives) == 9
    assert all(name.startswith("[") for name in negatives)


def test_extend_character_examples():
    extended = extend_character("3", "3'", -1)
    assert extended.dimension == GoldenNumber(9)
    assert extended.value_at("2×2") == GoldenComplex(9, 0)
    assert not extended.spinorial
    plus = extend_character("3", "3'", 1)
    assert inner_product(plus.values, extended.values) == GoldenComplex(0, 0)
    difference = [p - m for p, m in zip(plus.values, extended.values)]
    for name, value in zip(plus.class_names, difference):
        if not name.startswith("["):
            assert value.is_zero()


def test_extend_rejects_bad_input():
    with pytest.raises(NotExtendableError):
        extend_character("2", "3", 1)
    with pytest.raises(ValueError):
        extend_character("1", "1", 0)


def test_chartable_counts_and_dimension_sum():
    chars = chartable_ghat()
    assert len(chars) == 54
    kinds = {"induced": 0, "extended": 0}
    for char in chars:
        kinds[char.label.kind] += 1
    assert kinds == {"induced": 36, "extended": 18}
    dims = [int(char.dimension.a) for char in chars]
    assert sum(d * d for d in dims) == 28800
    assert dims == sorted(dims)


def test_spinorial_dimension_multiset():
    chars = chartable_ghat()
    spinorial = sorted(int(c.dimension.a) for c in chars if c.spinorial)
    assert spinorial == SPINORIAL_DIMS
    assert sum(1 for c in chars if not c.spinorial) == 34
    spin_sq = sum(d * d for d in spinorial)
    assert spin_sq == 14400
    induced_nonspin = sum(int(c.dimension.a) ** 2 for c in chars
                          if not c.spinorial and c.label.kind == "induced")
    extended_nonspin = sum(int(c.dimension.a) ** 2 for c in chars
                           if not c.spinorial and c.label.kind == "extended")
    assert induced_nonspin == 9144
    assert extended_nonspin == 5256


def test_orthogonality_fast_paths():
    assert orthogonality_checks() == {"rows": True, "columns": True}


def test_orthogonality_exact_spot_checks():
    chars = chartable_ghat()
    rng = random.Random(12)
    indices = rng.sample(range(54), 6)
    for i in indices:
        for j in indices:
            value = inner_product(chars[i].values, chars[j].values)
            expected = GoldenComplex(1 if i == j else 0, 0)
            assert value == expected, (i, j)


def test_decompose_recovers_multiplicities():
    chars = chartable_ghat()
    combined = tuple(chars[3].values[k] + chars[40].values[k]
                     + chars[40].values[k] for k in range(54))
    multiplicities = decompose(combined)
    for index, value in enumerate(multiplicities):
        expected = {3: 1, 40: 2}.get(index, 0)
        assert value == GoldenComplex(expected, 0)


def test_galois_permutation_is_involution():
    permutation = galois_permutation()
    assert sorted(permutation) == list(range(54))
    for i, j in enumerate(permutation):
        assert permutation[j] == i
    fixed = sum(1 for i, j in enumerate(permutation) if i == j)
    assert fixed == 22
    chars = chartable_ghat()
    for i, j in enumerate(permutation):
        assert chars[i].galois() == chars[j].values


def test_galois_swaps_primed_labels():
    chars = chartable_ghat()
    permutation = galois_permutation()
    by_render = {char.label.render(): index for index, char in enumerate(chars)}
    source = by_render["(2'⊗3')⊕(3⊗2)"]
    target = by_render["(2⊗3)⊕(3'⊗2')"]
    assert permutation[source] == target


def test_induced_labels_are_orbit_minima():
    chars = chartable_ghat()
    induced_pairs = {char.label.pair for char in chars
                     if char.label.kind == "induced"}
    assert ("1", "2") in induced_pairs
    assert ("2", "1") not in induced_pairs
    for l1, l2 in induced_pairs:
        partner = (REP_STAR[l2], REP_STAR[l1])
        key = icosa.REP_LABELS.index
        assert (key(l1), key(l2)) <= (key(partner[0]), key(partner[1]))


def test_extended_labels_cover_invariant_pairs():
    chars = chartable_ghat()
    extended = [char for char in chars if char.label.kind == "extended"]
    pairs = {char.label.pair for char in extended}
    assert len(pairs) == 9
    for l1, l2 in pairs:
        assert REP_STAR[l1] == l2
    signs = {}
    for char in extended:
        signs.setdefault(char.label.pair, set()).add(char.label.sign)
    assert all(value == {1, -1} for value in signs.values())
