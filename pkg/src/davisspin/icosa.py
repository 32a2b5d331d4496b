"""The binary icosahedral group 2I as unit icosian quaternions: enumeration,
conjugacy classes, exact character table, word decomposition over the two
order-10 generators, and the distinguished outer automorphism."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product

from .exactfield import GoldenNumber, ONE, ZERO, TAU
from .quatmat import Quaternion, QUAT_ONE


class MembershipError(ValueError):
    """Quaternion is not an element of the binary icosahedral group."""


_HALF = Fraction(1, 2)

G1 = Quaternion(TAU * _HALF, _HALF, (TAU - 1) * _HALF, 0)
G2 = Quaternion(TAU * _HALF, _HALF, (1 - TAU) * _HALF, 0)

CLASS_LABELS = ("1", "2", "3", "4", "5A", "5B", "6", "10A", "10B")

CLASS_RE = {
    "1": ONE,
    "2": -ONE,
    "3": GoldenNumber(-_HALF),
    "4": ZERO,
    "5A": (TAU - 1) * _HALF,
    "5B": -TAU * _HALF,
    "6": GoldenNumber(_HALF),
    "10A": TAU * _HALF,
    "10B": (1 - TAU) * _HALF,
}

CLASS_SIZES = {"1": 1, "2": 1, "3": 20, "4": 30, "5A": 12, "5B": 12,
               "6": 20, "10A": 12, "10B": 12}

CLASS_ORDERS = {"1": 1, "2": 2, "3": 3, "4": 4, "5A": 5, "5B": 5,
                "6": 6, "10A": 10, "10B": 10}

REP_LABELS = ("1", "2", "2'", "3", "3'", "4", "4'", "5", "6")

REP_DIMS = {"1": 1, "2": 2, "2'": 2, "3": 3, "3'": 3, "4": 4, "4'": 4,
            "5": 5, "6": 6}


def _golden_key(value: GoldenNumber) -> tuple[int, int, int, int]:
    return (value.a.numerator, value.a.denominator,
            value.b.numerator, value.b.denominator)


def element_key(q: Quaternion) -> tuple:
    return tuple(_golden_key(c) for c in q.coords)


def _is_even_permutation(perm: tuple[int, ...]) -> bool:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm))
                     if perm[i] > perm[j])
    return inversions % 2 == 0


@lru_cache(maxsize=None)
def enumerate_2I() -> tuple[Quaternion, ...]:
    """All 120 unit icosians: the 24 Lipschitz-type units together with the 96
    even coordinate permutations of (0, 1, tau, tau-1)/2 with free signs."""
    elements: set[Quaternion] = set()
    for axis in range(4):
        for sign in (1, -1):
            coords = [ZERO] * 4
            coords[axis] = GoldenNumber(sign)
            elements.add(Quaternion(*coords))
    for signs in product((1, -1), repeat=4):
        elements.add(Quaternion(*(GoldenNumber(Fraction(s, 2)) for s in signs)))
    values = (ZERO, ONE, TAU, TAU - 1)
    for perm in permutations(range(4)):
        if not _is_even_permutation(perm):
            continue
        for signs in product((1, -1), repeat=4):
            coords = [ZERO] * 4
            for slot, value_index in enumerate(perm):
                coords[slot] = values[value_index] * Fraction(signs[slot], 2)
            elements.add(Quaternion(*coords))
    ordered = sorted(elements, key=element_key)
    if len(ordered) != 120:
        raise RuntimeError(f"enumeration produced {len(ordered)} elements")
    return tuple(ordered)


@lru_cache(maxsize=None)
def _element_set() -> frozenset[Quaternion]:
    return frozenset(enumerate_2I())


@lru_cache(maxsize=None)
def _class_table() -> dict[Quaternion, str]:
    re_to_label = {_golden_key(re): label for label, re in CLASS_RE.items()}
    table = {}
    for q in enumerate_2I():
        label = re_to_label.get(_golden_key(GoldenNumber.coerce(q.re)))
        if label is None:
            raise RuntimeError(f"element with unexpected real part: {q}")
        table[q] = label
    return table


def class_of(q: Quaternion) -> str:
    label = _class_table().get(q)
    if label is None:
        raise MembershipError(f"not an element of the binary icosahedral group: {q}")
    return label


@lru_cache(maxsize=None)
def class_elements(label: str) -> tuple[Quaternion, ...]:
    if label not in CLASS_LABELS:
        raise MembershipError(f"unknown conjugacy class: {label}")
    return tuple(q for q in enumerate_2I() if _class_table()[q] == label)


def class_representative(label: str) -> Quaternion:
    overrides = {"10A": G1, "5A": G1 * G1}
    if label in overrides:
        return overrides[label]
    return class_elements(label)[0]


_M = -ONE
_T = TAU

_CHAR_TABLE: dict[str, tuple[GoldenNumber, ...]] = {
    "1":  tuple(GoldenNumber(v) for v in (1, 1, 1, 1, 1, 1, 1, 1, 1)),
    "2":  (GoldenNumber(2), GoldenNumber(-2), _M, ZERO, _T - 1, -_T,
           ONE, _T, 1 - _T),
    "2'": (GoldenNumber(2), GoldenNumber(-2), _M, ZERO, -_T, _T - 1,
           ONE, 1 - _T, _T),
    "3":  (GoldenNumber(3), GoldenNumber(3), ZERO, _M, 1 - _T, _T,
           ZERO, _T, 1 - _T),
    "3'": (GoldenNumber(3), GoldenNumber(3), ZERO, _M, _T, 1 - _T,
           ZERO, 1 - _T, _T),
    "4":  (GoldenNumber(4), GoldenNumber(4), ONE, ZERO, _M, _M,
           ONE, _M, _M),
    "4'": (GoldenNumber(4), GoldenNumber(-4), ONE, ZERO, _M, _M,
           -ONE, ONE, ONE),
    "5":  (GoldenNumber(5), GoldenNumber(5), _M, ONE, ZERO, ZERO,
           -ONE, ZERO, ZERO),
    "6":  (GoldenNumber(6), GoldenNumber(-6), ZERO, ZERO, ONE, ONE,
           ZERO, _M, _M),
}


def char_2I(rep_label: str, class_label: str) -> GoldenNumber:
    """Exact character value of the named irreducible representation of 2I."""
    if rep_label not in _CHAR_TABLE:
        raise KeyError(f"unknown irreducible representation: {rep_label}")
    if class_label not in CLASS_LABELS:
        raise MembershipError(f"unknown conjugacy class: {class_label}")
    return _CHAR_TABLE[rep_label][CLASS_LABELS.index(class_label)]


def word_decompose(q: Quaternion,
                   generators: tuple[Quaternion, ...] = (G1, G2)) -> list[int]:
    """Shortest list of generator indices whose left-to-right product is q,
    found breadth-first."""
    if q == QUAT_ONE:
        return []
    words: dict[Quaternion, list[int]] = {QUAT_ONE: []}
    frontier = [QUAT_ONE]
    while frontier:
        next_frontier = []
        for current in frontier:
            for index, generator in enumerate(generators):
                successor = current * generator
                if successor in words:
                    continue
                words[successor] = words[current] + [index]
                if successor == q:
                    return words[successor]
                next_frontier.append(successor)
        frontier = next_frontier
    raise ValueError("the given generators do not generate the element")


def evaluate_word(word: list[int],
                  generators: tuple[Quaternion, ...] = (G1, G2)) -> Quaternion:
    result = QUAT_ONE
    for index in word:
        result = result * generators[index]
    return result


@lru_cache(maxsize=None)
def _alpha_table() -> dict[Quaternion, Quaternion]:
    image_of = {0: G1 ** 3, 1: G2 ** 7}
    table: dict[Quaternion, Quaternion] = {QUAT_ONE: QUAT_ONE}
    frontier = [QUAT_ONE]
    generators = (G1, G2)
    while frontier:
        next_frontier = []
        for current in frontier:
            for index, generator in enumerate(generators):
                successor = current * generator
                if successor in table:
                    continue
                table[successor] = table[current] * image_of[index]
                next_frontier.append(successor)
        frontier = next_frontier
    if len(table) != 120 or len(set(table.values())) != 120:
        raise RuntimeError("automorphism table is not a bijection of 2I")
    return table


@lru_cache(maxsize=None)
def _alpha_inverse_table() -> dict[Quaternion, Quaternion]:
    return {image: source for source, image in _alpha_table().items()}


def alpha(q: Quaternion) -> Quaternion:
    """The outer automorphism of 2I determined by g1 -> g1^3, g2 -> g2^7."""
    image = _alpha_table().get(q)
    if image is None:
        raise MembershipError(f"not an element of the binary icosahedral group: {q}")
    return image


def alpha_inverse(q: Quaternion) -> Quaternion:
    source = _alpha_inverse_table().get(q)
    if source is None:
        raise MembershipError(f"not an element of the binary icosahedral group: {q}")
    return source
