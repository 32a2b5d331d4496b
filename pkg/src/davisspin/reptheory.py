"""Exact representation theory: the nine irreducibles of the binary
icosahedral group built from symmetric powers, Galois twists and tensor
products of the defining 2-dimensional representation, and the 54-row
character table of the full symmetry group via induction from the index-2
subgroup and extension of twist-invariant characters."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .exactfield import GoldenComplex, GoldenNumber, ONE
from .quatmat import Quaternion
from . import ghat, icosa

Matrix = tuple[tuple[GoldenComplex, ...], ...]


class NotExtendableError(ValueError):
    """Character is not invariant under the swap-twist, so it has no extension."""


class FieldObstructionError(ValueError):
    """Extension would require a scalar that is not a square in Q(tau, i)."""


_GC_ZERO = GoldenComplex(0, 0)
_GC_ONE = GoldenComplex(1, 0)


def _mat_identity(n: int) -> Matrix:
    return tuple(tuple(_GC_ONE if i == j else _GC_ZERO for j in range(n))
                 for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    return tuple(tuple(sum((a[i][k] * b[k][j] for k in range(m)), start=_GC_ZERO)
                       for j in range(p)) for i in range(n))


def _mat_scale(a: Matrix, factor: GoldenComplex) -> Matrix:
    return tuple(tuple(v * factor for v in row) for row in a)


def _mat_trace(a: Matrix) -> GoldenComplex:
    return sum((a[i][i] for i in range(len(a))), start=_GC_ZERO)


def _mat_galois(a: Matrix) -> Matrix:
    return tuple(tuple(v.galois() for v in row) for row in a)


def _mat_kron(a: Matrix, b: Matrix) -> Matrix:
    na, nb = len(a), len(b)
    return tuple(tuple(a[i // nb][j // nb] * b[i % nb][j % nb]
                       for j in range(na * nb)) for i in range(na * nb))


def _mat_sym_power(m: Matrix, k: int) -> Matrix:
    a, b = m[0][0], m[0][1]
    c, d = m[1][0], m[1][1]
    powers_a = [_GC_ONE]
    powers_b = [_GC_ONE]
    powers_c = [_GC_ONE]
    powers_d = [_GC_ONE]
    for _ in range(k):
        powers_a.append(powers_a[-1] * a)
        powers_b.append(powers_b[-1] * b)
        powers_c.append(powers_c[-1] * c)
        powers_d.append(powers_d[-1] * d)
    rows = []
    for i in range(k + 1):
        row = []
        for j in range(k + 1):
            total = _GC_ZERO
            for r in range(min(i, k - j) + 1):
                s = i - r
                if s > j:
                    continue
                coefficient = comb(k - j, r) * comb(j, s)
                term = (powers_a[k - j - r] * powers_c[r]
                        * powers_b[j - s] * powers_d[s])
                total = total + term * GoldenNumber(coefficient)
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def psi1(q: Quaternion) -> Matrix:
    """Defining 2-dimensional image of a quaternion w + xi + yj + zk as
    [[w + xi, y + zi], [-(y - zi), w - xi]]."""
    w, x, y, z = q.coords
    a = GoldenComplex(w, x)
    b = GoldenComplex(y, z)
    return ((a, b), (-b.conjugate(), a.conjugate()))


REP_STAR = {"1": "1", "2": "2'", "2'": "2", "3": "3'", "3'": "3",
            "4": "4", "4'": "4'", "5": "5", "6": "6"}


def rep_image(label: str, q: Quaternion) -> Matrix:
    """Exact matrix image of a unit icosian under the named irreducible."""
    if label == "1":
        return ((_GC_ONE,),)
    base = psi1(q)
    if label == "2":
        return base
    if label == "2'":
        return _mat_galois(base)
    if label == "3":
        return _mat_sym_power(base, 2)
    if label == "3'":
        return _mat_galois(_mat_sym_power(base, 2))
    if label == "4":
        return _mat_kron(base, _mat_galois(base))
    if label == "4'":
        return _mat_sym_power(base, 3)
    if label == "5":
        return _mat_sym_power(base, 4)
    if label == "6":
        return _mat_sym_power(base, 5)
    raise KeyError(f"unknown irreducible representation: {label}")


@dataclass(frozen=True)
class MatrixRep:
    """Matrix representation given by an exact image map."""

    label: str
    dimension: int
    group_tag: str
    image: object  # callable Quaternion -> Matrix

    def __call__(self, q: Quaternion) -> Matrix:
        return self.image(q)

    @property
    def generator_images(self) -> dict[str, Matrix]:
        return {"g1": self.image(icosa.G1), "g2": self.image(icosa.G2)}


def rep2_of_2I() -> MatrixRep:
    return MatrixRep("2", 2, "2I", psi1)


def rep_of_2I(label: str) -> MatrixRep:
    if label not in icosa.REP_LABELS:
        raise KeyError(f"unknown irreducible representation: {label}")
    return MatrixRep(label, icosa.REP_DIMS[label], "2I",
                     lambda q, _l=label: rep_image(_l, q))


def sym_power(rep: MatrixRep, k: int) -> MatrixRep:
    if rep.dimension != 2:
        raise ValueError("symmetric powers are generated from a 2-dimensional representation")
    return MatrixRep(f"Sym{k}({rep.label})", k + 1, rep.group_tag,
                     lambda q: _mat_sym_power(rep.image(q), k))


def galois_rep(rep: MatrixRep) -> MatrixRep:
    return MatrixRep(f"galois({rep.label})", rep.dimension, rep.group_tag,
                     lambda q: _mat_galois(rep.image(q)))


def tensor(rep1: MatrixRep, rep2: MatrixRep) -> MatrixRep:
    return MatrixRep(f"{rep1.label}(x){rep2.label}",
                     rep1.dimension * rep2.dimension, rep1.group_tag,
                     lambda q: _mat_kron(rep1.image(q), rep2.image(q)))


def homcheck(rep: MatrixRep, pairs: int = 500, seed: int = 0) -> bool:
    """Image map is multiplicative on random pairs of group elements."""
    rng = random.Random(seed)
    elements = icosa.enumerate_2I()
    for _ in range(pairs):
        x, y = rng.choice(elements), rng.choice(elements)
        if rep.image(x * y) != _mat_mul(rep.image(x), rep.image(y)):
            return False
    return True


@dataclass(frozen=True)
class CharLabel:
    """Structured label: a 2I irreducible, an induced pair, or an extension."""

    kind: str  # "irreducible" | "induced" | "extended"
    pair: tuple[str, ...]
    sign: int | None = None

    def render(self) -> str:
        if self.kind == "irreducible":
            return self.pair[0]
        l1, l2 = self.pair
        if self.kind == "induced":
            return f"({l1}⊗{l2})⊕({REP_STAR[l2]}⊗{REP_STAR[l1]})"
        if self.sign == 1:
            return f"{l1}⊗{l2}"
        return f"-({l1}⊗{l2})"

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class Character:
    """Exact class function on a fixed ordered list of conjugacy classes."""

    label: CharLabel
    group_tag: str
    class_names: tuple[str, ...]
    values: tuple[GoldenComplex, ...]

    @property
    def dimension(self) -> GoldenNumber:
        return self.values[self.class_names.index(self._identity_name())].re

    def _identity_name(self) -> str:
        return "1" if self.group_tag == "2I" else "1×1"

    def value_at(self, class_name: str) -> GoldenComplex:
        return self.values[self.class_names.index(class_name)]

    @property
    def spinorial(self) -> bool:
        if self.group_tag == "2I":
            minus_name = "2"
        else:
            minus_name = "2×2"
        return self.value_at(minus_name) == -GoldenComplex(self.dimension, 0)

    def galois(self) -> tuple[GoldenComplex, ...]:
        return tuple(v.galois() for v in self.values)


def character_of(rep: MatrixRep) -> Character:
    values = tuple(GoldenComplex.coerce(_mat_trace(rep.image(
        icosa.class_representative(label)))) for label in icosa.CLASS_LABELS)
    return Character(CharLabel("irreducible", (rep.label,)), "2I",
                     icosa.CLASS_LABELS, values)


def _chi(label: str, class_label: str) -> GoldenNumber:
    return icosa.char_2I(label, class_label)


def _ghat_class_names() -> tuple[str, ...]:
    return tuple(cls.name for cls in ghat.conjugacy_classes())


def induce_character(l1: str, l2: str) -> Character:
    """Character induced from the tensor character l1 (x) l2 of the index-2
    subgroup: theta + theta-twisted on the subgroup, zero on the coset."""
    if l1 not in icosa.REP_LABELS or l2 not in icosa.REP_LABELS:
        raise KeyError(f"unknown irreducible representation: {l1!r} or {l2!r}")
    values = []
    for cls in ghat.conjugacy_classes():
        rep = cls.representative
        if rep.eps == 1:
            values.append(_GC_ZERO)
            continue
        x, y = icosa.class_of(rep.p), icosa.class_of(rep.q)
        value = (_chi(l1, x) * _chi(l2, y)
                 + _chi(REP_STAR[l2], x) * _chi(REP_STAR[l1], y))
        values.append(GoldenComplex.coerce(value))
    return Character(CharLabel("induced", (l1, l2)), "Ghat",
                     _ghat_class_names(), tuple(values))


@lru_cache(maxsize=None)
def _intertwiner_pair(l1: str, l2: str) -> tuple[Matrix, Matrix]:
    """Matrices B, C with B rho2(g) = rho1(alpha^-1 g) B and
    C rho1(g) = rho2(alpha g) C, normalized so that B C = C B = identity."""
    dim = icosa.REP_DIMS[l1]
    B = _solve_twist_intertwiner(l2, l1, use_alpha_inverse=True)
    C = _solve_twist_intertwiner(l1, l2, use_alpha_inverse=False)
    product = _mat_mul(B, C)
    scalar = product[0][0]
    if scalar.is_zero() or product != _mat_scale(_mat_identity(dim), scalar):
        raise FieldObstructionError("intertwiner product is not a nonzero scalar")
    B = _mat_scale(B, scalar.inverse())
    identity = _mat_identity(dim)
    if _mat_mul(B, C) != identity or _mat_mul(C, B) != identity:
        raise FieldObstructionError("intertwiner normalization failed")
    return B, C


def _solve_twist_intertwiner(source: str, target: str,
                             use_alpha_inverse: bool) -> Matrix:
    """One-dimensional solution space of X rho_source(g) = rho_target(tw g) X
    over the two generators, tw = alpha^-1 or alpha."""
    dim = icosa.REP_DIMS[source]
    if icosa.REP_DIMS[target] != dim:
        raise NotExtendableError("twisted factors have different dimensions")
    rows = []
    for g in (icosa.G1, icosa.G2):
        twisted = icosa.alpha_inverse(g) if use_alpha_inverse else icosa.alpha(g)
        m_source = rep_image(source, g)
        m_target = rep_image(target, twisted)
        for u in range(dim):
            for v in range(dim):
                row = [_GC_ZERO] * (dim * dim)
                for w in range(dim):
                    row[u * dim + w] = row[u * dim + w] + m_source[w][v]
                    row[w * dim + v] = row[w * dim + v] - m_target[u][w]
                rows.append(row)
    basis = _nullspace(rows, dim * dim)
    if len(basis) != 1:
        raise FieldObstructionError(
            f"intertwiner space has dimension {len(basis)}, expected 1")
    vec = basis[0]
    return tuple(tuple(vec[u * dim + v] for v in range(dim)) for u in range(dim))


_Int4 = tuple[int, int, int, int]  # (a + b*tau) + (c + d*tau)i
_I4_ZERO = (0, 0, 0, 0)
_I4_ONE = (1, 0, 0, 0)


def _i4_mul(x: _Int4, y: _Int4) -> _Int4:
    a1, b1, c1, d1 = x
    a2, b2, c2, d2 = y
    return (a1 * a2 + b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + b1 * b2 - c1 * d2 - d1 * c2 - d1 * d2,
            a1 * c2 + b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 + b1 * d2 + c1 * b2 + d1 * a2 + d1 * b2)


def _i4_exact_div(x: _Int4, y: _Int4) -> _Int4:
    """Quotient x / y in Z[tau, i], which must be exact."""
    conj = (y[0], y[1], -y[2], -y[3])
    numerator = _i4_mul(x, conj)
    p, q, _, _ = _i4_mul(y, conj)
    numerator = _i4_mul(numerator, (p + q, -q, 0, 0))
    norm = p * p + p * q - q * q
    quotient = tuple(part // norm for part in numerator)
    if any(part % norm for part in numerator):
        raise ArithmeticError("inexact division in Z[tau, i]")
    return quotient


def _i4_to_gc(x: _Int4) -> GoldenComplex:
    return GoldenComplex(GoldenNumber(x[0], x[1]), GoldenNumber(x[2], x[3]))


def _gc_row_to_int4(row: list[GoldenComplex]) -> list[_Int4]:
    from math import lcm
    denominator = 1
    for v in row:
        for frac in (v.re.a, v.re.b, v.im.a, v.im.b):
            denominator = lcm(denominator, frac.denominator)
    return [tuple(int(frac * denominator)
                  for frac in (v.re.a, v.re.b, v.im.a, v.im.b)) for v in row]


def _nullspace(rows: list[list[GoldenComplex]], width: int) -> list[list[GoldenComplex]]:
    """Nullspace basis: fraction-free forward elimination over Z[tau, i]
    followed by exact back-substitution."""
    matrix = [_gc_row_to_int4(row) for row in rows]
    pivot_cols: list[int] = []
    row_index = 0
    previous_pivot = _I4_ONE
    for col in range(width):
        pivot = next((r for r in range(row_index, len(matrix))
                      if matrix[r][col] != _I4_ZERO), None)
        if pivot is None:
            continue
        matrix[row_index], matrix[pivot] = matrix[pivot], matrix[row_index]
        pivot_row = matrix[row_index]
        pivot_value = pivot_row[col]
        for r in range(row_index + 1, len(matrix)):
            row = matrix[r]
            factor = row[col]
            if factor == _I4_ZERO:
                matrix[r] = [_i4_exact_div(_i4_mul(pivot_value, entry),
                                           previous_pivot) for entry in row]
            else:
                matrix[r] = [_i4_exact_div(
                    tuple(p - q for p, q in zip(_i4_mul(pivot_value, entry),
                                                _i4_mul(factor, top))),
                    previous_pivot) for entry, top in zip(row, pivot_row)]
        previous_pivot = pivot_value
        pivot_cols.append(col)
        row_index += 1
    free_cols = [c for c in range(width) if c not in pivot_cols]
    basis = []
    for free in free_cols:
        vec = [_GC_ZERO] * width
        vec[free] = _GC_ONE
        for r in range(len(pivot_cols) - 1, -1, -1):
            col = pivot_cols[r]
            total = _GC_ZERO
            for c in range(col + 1, width):
                if matrix[r][c] != _I4_ZERO and not vec[c].is_zero():
                    total = total + _i4_to_gc(matrix[r][c]) * vec[c]
            vec[col] = -(total * _i4_to_gc(matrix[r][col]).inverse())
        basis.append(vec)
    return basis


def extend_character(l1: str, l2: str, sign: int) -> Character:
    """One of the two extensions of the twist-invariant character l1 (x) l2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if l1 not in icosa.REP_LABELS or l2 not in icosa.REP_LABELS:
        raise KeyError(f"unknown irreducible representation: {l1!r} or {l2!r}")
    if REP_STAR[l1] != l2:
        raise NotExtendableError(
            f"{l1} (x) {l2} is not invariant under the swap-twist")
    B, C = _intertwiner_pair(l1, l2)
    values = []
    for cls in ghat.conjugacy_classes():
        rep = cls.representative
        if rep.eps == 0:
            x, y = icosa.class_of(rep.p), icosa.class_of(rep.q)
            values.append(GoldenComplex.coerce(_chi(l1, x) * _chi(l2, y)))
            continue
        witness = ghat.coset_witness(cls)
        trace = _mat_trace(_mat_mul(_mat_mul(rep_image(l1, witness.p), B),
                                    _mat_mul(rep_image(l2, witness.q), C)))
        if not trace.im.is_zero():
            raise FieldObstructionError("coset character value is not real")
        values.append(trace if sign == 1 else -trace)
    return Character(CharLabel("extended", (l1, l2), sign), "Ghat",
                     _ghat_class_names(), tuple(values))


@lru_cache(maxsize=None)
def chartable_ghat() -> tuple[Character, ...]:
    """All 54 irreducible characters of the full group."""
    labels = icosa.REP_LABELS
    seen: set[tuple[str, str]] = set()
    induced_pairs = []
    for l1 in labels:
        for l2 in labels:
            if (l1, l2) in seen:
                continue
            twist = (REP_STAR[l2], REP_STAR[l1])
            if twist == (l1, l2):
                continue
            seen.add((l1, l2))
            seen.add(twist)
            pair = min((l1, l2), twist,
                       key=lambda p: (labels.index(p[0]), labels.index(p[1])))
            induced_pairs.append(pair)
    chars = [induce_character(l1, l2) for l1, l2 in induced_pairs]
    for l in labels:
        chars.append(extend_character(l, REP_STAR[l], 1))
        chars.append(extend_character(l, REP_STAR[l], -1))
    chars.sort(key=lambda c: (c.dimension.a, str(c.label)))
    return tuple(chars)


def inner_product(values1: tuple[GoldenComplex, ...],
                  values2: tuple[GoldenComplex, ...]) -> GoldenComplex:
    """Exact class-function inner product over the full group."""
    classes = ghat.conjugacy_classes()
    total = _GC_ZERO
    for cls, v1, v2 in zip(classes, values1, values2):
        total = total + v1 * v2.conjugate() * GoldenNumber(cls.size)
    order = GoldenNumber(sum(cls.size for cls in classes))
    return total * GoldenComplex(order.inverse(), 0)


def decompose(values: tuple[GoldenComplex, ...]) -> tuple[GoldenComplex, ...]:
    """Multiplicity of each irreducible character, in chartable order."""
    return tuple(inner_product(values, char.values) for char in chartable_ghat())


def _integer_table() -> tuple[list[list[tuple[int, int]]], list[int]]:
    """Character table as integer coordinate pairs a + b*tau, with class sizes."""
    classes = ghat.conjugacy_classes()
    table = []
    for char in chartable_ghat():
        row = []
        for value in char.values:
            if not value.im.is_zero():
                raise FieldObstructionError("character table entry is not real")
            a, b = value.re.a, value.re.b
            if a.denominator != 1 or b.denominator != 1:
                raise FieldObstructionError(
                    "character table entry is not an algebraic integer")
            row.append((int(a), int(b)))
        table.append(row)
    return table, [cls.size for cls in classes]


def orthogonality_checks() -> dict[str, bool]:
    """Exhaustive exact row and column orthogonality of the character table."""
    table, sizes = _integer_table()
    order = sum(sizes)
    count = len(table)
    rows_ok = True
    for i in range(count):
        for j in range(i, count):
            total_a = total_b = 0
            for k in range(count):
                a1, b1 = table[i][k]
                a2, b2 = table[j][k]
                total_a += sizes[k] * (a1 * a2 + b1 * b2)
                total_b += sizes[k] * (a1 * b2 + a2 * b1 + b1 * b2)
            if total_a != (order if i == j else 0) or total_b != 0:
                rows_ok = False
    columns_ok = True
    for k in range(count):
        for l in range(k, count):
            total_a = total_b = 0
            for row in table:
                a1, b1 = row[k]
                a2, b2 = row[l]
                total_a += a1 * a2 + b1 * b2
                total_b += a1 * b2 + a2 * b1 + b1 * b2
            want = order // sizes[k] if k == l else 0
            if total_a != want or total_b != 0:
                columns_ok = False
    return {"rows": rows_ok, "columns": columns_ok}


def galois_permutation() -> tuple[int, ...]:
    """Entrywise Galois conjugation permutes the rows of the character table;
    returns the induced index permutation (an involution)."""
    chars = chartable_ghat()
    by_values = {char.values: i for i, char in enumerate(chars)}
    permutation = []
    for char in chars:
        image = char.galois()
        if image not in by_values:
            raise FieldObstructionError(
                f"Galois image of {char.label.render()} is not a table row")
        permutation.append(by_values[image])
    for i, j in enumerate(permutation):
        if permutation[j] != i:
            raise FieldObstructionError("Galois permutation is not an involution")
    return tuple(permutation)
