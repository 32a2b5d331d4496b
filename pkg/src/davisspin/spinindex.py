"""Spin numbers of isolated fixed points in dimensions 4 and 2, the recorded
fixed-point data of the Davis manifold's fully symmetric spin structure, the
resulting 54-class spin class function, and its decomposition into the two
signed 12-dimensional spinorial irreducibles."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from .exactfield import (GoldenComplex, GoldenNumber, ONE,
                         KAPPA_RADICAND, QuadExtNumber, Scalar)
from .quatmat import (HyperboloidPoint, LorentzMatrix5, Quaternion,
                      SpinMatrix2, SpinMatrix4, eta2, eta4)
from . import ghat, icosa, reptheory


class NonIsolatedError(ValueError):
    """The fixed point is not isolated (zero angular denominator)."""


class InconsistentInputError(ValueError):
    """The supplied point is not a fixed point of the supplied isometry."""


class NotApplicableError(ValueError):
    """The requested formula does not apply to this conjugacy class."""


class DataInconsistencyError(ValueError):
    """Bundled fixed-point data contradicts the computed group structure."""


@dataclass(frozen=True)
class SpinValue:
    """Exact spin defect of one fixed point: real in dimension 4, purely
    imaginary in dimension 2."""

    value: GoldenComplex

    def real(self) -> complex:
        return self.value.real()

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class IsolatedFixedPoint4:
    """A hyperboloid point together with a spin matrix whose isometry fixes it."""

    x: HyperboloidPoint
    phat: SpinMatrix4


def _scalar_quotient(numerator: Scalar, denominator: Scalar) -> Scalar:
    if isinstance(denominator, QuadExtNumber):
        return denominator.inverse() * numerator
    return numerator * denominator.inverse()


def nu_diag_4d(p: Quaternion, q: Quaternion) -> SpinValue:
    """Spin defect at the apex for the diagonal isometry pair (p, q):
    1 / (2(Re p - Re q))."""
    if not (p.is_unit() and q.is_unit()):
        raise InconsistentInputError("rotation entries must be unit quaternions")
    difference = p.re - q.re
    if _is_zero_scalar(difference):
        raise NonIsolatedError("equal real parts: the fixed point is not isolated")
    value = _scalar_quotient(GoldenNumber(1), difference + difference)
    return SpinValue(GoldenComplex.coerce(_as_golden(value)))


def _is_zero_scalar(value: Scalar) -> bool:
    return value.is_zero()


def _as_golden(value: Scalar) -> GoldenNumber:
    if isinstance(value, QuadExtNumber):
        try:
            return value.golden_part()
        except ValueError as error:
            raise NotApplicableError(
                "spin value lands outside the golden field") from error
    return value


def nu_isolated_4d(fp: IsolatedFixedPoint4) -> SpinValue:
    """Spin defect x5 / (2(Re Phat11 - Re Phat22)) at an isolated fixed point."""
    matrix = fp.phat.normalized()
    if matrix.scale_sq != ONE:
        raise NotApplicableError(
            "exact spin formula needs matrix entries in the golden ring")
    if eta4(matrix).apply(fp.x) != fp.x:
        raise InconsistentInputError("the point is not fixed by the isometry")
    difference = matrix.a.re - matrix.d.re
    if _is_zero_scalar(difference):
        raise NonIsolatedError("equal diagonal real parts: fixed point not isolated")
    value = _scalar_quotient(fp.x[4], difference + difference)
    return SpinValue(GoldenComplex.coerce(_as_golden(value)))


def nu_diag_2d(u: GoldenComplex) -> SpinValue:
    """Spin defect 1 / (2 Im(u) i) at the apex for the diagonal pair (u, u-bar)."""
    u = GoldenComplex.coerce(u)
    if u * u.conjugate() != GoldenComplex(1, 0):
        raise InconsistentInputError("rotation entry must be a unit complex number")
    if u.im.is_zero():
        raise NonIsolatedError("real rotation entry: the fixed point is not isolated")
    return SpinValue(GoldenComplex(GoldenNumber(0),
                                   -(u.im + u.im).inverse()))


def nu_isolated_2d(phat: SpinMatrix2, x3: GoldenNumber | int | Fraction) -> SpinValue:
    """Spin defect x3 / (2 Im(Phat11) i) at an isolated fixed point."""
    x3 = GoldenNumber.coerce(x3)
    imaginary = phat.a.im
    if imaginary.is_zero():
        raise NonIsolatedError("real upper-left entry: fixed point not isolated")
    return SpinValue(GoldenComplex(GoldenNumber(0),
                                   -(x3 * (imaginary + imaginary).inverse())))


_FQ_ZERO = (0.0, 0.0, 0.0, 0.0)


def _fq_mul(p, q):
    pw, px, py, pz = p
    qw, qx, qy, qz = q
    return (pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw)


def _fq_conj(p):
    return (p[0], -p[1], -p[2], -p[3])


def _fq_scale(p, factor):
    return tuple(factor * coordinate for coordinate in p)


def _fm_mul(a, b):
    return [[tuple(sum(coords) for coords in zip(*(
        _fq_mul(a[i][k], b[k][j]) for k in range(2))))
        for j in range(2)] for i in range(2)]


def _fq_abs(p) -> float:
    return sum(coordinate * coordinate for coordinate in p) ** 0.5


def _eigen_denominator(eigenvalues, isolation_tol: float):
    """Drop the eigenvalue nearest 1 (the fixed direction); the product of
    |1 - lambda| over the rest, raising if another angle degenerates."""
    gaps = [abs(1 - value) for value in eigenvalues]
    keep = sorted(range(len(eigenvalues)), key=lambda i: gaps[i])[1:]
    if any(gaps[i] < isolation_tol for i in keep):
        raise NonIsolatedError("a rotation angle vanishes: fixed point not isolated")
    product = 1.0
    for i in keep:
        product *= gaps[i]
    return product


def nu_numeric_oracle(phat: SpinMatrix4, x: HyperboloidPoint,
                      isolation_tol: float = 1e-6) -> float:
    """Floating-point spin defect: diagonalize by the boost carrying the apex
    to x, read the half-spin trace difference, and divide by the angular
    defect product from the Lorentz eigenvalues."""
    coords = x.real()
    w = tuple(coordinate / (1 + coords[4]) for coordinate in coords[:4])
    norm_sq = sum(coordinate * coordinate for coordinate in w)
    scale = 1 / (1 - norm_sq) ** 0.5
    one = (1.0, 0.0, 0.0, 0.0)
    w_conj = _fq_conj(w)
    boost = [[_fq_scale(one, scale), _fq_scale(w, scale)],
             [_fq_scale(w_conj, scale), _fq_scale(one, scale)]]
    boost_inv = [[_fq_scale(one, scale), _fq_scale(w, -scale)],
                 [_fq_scale(w_conj, -scale), _fq_scale(one, scale)]]
    entries = phat.real()
    conjugated = _fm_mul(boost_inv, _fm_mul(entries, boost))
    if _fq_abs(conjugated[0][1]) > 1e-8 or _fq_abs(conjugated[1][0]) > 1e-8:
        raise InconsistentInputError("the point is not fixed by the isometry")
    numerator = 2 * (conjugated[0][0][0] - conjugated[1][1][0])
    eigenvalues = np.linalg.eigvals(np.array(eta4(phat).real()))
    return numerator / _eigen_denominator(eigenvalues, isolation_tol)


def nu_numeric_oracle_2d(phat: SpinMatrix2, x,
                         isolation_tol: float = 1e-6) -> complex:
    """Two-dimensional analogue; returns a purely imaginary complex number."""
    coords = x.real()
    w = complex(coords[0], coords[1]) / (1 + coords[2])
    scale = 1 / (1 - abs(w) ** 2) ** 0.5
    a, b = phat.a.real(), phat.b.real()
    c, d = phat.c.real(), phat.d.real()
    top_left = scale * scale * ((a - w * c) + (b - w * d) * w.conjugate())
    off = scale * scale * ((a - w * c) * w + (b - w * d))
    if abs(off) > 1e-8:
        raise InconsistentInputError("the point is not fixed by the isometry")
    numerator = top_left.conjugate() - top_left
    eigenvalues = np.linalg.eigvals(np.array(eta2(phat).real()))
    return numerator / _eigen_denominator(eigenvalues, isolation_tol)


PROVENANCE_TAGS = ("computed-lemma82", "forced-zero-lemma71",
                   "forced-zero-lemma72", "recorded-paper-data")


@dataclass(frozen=True)
class DavisSpinRow:
    """One conjugacy class with its fixed-point count and spin number."""

    name: str
    order: int
    size: int
    fp_count: int | None  # None encodes an infinite fixed-point set
    spin: GoldenNumber
    provenance: str
    minus: str
    recorded: bool = True

    def fp_label(self) -> str:
        return "inf" if self.fp_count is None else str(self.fp_count)


def _data_path():
    override = os.environ.get("SPININDEX_DATA")
    if override:
        return override
    return resources.files("davisspin").joinpath("data/davis_table6.json")


def davis_table() -> tuple[DavisSpinRow, ...]:
    """The recorded per-class fixed-point rows, in recorded order."""
    path = _data_path()
    try:
        if hasattr(path, "read_text"):
            payload = json.loads(path.read_text())
        else:
            with open(path, encoding="utf-8") as handle:
                payload = json.load(handle)
    except OSError as error:
        raise DataInconsistencyError(f"cannot read spin data: {error}") from error
    except json.JSONDecodeError as error:
        raise DataInconsistencyError(f"malformed spin data: {error}") from error
    rows = []
    seen = set()
    for record in payload.get("rows", ()):
        try:
            name = ghat.normalize_class_name(record["name"])
            fp_field = record["fp_count"]
            fp_count = None if fp_field == "inf" else int(fp_field)
            spin_a, spin_b = record["spin"]
            row = DavisSpinRow(
                name=name,
                order=int(record["ord"]),
                size=int(record["size"]),
                fp_count=fp_count,
                spin=GoldenNumber(int(spin_a), int(spin_b)),
                provenance=str(record["provenance"]),
                minus=ghat.normalize_class_name(record["minus"]),
            )
        except (KeyError, TypeError, ValueError) as error:
            raise DataInconsistencyError(
                f"bad spin data row {record!r}: {error}") from error
        if row.provenance not in PROVENANCE_TAGS:
            raise DataInconsistencyError(
                f"unknown provenance {row.provenance!r} for {row.name}")
        if fp_count is not None and fp_count < 0:
            raise DataInconsistencyError(f"negative fixed-point count for {row.name}")
        if row.name in seen:
            raise DataInconsistencyError(f"duplicate spin data row {row.name}")
        seen.add(row.name)
        rows.append(row)
    if len(rows) != 34:
        raise DataInconsistencyError(
            f"expected 34 recorded rows, found {len(rows)}")
    return tuple(rows)


def _validated_rows() -> dict[str, DavisSpinRow]:
    """Recorded rows cross-checked against the computed group structure."""
    by_name = {}
    for row in davis_table():
        cls = ghat.class_by_name(row.name)
        if cls.order != row.order or cls.size != row.size:
            raise DataInconsistencyError(
                f"{row.name}: recorded order/size {row.order}/{row.size} "
                f"differ from computed {cls.order}/{cls.size}")
        if ghat.minus_class(cls).name != row.minus:
            raise DataInconsistencyError(
                f"{row.name}: recorded minus class {row.minus} differs from "
                f"computed {ghat.minus_class(cls).name}")
        if row.minus == row.name and not row.spin.is_zero():
            raise DataInconsistencyError(
                f"{row.name}: self-paired class must have spin 0")
        by_name[row.name] = row
    for row in by_name.values():
        if row.provenance == "computed-lemma82":
            if "+" not in row.name:
                raise DataInconsistencyError(
                    f"{row.name}: two-fixed-point provenance needs a merged name")
            if _pair_formula(row.name) != row.spin:
                raise DataInconsistencyError(
                    f"{row.name}: recorded spin {row.spin} differs from the "
                    "two-fixed-point formula value")
    return by_name


def _pair_formula(name: str) -> GoldenNumber:
    first, second = name.split("+")
    x, y = first.split("×")
    y_prime, x_prime = second.split("×")
    total = GoldenNumber(0)
    for left, right in ((x, y), (y_prime, x_prime)):
        difference = icosa.CLASS_RE[left] - icosa.CLASS_RE[right]
        if difference.is_zero():
            raise NonIsolatedError(
                f"classes {left} and {right} share a real part")
        total = total + (difference + difference).inverse()
    return total


def spin_number_two_fp(name: str) -> SpinValue:
    """Spin number of a subgroup-type class fixing exactly two points:
    the sum of the two apex defects read off the merged class name."""
    canonical = ghat.normalize_class_name(name)
    cls = ghat.class_by_name(canonical)
    if cls.is_coset:
        raise NotApplicableError(
            f"{canonical} acts with coset type; the two-point formula "
            "needs a rotation pair")
    rows = {r.name: r for r in davis_table()}
    row = rows.get(canonical)
    if row is None:
        raise NotApplicableError(f"no fixed-point data recorded for {canonical}")
    if row.fp_count != 2:
        raise NotApplicableError(
            f"{canonical} fixes {row.fp_label()} points, not 2")
    if "+" not in canonical:
        raise NotApplicableError(
            f"{canonical} is not a merged twist-pair class")
    return SpinValue(GoldenComplex.coerce(_pair_formula(canonical)))


def davis_spin_character() -> tuple[tuple[DavisSpinRow, ...],
                                    tuple[GoldenComplex, ...]]:
    """All 54 classes in canonical order with spin numbers and provenance:
    recorded rows verbatim, minus classes by antisymmetry."""
    by_name = _validated_rows()
    rows = []
    values = []
    for cls in ghat.conjugacy_classes():
        row = by_name.get(cls.name)
        if row is None:
            partner = by_name.get(ghat.minus_class(cls).name)
            if partner is None:
                raise DataInconsistencyError(
                    f"no recorded data for {cls.name} or its minus class")
            row = DavisSpinRow(name=cls.name, order=cls.order, size=cls.size,
                               fp_count=partner.fp_count, spin=-partner.spin,
                               provenance=partner.provenance,
                               minus=partner.name, recorded=False)
        rows.append(row)
        values.append(GoldenComplex.coerce(row.spin))
    return tuple(rows), tuple(values)


@dataclass(frozen=True)
class IndexDecomposition:
    """The spin class function as a difference of two irreducibles, plus the
    parity consequence for any consistent harmonic spinor dimension."""

    multiplicities: tuple[int, ...]
    plus: reptheory.Character
    minus: reptheory.Character
    harmonic_minimum: int
    harmonic_step: int


def decompose_davis_index() -> IndexDecomposition:
    _, values = davis_spin_character()
    multiplicities = []
    for value in reptheory.decompose(values):
        if not value.im.is_zero() or value.re.b != 0 \
                or value.re.a.denominator != 1:
            raise DataInconsistencyError(
                f"non-integral multiplicity {value} in the index decomposition")
        multiplicities.append(int(value.re.a))
    chars = reptheory.chartable_ghat()
    positives = [chars[i] for i, m in enumerate(multiplicities) if m == 1]
    negatives = [chars[i] for i, m in enumerate(multiplicities) if m == -1]
    others = [m for m in multiplicities if m not in (0, 1, -1)]
    if len(positives) != 1 or len(negatives) != 1 or others:
        raise DataInconsistencyError(
            "index decomposition is not a difference of two irreducibles")
    plus, minus = positives[0], negatives[0]
    for character in (plus, minus):
        if character.dimension != GoldenNumber(12) or not character.spinorial:
            raise DataInconsistencyError(
                f"{character.label.render()} should be 12-dimensional spinorial")
    return IndexDecomposition(
        multiplicities=tuple(multiplicities), plus=plus, minus=minus,
        harmonic_minimum=int((plus.dimension + minus.dimension).a),
        harmonic_step=8)


def _kappa_poly(base_a=0, base_b=0, ext_a=0, ext_b=0) -> QuadExtNumber:
    return QuadExtNumber(GoldenNumber(base_a, base_b),
                         GoldenNumber(ext_a, ext_b), KAPPA_RADICAND)


def davis_sigma_data() -> tuple[LorentzMatrix5, SpinMatrix4]:
    """The exceptional involution of the Davis manifold's symmetry group and
    its order-4 spin lift, both exact over the golden field extended by
    kappa = sqrt(1 + 3*tau)."""
    g = GoldenNumber
    quarter = Fraction(1, 4)
    sigma = LorentzMatrix5((
        (g(-4, -7), g(-1, -3), g(0), g(-1, -1), _kappa_poly(ext_a=2, ext_b=3)),
        (g(-1, -3), g(-1, -1), g(0), g(0), _kappa_poly(ext_a=1, ext_b=1)),
        (g(0), g(0), g(1), g(0), g(0)),
        (g(-1, -1), g(0), g(0), g(0), _kappa_poly(ext_a=1)),
        (_kappa_poly(ext_a=-2, ext_b=-3), _kappa_poly(ext_a=-1, ext_b=-1),
         g(0), _kappa_poly(ext_a=-1), g(5, 8)),
    ))
    sigma_hat = SpinMatrix4(
        Quaternion(g(0), _kappa_poly(ext_a=1, ext_b=1), _kappa_poly(ext_a=1),
                   _kappa_poly(ext_b=-1)),
        Quaternion(g(0, 1), g(-1, -3), g(0), g(1, 2)),
        Quaternion(g(0, 1), g(1, 3), g(0), g(-1, -2)),
        Quaternion(g(0), _kappa_poly(ext_a=-1, ext_b=-1), _kappa_poly(ext_a=1),
                   _kappa_poly(ext_b=1)),
        scale_sq=g(-quarter, quarter))
    return sigma, sigma_hat


def davis_rotation_lifts() -> dict[str, tuple[SpinMatrix4, LorentzMatrix5]]:
    """The four order-10 twist generators of the symmetry group: spin lifts
    paired with their explicit Lorentz images."""
    g = GoldenNumber

    def halves(*pairs):
        return tuple(g(Fraction(a, 2), Fraction(b, 2)) for a, b in pairs)

    def lorentz(rows):
        return LorentzMatrix5(tuple(halves(*row) for row in rows))

    alpha1 = lorentz((
        ((0, 1), (-1, 0), (1, -1), (0, 0), (0, 0)),
        ((1, 0), (0, 1), (0, 0), (-1, 1), (0, 0)),
        ((-1, 1), (0, 0), (0, 1), (-1, 0), (0, 0)),
        ((0, 0), (1, -1), (1, 0), (0, 1), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (0, 0), (2, 0)),
    ))
    alpha2 = lorentz((
        ((0, 1), (-1, 0), (-1, 1), (0, 0), (0, 0)),
        ((1, 0), (0, 1), (0, 0), (1, -1), (0, 0)),
        ((1, -1), (0, 0), (0, 1), (-1, 0), (0, 0)),
        ((0, 0), (-1, 1), (1, 0), (0, 1), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (0, 0), (2, 0)),
    ))
    beta1 = lorentz((
        ((0, 1), (1, 0), (-1, 1), (0, 0), (0, 0)),
        ((-1, 0), (0, 1), (0, 0), (-1, 1), (0, 0)),
        ((1, -1), (0, 0), (0, 1), (-1, 0), (0, 0)),
        ((0, 0), (1, -1), (1, 0), (0, 1), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (0, 0), (2, 0)),
    ))
    beta2 = lorentz((
        ((0, 1), (1, 0), (1, -1), (0, 0), (0, 0)),
        ((-1, 0), (0, 1), (0, 0), (1, -1), (0, 0)),
        ((-1, 1), (0, 0), (0, 1), (-1, 0), (0, 0)),
        ((0, 0), (-1, 1), (1, 0), (0, 1), (0, 0)),
        ((0, 0), (0, 0), (0, 0), (0, 0), (2, 0)),
    ))
    one = Quaternion(g(1))
    return {
        "alpha1": (SpinMatrix4.diagonal(icosa.G1, one), alpha1),
        "alpha2": (SpinMatrix4.diagonal(icosa.G2, one), alpha2),
        "beta1": (SpinMatrix4.diagonal(one, icosa.G1), beta1),
        "beta2": (SpinMatrix4.diagonal(one, icosa.G2), beta2),
    }
