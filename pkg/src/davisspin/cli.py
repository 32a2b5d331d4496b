"""Command-line front end: exact table emission, single spin-value
evaluation, and the full verification suite with a machine-readable report."""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys

from .exactfield import GoldenComplex, GoldenNumber, QuadExtNumber
from .quatmat import (APEX, HyperboloidPoint, HyperboloidPoint2, Quaternion,
                      SpinMatrix2, SpinMatrix4, eta4, verify_lift)
from . import ghat, icosa, reptheory, spinindex


def _csv_block(header, rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _pretty_block(header, rows) -> str:
    table = [tuple(str(cell) for cell in row) for row in [header, *rows]]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
             for row in table]
    lines.insert(1, "  ".join("-" * width for width in widths))
    return "\n".join(lines) + "\n"


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=1) + "\n"


def _cmd_icosa_table(args) -> int:
    class_rows = [(label, icosa.CLASS_ORDERS[label], icosa.CLASS_SIZES[label],
                   str(icosa.CLASS_RE[label])) for label in icosa.CLASS_LABELS]
    char_rows = [(rep, *(str(icosa.char_2I(rep, label))
                         for label in icosa.CLASS_LABELS))
                 for rep in icosa.REP_LABELS]
    class_header = ("class", "order", "size", "re")
    char_header = ("character", *icosa.CLASS_LABELS)
    if args.format == "json":
        text = _json_dump({
            "classes": [dict(zip(class_header, row)) for row in class_rows],
            "characters": [{"label": row[0],
                            "values": dict(zip(icosa.CLASS_LABELS, row[1:]))}
                           for row in char_rows],
        })
    elif args.format == "csv":
        text = (_csv_block(class_header, class_rows) + "\n"
                + _csv_block(char_header, char_rows))
    else:
        text = (_pretty_block(class_header, class_rows) + "\n"
                + _pretty_block(char_header, char_rows))
    _emit(text, args.output)
    return 0


def _cmd_ghat_classes(args) -> int:
    rows = [(cls.name, cls.order, cls.size, ghat.minus_class(cls).name)
            for cls in ghat.conjugacy_classes()]
    header = ("class", "order", "size", "minus")
    if args.format == "json":
        text = _json_dump([dict(zip(header, row)) for row in rows])
    elif args.format == "csv":
        text = _csv_block(header, rows)
    else:
        text = _pretty_block(header, rows)
    _emit(text, args.output)
    return 0


def _cmd_ghat_chartable(args) -> int:
    if args.check:
        checks = reptheory.orthogonality_checks()
        if not all(checks.values()):
            sys.stderr.write(f"orthogonality failure: {checks}\n")
            return 1
    chars = reptheory.chartable_ghat()
    class_names = [cls.name for cls in ghat.conjugacy_classes()]
    if args.format == "json":
        text = _json_dump({
            "classes": class_names,
            "characters": [{
                "label": char.label.render(),
                "dimension": int(char.dimension.a),
                "spinorial": char.spinorial,
                "values": [str(value) for value in char.values],
            } for char in chars],
        })
    elif args.format == "csv":
        rows = [(char.label.render(), *(str(value) for value in char.values))
                for char in chars]
        text = _csv_block(("character", *class_names), rows)
    else:
        blocks = []
        for char in chars:
            values = ", ".join(f"{name}: {value}" for name, value
                               in zip(class_names, char.values))
            blocks.append(f"{char.label.render()} (dim {int(char.dimension.a)}, "
                          f"spinorial {char.spinorial})\n  {values}")
        text = "\n".join(blocks) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_spin_davis(args) -> int:
    rows = [(row.name, row.order, row.size, row.fp_label(), str(row.spin),
             row.provenance, row.minus) for row in spinindex.davis_table()]
    header = ("class", "order", "size", "fp_count", "spin", "provenance", "minus")
    if args.format == "json":
        text = _json_dump([dict(zip(header, row)) for row in rows])
    elif args.format == "csv":
        text = _csv_block(header, rows)
    else:
        text = _pretty_block(header, rows)
    _emit(text, args.output)
    return 0


def _cmd_spin_decompose(args) -> int:
    decomposition = spinindex.decompose_davis_index()
    chars = reptheory.chartable_ghat()
    rows = [(char.label.render(), int(char.dimension.a), multiplicity)
            for char, multiplicity in zip(chars, decomposition.multiplicities)]
    summary = (f"+ {decomposition.plus.label.render()}, "
               f"- {decomposition.minus.label.render()}; "
               f"dim H = {decomposition.harmonic_minimum} "
               f"+ {decomposition.harmonic_step}k")
    if args.format == "json":
        text = _json_dump({
            "plus": decomposition.plus.label.render(),
            "minus": decomposition.minus.label.render(),
            "harmonic_minimum": decomposition.harmonic_minimum,
            "harmonic_step": decomposition.harmonic_step,
            "multiplicities": [dict(zip(("character", "dimension", "multiplicity"),
                                        row)) for row in rows],
        })
    elif args.format == "csv":
        text = _csv_block(("character", "dimension", "multiplicity"), rows)
    else:
        text = summary + "\n\n" + _pretty_block(
            ("character", "dimension", "multiplicity"), rows)
    _emit(text, args.output)
    return 0


def _parse_scalar(payload):
    if isinstance(payload, dict) and "base" in payload:
        return QuadExtNumber.from_json(payload)
    return GoldenNumber.from_json(payload)


def _parse_complex(payload) -> GoldenComplex:
    return GoldenComplex.from_json(payload)


def _parse_quaternion(payload) -> Quaternion:
    if not isinstance(payload, list) or len(payload) != 4:
        raise ValueError("quaternion must be a list of four scalars")
    return Quaternion(*(_parse_scalar(part) for part in payload))


def _cmd_spin_nu(args) -> int:
    try:
        phat_payload = json.loads(args.phat)
        x_payload = json.loads(args.x)
    except json.JSONDecodeError as error:
        sys.stderr.write(f"malformed JSON argument: {error}\n")
        return 2
    try:
        if args.dim == 4:
            matrix = SpinMatrix4(
                _parse_quaternion(phat_payload["a"]),
                _parse_quaternion(phat_payload["b"]),
                _parse_quaternion(phat_payload["c"]),
                _parse_quaternion(phat_payload["d"]),
                scale_sq=_parse_scalar(phat_payload["scale_sq"])
                if "scale_sq" in phat_payload else 1)
            point = HyperboloidPoint([_parse_scalar(part) for part in x_payload])
            exact = spinindex.nu_isolated_4d(
                spinindex.IsolatedFixedPoint4(point, matrix))
            oracle = float(spinindex.nu_numeric_oracle(matrix, point))
            numeric = exact.real().real
        else:
            matrix = SpinMatrix2(_parse_complex(phat_payload["a"]),
                                 _parse_complex(phat_payload["b"]))
            point = HyperboloidPoint2([_parse_scalar(part) for part in x_payload])
            exact = spinindex.nu_isolated_2d(matrix, point[2])
            oracle = complex(spinindex.nu_numeric_oracle_2d(matrix, point))
            numeric = exact.real()
    except (KeyError, TypeError, ValueError) as error:
        if isinstance(error, (spinindex.NonIsolatedError,
                              spinindex.InconsistentInputError,
                              spinindex.NotApplicableError)):
            sys.stderr.write(f"{error}\n")
            return 1
        sys.stderr.write(f"bad --phat/--x payload: {error}\n")
        return 2
    agreement = float(abs(numeric - oracle))
    if args.format == "json":
        text = _json_dump({"nu": str(exact.value), "nu_json": exact.value.to_json(),
                           "oracle": repr(oracle), "agreement": repr(agreement)})
    elif args.format == "csv":
        text = _csv_block(("nu", "oracle", "agreement"),
                          [(str(exact.value), repr(oracle), repr(agreement))])
    else:
        text = (f"nu = {exact.value}\noracle = {oracle!r}\n"
                f"agreement = {agreement!r}\n")
    _emit(text, args.output)
    return 0


def _verify_checks():
    golden_random = random.Random(20260818)

    def exactfield_defining_relation():
        tau = GoldenNumber(0, 1)
        sqrt5 = GoldenNumber(-1, 2)
        assert tau * tau == tau + GoldenNumber(1)
        assert sqrt5 * sqrt5 == GoldenNumber(5)
        assert tau.galois() == GoldenNumber(1) - tau
        return "tau^2 = tau + 1, sqrt5^2 = 5, galois(tau) = 1 - tau"

    def icosa_enumeration():
        elements = icosa.enumerate_2I()
        assert len(elements) == 120
        assert len(set(elements)) == 120
        sizes = {label: len(icosa.class_elements(label))
                 for label in icosa.CLASS_LABELS}
        assert sizes == icosa.CLASS_SIZES
        return "120 unit icosians in 9 classes with recorded sizes"

    def icosa_character_orthogonality():
        for r1 in icosa.REP_LABELS:
            for r2 in icosa.REP_LABELS:
                total = GoldenNumber(0)
                for label in icosa.CLASS_LABELS:
                    value = icosa.char_2I(r1, label) * icosa.char_2I(r2, label)
                    total = total + value * GoldenNumber(icosa.CLASS_SIZES[label])
                assert total == GoldenNumber(120 if r1 == r2 else 0)
        return "all 81 row inner products exact"

    def icosa_alpha_automorphism():
        elements = icosa.enumerate_2I()
        image = {icosa.element_key(q): icosa.alpha(q) for q in elements}
        assert len({icosa.element_key(v) for v in image.values()}) == 120
        sample = golden_random.sample(
            [(x, y) for x in elements for y in elements], 800)
        for x, y in sample:
            assert icosa.alpha(x * y) == icosa.alpha(x) * icosa.alpha(y)
        q = icosa.G1
        for _ in range(4):
            q = icosa.alpha(q)
        assert q == icosa.G1
        return "alpha bijective, multiplicative on 800 sampled pairs, order 4"

    def ghat_class_structure():
        assert ghat.group_order() == 28800
        classes = ghat.conjugacy_classes()
        assert len(classes) == 54
        assert sum(cls.size for cls in classes) == 28800
        assert sum(1 for cls in classes if ghat.minus_class(cls) is cls) == 14
        return "order 28800, 54 classes, 14 self-minus-paired"

    def chartable_orthogonality():
        checks = reptheory.orthogonality_checks()
        assert checks == {"rows": True, "columns": True}
        return "row and column orthogonality exact over 54 characters"

    def chartable_spinorial_partition():
        chars = reptheory.chartable_ghat()
        spinorial = [int(c.dimension.a) for c in chars if c.spinorial]
        assert sorted(spinorial) == [4, 4, 8, 12, 12, 12, 12, 12, 16, 16, 20,
                                     20, 24, 24, 32, 36, 36, 40, 48, 60]
        assert sum(int(c.dimension.a) ** 2 for c in chars) == 28800
        return "20 spinorial characters with the recorded dimension multiset"

    def chartable_galois_symmetry():
        permutation = reptheory.galois_permutation()
        moved = sum(1 for i, j in enumerate(permutation) if i != j)
        return f"Galois conjugation is a row involution moving {moved} rows"

    def eta_homomorphism():
        lifts = spinindex.davis_rotation_lifts()
        generators = [lift for lift, _ in lifts.values()]
        for name, (lift, image) in sorted(lifts.items()):
            assert eta4(lift) == image, name
        sigma, sigma_hat = spinindex.davis_sigma_data()
        assert eta4(sigma_hat) == sigma
        assert verify_lift(sigma_hat, sigma)
        for _ in range(20):
            a = generators[golden_random.randrange(4)]
            b = generators[golden_random.randrange(4)]
            word_a = a * generators[golden_random.randrange(4)]
            assert eta4(word_a * b) == eta4(word_a) * eta4(b)
            assert eta4(-word_a) == eta4(word_a)
        return "eta4 multiplicative on sampled words; recorded images match"

    def sigma_involution():
        sigma, sigma_hat = spinindex.davis_sigma_data()
        identity = SpinMatrix4.diagonal(Quaternion(GoldenNumber(1)),
                                        Quaternion(GoldenNumber(1)))
        assert sigma_hat * sigma_hat == -identity
        assert sigma * sigma == sigma.identity()
        assert sigma[4][4] == GoldenNumber(5, 8)
        return "sigma-hat has order 4 over the involution sigma; entry (5,5) = 5+8t"

    def spin_antisymmetry():
        rows, _ = spinindex.davis_spin_character()
        by_name = {row.name: row for row in rows}
        for row in rows:
            partner = by_name[ghat.minus_class(ghat.class_by_name(row.name)).name]
            assert partner.spin == -row.spin
        return "spin value at each minus class is the negation, all 54 classes"

    def spin_two_fixed_points():
        rows = {row.name: row for row in spinindex.davis_table()}
        checked = 0
        for name, row in rows.items():
            if row.fp_count == 2 and "+" in name:
                value = spinindex.spin_number_two_fp(name)
                assert value.value == GoldenComplex.coerce(row.spin), name
                checked += 1
        assert checked == 14
        return "two-point formula reproduces all 14 recorded 2-FP pair rows"

    def spin_norm():
        _, values = spinindex.davis_spin_character()
        assert reptheory.inner_product(values, values) == GoldenComplex(2, 0)
        return "<spin, spin> = 2"

    def index_decomposition():
        decomposition = spinindex.decompose_davis_index()
        assert decomposition.plus.label.render() == "(2'⊗3')⊕(3⊗2)"
        assert decomposition.minus.label.render() == "(2⊗3)⊕(3'⊗2')"
        assert decomposition.harmonic_minimum == 24
        assert decomposition.harmonic_step == 8
        return "index = +(2'(x)3')(+)(3(x)2) - (2(x)3)(+)(3'(x)2'); dim H = 24 + 8k"

    def oracle_agreement():
        lifts = spinindex.davis_rotation_lifts()
        generators = [lift for lift, _ in lifts.values()]
        probes = [(icosa.class_representative("5A"), icosa.class_representative("6")),
                  (Quaternion(GoldenNumber(1)), Quaternion(GoldenNumber(-1))),
                  (icosa.class_representative("10A"), icosa.class_representative("3"))]
        worst = 0.0
        for p, q in probes:
            base = SpinMatrix4.diagonal(p, q)
            exact = spinindex.nu_diag_4d(p, q).real().real
            for _ in range(3):
                h = generators[golden_random.randrange(4)]
                h = h * generators[golden_random.randrange(4)]
                x = eta4(h).apply(APEX)
                oracle = spinindex.nu_numeric_oracle(h * base * h.inverse(), x)
                worst = max(worst, abs(exact - oracle))
        assert worst < 1e-9
        return f"9 conjugated probes agree with exact values; worst gap {worst:.2e}"

    return [
        ("chartable-galois-symmetry", chartable_galois_symmetry),
        ("chartable-orthogonality", chartable_orthogonality),
        ("chartable-spinorial-partition", chartable_spinorial_partition),
        ("eta-homomorphism", eta_homomorphism),
        ("exactfield-defining-relation", exactfield_defining_relation),
        ("ghat-class-structure", ghat_class_structure),
        ("icosa-alpha-automorphism", icosa_alpha_automorphism),
        ("icosa-character-orthogonality", icosa_character_orthogonality),
        ("icosa-enumeration", icosa_enumeration),
        ("index-decomposition", index_decomposition),
        ("oracle-agreement", oracle_agreement),
        ("sigma-involution", sigma_involution),
        ("spin-antisymmetry", spin_antisymmetry),
        ("spin-norm", spin_norm),
        ("spin-two-fixed-points", spin_two_fixed_points),
    ]


def _cmd_verify(args) -> int:
    report = []
    failures = 0
    for name, check in sorted(_verify_checks()):
        try:
            detail = check()
            report.append({"check": name, "status": "pass", "detail": detail})
        except Exception as error:  # noqa: BLE001 - report every failure kind
            failures += 1
            report.append({"check": name, "status": "fail",
                           "detail": f"{type(error).__name__}: {error}"})
    _emit(_json_dump(report), args.output)
    return 1 if failures else 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="davisspin",
        description="Exact spin numbers and character theory of the "
                    "symmetry group of the Davis hyperbolic 4-manifold.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, handler, help_text, check_flag=False, nu_flags=False):
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--format", choices=("csv", "json", "pretty"),
                         default="pretty")
        sub.add_argument("--output", default=None,
                         help="write to this path instead of stdout")
        if check_flag:
            sub.add_argument("--check", action="store_true",
                             help="fail (exit 1) if an internal consistency "
                                  "relation is violated")
        if nu_flags:
            sub.add_argument("--dim", type=int, choices=(4, 2), default=4)
            sub.add_argument("--phat", required=True,
                             help="JSON object of exact matrix entries")
            sub.add_argument("--x", required=True,
                             help="JSON list of exact point coordinates")
        sub.set_defaults(handler=handler)
        return sub

    add("icosa-table", _cmd_icosa_table,
        "exact class data and character table of the binary icosahedral group")
    add("ghat-classes", _cmd_ghat_classes,
        "the 54 conjugacy classes with orders, sizes, and minus classes")
    add("ghat-chartable", _cmd_ghat_chartable,
        "the full 54x54 exact character table", check_flag=True)
    add("spin-davis", _cmd_spin_davis,
        "recorded fixed-point and spin-number table of the Davis manifold")
    add("spin-decompose", _cmd_spin_decompose,
        "decompose the spin class function into signed irreducibles")
    add("spin-nu", _cmd_spin_nu,
        "evaluate one spin defect at an isolated fixed point", nu_flags=True)
    add("verify", _cmd_verify,
        "run the full invariant suite and emit a JSON report")

    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except OSError as error:
        sys.stderr.write(f"i/o failure: {error}\n")
        return 2
    except spinindex.DataInconsistencyError as error:
        sys.stderr.write(f"data inconsistency: {error}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
