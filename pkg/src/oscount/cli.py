"""Command-line interface.

Commands: analyze, cone, catalan, count, wreath-formula, group, selftest.
Exit codes: 0 success, 1 invalid input, 2 computation cap exceeded,
3 internal/oracle inconsistency.  Every command has a --json mode emitting
a single document with stable key order (the timing field excepted from
determinism guarantees).

Caps may be set by flags or environment variables (OSCOUNT_FLAT_CAP,
OSCOUNT_SUBSET_CAP, OSCOUNT_GROUP_CAP, OSCOUNT_FF_CAP).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import arrangement as arr_mod
from . import matroid as matroid_mod
from .arrangement import (
    characteristic_polynomial,
    cone,
    intersection_lattice,
    poincare_polynomial,
    region_count,
    essential_rank,
)
from .counting import (
    CountReport,
    catalog,
    count_resolutions,
    namikawa_weyl_from_group,
    wreath_count_closed_form,
    wreath_count_direct,
)
from .errors import (
    InvalidInputError,
    MathematicalInconsistencyError,
    OracleDisagreementError,
    OscountError,
    UnsupportedFoldingError,
)
from .fileio import (
    parse_arrangement_file,
    parse_group_file,
    serialize_arrangement,
)
from .groups import (
    DEFAULT_GROUP_CAP,
    minimal_parabolics,
    symplectic_reflections,
    verify_zeta_bijection,
)
from .matroid import finite_field_count, find_good_primes, nbc_betti
from .polynomial import IntegerPolynomial
from .rootdata import CatalanSpec, affine_catalan, catalan_arrangement, parse_type_label, weyl_data

__all__ = ["main"]


def _env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    if value is None:
        return default
    try:
        return int(value)
    except ValueError:
        raise InvalidInputError(f"environment variable {name} must be an integer") from None


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument(
        "--flat-cap",
        type=int,
        default=None,
        help="intersection-lattice flat cap (default %d)" % arr_mod.DEFAULT_FLAT_CAP,
    )
    parser.add_argument(
        "--subset-cap",
        type=int,
        default=None,
        help="matroid subset-enumeration cap (default %d)" % matroid_mod.DEFAULT_SUBSET_CAP,
    )
    parser.add_argument(
        "--group-cap",
        type=int,
        default=None,
        help="group enumeration cap (default %d)" % DEFAULT_GROUP_CAP,
    )
    parser.add_argument(
        "--ff-cap",
        type=int,
        default=None,
        help="finite-field enumeration cap on q^l (default %d)" % matroid_mod.DEFAULT_FF_CAP,
    )


def _caps(args) -> dict:
    return {
        "flat_cap": args.flat_cap
        if args.flat_cap is not None
        else _env_cap("OSCOUNT_FLAT_CAP", arr_mod.DEFAULT_FLAT_CAP),
        "subset_cap": args.subset_cap
        if args.subset_cap is not None
        else _env_cap("OSCOUNT_SUBSET_CAP", matroid_mod.DEFAULT_SUBSET_CAP),
        "group_cap": args.group_cap
        if args.group_cap is not None
        else _env_cap("OSCOUNT_GROUP_CAP", DEFAULT_GROUP_CAP),
        "ff_cap": args.ff_cap
        if args.ff_cap is not None
        else _env_cap("OSCOUNT_FF_CAP", matroid_mod.DEFAULT_FF_CAP),
    }


def _poly_doc(p: IntegerPolynomial) -> dict:
    return {"coefficients": list(p.coefficients), "text": str(p)}


def _field_doc(field) -> dict:
    return {"kind": field.kind, "conductor": field.conductor, "degree": field.degree}


def _emit(doc: dict, as_json: bool, human_lines):
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        for line in human_lines:
            print(line)


def _run_oracles(arrangement, pi, chi, which: str, caps) -> dict:
    """Cross-check the lattice route; disagreement raises (exit 3)."""
    results: dict = {"oracle": which}
    if which == "nbc":
        betti = nbc_betti(arrangement, caps["subset_cap"])
        expected = list(pi.coefficients)
        results["nbc_betti"] = betti
        results["agrees"] = betti == expected
        if not results["agrees"]:
            raise OracleDisagreementError(
                f"nbc oracle {betti} != Poincare coefficients {expected}"
            )
    elif which == "ff":
        primes = find_good_primes(arrangement, 2, caps["ff_cap"])
        checks = []
        for q in primes:
            n = finite_field_count(arrangement, q, caps["ff_cap"])
            checks.append({"q": q, "count": n, "chi": chi(q), "agrees": n == chi(q)})
        results["finite_field"] = checks
        results["agrees"] = all(c["agrees"] for c in checks)
        if not results["agrees"]:
            raise OracleDisagreementError(f"finite-field oracle disagrees: {checks}")
    else:
        raise InvalidInputError(f"unknown oracle {which!r}")
    return results


def _analyze_doc(arrangement, caps, oracle: str | None, command: str) -> dict:
    t0 = time.perf_counter()
    lattice = intersection_lattice(arrangement, caps["flat_cap"])
    chi = characteristic_polynomial(lattice)
    pi = poincare_polynomial(lattice)
    doc = {
        "command": command,
        "field": _field_doc(arrangement.field),
        "ambient_dim": arrangement.ambient_dim,
        "central": arrangement.central,
        "num_hyperplanes": len(arrangement.hyperplanes),
        # broken-circuit data downstream depends on this order
        "hyperplanes": [h.key() for h in arrangement.hyperplanes],
        "rank": essential_rank(arrangement),
        "char_poly": _poly_doc(chi),
        "poincare_poly": _poly_doc(pi),
        "os_dimension": pi(1),
        "flats_per_level": lattice.flats_per_level(),
        "moebius_checksum": lattice.whitney_numbers(),
    }
    if all(h.is_real() for h in arrangement.hyperplanes):
        regions, bounded = region_count(arrangement, lattice)
        doc["regions"] = regions
        doc["bounded_regions"] = bounded
    if oracle and oracle != "none":
        doc["oracle_results"] = _run_oracles(arrangement, pi, chi, oracle, caps)
    doc["caps"] = caps
    doc["timing_seconds"] = round(time.perf_counter() - t0, 6)
    return doc


def _cmd_analyze(args) -> int:
    caps = _caps(args)
    arrangement = parse_arrangement_file(args.file)
    doc = _analyze_doc(arrangement, caps, args.oracle, "analyze")
    lines = [
        f"arrangement: {args.file}",
        f"field: {doc['field']['kind']} (conductor {doc['field']['conductor']})",
        f"ambient dimension: {doc['ambient_dim']}   central: {doc['central']}",
        f"hyperplanes: {doc['num_hyperplanes']}   rank: {doc['rank']}",
        f"characteristic polynomial: {doc['char_poly']['text']}",
        f"Poincare polynomial: {doc['poincare_poly']['text']}",
        f"OS dimension: {doc['os_dimension']}",
        f"flats per level: {doc['flats_per_level']}",
        f"Moebius checksum: {doc['moebius_checksum']}",
    ]
    if "regions" in doc:
        lines.append(f"regions: {doc['regions']}   bounded: {doc['bounded_regions']}")
    if "oracle_results" in doc:
        lines.append(f"oracle: {json.dumps(doc['oracle_results'])}")
    _emit(doc, args.json, lines)
    return 0


def _emit_arrangement(arrangement, args, command: str, extra: dict | None = None) -> int:
    text = serialize_arrangement(arrangement)
    doc = {
        "command": command,
        "field": _field_doc(arrangement.field),
        "ambient_dim": arrangement.ambient_dim,
        "central": arrangement.central,
        "num_hyperplanes": len(arrangement.hyperplanes),
        "arrangement_text": text,
    }
    if extra:
        doc.update(extra)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        doc["out"] = args.out
        _emit(doc, args.json, [f"wrote {doc['num_hyperplanes']} hyperplanes to {args.out}"])
    elif args.json:
        print(json.dumps(doc, indent=2))
    else:
        sys.stdout.write(text)
    return 0


def _cmd_cone(args) -> int:
    arrangement = parse_arrangement_file(args.file)
    return _emit_arrangement(cone(arrangement), args, "cone")


def _cmd_catalan(args) -> int:
    letter, rank = parse_type_label(args.type)
    wdata = weyl_data(letter, rank)
    spec = CatalanSpec(wdata, args.n)
    arrangement = affine_catalan(spec) if args.affine else catalan_arrangement(spec)
    return _emit_arrangement(
        arrangement, args, "catalan", extra={"realization": wdata.realization}
    )


def _count_lines(doc: dict) -> list[str]:
    lines = [
        f"hyperplanes: {doc['num_hyperplanes']}   rank: {doc['rank']}",
        f"characteristic polynomial: {doc['char_poly']['text']}",
        f"Poincare polynomial: {doc['poincare_poly']['text']}",
        f"OS dimension: {doc['os_dimension']}",
        f"Namikawa Weyl order: {doc['weyl_order']}",
        f"resolution count: {doc['resolution_count']}",
    ]
    if "regions" in doc:
        lines.append(
            f"regions: {doc['regions']} = |W| * count = "
            f"{doc['weyl_order']} * {doc['resolution_count']}"
        )
    if "oracle_results" in doc:
        lines.append(f"oracle: {json.dumps(doc['oracle_results'])}")
    return lines


def _report_doc(report: CountReport, command: str, caps) -> dict:
    doc = {"command": command}
    raw = report.to_dict()
    doc.update(raw)
    doc["char_poly"] = _poly_doc(report.char_poly)
    doc["poincare_poly"] = _poly_doc(report.poincare_poly)
    doc["caps"] = caps
    return doc


def _cmd_count(args) -> int:
    caps = _caps(args)
    t0 = time.perf_counter()
    if args.catalog and args.arrangement:
        raise InvalidInputError("give either --catalog or --arrangement, not both")
    if args.catalog:
        entry = catalog(args.catalog)
        report = count_resolutions(entry.arrangement, entry.weyl_data, caps["flat_cap"])
        arrangement = entry.arrangement
        expected = entry.expected.get("count")
        if expected is not None and report.resolution_count != expected:
            raise MathematicalInconsistencyError(
                f"catalog {entry.name}: computed count {report.resolution_count} "
                f"!= published {expected}"
            )
    elif args.arrangement:
        if args.weyl_order is None:
            raise InvalidInputError("--arrangement requires --weyl-order K")
        arrangement = parse_arrangement_file(args.arrangement)
        report = count_resolutions(arrangement, args.weyl_order, caps["flat_cap"])
    else:
        raise InvalidInputError("count needs --catalog NAME or --arrangement FILE")
    if args.oracle and args.oracle != "none":
        report.oracle_results = _run_oracles(
            arrangement, report.poincare_poly, report.char_poly, args.oracle, caps
        )
    doc = _report_doc(report, "count", caps)
    doc["timing_seconds"] = round(time.perf_counter() - t0, 6)
    _emit(doc, args.json, _count_lines(doc))
    return 0


def _cmd_wreath_formula(args) -> int:
    letter, rank = parse_type_label(args.type)
    wdata = weyl_data(letter, rank)
    value = wreath_count_closed_form(wdata, args.n)
    doc = {
        "command": "wreath-formula",
        "type": wdata.full_label,
        "n": args.n,
        "exponents": list(wdata.exponents),
        "coxeter_number": wdata.coxeter_number,
        "weyl_order": wdata.weyl_order,
        "realization": wdata.realization,
        "count": value,
    }
    _emit(doc, args.json, [f"({wdata.full_label}, n={args.n}): {value} resolutions"])
    return 0


def _cmd_group_analyze(args) -> int:
    caps = _caps(args)
    t0 = time.perf_counter()
    group = parse_group_file(args.file)
    group.enumerate_elements(caps["group_cap"])
    reflections = symplectic_reflections(group)
    parabolics = minimal_parabolics(group)
    ok, zeta_report = verify_zeta_bijection(group)
    doc = {
        "command": "group analyze",
        "field": _field_doc(group.field),
        "dim": group.dim,
        "order": group.order,
        "num_reflection_classes": len(reflections),
        "reflection_class_sizes": [c.size for c in reflections],
        "parabolic_classes": [
            {
                "subgroup_order": p.subgroup_order,
                "kleinian_label": p.kleinian_label,
                "num_conjugates": p.num_conjugates,
                "normalizer_order": p.normalizer_order,
                "xi_order": p.xi_order,
                "xi_class_action_trivial": p.class_action_trivial,
                "orbit_count": p.orbit_count,
            }
            for p in parabolics
        ],
        "zeta_bijection": zeta_report,
    }
    try:
        weyl = namikawa_weyl_from_group(parabolics)
        doc["namikawa_weyl"] = {
            "factors": [list(f) for f in weyl.factors],
            "total_order": weyl.total_order,
        }
    except UnsupportedFoldingError as exc:
        doc["namikawa_weyl"] = None
        doc["namikawa_weyl_note"] = str(exc)
    doc["caps"] = caps
    doc["timing_seconds"] = round(time.perf_counter() - t0, 6)
    if not ok:
        _emit(doc, args.json, [])
        raise MathematicalInconsistencyError(
            "reflection classes and parabolic orbits are not in bijection"
        )
    lines = [
        f"group: {args.file}",
        f"order: {doc['order']}   dim: {doc['dim']}",
        f"reflection classes (dim of the class-function space): {doc['num_reflection_classes']}",
        f"class sizes: {doc['reflection_class_sizes']}",
    ]
    for k, p in enumerate(doc["parabolic_classes"]):
        lines.append(
            f"parabolic class {k}: |H|={p['subgroup_order']} label={p['kleinian_label']} "
            f"conjugates={p['num_conjugates']} |Xi|={p['xi_order']} "
            f"class-action trivial={p['xi_class_action_trivial']} orbits={p['orbit_count']}"
        )
    lines.append(f"orbit/class bijection: {ok}")
    if doc.get("namikawa_weyl"):
        lines.append(
            f"Namikawa Weyl order: {doc['namikawa_weyl']['total_order']} "
            f"(factors {doc['namikawa_weyl']['factors']})"
        )
    else:
        lines.append(f"Namikawa Weyl order: undetermined ({doc.get('namikawa_weyl_note')})")
    _emit(doc, args.json, lines)
    return 0


# ---------------------------------------------------------------------------
# selftest


def _selftest_checks(caps, skip: set[str]):
    """Yield (name, status, detail) rows; status in PASS/FAIL/SKIP."""

    def check(name, fn):
        try:
            detail = fn()
            return (name, "PASS", detail if isinstance(detail, str) else "")
        except OscountError as exc:
            return (name, "FAIL", str(exc))
        except AssertionError as exc:
            return (name, "FAIL", str(exc))

    q8 = catalog("q8d8")
    g4 = catalog("g4")

    def q8d8_arrangement_check():
        report = count_resolutions(q8.arrangement, q8.weyl_data, caps["flat_cap"])
        assert report.poincare_poly.coefficients == q8.expected["poincare"], (
            f"Poincare {report.poincare_poly.coefficients} != {q8.expected['poincare']}"
        )
        assert report.os_dimension == q8.expected["os_dimension"]
        assert report.resolution_count == q8.expected["count"]
        assert report.regions == q8.expected["os_dimension"]
        return f"count {report.resolution_count}, OS dim {report.os_dimension}"

    yield check("q8d8 arrangement + count 81", q8d8_arrangement_check)

    if "nbc" in skip:
        yield ("q8d8 nbc oracle", "SKIP", "--skip nbc")
    else:

        def q8d8_nbc():
            betti = nbc_betti(q8.arrangement, caps["subset_cap"])
            assert tuple(betti) == q8.expected["poincare"], f"nbc {betti}"
            return f"betti {betti}"

        yield check("q8d8 nbc oracle", q8d8_nbc)

    def q8d8_group_check():
        group = q8.group
        group.enumerate_elements(caps["group_cap"])
        assert group.order == q8.expected["group_order"], f"order {group.order}"
        refl = symplectic_reflections(group)
        assert len(refl) == q8.expected["reflection_classes"], f"r = {len(refl)}"
        paras = minimal_parabolics(group)
        labels = tuple(p.kleinian_label for p in paras)
        assert labels == q8.expected["parabolic_labels"], f"labels {labels}"
        assert all(p.class_action_trivial for p in paras)
        ok, _ = verify_zeta_bijection(group)
        assert ok, "zeta bijection failed"
        weyl = namikawa_weyl_from_group(paras)
        assert weyl.total_order == q8.expected["weyl_order"], f"|W| = {weyl.total_order}"
        return f"order 32, r=5, |W| = {weyl.total_order}"

    yield check("q8d8 group pipeline", q8d8_group_check)

    def g4_arrangement_check():
        report = count_resolutions(g4.arrangement, g4.weyl_data, caps["flat_cap"])
        assert report.poincare_poly.coefficients == g4.expected["poincare"]
        assert report.os_dimension == g4.expected["os_dimension"]
        assert report.resolution_count == g4.expected["count"]
        return f"count {report.resolution_count}, OS dim {report.os_dimension}"

    yield check("g4 arrangement + count 2", g4_arrangement_check)

    if "nbc" in skip:
        yield ("g4 nbc oracle", "SKIP", "--skip nbc")
    else:

        def g4_nbc():
            betti = nbc_betti(g4.arrangement, caps["subset_cap"])
            assert tuple(betti) == g4.expected["nbc"], f"nbc {betti}"
            return f"betti {betti}"

        yield check("g4 nbc oracle", g4_nbc)

    def g4_group_check():
        group = g4.group
        group.enumerate_elements(caps["group_cap"])
        assert group.order == g4.expected["group_order"], f"order {group.order}"
        refl = symplectic_reflections(group)
        assert len(refl) == g4.expected["reflection_classes"], f"r = {len(refl)}"
        paras = minimal_parabolics(group)
        assert tuple(p.kleinian_label for p in paras) == g4.expected["parabolic_labels"]
        ok, _ = verify_zeta_bijection(group)
        assert ok, "zeta bijection failed"
        weyl = namikawa_weyl_from_group(paras)
        assert weyl.total_order == g4.expected["weyl_order"], f"|W| = {weyl.total_order}"
        return f"order 24, r=2, |W| = {weyl.total_order} (override)"

    yield check("g4 group pipeline", g4_group_check)

    wreath_cases = [("A1", 2, 8), ("A1", 3, 12), ("A2", 2, 60), ("A3", 2, 672)]
    for label, n, pi1 in wreath_cases:

        def wreath_check(label=label, n=n, pi1=pi1):
            letter, rank = parse_type_label(label)
            wdata = weyl_data(letter, rank)
            closed = wreath_count_closed_form(wdata, n)
            report = wreath_count_direct(wdata, n, caps["flat_cap"])
            assert report.os_dimension == pi1, f"pi(1) = {report.os_dimension} != {pi1}"
            assert report.resolution_count == closed
            return f"count {closed}, pi(1) {report.os_dimension}"

        yield check(f"wreath two-route ({label}, n={n})", wreath_check)

    def n1_check():
        for label in ("A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"):
            letter, rank = parse_type_label(label)
            assert wreath_count_closed_form(weyl_data(letter, rank), 1) == 1, label
        return "closed form (*, n=1) = 1"

    yield check("n=1 degeneracy (closed form)", n1_check)

    if "ff" in skip:
        yield ("finite-field oracle", "SKIP", "--skip ff")
    else:
        ff_cases = ["q8d8", "wreath:a1:2", "wreath:a1:3", "wreath:a2:2"]
        for name in ff_cases:

            def ff_check(name=name):
                entry = catalog(name)
                lattice = intersection_lattice(entry.arrangement, caps["flat_cap"])
                chi = characteristic_polynomial(lattice)
                primes = find_good_primes(entry.arrangement, 2, caps["ff_cap"])
                for q in primes:
                    n = finite_field_count(entry.arrangement, q, caps["ff_cap"])
                    assert n == chi(q), f"q={q}: {n} != chi(q)={chi(q)}"
                return f"q={primes} agree with chi"

            yield check(f"finite-field oracle ({name})", ff_check)

    def cone_check():
        from .polynomial import IntegerPolynomial as P

        for label, n in (("A1", 2), ("A2", 2)):
            letter, rank = parse_type_label(label)
            spec = CatalanSpec(weyl_data(letter, rank), n)
            aff = affine_catalan(spec)
            pi_aff = poincare_polynomial(intersection_lattice(aff, caps["flat_cap"]))
            coned = cone(aff)
            assert coned.same_hyperplanes(catalan_arrangement(spec))
            pi_cone = poincare_polynomial(intersection_lattice(coned, caps["flat_cap"]))
            assert pi_cone == P((1, 1)) * pi_aff, f"cone identity fails for {label} n={n}"
        return "pi(cA, t) = (1+t) pi(A, t)"

    yield check("cone identity on affine families", cone_check)

    def delres_check():
        from .arrangement import deletion_restriction

        cases = [g4.arrangement, catalog("wreath:a1:2").arrangement]
        for arrangement in cases:
            lattice = intersection_lattice(arrangement, caps["flat_cap"])
            chi = characteristic_polynomial(lattice)
            for h in range(len(arrangement.hyperplanes)):
                deleted, restricted = deletion_restriction(arrangement, h)
                chi_d = characteristic_polynomial(
                    intersection_lattice(deleted, caps["flat_cap"])
                )
                chi_r = characteristic_polynomial(
                    intersection_lattice(restricted, caps["flat_cap"])
                )
                assert chi == chi_d - chi_r, f"deletion-restriction fails at h={h}"
        return "chi(A) = chi(A') - chi(A'') for every h"

    yield check("deletion-restriction identity", delres_check)


def _cmd_selftest(args) -> int:
    caps = _caps(args)
    skip = set(args.skip or [])
    t0 = time.perf_counter()
    rows = list(_selftest_checks(caps, skip))
    elapsed = time.perf_counter() - t0
    doc = {
        "command": "selftest",
        "checks": [{"name": n, "status": s, "detail": d} for n, s, d in rows],
        "passed": sum(1 for _, s, _ in rows if s == "PASS"),
        "failed": sum(1 for _, s, _ in rows if s == "FAIL"),
        "skipped": sum(1 for _, s, _ in rows if s == "SKIP"),
        "timing_seconds": round(elapsed, 6),
    }
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        width = max(len(n) for n, _, _ in rows)
        for name, status, detail in rows:
            print(f"{name:<{width}}  {status:<4}  {detail}")
        print(
            f"\n{doc['passed']} passed, {doc['failed']} failed, "
            f"{doc['skipped']} skipped in {elapsed:.1f}s"
        )
    return 0 if doc["failed"] == 0 else 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oscount",
        description=(
            "Exact counting of symplectic quotient resolutions via hyperplane "
            "arrangement invariants"
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", help="arrangement invariants from a file")
    p.add_argument("file")
    p.add_argument("--oracle", choices=["nbc", "ff", "none"], default="none")
    _add_common(p)
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("cone", help="cone an affine arrangement file")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("catalan", help="emit a Catalan-type arrangement")
    p.add_argument("--type", required=True, help="ADE label, e.g. A2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--affine", action="store_true", help="emit the affine arrangement")
    p.add_argument("--out", default=None)
    _add_common(p)
    p.set_defaults(func=_cmd_catalan)

    p = sub.add_parser("count", help="count resolutions")
    p.add_argument("--catalog", default=None, help="q8d8 | g4 | wreath:TYPE:N")
    p.add_argument("--arrangement", default=None, help="arrangement file")
    p.add_argument("--weyl-order", type=int, default=None)
    p.add_argument("--oracle", choices=["nbc", "ff", "none"], default="none")
    _add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("wreath-formula", help="closed-form wreath count")
    p.add_argument("--type", required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(func=_cmd_wreath_formula)

    p = sub.add_parser("group", help="matrix group commands")
    gsub = p.add_subparsers(dest="group_verb", required=True)
    g = gsub.add_parser("analyze", help="analyze a group file")
    g.add_argument("file")
    _add_common(g)
    g.set_defaults(func=_cmd_group_analyze)

    p = sub.add_parser("selftest", help="run every catalog check")
    p.add_argument(
        "--skip",
        action="append",
        choices=["nbc", "ff"],
        help="skip an oracle family (repeatable)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except OscountError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
