"""Command line front end: ``weakyd verify|double|dual|example``.

Exit status is 0 when every check passes, 1 when some check fails and 2 for
unreadable input or bad arguments.
"""

import argparse
import sys

from .double import (NotWellDefined, double_module_report, dprime_and_f, drinfeld_double,
                     kernel_equals_J, switch_map_check, target_iso)
from .duality import double_dual_matches, verify_left_duality
from .entwining import (DatumError, _alg_checks, canonical_psi, canonical_yd_datum,
                        doihopf_to_entwining, smash_from_entwining, verify_doihopf,
                        verify_smash_structure, verify_weak_entwining)
from .exactlin import FieldError, equal
from .report import VerificationReport, compare, holds
from .specfile import (SchemaError, SpecSyntaxError, algebra_data, build_bialgebra,
                       dumps_spec, groupoid_to_obj, hopf_to_obj, parse_spec, yd_to_obj)
from .weakbialg import (HModule, counital_data, module_axioms, regular_module,
                        target_module, tensor_over_Ht, verify_weak_bialgebra)
from .weakhopf import (WeakHopfAlgebra, cyclic_group, discrete_groupoid, dual_weak_hopf,
                       full_hopf_report, groupoid_algebra, pair_groupoid, solve_antipode,
                       symmetric_group)
from .yetterdrinfeld import (VARIANTS, BadSupport, HComodule, NotYD, braiding,
                             check_center_condition, check_yd, comodule_axioms,
                             orbit_module, regular_lr_yd, unit_yd, yd_convert, YDModule)

SUITES = ("bialgebra", "hopf", "yd", "entwining", "double", "duality", "all")


class UnknownSuite(ValueError):
    pass


class BadParams(ValueError):
    pass


# ---------------------------------------------------------------------------
# suites over a weak Hopf algebra


def suite_bialgebra(H):
    rep = VerificationReport("bialgebra")
    brep, B = verify_weak_bialgebra(H.alg, H.coalg)
    rep.extend(brep)
    if B is not None:
        rep.extend(counital_data(H)[1], "counital")
    return rep


def suite_hopf(H):
    rep = full_hopf_report(H)
    res = solve_antipode(H)
    rep.add(holds("solver_finds_antipode", res.status == "found", res.detail or res.status))
    if res.status == "found":
        rep.add(compare("solver_matches_antipode", res.S.T, H.S.T, 1, H.field))
    return rep


def _same_yd(name, A, B):
    ok = A.variant == B.variant and equal(A.action, B.action) and equal(A.coaction, B.coaction)
    return holds(name, ok, "%s module differs after the round trip" % A.variant)


def _conversions(rep, M, label):
    """All four variants of M, the 12 round trips and a braiding for each."""
    forms = {}
    for v in sorted(VARIANTS):
        try:
            forms[v] = M if v == M.variant else yd_convert(M, v)
            rep.add(holds("%s/convert_to_%s" % (label, v), True))
        except NotYD as exc:
            rep.add(holds("%s/convert_to_%s" % (label, v), False, str(exc)))
    for v in sorted(forms):
        for w in sorted(forms):
            if v == w:
                continue
            name = "%s/round_trip_%s_%s" % (label, v, w)
            try:
                rep.add(_same_yd(name, forms[v], yd_convert(yd_convert(forms[v], w), v)))
            except NotYD as exc:
                rep.add(holds(name, False, str(exc)))
    for v in sorted(forms):
        rep.extend(braiding(forms[v], forms[v]).report, "%s/braiding_%s" % (label, v))
    return forms


def suite_yd(H, M=None):
    rep = VerificationReport("yd")
    U = unit_yd(H)
    rep.extend(U.report, "unit")
    forms = _conversions(rep, U, "unit")
    R = regular_module(H, "left")
    rep.extend(check_center_condition(forms["ll"], target_module(H), R), "unit/center")
    rep.extend(regular_lr_yd(H).report, "regular_lr")
    rep.extend(tensor_over_Ht(H, target_module(H), R).report, "tensor_over_target")
    if M is not None:
        rep.extend(M.report, "module")
        if M.report.passed:
            mf = _conversions(rep, M, "module")
            if "ll" in mf:
                rep.extend(check_center_condition(mf["ll"], M.module, R), "module/center")
            rep.extend(tensor_over_Ht(H, M.module, M.module).report, "module/tensor_over_target")
    return rep


def suite_entwining(H):
    rep = VerificationReport("entwining")
    D = canonical_yd_datum(H)
    rep.extend(verify_doihopf(D), "doihopf")
    try:
        E = doihopf_to_entwining(D)
    except DatumError as exc:
        rep.add(holds("entwining_from_datum", False, str(exc)))
        return rep
    rep.add(compare("entwining_matches_closed_form", E.psi, canonical_psi(H), 2, H.field))
    rep.extend(verify_weak_entwining(E), "entwining")
    rep.extend(verify_smash_structure(smash_from_entwining(E)), "smash")
    return rep


def suite_double(H, M=None):
    """Returns ``(report, DoubleAlgebra or None)``."""
    rep = VerificationReport("double")
    try:
        DA = drinfeld_double(H)
    except NotWellDefined as exc:
        rep.add(holds("double_well_defined", False, str(exc)))
        return rep, None
    rep.extend(DA.report)
    rep.extend(kernel_equals_J(H, DA), "kernel")
    rep.extend(dprime_and_f(H, DA)[2], "dprime")
    rep.extend(target_iso(DA), "target")
    U = yd_convert(unit_yd(H), "lr")
    rep.extend(double_module_report(DA, U)[0], "unit_module")
    rep.extend(switch_map_check(DA, U, U), "unit_switch")
    if M is not None and M.report.passed:
        Mlr = M if M.variant == "lr" else yd_convert(M, "lr")
        rep.extend(double_module_report(DA, Mlr)[0], "module")
        rep.extend(switch_map_check(DA, Mlr, U), "module_switch")
    return rep, DA


def suite_duality(H, M=None):
    """Returns ``(report, H*)``."""
    rep = VerificationReport("duality")
    U = unit_yd(H)
    rep.extend(verify_left_duality(U), "unit")
    rep.extend(double_dual_matches(U), "unit")
    if M is not None and M.report.passed:
        Mll = M if M.variant == "ll" else yd_convert(M, "ll")
        rep.extend(verify_left_duality(Mll), "module")
        rep.extend(double_dual_matches(Mll), "module")
    Hd = dual_weak_hopf(H)
    rep.extend(full_hopf_report(Hd), "dual_algebra")
    return rep, Hd


def run_suite(spec, suite):
    """Run ``suite`` on a parsed spec; returns ``(report, exports)``.

    ``exports`` maps ``"double"`` / ``"dual"`` to spec objects when built.
    """
    if suite not in SUITES:
        raise UnknownSuite("unknown suite %r; choose from %s" % (suite, ", ".join(SUITES)))
    exports = {}
    if spec.kind == "algebra":
        rep = VerificationReport("algebra")
        for ch in _alg_checks(algebra_data(spec), "algebra"):
            rep.add(ch)
        return rep, exports
    M = None
    if spec.kind in ("module", "comodule", "yd_module"):
        H = build_bialgebra(spec.algebra) if spec.algebra.kind != "algebra" else None
        t = spec.tensors
        if spec.kind == "module":
            alg = H.alg if H is not None else algebra_data(spec.algebra)
            rep = VerificationReport("module")
            for ch in module_axioms(alg, HModule(spec.dim, t["action"], spec.options["side"])):
                rep.add(ch)
            return rep, exports
        if H is None:
            raise SchemaError("a %s needs a weak bialgebra" % spec.kind)
        if spec.kind == "comodule":
            rep = VerificationReport("comodule")
            for ch in comodule_axioms(H, HComodule(spec.dim, t["coaction"],
                                                   spec.options["side"])):
                rep.add(ch)
            return rep, exports
        if not isinstance(H, WeakHopfAlgebra):
            rep = VerificationReport(suite)
            rep.add(holds("antipode_exists", False, "the algebra has no antipode"))
            return rep, exports
        myrep, Mod = check_yd(H, t["action"], t["coaction"], spec.options["variant"])
        if Mod is None:
            Mod = YDModule(spec.options["variant"],
                           HModule(spec.dim, t["action"], VARIANTS[spec.options["variant"]][0]),
                           HComodule(spec.dim, t["coaction"],
                                     VARIANTS[spec.options["variant"]][1]), H, report=myrep)
        M = Mod
    else:
        H = build_bialgebra(spec)
    rep = VerificationReport(suite)
    names = SUITES[:-1] if suite == "all" else (suite,)
    if "bialgebra" in names:
        rep.extend(suite_bialgebra(H), "bialgebra" if suite == "all" else None)
    if not isinstance(H, WeakHopfAlgebra):
        if names != ("bialgebra",):
            res = solve_antipode(H)
            rep.add(holds("antipode_exists", False, res.detail or res.status))
        return rep, exports
    prefix = (lambda s: s) if suite == "all" else (lambda s: None)
    if M is not None and "yd" not in names:
        rep.extend(M.report, "module")
    for name in names:
        if name == "hopf":
            rep.extend(suite_hopf(H), prefix("hopf"))
        elif name == "yd":
            rep.extend(suite_yd(H, M), prefix("yd"))
        elif name == "entwining":
            rep.extend(suite_entwining(H), prefix("entwining"))
        elif name == "double":
            drep, DA = suite_double(H, M)
            rep.extend(drep, prefix("double"))
            if DA is not None:
                exports["double"] = double_to_obj(DA)
        elif name == "duality":
            drep, Hd = suite_duality(H, M)
            rep.extend(drep, prefix("duality"))
            exports["dual"] = hopf_to_obj(Hd, meta={"construction": "dual weak Hopf algebra",
                                                    "source_dim": H.dim})
    return rep, exports


def double_to_obj(DA):
    return hopf_to_obj(DA.D, meta={"construction": "Drinfeld double",
                                   "ambient_dim": DA.H.dim ** 2, "source_dim": DA.H.dim})


# ---------------------------------------------------------------------------
# examples


_GROUPOIDS = {"group_algebra": cyclic_group, "symmetric_group": symmetric_group,
              "discrete_groupoid": discrete_groupoid, "pair_groupoid": pair_groupoid}


def _make_groupoid(name, n):
    if name not in _GROUPOIDS:
        raise BadParams("unknown groupoid family %r; choose from %s"
                        % (name, ", ".join(sorted(_GROUPOIDS))))
    if n < 1 or (name == "symmetric_group" and n > 4):
        raise BadParams("size %d out of range for %s" % (n, name))
    return _GROUPOIDS[name](n)


def generate_example(name, params, as_groupoid=False, degree=None):
    """Spec object for a corpus example."""
    try:
        if name in _GROUPOIDS:
            (n,) = params
            G = _make_groupoid(name, int(n))
            if as_groupoid:
                return groupoid_to_obj(G)
            H = groupoid_algebra(G)
            return hopf_to_obj(H, meta={"example": "%s %s" % (name, n)}, basis=G.morphisms)
        if name == "graded_yd":
            family, n = params
            G = _make_groupoid(family, int(n))
            H = groupoid_algebra(G)
            sigma = degree or G.morphisms[0]
            (yrep, M), degrees = orbit_module(G, H, sigma)
            if M is None:
                raise BadParams("degree %r does not give a YD module" % sigma)
            alg = hopf_to_obj(H, basis=G.morphisms)
            return yd_to_obj(M, alg, meta={"example": "graded_yd %s %s" % (family, n),
                                           "degrees": degrees})
    except (ValueError, TypeError, BadSupport) as exc:
        if isinstance(exc, BadParams):
            raise
        raise BadParams("bad parameters for %s: %s" % (name, exc)) from None
    raise BadParams("unknown example %r" % name)


# ---------------------------------------------------------------------------
# argument handling


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report_text(rep, as_json):
    return rep.to_json() if as_json else rep.summary()


def build_parser():
    p = argparse.ArgumentParser(prog="weakyd",
                                description="Exact verification of weak Hopf algebra data.")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("verify", help="run a verification suite on a spec file")
    v.add_argument("file")
    v.add_argument("--suite", default="all", help="one of: %s" % ", ".join(SUITES))
    v.add_argument("--json", action="store_true", help="print the JSON report")
    v.add_argument("--report", help="also write the JSON report here")
    v.add_argument("--export", help="write the double (suite double) or dual (suite duality)")

    for verb, what in (("double", "Drinfeld double"), ("dual", "dual weak Hopf algebra")):
        d = sub.add_parser(verb, help="export the %s of a weak Hopf spec" % what)
        d.add_argument("file")
        d.add_argument("--out", default="-")

    e = sub.add_parser("example", help="emit a corpus spec file")
    e.add_argument("name", help="group_algebra, symmetric_group, discrete_groupoid, "
                                "pair_groupoid or graded_yd")
    e.add_argument("params", nargs="*")
    e.add_argument("--degree", help="degree morphism for graded_yd")
    e.add_argument("--groupoid", action="store_true", help="emit the groupoid kind")
    e.add_argument("--out", default="-")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.verb == "example":
            obj = generate_example(args.name, args.params, args.groupoid, args.degree)
            _emit(dumps_spec(obj), args.out)
            return 0
        spec = parse_spec(args.file)
        if args.verb == "verify":
            rep, exports = run_suite(spec, args.suite)
            _emit(_report_text(rep, args.json), "-")
            if args.report:
                _emit(rep.to_json(), args.report)
            if args.export:
                key = {"double": "double", "duality": "dual"}.get(args.suite)
                if key is None or key not in exports:
                    raise BadParams("--export needs --suite double or duality")
                _emit(dumps_spec(exports[key]), args.export)
            return 0 if rep.passed else 1
        H = build_bialgebra(spec)
        if not isinstance(H, WeakHopfAlgebra):
            raise BadParams("the file has no antipode")
        if args.verb == "double":
            rep, DA = suite_double(H)
            if DA is None:
                sys.stderr.write(rep.summary())
                return 1
            _emit(dumps_spec(double_to_obj(DA)), args.out)
        else:
            _emit(dumps_spec(hopf_to_obj(dual_weak_hopf(H), meta={
                "construction": "dual weak Hopf algebra", "source_dim": H.dim})), args.out)
        return 0
    except (SpecSyntaxError, SchemaError, FieldError, UnknownSuite, BadParams) as exc:
        sys.stderr.write("weakyd: %s: %s\n" % (type(exc).__name__, exc))
        return 2
    except OSError as exc:
        sys.stderr.write("weakyd: %s\n" % exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
