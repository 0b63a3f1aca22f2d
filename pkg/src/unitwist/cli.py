"""Command-line front end.

Subcommands: validate, present, strata, gamma, c0, rform-check, gb,
eliminate, report.  All output is canonical deterministic text; exit codes
are 0 (success), 1 (a check failed), 2 (input or usage error).
"""

from __future__ import annotations

import argparse
import sys

from . import catalog as _catalog
from .cocycle import ExponentialCocycle, cybe_check, verify_cocycle_identity
from .groebner import Ideal, TermOrder, buchberger, eliminate as _eliminate, krull_dimension
from .groupfile import GroupFileError, default_degree_bound, parse_group_file, verify_lie_table
from .hopf import PresentationError
from .poly import PolyRing, parse_poly, render_poly
from .strata import (_normalize_sign, c0_solver, commutator_ideal_and_gamma,
                     stratum_presentation)
from .twist import RForm, TwistedContext, ihoe_presentation, rform_axiom_check, twisted_antipode


class CheckFailure(Exception):
    pass


class InputError(Exception):
    pass


def load_group(args):
    if getattr(args, "example", None):
        try:
            entry = _catalog.get(args.example)
        except KeyError as e:
            raise InputError(str(e))
        return entry.load(), entry
    if getattr(args, "file", None):
        try:
            with open(args.file) as fh:
                text = fh.read()
        except OSError as e:
            raise InputError(str(e))
        try:
            return parse_group_file(text), None
        except (GroupFileError, PresentationError, ValueError) as e:
            raise InputError("cannot parse %s: %s" % (args.file, e))
    raise InputError("give a group file or --example ID")


def build_cocycle(data):
    if data.cocycle_override is not None:
        return data.cocycle_override
    if data.table_cocycle is not None:
        return data.table_cocycle
    if data.rmatrix is None:
        raise InputError("group file defines no [rmatrix] or [cocycle-table]")
    return ExponentialCocycle(data.presentation, data.rmatrix)


def build_context(data):
    return TwistedContext.hopf(data.presentation, build_cocycle(data))


def header(data, max_degree, strict):
    return ["group: %s" % data.name,
            "max-degree: %d" % max_degree,
            "strict: %s" % ("on" if strict else "off")]


def run_validate(data, max_degree, strict):
    lines = []
    ok = True
    rep = data.presentation.validate(strict=strict)
    lines += ["[presentation-checks]"] + rep.lines()
    ok = ok and rep.ok
    lie_ok, where = verify_lie_table(data)
    lines.append("declared lie table: %s" % ("pass" if lie_ok else "FAIL at %s" % (where,)))
    ok = ok and lie_ok
    if data.rmatrix is not None:
        lie = data.presentation.lie_data()
        cy = cybe_check(lie, data.rmatrix)
        lines.append("classical Yang-Baxter equation: %s" % ("pass" if cy else "FAIL"))
        ok = ok and cy
    j = build_cocycle(data)
    idrep = verify_cocycle_identity(j, max_degree)
    lines.append("cocycle identity at bound %d: %s"
                 % (max_degree, "pass" if idrep.ok else "FAIL on %r" % (idrep.failure,)))
    ok = ok and idrep.ok
    return ok, lines


def run_present(data):
    ctx = build_context(data)
    pres = ihoe_presentation(ctx)
    return pres, pres.lines()


def run_gamma(data, bound=None):
    ctx = build_context(data)
    pres = ihoe_presentation(ctx)
    rep = commutator_ideal_and_gamma(ctx, pres)
    return rep


def run_c0(data, bound, with_gamma=True):
    ctx = build_context(data)
    gamma_ideal = None
    if with_gamma:
        gamma_ideal = commutator_ideal_and_gamma(ctx).commutator_ideal
    # The fixed-point conditions are evaluated on the exponential evaluator:
    # it is natural in the r-matrix, so its symbolic conjugates realize the
    # adjoint action exactly.  A solved correction table is a particular
    # cocycle representative and need not be equivariant.
    j = ctx.right
    if data.cocycle_override is not None and data.rmatrix is not None:
        j = ExponentialCocycle(data.presentation, data.rmatrix)
    return c0_solver(data.presentation, j, bound, gamma_ideal=gamma_ideal)


def run_stratum(data, subgroup_name, point_name, coinv_bound=3):
    pres = data.presentation
    if subgroup_name not in pres.named_subgroups:
        raise InputError("unknown subgroup %r" % subgroup_name)
    if "=" in point_name:
        # inline coordinates: "X=1,Y=1/2"
        coords = {}
        for part in point_name.split(","):
            name, val = part.split("=", 1)
            try:
                coords[name.strip()] = parse_poly(val, pres.ring)
            except ValueError as e:
                raise InputError("bad inline coordinate %r: %s" % (part, e))
        try:
            point = pres.point(coords)
        except ValueError as e:
            raise InputError(str(e))
        label = point_name
    elif point_name in pres.named_points:
        point = pres.named_points[point_name]
        label = point_name
    else:
        raise InputError("unknown point %r" % point_name)
    ctx = build_context(data)
    return stratum_presentation(pres, ctx, pres.named_subgroups[subgroup_name],
                                point, name=label, coinv_bound=coinv_bound)


def _parse_ring_args(args):
    gens = tuple(args.vars.replace(",", " ").split())
    params = tuple((args.params or "").replace(",", " ").split())
    return PolyRing(gens, params)


def cmd_gb(args, out):
    ring = _parse_ring_args(args)
    polys = [parse_poly(t, ring) for t in args.polys]
    basis = buchberger(polys, TermOrder(ring))
    for g in basis:
        out.write(render_poly(g) + "\n")
    if not basis:
        out.write("0\n")
    out.write("dimension: %d\n" % krull_dimension(Ideal(ring, polys)))
    return 0


def cmd_eliminate(args, out):
    ring = _parse_ring_args(args)
    polys = [parse_poly(t, ring) for t in args.polys]
    drop = tuple(args.drop.replace(",", " ").split())
    kept = _eliminate(Ideal(ring, polys), drop)
    gb = kept.groebner()
    for g in gb:
        out.write(render_poly(g) + "\n")
    if not gb:
        out.write("0\n")
    return 0


def report_lines(entry, max_degree=None, strict=False):
    """The full golden report for a catalog entry, plus mismatch list."""
    data = entry.load()
    expected = entry.expected
    pres = data.presentation
    bound = max_degree or default_degree_bound(pres)
    lines = ["= report %s =" % entry.id]
    lines += header(data, bound, strict)
    mismatches = []

    ok, vlines = run_validate(data, max_degree=3, strict=strict)
    lines += ["", "[validate]"] + vlines

    ctx = build_context(data)
    presentation = ihoe_presentation(ctx)
    rel_lines = presentation.lines()
    lines += ["", "[presentation]"] + (rel_lines or ["(commutative)"])
    if rel_lines != expected["relations"]:
        mismatches.append("relations: %r != %r" % (rel_lines, expected["relations"]))

    for b, expect_ok in sorted(expected.get("cocycle_identity", {}).items()):
        idrep = verify_cocycle_identity(ctx.right, b)
        verdict = "pass" if idrep.ok else "fail"
        lines.append("cocycle identity at bound %d: %s (recorded)" % (b, verdict))
        if idrep.ok != expect_ok:
            mismatches.append("cocycle identity verdict at bound %d: %s" % (b, verdict))
    exp_expect = expected.get("exponential_identity", {})
    if exp_expect and data.cocycle_override is not None:
        raw = ExponentialCocycle(pres, data.rmatrix)
        for b, expect_ok in sorted(exp_expect.items()):
            idrep = verify_cocycle_identity(raw, b)
            verdict = "pass" if idrep.ok else "fail"
            lines.append("raw exponential identity at bound %d: %s "
                         "(corrected table in use)" % (b, verdict))
            if idrep.ok != expect_ok:
                mismatches.append("exponential identity verdict at bound %d" % b)

    gam = commutator_ideal_and_gamma(ctx, presentation)
    lines += ["", "[gamma]"] + gam.lines()
    got_gb = [render_poly(g) for g in gam.commutator_ideal.groebner()]
    if got_gb != expected["gamma_gb"]:
        mismatches.append("gamma ideal: %r != %r" % (got_gb, expected["gamma_gb"]))
    if gam.gamma_dim != expected["gamma_dim"]:
        mismatches.append("gamma dim: %d != %d" % (gam.gamma_dim, expected["gamma_dim"]))
    if not gam.hopf_ok:
        mismatches.append("gamma hopf-ideal check failed")

    lines += ["", "[strata]"]
    for spec in expected.get("strata", []):
        stratum = run_stratum(data, "T", spec["point"])
        lines += stratum.lines()
        got_ideal = [render_poly(g) for g in stratum.ideal.groebner()]
        if got_ideal != spec["ideal"]:
            mismatches.append("stratum %s ideal: %r != %r"
                              % (spec["point"], got_ideal, spec["ideal"]))
        if stratum.dims != spec["dims"]:
            mismatches.append("stratum %s dims: %r != %r"
                              % (spec["point"], stratum.dims, spec["dims"]))
        verdicts = [l for l in stratum.flags.get("weyl", []) if l.startswith("weyl:")]
        if verdicts and spec.get("weyl") and spec["weyl"] not in verdicts[0]:
            mismatches.append("stratum %s weyl verdict: %r" % (spec["point"], verdicts[0]))

    lines += ["", "[centre]"]
    candidates = []
    if "T" in pres.named_subgroups:
        for f in pres.coinvariants(pres.named_subgroups["T"], 2, side="double"):
            f = f - pres.ring.const(f.counit())
            if not f.is_zero():
                candidates.append(_normalize_sign(f))
    if not candidates:
        lines.append("(no nontrivial double-coset functions up to degree 2)")
    central_renders = []
    for f in candidates:
        is_central = all(ctx.commutator(f, pres.ring.var(n)).is_zero()
                         for n in pres.ring.generators)
        lines.append("double-coset function %s: %s"
                     % (render_poly(f), "central" if is_central else "NOT CENTRAL"))
        if not is_central:
            mismatches.append("non-central double-coset function %s" % render_poly(f))
        central_renders.append(render_poly(f))
    for member in expected.get("centre_members", []):
        if member not in central_renders:
            mismatches.append("expected centre member %s not found" % member)

    rrep = rform_axiom_check(RForm(ctx), 3)
    lines += ["", "[checks]"]
    lines += rrep.lines()
    if not rrep.ok:
        mismatches.append("r-form axioms failed at bound 3")

    sj_ok = True
    for g in pres.ring.generators:
        x = pres.ring.var(g)
        if twisted_antipode(ctx, twisted_antipode(ctx, x)) != x:
            sj_ok = False
    lines.append("(S^J)^2 = id on generators: %s" % ("pass" if sj_ok else "FAIL"))
    if not sj_ok:
        mismatches.append("(S^J)^2 != id")

    if "c0_bound" in expected:
        c0 = run_c0(data, expected["c0_bound"])
        lines.append(c0.describe())
        if not c0.matches_gamma:
            mismatches.append("c0 locus does not match gamma")

    if mismatches:
        lines += ["", "MISMATCHES:"] + ["  " + m for m in mismatches]
    else:
        lines += ["", "manifest: all comparisons OK"]
    return lines, mismatches


def main(argv=None):
    out = sys.stdout
    parser = argparse.ArgumentParser(prog="unitwist",
                                     description="deformed coordinate rings of unipotent groups")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_group_args(p):
        p.add_argument("file", nargs="?", help="group definition file")
        p.add_argument("--example", help="built-in catalog id")
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--strict", action="store_true")

    p = sub.add_parser("validate", help="check presentation, CYBE and cocycle axioms")
    add_group_args(p)
    p = sub.add_parser("present", help="emit the commutator presentation")
    add_group_args(p)
    p = sub.add_parser("gamma", help="commutator ideal and 1-dimensional module group")
    add_group_args(p)
    p = sub.add_parser("c0", help="fixed-cocycle locus by symbolic conjugation")
    add_group_args(p)
    p = sub.add_parser("strata", help="double-coset stratum report")
    add_group_args(p)
    p.add_argument("--subgroup", default="T")
    p.add_argument("--point", required=True)
    p = sub.add_parser("rform-check", help="verify the cotriangular form axioms")
    add_group_args(p)
    p = sub.add_parser("report", help="golden report for a catalog example")
    p.add_argument("--example", required=True)
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--strict", action="store_true")
    p = sub.add_parser("gb", help="reduced Groebner basis of explicit generators")
    p.add_argument("--vars", required=True)
    p.add_argument("--params", default="")
    p.add_argument("polys", nargs="+")
    p = sub.add_parser("eliminate", help="elimination ideal of explicit generators")
    p.add_argument("--vars", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--drop", required=True)
    p.add_argument("polys", nargs="+")

    args = parser.parse_args(argv)
    try:
        if args.command == "gb":
            return cmd_gb(args, out)
        if args.command == "eliminate":
            return cmd_eliminate(args, out)
        if args.command == "report":
            entry = _catalog.get(args.example) if args.example in _catalog.ids() else None
            if entry is None:
                raise InputError("unknown catalog id %r (known: %s)"
                                 % (args.example, ", ".join(_catalog.ids())))
            lines, mismatches = report_lines(entry, args.max_degree, args.strict)
            out.write("\n".join(lines) + "\n")
            return 1 if mismatches else 0

        data, entry = load_group(args)
        bound = args.max_degree or default_degree_bound(data.presentation)
        if args.command == "validate":
            ok, lines = run_validate(data, bound, args.strict)
            out.write("\n".join(header(data, bound, args.strict) + lines) + "\n")
            return 0 if ok else 1
        if args.command == "present":
            _, lines = run_present(data)
            out.write("\n".join(lines) + ("\n" if lines else "(commutative)\n"))
            return 0
        if args.command == "gamma":
            rep = run_gamma(data)
            out.write("\n".join(rep.lines()) + "\n")
            return 0
        if args.command == "c0":
            rep = run_c0(data, bound)
            out.write(rep.describe() + "\n")
            return 0 if rep.verdict != "MISMATCH" else 1
        if args.command == "strata":
            stratum = run_stratum(data, args.subgroup, args.point)
            out.write("\n".join(stratum.lines()) + "\n")
            return 0
        if args.command == "rform-check":
            ctx = build_context(data)
            rep = rform_axiom_check(RForm(ctx), min(bound, 3))
            out.write("\n".join(rep.lines()) + "\n")
            return 0 if rep.ok else 1
        raise InputError("unknown command")
    except InputError as e:
        sys.stderr.write("error: %s\n" % e)
        return 2
    except (GroupFileError, PresentationError) as e:
        sys.stderr.write("error: %s\n" % e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
