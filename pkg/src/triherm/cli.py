"""Command-line entry point ``triherm``.

Exit codes: ``classify`` returns 0/1/2/3 for SemiStable/S1/S2/Zero; usage
errors 64, bad input data 65, internal invariant violations 70.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import errors
from .cubealg import make_algebra
from .finite import census, default_jobs, finite_algebra, orbit_bfs
from .invariant import discriminant, quad_form
from .lattice import IntegralModel, box_count
from .principal import Flags, dumps, fe_symmetry_check, parse_inputs, principal_part, residue_mapping
from .scalars import QQ, PrimeField
from .serialize import (
    field_from_config,
    group_from_json,
    group_to_json,
    parse_coeffs,
    point_from_json,
    point_to_json,
    quadform_to_json,
    scalar_to_str,
)
from .space import act, random_group_element
from .strata import classify

EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_INTERNAL = 70

REFERENCE_F = "-1,-1,0"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_json(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _emit(args, text: str):
    if not text.endswith("\n"):
        text += "\n"
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _algebra(args):
    """Field from ``--field`` config, else from ``--f`` with ``--q`` (F_q) or Q."""
    if getattr(args, "field", None):
        return field_from_config(_read_json(args.field))
    coeffs = parse_coeffs(args.f)
    q = getattr(args, "q", None)
    return make_algebra(coeffs, PrimeField(q) if q else QQ)


def _json_out(args, obj):
    _emit(args, json.dumps(obj, indent=2, sort_keys=True))


# subcommands ---------------------------------------------------------------


def cmd_classify(args) -> int:
    alg = _algebra(args)
    x = point_from_json(alg, _read_json(args.point))
    report = classify(x)
    _json_out(
        args,
        {
            "label": report.label.value,
            "witness": group_to_json(report.witness),
            "normalized": point_to_json(report.normalized),
        },
    )
    return report.label.exit_code


def cmd_act(args) -> int:
    alg = _algebra(args)
    x = point_from_json(alg, _read_json(args.point))
    if args.group:
        g = group_from_json(alg, _read_json(args.group))
    else:
        g = random_group_element(alg, args.seed)
    _json_out(args, {"g": group_to_json(g), "x": point_to_json(x), "gx": point_to_json(act(g, x))})
    return 0


def cmd_invariant(args) -> int:
    alg = _algebra(args)
    x = point_from_json(alg, _read_json(args.point))
    out = quadform_to_json(alg, quad_form(x))
    out["delta"] = scalar_to_str(alg, discriminant(x))
    _json_out(args, out)
    return 0


def cmd_census(args) -> int:
    coeffs = [int(Fraction(c)) for c in parse_coeffs(args.f)]
    rec = census(args.q, coeffs, jobs=args.jobs)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["q", "f", "n_total", "n_zero", "n_ss", "n_s1", "n_s2"])
    w.writerow(rec.csv_row())
    _emit(args, buf.getvalue())
    return 0


def cmd_orbit(args) -> int:
    coeffs = [int(Fraction(c)) for c in parse_coeffs(args.f)]
    alg = finite_algebra(args.q, coeffs)
    x = point_from_json(alg, _read_json(args.point))
    size = orbit_bfs(x, cap=args.cap)
    _json_out(args, {"point": point_to_json(x), "orbit_size": size})
    return 0


def cmd_box_count(args) -> int:
    coeffs = [int(Fraction(c)) for c in parse_coeffs(args.f)]
    result = box_count(IntegralModel(tuple(coeffs)), args.height, jobs=args.jobs)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["delta", "count"])
    for delta, count in result.rows():
        w.writerow([QQ.format(Fraction(delta)), count])
    _emit(args, buf.getvalue())
    return 0


def cmd_dedekind(args) -> int:
    from .zeta import dedekind_zeta

    coeffs = [int(Fraction(c)) for c in parse_coeffs(args.f)]
    est = dedekind_zeta(args.s, coeffs, prime_bound=args.prime_bound)
    error = max(est.discrepancy, est.tail_bound)
    _json_out(
        args,
        {
            "f": args.f,
            "s": args.s,
            "prime_bound": args.prime_bound,
            "euler_product": f"{float(est.euler):.12g}",
            "ideal_sum": f"{float(est.dirichlet):.12g}",
            "value": f"{float(est.value):.12g}",
            "error": f"{error:.3g}",
        },
    )
    return 0


def cmd_principal_part(args) -> int:
    flags = Flags.parse(args.flags)
    values = parse_inputs(_read_json(args.inputs)) if args.inputs else None
    pp = principal_part(
        flags,
        residue_identity=args.residue_identity,
        vanishing_residues=args.vanishing_residues,
        values=values,
    )
    payload = json.loads(dumps(pp, flags))
    identify = residue_mapping(args.residue_identity, args.vanishing_residues)
    payload["fe_symmetric"] = fe_symmetry_check(pp, identify=identify) if not values else None
    _json_out(args, payload)
    return 0


def cmd_selftest(args) -> int:
    from .selftest import run

    ok = run(seed=args.seed, stream=sys.stdout)
    return 0 if ok else EXIT_INTERNAL


# parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="triherm", description="Binary tri-Hermitian forms over a cubic algebra.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, with_point=True):
        sp.add_argument("--field", help="field config JSON: {\"base\": \"Q\" | {\"Fp\": p}, \"f\": [c0, c1, c2]}")
        sp.add_argument("--f", default=REFERENCE_F, help="coefficients c0,c1,c2 of t^3 + c2 t^2 + c1 t + c0")
        sp.add_argument("--q", type=int, help="work over F_q instead of Q")
        sp.add_argument("--output", help="write the result here instead of stdout")
        if with_point:
            sp.add_argument("point", nargs="?", default="-", help="point JSON file (default stdin)")

    sp = sub.add_parser("classify", help="stratum label with witness")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("act", help="apply a group element to a point")
    common(sp)
    sp.add_argument("--group", help="group element JSON file; random if omitted")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_act)

    sp = sub.add_parser("invariant", help="F_x coefficients and the relative invariant")
    common(sp)
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("census", help="label counts over all of V(F_q)")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--f", default=REFERENCE_F)
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("orbit", help="orbit size over F_q by breadth-first search")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--f", default=REFERENCE_F)
    sp.add_argument("--cap", type=int, default=10**6)
    sp.add_argument("--output")
    sp.add_argument("point", nargs="?", default="-")
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("box-count", help="invariant histogram of integral points in a box")
    sp.add_argument("--height", type=int, required=True)
    sp.add_argument("--f", default=REFERENCE_F)
    sp.add_argument("--jobs", type=int, default=default_jobs())
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_box_count)

    sp = sub.add_parser("dedekind", help="Dedekind zeta value by two methods")
    sp.add_argument("--f", default=REFERENCE_F)
    sp.add_argument("--s", type=float, default=2.0)
    sp.add_argument("--prime-bound", type=int, default=10**6)
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_dedekind)

    sp = sub.add_parser("principal-part", help="symbolic pole table")
    sp.add_argument("--flags", default="d#,d1,d2", help="comma list from d#, d1, d2")
    sp.add_argument("--inputs", help="JSON mapping input symbols to values")
    sp.add_argument("--residue-identity", action="store_true")
    sp.add_argument("--vanishing-residues", action="store_true")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_principal_part)

    sp = sub.add_parser("selftest", help="quick property checks")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_selftest)
    return p


VALUE_OPTIONS = ("--f", "--flags")


def _glue_values(argv: list[str]) -> list[str]:
    """Rewrite ``--f -1,-1,0`` as ``--f=-1,-1,0`` so dash-led values are not taken for options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in VALUE_OPTIONS and i + 1 < len(argv):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except errors.InvariantViolation as exc:
        print(f"triherm: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (errors.TriHermError, ValueError, KeyError, TypeError, ZeroDivisionError, json.JSONDecodeError, OSError) as exc:
        print(f"triherm: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
