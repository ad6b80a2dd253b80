"""Command-line front end: phi-eval, verify, multiplicities, superzeta-demo."""
import argparse
import cmath
import csv
import io
import json
import math
import sys
from pathlib import Path

from . import __version__
from .divisor import count_divisor
from .errors import ScatDetError, SingularityError
from .scattering import ACCEPTANCE_FAMILIES, ScatteringFamily, central_value, germ_at, phi_eval
from .scattering.head import leading_data
from .specfun import hurwitz_zeta_ds0
from .superzeta import ZeroSet, neg_derivative_at_zero, regularized_det, superzeta_sum
from .surface import GroupDescriptor, multiplicity_report

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3
MAX_N = 10000
TOLERANCE_PROFILE = "double: germ 1e-6, extrapolation 1e-4, cross-check 1e-8"
CROSS_CHECK_TOL = 1e-8


class UsageError(Exception):
    pass


# -- deterministic JSON --------------------------------------------------------


def _fmt_float(x):
    if math.isnan(x) or math.isinf(x):
        return "null"
    return "%.12e" % (x + 0.0)  # folds -0.0 into 0.0


def dumps(obj):
    """JSON with insertion-ordered keys and every float printed as %.12e."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, complex):
        return dumps(_cx(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps(obj.item())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cx(z):
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def envelope(command, inp, result):
    return {
        "command": command,
        "input": inp,
        "result": result,
        "tolerance_profile": TOLERANCE_PROFILE,
        "version": __version__,
    }


# -- argument parsing helpers --------------------------------------------------


def parse_complex(text):
    parts = [p.strip() for p in str(text).split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"expected 're' or 're,im', got {text!r}")


def parse_int_list(text):
    if text is None or not text.strip():
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _load_json_arg(text):
    """Inline JSON, or a path to a JSON file."""
    text = text.strip()
    try:
        if text.startswith(("{", "[")):
            return json.loads(text)
        return json.loads(Path(text).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read JSON from {text!r}: {exc}") from None


def family_from_args(args):
    if getattr(args, "family_json", None):
        return ScatteringFamily.from_json(_load_json_arg(args.family_json))
    if not args.family:
        raise UsageError("give --family or --family-json")
    return ScatteringFamily(args.family, parse_int_list(args.primes))


def _add_family_flags(p):
    p.add_argument("--family", choices=("modular", "gamma0", "gamma0plus"))
    p.add_argument("--primes", default="", help="comma-separated distinct primes, e.g. 2,3,5")
    p.add_argument("--family-json", help='inline JSON or file: {"family": ..., "primes": [...]}')


def _add_format_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true", help="emit a JSON report envelope")
    g.add_argument("--csv", action="store_true", help="emit CSV rows")


def _csv_text(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt_float(v) if isinstance(v, float) else str(v).lower() if isinstance(v, bool) else v for v in row])
    return buf.getvalue()


# -- commands ------------------------------------------------------------------


def _germ_json(g):
    return {"point": g.point, "order": g.order, "value": g.c0 if g.order == 0 else None, "coeffs": list(g.coeffs)}


def cmd_phi_eval(args, out):
    fam = family_from_args(args)
    s = parse_complex(args.s)
    inp = {"family": fam.to_json(), "s": _cx(s), "germ": bool(args.germ)}
    if args.germ:
        if s.imag != 0:
            raise UsageError("--germ expands at real points only")
        g = germ_at(fam, s.real)
        result = {"s": _cx(s), "germ": _germ_json(g)}
        if args.json:
            out.write(dumps(envelope("phi-eval", inp, result)) + "\n")
        elif args.csv:
            out.write(_csv_text(["point", "order", "c0"], [[g.point, g.order, g.c0]]))
        elif g.order == 0:
            out.write(f"order 0, value {_fmt_float(g.c0)}\n")
        else:
            out.write(f"order {g.order}, leading coefficient {_fmt_float(g.c0)}\n")
        return EXIT_OK
    try:
        v = complex(phi_eval(fam, s))
    except SingularityError as exc:
        print(f"phi-eval: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    result = {"s": _cx(s), "value": _cx(v)}
    if args.json:
        out.write(dumps(envelope("phi-eval", inp, result)) + "\n")
    elif args.csv:
        out.write(_csv_text(["s_re", "s_im", "value_re", "value_im"], [[s.real, s.imag, v.real, v.imag]]))
    else:
        out.write(f"phi({_fmt_float(s.real)}{s.imag:+.12e}i) [{fam.label}] = {_fmt_float(v.real)}{v.imag:+.12e}i\n")
    return EXIT_OK


def _verify_row(fam):
    div = count_divisor(fam)
    _, d1 = leading_data(fam)
    rep = central_value(fam)
    return {
        "family": fam.to_json(),
        "label": fam.label,
        "zeros": div.zeros,
        "poles": div.poles,
        "sign_d1": 1 if d1 > 0 else -1,
        "predicted_sign": rep.predicted_sign,
        "germ_value": rep.germ_value,
        "extrapolated_value": rep.extrapolated_value,
        "match": rep.matches,
        "divisor": div.to_json(),
    }


def cmd_verify(args, out):
    families = list(ACCEPTANCE_FAMILIES) if args.all else [family_from_args(args)]
    rows = [_verify_row(f) for f in families]
    ok = all(r["match"] for r in rows)
    inp = {"all": bool(args.all), "families": [f.to_json() for f in families]}
    cols = ["label", "zeros", "poles", "sign_d1", "predicted_sign", "germ_value", "extrapolated_value", "match"]
    if args.json:
        out.write(dumps(envelope("verify", inp, {"rows": rows, "all_match": ok})) + "\n")
    elif args.csv:
        out.write(_csv_text(cols, [[r[c] for c in cols] for r in rows]))
    else:
        out.write(f"{'family':<18}{'N':>3}{'P':>4}{'sgn d1':>8}{'pred':>6}{'germ':>22}{'extrapolated':>22}  match\n")
        for r in rows:
            out.write(
                f"{r['label']:<18}{r['zeros']:>3}{r['poles']:>4}{r['sign_d1']:>8}{r['predicted_sign']:>6}"
                f"{_fmt_float(r['germ_value']):>22}{_fmt_float(r['extrapolated_value']):>22}  {'yes' if r['match'] else 'NO'}\n"
            )
            if args.ledger:
                for e in r["divisor"]["breakdown"]:
                    out.write(f"    s = {e['location']:<6g} order {e['order']:+d}  {e['source']}\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def descriptor_from_args(args):
    if args.descriptor:
        return GroupDescriptor.from_json(_load_json_arg(args.descriptor))
    if args.genus is None or args.cusps is None:
        raise UsageError("give a descriptor JSON or both --genus and --cusps")
    return GroupDescriptor(args.genus, args.cusps, parse_int_list(args.elliptic))


def cmd_multiplicities(args, out):
    if not 0 <= args.n_max <= MAX_N:
        raise UsageError(f"--n-max must lie in [0, {MAX_N}]")
    desc = descriptor_from_args(args)
    reps = [multiplicity_report(desc, n) for n in range(args.n_max + 1)]
    ok = all(r.agree for r in reps)
    if args.json:
        rows = [{"n": r.n, "floor": r.floor_formula, "sine": r.sine_formula, "agree": r.agree} for r in reps]
        result = {"descriptor": desc.to_json(), "rows": rows, "all_agree": ok}
        out.write(dumps(envelope("multiplicities", {"descriptor": desc.to_json(), "n_max": args.n_max}, result)) + "\n")
    else:
        out.write(_csv_text(["n", "floor", "sine", "agree"], [[r.n, r.floor_formula, r.sine_formula, r.agree] for r in reps]))
    return EXIT_OK if ok else EXIT_MISMATCH


def _cross_check(zs, z):
    """Independent route to the determinant: finite differences of the defining sum, or Lerch."""
    if zs.kind == "finite":
        ref = cmath.exp(neg_derivative_at_zero(lambda s: superzeta_sum(zs, s, z).value))
        return "direct-product", ref
    d = -zs.step
    w = (z - zs.start) / d
    # Z(s) = d^(-s) zeta_H(s, w), so -Z'(0) = log(d) (1/2 - w) - zeta_H'(0, w)
    return "lerch", cmath.exp(math.log(d) * (0.5 - w) - hurwitz_zeta_ds0(w))


def cmd_superzeta_demo(args, out):
    zs = ZeroSet.from_json(_load_json_arg(args.zeros))
    z = parse_complex(args.z)
    s_values = [parse_complex(t) for t in args.s.split(";")] if args.s else [3.0, 4.0, 5.0]
    samples = []
    for s in s_values:
        r = superzeta_sum(zs, s, z, cutoff=args.cutoff if zs.kind == "progression" else None)
        samples.append({"s": _cx(s), "value": _cx(r.value), "tail_error": r.tail_error, "terms": r.terms})
    det = complex(regularized_det(zs, z))
    method, ref = _cross_check(zs, z)
    rel = abs(det - ref) / max(abs(ref), 1e-300)
    passed = rel < CROSS_CHECK_TOL
    result = {
        "zero_set": zs.to_json(),
        "z": _cx(z),
        "samples": samples,
        "determinant": _cx(det),
        "cross_check": {"method": method, "reference": _cx(ref), "relative_error": rel, "pass": passed},
    }
    inp = {"zero_set": zs.to_json(), "z": _cx(z), "cutoff": args.cutoff}
    if args.json:
        out.write(dumps(envelope("superzeta-demo", inp, result)) + "\n")
    elif args.csv:
        rows = [[x["s"]["re"], x["s"]["im"], x["value"]["re"], x["value"]["im"], x["tail_error"]] for x in samples]
        out.write(_csv_text(["s_re", "s_im", "value_re", "value_im", "tail_error"], rows))
    else:
        for x in samples:
            out.write(f"Z(s={_fmt_float(x['s']['re'])}) = {_fmt_float(x['value']['re'])}{x['value']['im']:+.12e}i"
                      f"  (tail error <= {_fmt_float(x['tail_error'])})\n")
        out.write(f"determinant = {_fmt_float(det.real)}{det.imag:+.12e}i\n")
        out.write(f"{method} cross-check: {_fmt_float(ref.real)}{ref.imag:+.12e}i, "
                  f"relative error {_fmt_float(rel)} -> {'pass' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_MISMATCH


# -- entry point ---------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="scatdet", description="Central values of scattering determinants.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi-eval", help="evaluate phi(s), or its Laurent germ with --germ")
    _add_family_flags(p)
    p.add_argument("--s", required=True, help="'re' or 're,im'")
    p.add_argument("--germ", action="store_true", help="report order and leading coefficient at a real point")
    _add_format_flags(p)
    p.set_defaults(func=cmd_phi_eval)

    p = sub.add_parser("verify", help="sign of phi(1/2) against the divisor prediction")
    _add_family_flags(p)
    p.add_argument("--all", action="store_true", help="every acceptance family")
    p.add_argument("--ledger", action="store_true", help="print the per-factor divisor justification")
    _add_format_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("multiplicities", help="floor vs sine formula for trivial-zero orders")
    p.add_argument("descriptor", nargs="?", help="descriptor JSON (inline or file)")
    p.add_argument("--genus", type=int)
    p.add_argument("--cusps", type=int)
    p.add_argument("--elliptic", default="", help="comma-separated elliptic orders")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_multiplicities)

    p = sub.add_parser("superzeta-demo", help="superzeta samples and the regularized determinant")
    p.add_argument("--zeros", required=True, help="zero-set JSON (inline or file)")
    p.add_argument("--z", required=True, help="'re' or 're,im'")
    p.add_argument("--s", help="';'-separated sample points, default 3;4;5")
    p.add_argument("--cutoff", type=int, default=200, help="terms summed before the tail (progressions)")
    _add_format_flags(p)
    p.set_defaults(func=cmd_superzeta_demo)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (UsageError, ScatDetError) as exc:
        code = EXIT_SINGULAR if isinstance(exc, SingularityError) else EXIT_USAGE
        print(f"{args.command}: {exc}", file=sys.stderr)
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
