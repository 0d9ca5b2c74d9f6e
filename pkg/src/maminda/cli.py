"""Command-line front end.

    maminda distortion --psi cardioid --radii 1,0.8,0.6667,0.5 --format csv
    maminda bohr --psi janowski --D 1 --E -1
    maminda curve --psi lemniscate --samples 4096 --format svg --out lem.svg
    maminda radius --psi sigmoid --family F
    maminda member --psi cardioid --coeffs '[0.1, 0.02]'
    maminda verify acceptance
    maminda table-all

Exit codes: 0 success, 1 usage error, 2 a verification check failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .errors import MamindaError

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
PARAMS = (("D", "D"), ("E", "E"), ("alpha", "alpha"), ("gamma", "gamma"),
          ("beta", "beta"), ("c", "c"), ("lambda", "lam"))


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# ------------------------------------------------------------- formatting

def _round(x, digits):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return str(x)
        return float(f"{x:.{digits}g}")
    if isinstance(x, complex):
        return [_round(x.real, digits), _round(x.imag, digits)]
    if isinstance(x, dict):
        return {str(k): _round(v, digits) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_round(v, digits) for v in x]
    return str(x)


def to_json(obj) -> str:
    return json.dumps(_round(obj, 12), indent=2, sort_keys=True) + "\n"


def to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([f"{float(v):.6g}" if isinstance(v, (float, np.floating)) else v for v in row])
    return buf.getvalue()


def to_svg(points, size=512, pad=16) -> str:
    p = np.asarray(points, dtype=np.complex128)
    p = p[np.isfinite(p)]
    x, y = p.real, -p.imag
    span = max(np.ptp(x), np.ptp(y), 1e-12)
    s = (size - 2 * pad) / span
    X = pad + (x - x.min()) * s
    Y = pad + (y - y.min()) * s
    pts = " ".join(f"{a:.3f},{b:.3f}" for a, b in zip(X, Y))
    pts += f" {X[0]:.3f},{Y[0]:.3f}"
    return ('<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
            f'<polyline fill="none" stroke="black" stroke-width="1" points="{pts}"/>\n</svg>\n')


def emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


# --------------------------------------------------------------- selectors

def _spec(args):
    from .psi import make_psi
    if args.psi is None:
        raise UsageError("--psi is required")
    params = {k: getattr(args, attr) for k, attr in PARAMS if getattr(args, attr) is not None}
    return make_psi(args.psi, **params)


def _radii(text):
    try:
        vals = [float(eval_fraction(v)) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --radii {text!r}: {exc}") from None
    if not vals or any(not 0.0 < v <= 1.0 for v in vals):
        raise UsageError("--radii needs values in (0, 1]")
    return vals


def eval_fraction(s: str) -> float:
    s = s.strip()
    if "/" in s:
        a, b = s.split("/", 1)
        return float(a) / float(b)
    return float(s)


def _fmt(args, allowed, default):
    f = args.format or default
    if f not in allowed:
        raise UsageError(f"{args.command} supports --format {'/'.join(allowed)}, not {f}")
    return f


# ---------------------------------------------------------------- commands

def cmd_distortion(args):
    from .distortion import distortion_table
    spec = _spec(args)
    rows = distortion_table(spec, _radii(args.radii or "1,0.8,2/3,0.5"))
    fmt = _fmt(args, ("csv", "json"), "csv")
    if fmt == "csv":
        text = to_csv(["r", "theta1", "min_mod", "m", "upper"],
                      [(r.r, r.theta1, r.min_mod, r.lower, r.upper) for r in rows])
    else:
        text = to_json({"psi": spec.title, "rows": [r.as_dict() for r in rows]})
    emit(text, args.out)
    return EXIT_OK


def cmd_bohr(args):
    from .bohr import bohr_janowski, bohr_radius
    spec = _spec(args)
    if spec.name == "janowski":
        res = bohr_janowski(spec.p("D"), spec.p("E"))
    else:
        res = bohr_radius(spec, N=args.order or 64)
    d = {"psi": spec.title, "r_star": res.r_star, "r0": res.r0, "r_b": res.r_b,
         "sharp_flag": res.sharp_flag, "notes": res.notes}
    fmt = _fmt(args, ("json", "csv"), "json")
    if fmt == "json":
        emit(to_json(d), args.out)
    else:
        emit(to_csv(["r_star", "r0", "r_b", "sharp_flag"],
                    [(res.r_star, res.r0, res.r_b, res.sharp_flag)]), args.out)
    return EXIT_OK


def cmd_radius(args):
    from . import radius as R
    fam = args.family
    if fam == "section":
        if args.k is None:
            raise UsageError("--family section needs --k")
        spec = _spec(args) if args.psi else None
        res = R.section_radius(args.k, spec, "starlike" if spec else "convexity")
        label = spec.title if spec else None
    else:
        spec = _spec(args)
        label = spec.title
        if fam == "F":
            res = R.F_radius(spec)
        elif fam == "H":
            if args.q is None:
                raise UsageError("--family H needs --q")
            res = R.H_radius(spec, args.q)
        else:
            res = R.convexity_radius(spec)
    d = {"family": fam, "psi": label, "q": args.q, "k": args.k, **res.as_dict()}
    fmt = _fmt(args, ("json", "csv"), "json")
    if fmt == "json":
        emit(to_json(d), args.out)
    else:
        emit(to_csv(["value", "lo", "hi", "method"],
                    [(res.value, res.bracket[0], res.bracket[1], res.method)]), args.out)
    return EXIT_OK


def _read_coeffs(text):
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--coeffs is neither a file nor JSON: {exc}") from None
    if isinstance(data, dict):
        data = data.get("coeffs", data.get("a"))
    if not isinstance(data, list) or not data:
        raise UsageError("--coeffs must be a JSON list [a2, a3, ...]")
    out = []
    for v in data:
        if isinstance(v, list) and len(v) == 2:
            out.append(complex(v[0], v[1]))
        elif isinstance(v, (int, float)):
            out.append(complex(v))
        else:
            raise UsageError(f"bad coefficient {v!r}; use numbers or [re, im] pairs")
    return out


def cmd_member(args):
    from . import convolution as C
    spec = _spec(args)
    if args.coeffs is None:
        raise UsageError("member needs --coeffs (JSON list a2, a3, ... or a file holding one)")
    a = _read_coeffs(args.coeffs)
    f = C.poly(a)
    t_grid = None
    if args.samples:
        t_grid = 2 * np.pi * np.arange(args.samples) / args.samples
    test = C.convex_nonvanishing if args.variant == "convex" else C.starlike_nonvanishing
    verdict = test(f, spec, t_grid=t_grid)
    d = {"psi": spec.title, "variant": args.variant, "coeffs": a,
         "member": verdict.passed, **verdict.as_dict(),
         "coefficient_bound": C.coeff_sufficiency(a, spec, args.variant)}
    _fmt(args, ("json",), "json")
    emit(to_json(d), args.out)
    return EXIT_OK


def cmd_curve(args):
    from .psi import boundary_curve
    spec = _spec(args)
    n = args.samples or 4096
    t = 2 * np.pi * np.arange(n) / n
    w = boundary_curve(spec, n)
    if w.size != n:
        from .psi import psi_values
        full = psi_values(spec, np.exp(1j * t))
        keep = np.isfinite(full)
        t, w = t[keep], full[keep]
    fmt = _fmt(args, ("csv", "json", "svg"), "csv")
    if fmt == "csv":
        text = to_csv(["t", "re", "im"], [(a, b.real, b.imag) for a, b in zip(t, w)])
    elif fmt == "json":
        text = to_json({"psi": spec.title, "t": t.tolist(), "re": w.real.tolist(), "im": w.imag.tolist()})
    else:
        text = to_svg(w)
    emit(text, args.out)
    return EXIT_OK


def _criteria_report(crits):
    lines = []
    for c in crits:
        lines.append(c.summary())
        lines.extend(ch.line() for ch in c.checks)
    return lines


def cmd_verify(args):
    suite = args.suite
    if suite == "acceptance":
        from .acceptance import run_all
        crits = run_all(args.criteria)
        ok = all(c.passed for c in crits)
        if args.format == "json":
            emit(to_json([{"criterion": c.number, "title": c.title, "passed": c.passed,
                           "seconds": c.seconds,
                           "checks": [dict(vars(ch), passed=ch.passed) for ch in c.checks]}
                          for c in crits]), args.out)
        else:
            emit("\n".join(_criteria_report(crits)) + "\n", args.out)
        return EXIT_OK if ok else EXIT_VERIFY
    if suite == "misprints":
        from .acceptance import criterion_7
        c = criterion_7()
        emit("\n".join(_criteria_report([c])) + "\n", args.out)
        return EXIT_OK if c.passed else EXIT_VERIFY
    return _verify_bulextn(args)


def _verify_bulextn(args):
    from . import subordination as B
    from .acceptance import criterion_5
    tol = args.tol if args.tol is not None else 1e-12
    hs = [B.janpower(1, -1, 1), B.janpower(0.5, -0.5, 0.5), B.janpower(1, 0, 1),
          B.janpower(0.5, 0, 0.5), B.lemniscate_h(0.5), B.lemniscate_h(B.constant_c0()),
          B.exp_h(0.5), B.exp_h(B.constant_lambda0()), B.exp_h(1.0), B.alpha_h(0.0),
          B.alpha_h(0.5)]
    rows = []
    for h in hs:
        bul = B.check_bul_condition(h)
        p = B.p_condition(h)
        spot = B.spot_check(h) if bul.passed and p.state == "Pass" else None
        rows.append({"h": h.title, "inf_re": bul.inf_value, "bul_condition": bul.passed,
                     "argmin": bul.argmin, "p_condition": p.state,
                     "spot_check": None if spot is None else f"{spot[0]}/{spot[1]}"})
    c0, lam0 = B.constant_c0(), B.constant_lambda0()
    crit = criterion_5()
    ok = (abs(c0 - 0.845276) <= 1e-5 and abs(B.c0_quartic(c0)) < 1e-10
          and abs(B.exp_h_real_value(lam0) + 0.5) <= tol)
    d = {"c0": c0, "c0_residual": B.c0_quartic(c0), "lambda0": lam0,
         "real_axis_value_at_lambda0": B.exp_h_real_value(lam0),
         "hypotheses": rows, "passed": bool(ok and crit.passed)}
    if (args.format or "json") == "json":
        emit(to_json(d), args.out)
    else:
        lines = [f"c0 = {c0:.12g} (residual {B.c0_quartic(c0):.3g})",
                 f"lambda0 = {lam0:.12g}, real-axis value {B.exp_h_real_value(lam0):.12g}"]
        lines += [f"{r['h']}: inf Re(1+zh''/h') = {r['inf_re']:.6g} "
                  f"[{'pass' if r['bul_condition'] else 'fail'}], (p) {r['p_condition']}"
                  for r in rows]
        emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if d["passed"] else EXIT_VERIFY


def cmd_table_all(args):
    from .acceptance import criterion_1, criterion_2, criterion_4, criterion_5, criterion_7
    from .distortion import cardioid_table
    from .psi import cardioid
    rows = cardioid_table()
    table = to_csv(["r", "theta1", "min_mod", "m", "upper"],
                   [(r.r, r.theta1, r.min_mod, r.lower, r.upper) for r in rows])
    crits = [criterion_1(), criterion_2(), criterion_4(), criterion_5(), criterion_7()]
    from .extremal import koebe_radius
    from .radius import F_radius, convexity_radius
    from .psi import lemniscate, sigmoid, sine
    extra = [f"koebe radius cardioid = {koebe_radius(cardioid()):.12g}",
             f"koebe radius lemniscate = {koebe_radius(lemniscate()):.12g}"]
    if not args.quick:
        for s in (lemniscate(), sigmoid(), sine(), cardioid()):
            extra.append(f"F radius {s.title} = {F_radius(s).value:.12g}")
        extra.append(f"convexity radius cardioid = {convexity_radius(cardioid()).value:.12g}")
    text = ("# cardioid distortion table\n" + table + "\n# constants\n"
            + "\n".join(extra) + "\n\n# checks\n" + "\n".join(_criteria_report(crits)) + "\n")
    emit(text, args.out)
    return EXIT_OK if all(c.passed for c in crits) else EXIT_VERIFY


COMMANDS = {"distortion": cmd_distortion, "bohr": cmd_bohr, "radius": cmd_radius,
            "member": cmd_member, "curve": cmd_curve, "verify": cmd_verify,
            "table-all": cmd_table_all}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--psi", help="catalog name, e.g. cardioid, janowski, lemniscate")
    common.add_argument("--D", type=float)
    common.add_argument("--E", type=float)
    common.add_argument("--alpha", type=float)
    common.add_argument("--gamma", type=float)
    common.add_argument("--beta", type=float)
    common.add_argument("--c", type=float)
    common.add_argument("--lambda", dest="lam", type=float)
    common.add_argument("--q", type=float)
    common.add_argument("--k", type=int)
    common.add_argument("--radii", help="comma separated, fractions allowed (2/3)")
    common.add_argument("--samples", type=int)
    common.add_argument("--order", type=int)
    common.add_argument("--format", choices=("json", "csv", "svg"))
    common.add_argument("--out", help="output file (its directory must exist)")
    common.add_argument("--tol", type=float)

    p = _Parser(prog="maminda", description="Ma-Minda class toolkit")
    p.add_argument("--version", action="version", version=f"maminda {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.add_parser("distortion", parents=[common], help="distortion table |f'(z)| bounds")
    sub.add_parser("bohr", parents=[common], help="Bohr radius r0, r_b and Koebe radius")
    r = sub.add_parser("radius", parents=[common], help="radius of starlikeness/convexity")
    r.add_argument("--family", choices=("F", "H", "convexity", "section"), default="F")
    m = sub.add_parser("member", parents=[common], help="membership of a polynomial in S*(psi)/C(psi)")
    m.add_argument("--coeffs", help="JSON list a2, a3, ... (or a path to one)")
    m.add_argument("--variant", choices=("starlike", "convex"), default="starlike")
    sub.add_parser("curve", parents=[common], help="boundary curve psi(e^{it})")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=("acceptance", "bulextn", "misprints"))
    v.add_argument("--criteria", type=lambda s: [int(x) for x in s.split(",")],
                   help="subset of acceptance criteria, e.g. 1,2,5")
    t = sub.add_parser("table-all", parents=[common], help="distortion table and constants report")
    t.add_argument("--quick", action="store_true", help="skip the radius bisections")
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError("maminda: a subcommand is required (see --help)")
        if args.out is not None:
            d = os.path.dirname(os.path.abspath(args.out))
            if not os.path.isdir(d):
                raise UsageError(f"output directory {d} does not exist")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except (MamindaError, ValueError) as exc:
        print(f"maminda: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
