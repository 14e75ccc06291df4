"""Command-line front end.

Exit codes: 0 on success, 1 on bad input, 2 when a bounded search ends
without an answer.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from . import atkin_lehner, bezout, classify, order3
from .arith import FactorizationTimeout
from .bezout import DEFAULT_BOUND, Mode, SearchExhausted
from .eisenstein import classify_loeschian, represent_all
from .sweep import default_jobs, sweep_conjecture2

EXIT_OK, EXIT_INPUT, EXIT_UNKNOWN = 0, 1, 2


class InputError(ValueError):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected n >= 0, got {n}")
    return n


def _coords(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if len(vals) not in (3, 4):
        raise argparse.ArgumentTypeError("give x1,x3,x4 or x1,x2,x3,x4")
    return vals


def _element(d: int, vals: tuple[int, ...]) -> order3.Order3Element:
    if len(vals) == 3:
        return order3.make(d, *vals)
    from .quaternion import QuatElement

    return order3.from_element(QuatElement(d, *vals))


class _Out:
    def __init__(self, path: str | None):
        self.f = open(path, "w", newline="") if path else sys.stdout

    def close(self):
        if self.f is not sys.stdout:
            self.f.close()

    def json(self, obj):
        self.f.write(classify.to_json(obj, indent=2) + "\n")

    def line(self, text: str = ""):
        self.f.write(text + "\n")


def _cmd_loeschian(a, out: _Out) -> int:
    fact = classify_loeschian(a.n)
    if fact is None:
        res = {"n": a.n, "loeschian": False, "result": "NotLoeschian"}
    else:
        reps = represent_all(a.n)
        res = {"n": a.n, "loeschian": True, "three_exp": fact.three_exp,
               "split_part": [list(pe) for pe in fact.split_part], "inert_root": fact.inert_root,
               "representations": [[x.a, x.b] for x in reps]}
    if a.format == "text":
        out.line(f"{a.n}: " + (res["result"] if fact is None else
                               "Loeschian " + " ".join(f"({x.a},{x.b})" for x in reps)))
    else:
        out.json(res)
    return EXIT_OK


def _cmd_bezout(a, out: _Out) -> int:
    cert = bezout.solve(a.d_prime, a.d_dprime, Mode(a.mode), a.bound)
    if not bezout.verify(cert):
        raise ArithmeticError("certificate failed verification")
    if a.format == "text":
        c = cert
        lhs = f"{c.d_dprime}*{c.u} - {c.d_prime}*{c.v}" if c.swapped else f"{c.d_prime}*{c.u} - {c.d_dprime}*{c.v}"
        out.line(f"{lhs} = {c.epsilon}   u = N({c.x.a}, {c.x.b}), v = N({c.y.a}, {c.y.b})")
    else:
        out.json(cert)
    return EXIT_OK


def _cmd_atkin_lehner(a, out: _Out) -> int:
    el = atkin_lehner.build(a.d, a.d_prime, a.bound)
    if not atkin_lehner.check_normalizes(el):
        raise ArithmeticError(f"{el.w} does not normalize O")
    res = {"d": a.d, "d_prime": a.d_prime, "w": list(el.w.coords), "q": list(el.q.coords),
           "epsilon": el.epsilon, "nr": el.w.nr(), "normalizes": True}
    if a.format == "text":
        out.line(f"w_{a.d_prime} = {el.w}  Nr = {el.w.nr()}  w^2 = {a.d_prime} * {el.q}")
    else:
        out.json(res)
    return EXIT_OK


def _cmd_order3(a, out: _Out) -> int:
    els = order3.enumerate(a.d, a.bound)
    if a.format == "json":
        out.json(els)
    else:
        w = csv.writer(out.f) if a.format == "csv" else None
        header = ["x1", "x2", "x3", "x4", "d_prime", "d_dprime", "case"]
        if w:
            w.writerow(header)
        for e in els:
            row = [*map(str, e.coords), str(e.d_prime_inv), str(e.d_dprime_inv), e.case_tag.value]
            if w:
                w.writerow(row)
            else:
                out.line(" ".join(f"{v:>8}" for v in row))
    return EXIT_OK


def _cmd_conjugate(a, out: _Out) -> int:
    xi, eta = _element(a.d, a.xi), _element(a.d, a.eta)
    w = order3.conjugacy_witness(xi, eta)
    if w is not None and not order3.verify_witness(xi, eta, w):
        raise ArithmeticError("witness failed verification")
    if a.format == "text":
        out.line("NotConjugate" if w is None else f"Conjugate alpha = {w.alpha}  Nr = {w.alpha.nr()}")
    else:
        res = {"result": "NotConjugate"} if w is None else {
            "result": "Conjugate", "alpha": list(w.alpha.coords), "nr": w.alpha.nr()}
        out.json(res)
    return EXIT_OK


def _cmd_count(a, out: _Out) -> int:
    rep = classify.count_classes(a.d, a.bound)
    if a.format == "csv":
        w = csv.writer(out.f)
        w.writerow(classify.CSV_FIELDS)
        w.writerow(classify.csv_row(rep))
    elif a.format == "text":
        out.line(f"d = {rep.d}  r = {rep.r}  case {rep.case.value}  C_d = {rep.C_d}  "
                 f"subgroups = {rep.C_d_subgroups}  third stratum: {rep.third_case_status.kind.value}")
        for r in rep.representatives:
            out.line(f"  {r.xi.invariants} {'*' if r.is_star else ' '} {r.xi.coords}")
    else:
        out.json(rep)
    return EXIT_UNKNOWN if rep.C_d is None else EXIT_OK


def _cmd_verify_conj2(a, out: _Out) -> int:
    unknown = 0
    w = csv.writer(out.f) if a.format == "csv" else None
    if w:
        w.writerow(["d_star", "verified", "u", "v"])
    for s in sweep_conjecture2(a.dstar_min, a.dstar_max, a.jobs, a.bound, a.checkpoint):
        if not s.verified:
            unknown += 1
        else:
            u, v = s.witness
            if u - 3 * s.d_star * v != 1 or (u * v) % 3 == 0:
                raise ArithmeticError(f"bad witness for d* = {s.d_star}")
        if w:
            w.writerow([s.d_star, s.verified, *(s.witness or ("", ""))])
        elif a.format == "json":
            out.line(classify.to_json(s))
        elif not s.verified or a.verbose:
            out.line(f"{s.d_star}: " + (f"u={s.witness[0]} v={s.witness[1]}" if s.verified else
                                        f"Unknown (v <= {a.bound})"))
    print(f"unknown: {unknown}", file=sys.stderr)
    return EXIT_UNKNOWN if unknown else EXIT_OK


def _cmd_pell(a, out: _Out) -> int:
    pc = classify.pell_criterion(a.d)
    res = {"d": a.d, "result": "True" if pc.holds else "Inapplicable"}
    if pc.solution is not None:
        res.update(x0=pc.solution.x0, y0=pc.solution.y0)
    if a.format == "text":
        sol = f" (x0, y0) = ({pc.solution.x0}, {pc.solution.y0})" if pc.solution else ""
        out.line(res["result"] + sol)
    else:
        out.json(res)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loeschian", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"),
                        help="default json; text for verify-conj2")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("loeschian", parents=[common], help="classify and represent N")
    s.add_argument("n", type=_nonneg)
    s.set_defaults(func=_cmd_loeschian)

    s = sub.add_parser("bezout", parents=[common], help="Loeschian Bezout certificate")
    s.add_argument("d_prime", type=_positive)
    s.add_argument("d_dprime", type=_positive)
    s.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.ANY.value)
    s.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    s.set_defaults(func=_cmd_bezout)

    s = sub.add_parser("atkin-lehner", parents=[common], help="Atkin-Lehner element w_{d'}")
    s.add_argument("--d", type=_positive, required=True)
    s.add_argument("--dprime", dest="d_prime", type=_positive, required=True)
    s.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    s.set_defaults(func=_cmd_atkin_lehner)

    s = sub.add_parser("order3", parents=[common], help="enumerate order-3 elements")
    s.add_argument("--d", type=_positive, required=True)
    s.add_argument("--bound", type=_nonneg, required=True, help="x1 range bound")
    s.set_defaults(func=_cmd_order3)

    s = sub.add_parser("conjugate", parents=[common], help="decide conjugacy of two order-3 elements")
    s.add_argument("--d", type=_positive, required=True)
    s.add_argument("--xi", type=_coords, required=True, help="x1,x3,x4 or x1,x2,x3,x4 (use --xi=-1,0,0 for negatives)")
    s.add_argument("--eta", type=_coords, required=True)
    s.set_defaults(func=_cmd_conjugate)

    s = sub.add_parser("count", parents=[common], help="class report for d")
    s.add_argument("--d", type=_positive, required=True)
    s.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    s.set_defaults(func=_cmd_count)

    s = sub.add_parser("verify-conj2", parents=[common], help="sweep the search for u - 3d* v = 1")
    s.add_argument("--dstar-min", type=_positive, default=1)
    s.add_argument("--dstar-max", type=_positive, required=True)
    s.add_argument("--jobs", type=_positive, default=default_jobs())
    s.add_argument("--bound", type=_positive, default=DEFAULT_BOUND)
    s.add_argument("--checkpoint", help="resume file holding the last finished d*")
    s.add_argument("--verbose", "-v", action="store_true", help="text format: print every d*")
    s.set_defaults(func=_cmd_verify_conj2)

    s = sub.add_parser("pell", parents=[common], help="Pell criterion for 9 | d")
    s.add_argument("--d", type=_positive, required=True)
    s.set_defaults(func=_cmd_pell)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if a.format is None:
        a.format = "text" if a.command == "verify-conj2" else "json"
    out = _Out(a.output)
    try:
        return a.func(a, out)
    except (SearchExhausted, FactorizationTimeout) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (ValueError, InputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        out.close()


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
