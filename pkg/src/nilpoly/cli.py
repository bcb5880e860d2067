"""``nilpoly`` command line.

Exit codes: 0 success, 1 domain error (message names the error class),
2 usage error.  ``--json`` on any subcommand switches to machine output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence, TextIO

from nilpoly.bounded import KINDS, BoundedForm, eventual_orbit, classify_bounded, recurring_pattern_check, scan_bounded_orbits, witness_for_form
from nilpoly.errors import NilpotError, NotRealizable
from nilpoly.orbit import Nilpotent, orbit_classify
from nilpoly.poly import format_poly, parse_poly
from nilpoly.search import SearchConfig, enumerate_nilpotent_sequences, fact_zero_description
from nilpoly.verify import SUITES, verify_suite

PROG = "nilpoly"
_STATUS_TEXT = {"divergent": "divergent", "periodic": "eventually periodic"}
# "-x^3+..." would otherwise be read as an option cluster
_LOOKS_LIKE_POLY = re.compile(r"^-[^-\d]")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage().strip()}")


def _seq(s: Sequence[int]) -> str:
    return "{" + ",".join(map(str, s)) + "}"


def _dump(obj, out: TextIO):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_check(a, out) -> int:
    u = parse_poly(a.poly)
    rep = orbit_classify(u, a.r)
    st = rep.status
    if a.json:
        _dump({"poly": format_poly(u), "start": a.r, "nilpotent": isinstance(st, Nilpotent),
               "index": st.index if isinstance(st, Nilpotent) else None, "status": st.kind}, out)
    elif isinstance(st, Nilpotent):
        out.write(f"nilpotent, index {st.index}\n")
    else:
        out.write(f"not nilpotent ({_STATUS_TEXT[st.kind]})\n")
    return 0


def cmd_orbit(a, out) -> int:
    rep = orbit_classify(parse_poly(a.poly), a.r)
    if a.json:
        _dump(rep.to_dict(), out)
        return 0
    st = rep.status
    out.write("values:      " + " ".join(map(str, rep.values)) + "\n")
    out.write("differences: " + " ".join(map(str, rep.differences)) + "\n")
    if isinstance(st, Nilpotent):
        out.write(f"status:      nilpotent, index {st.index}\n")
    elif st.kind == "periodic":
        out.write(f"status:      eventually periodic, preperiod {st.preperiod}, cycle {_seq(st.cycle)}\n")
    else:
        out.write(f"status:      divergent from step {st.escape_step} (escape bound {st.bound})\n")
    return 0


def cmd_enumerate(a, out) -> int:
    if a.r == 0:
        desc = fact_zero_description()
        if a.json:
            _dump(desc, out)
        else:
            out.write("start 0: infinitely many sequences, maximal index 2\n")
            out.write(f"  index 1: {desc['index_1']}\n  index 2: {desc['index_2']}\n")
        return 0
    res = enumerate_nilpotent_sequences(SearchConfig(a.r, a.max_index, emit_families=a.families))
    if a.json:
        _dump(res.to_dict(), out)
        return 0
    if res.families is not None:
        for f in res.families:
            out.write(f"{_seq(f.sequence)}  {format_poly(f.interpolant)} + p(x)*({format_poly(f.modulus)})\n")
    else:
        for s in res.sequences:
            out.write(_seq(s) + "\n")
    out.write(f"{len(res.sequences)} sequences, max index {res.max_index_found}\n")
    return 0


def _form_text(f: BoundedForm) -> str:
    parts = [f"S={f.S}"]
    if f.R is not None:
        parts.append(f"R={f.R}")
    if f.eps is not None:
        parts.append(f"eps={f.eps:+d}")
    return f"form {f.tag}: " + ", ".join(parts)


def cmd_classify(a, out) -> int:
    u = parse_poly(a.poly)
    o = eventual_orbit(u, a.r)
    form = None
    if o is not None:
        form = classify_bounded(o)
        if form is None:
            raise NotRealizable(f"orbit {list(o.preperiod)} {list(o.cycle)} fits no form")
    if a.json:
        _dump({"poly": format_poly(u), "start": a.r, "bounded": o is not None,
               "orbit": None if o is None else {"preperiod": list(o.preperiod), "cycle": list(o.cycle)},
               "form": None if form is None else form.to_dict()}, out)
    elif o is None:
        out.write("unbounded\n")
    else:
        out.write(f"{_form_text(form)}  (preperiod {_seq(o.preperiod)}, cycle {_seq(o.cycle)})\n")
    return 0


def cmd_witness(a, out) -> int:
    f = BoundedForm(a.form, a.S, R=a.R, eps=a.eps)
    w = witness_for_form(f)
    if a.json:
        _dump({"form": f.to_dict(), "witness": list(w.coeffs), "text": format_poly(w)}, out)
    else:
        out.write(format_poly(w) + "\n")
    return 0


def cmd_recurring(a, out) -> int:
    w = recurring_pattern_check(a.m, a.kind, a.prefix, a.value)
    if a.json:
        _dump({"kind": a.kind, "m": a.m, "prefix": a.prefix, "value": a.value,
               "realizable": w is not None, "witness": None if w is None else list(w.coeffs)}, out)
    else:
        out.write((format_poly(w) if w is not None else "not realizable") + "\n")
    return 0


def cmd_verify(a, out) -> int:
    checks = verify_suite(a.suite)
    ok = all(c.passed for c in checks)
    if a.json:
        _dump({"suite": a.suite, "passed": ok, "checks": [c.to_dict() for c in checks]}, out)
    else:
        for c in checks:
            out.write(c.line() + "\n")
        out.write(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed\n")
    return 0 if ok else 1


def cmd_scan(a, out) -> int:
    rep = scan_bounded_orbits(a.deg_max, a.coeff_max, a.r_lo, a.r_hi, workers=a.workers)
    if a.json:
        _dump(rep.to_dict(), out)
        return 0
    out.write(f"{rep.polynomials} polynomials, {rep.orbits} orbits, "
              f"{rep.bounded} bounded, {rep.unbounded} unbounded\n")
    for t, n in sorted(rep.form_counts.items()):
        out.write(f"  form {t}: {n}\n")
    out.write(f"{len(rep.counterexamples)} counterexamples\n")
    for c in rep.counterexamples:
        out.write(f"  {c}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog=PROG, description="Nilpotent orbits of integer polynomials.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(fn=fn)
        return sp

    poly_help = "polynomial, e.g. '-x^3+9x^2-25x+25' or '[25,-25,9,-1]'"
    for name, fn, h in (("check", cmd_check, "is the orbit nilpotent?"),
                        ("orbit", cmd_orbit, "decide the orbit and print it"),
                        ("classify", cmd_classify, "form of a bounded orbit")):
        sp = add(name, fn, h)
        sp.add_argument("poly", help=poly_help)
        sp.add_argument("r", type=int)

    sp = add("enumerate", cmd_enumerate, "all nilpotent sequences at a start")
    sp.add_argument("r", type=int)
    sp.add_argument("--max-index", type=int, default=None)
    sp.add_argument("--families", action="store_true", help="also print interpolant and modulus")

    sp = add("witness", cmd_witness, "polynomial realizing a bounded form")
    sp.add_argument("form", type=int, choices=range(1, 8))
    sp.add_argument("S", type=int)
    sp.add_argument("--R", type=int, default=None)
    sp.add_argument("--eps", type=int, choices=(1, -1), default=None)

    sp = add("recurring", cmd_recurring, "recurringly nilpotent prefix check")
    sp.add_argument("kind", choices=KINDS)
    sp.add_argument("m", type=int)
    sp.add_argument("prefix", type=int, nargs="*")
    sp.add_argument("--value", type=int, default=None, help="recurring value for alternating-zero")

    sp = add("verify", cmd_verify, "reproduce the reference tables")
    sp.add_argument("suite", help=f"one of {', '.join([*SUITES, 'all'])}")

    sp = add("scan", cmd_scan, "classify every bounded orbit in a box")
    sp.add_argument("deg_max", type=int)
    sp.add_argument("coeff_max", type=int)
    sp.add_argument("r_lo", type=int)
    sp.add_argument("r_hi", type=int)
    sp.add_argument("--workers", type=int, default=1)
    return p


def _protect(argv: Sequence[str]) -> list[str]:
    return [" " + t if _LOOKS_LIKE_POLY.match(t) and t != "-h" else t for t in argv]


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_protect(argv))
    except UsageError as e:
        err.write(f"{e}\n")
        return 2
    except SystemExit as e:  # --help
        return 0 if e.code in (0, None) else 2
    try:
        return args.fn(args, out)
    except NilpotError as e:
        err.write(f"{PROG}: {type(e).__name__}: {e}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
