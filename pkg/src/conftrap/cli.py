"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 domain or strip violation,
3 I/O error, 4 verification failure (uncertified row or lemma violation).
"""

from __future__ import annotations

import argparse
import logging
import math
import re
import sys
from fractions import Fraction

from . import lemmas
from .bounds import Theorem, bound_value, make_bound_spec, rate_envelope
from .catalog import CATALOG, reference_value
from .errors import DomainError
from .maps import MAPS, MapKind
from .study import StudyConfig, rows_to_csv, run_study, uncertified

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_IO = 3
EXIT_VERIFY = 4

log = logging.getLogger("conftrap")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


_PI_RE = re.compile(r"^(?:(?P<coef>[0-9.]+)\*?)?pi(?:/(?P<den>[0-9.]+))?$")


def number(text):
    """Parse ``1.5``, ``3/2``, ``pi``, ``pi/2`` or ``3pi/4``.

    Rationals come back as :class:`~fractions.Fraction` so that the
    truncation limits are computed exactly.
    """
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    m = _PI_RE.match(text)
    if m:
        coef = float(m["coef"]) if m["coef"] else 1.0
        den = float(m["den"]) if m["den"] else 1.0
        return coef * math.pi / den
    raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def n_range(text):
    parts = text.split(":")
    try:
        vals = [int(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP, got {text!r}") from None
    if len(vals) == 1:
        vals = [vals[0], vals[0], 1]
    elif len(vals) == 2:
        vals.append(1)
    elif len(vals) != 3:
        raise argparse.ArgumentTypeError(f"expected START:STOP:STEP, got {text!r}")
    start, stop, step = vals
    if start < 1 or step < 1 or stop < start:
        raise argparse.ArgumentTypeError(f"need 1 <= START <= STOP and STEP >= 1, got {text!r}")
    return start, stop, step


def _fmt(x):
    return "n/a" if x is None else repr(float(x))


def cmd_run(args, out):
    config = StudyConfig(
        args.integrand,
        int(args.theorem),
        args.n,
        map_kind=args.map,
        output_path=args.out,
        alpha=args.alpha,
        beta=args.beta,
        d=args.d,
        K=args.K,
    )
    rows = run_study(config)
    if args.out:
        out.write(f"wrote {len(rows)} rows to {args.out}\n")
    else:
        out.write(rows_to_csv(rows))
    bad = uncertified(rows)
    if bad:
        for r in bad:
            log.error("n=%d: abs_error %r exceeds bound %r", r.n, r.abs_error, r.bound)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_check_lemmas(args, out):
    reports = lemmas.run_all(args.samples, args.seed)
    for r in reports:
        out.write(f"{r}\n")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def cmd_value(args, out):
    m = MAPS[MapKind(args.map)]
    out.write(f"value: {m.value(args.t)!r}\nderivative: {m.derivative(args.t)!r}\n")
    return EXIT_OK


def cmd_bound(args, out):
    theorem = Theorem(int(args.theorem))
    spec = make_bound_spec(theorem, args.alpha, args.beta, args.d, args.K)
    out.write(f"theorem: {theorem.value}\nmu: {spec.mu!r}\n")
    if spec.constants is None:
        out.write(f"rate_envelope: {rate_envelope(spec.d, spec.mu, args.n)!r}\nbound: n/a\n")
        return EXIT_OK
    first, second = spec.constants
    k = 2 * theorem.value - 3
    out.write(f"C{k}: {first!r}\nC{k + 1}: {second!r}\n")
    out.write(f"bound: {bound_value(spec, args.n)!r}\n")
    return EXIT_OK


def cmd_list(args, out):
    for spec in CATALOG.values():
        out.write(f"{spec.id.value}: {spec.formula}\n")
        out.write(f"  reference: {reference_value(spec.id)!r}\n")
        for r in spec.rows:
            out.write(
                f"  theorem {r.theorem.value} ({r.theorem.map_kind.value}): "
                f"alpha={r.alpha} beta={_row_num(r.beta)} d={r.d} K={'-' if r.K is None else r.K}\n"
            )
    return EXIT_OK


def _row_num(x):
    if isinstance(x, float):
        for den in (1, 2, 4):
            if x == math.pi / den:
                return "pi" if den == 1 else f"pi/{den}"
    return str(x)


def build_parser():
    p = _Parser(prog="conftrap", description="Trapezoidal quadrature with conformal maps and certified error bounds.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    maps = [k.value for k in MapKind]

    run = sub.add_parser("run", help="run a convergence study and emit CSV")
    run.add_argument("--integrand", required=True, type=str.lower, choices=["i1", "i2", "i3"])
    run.add_argument("--theorem", required=True, choices=["1", "2", "3", "4"])
    run.add_argument("--map", choices=maps, help="defaults to the theorem's own map")
    run.add_argument("--n", required=True, type=n_range, metavar="START:STOP:STEP")
    run.add_argument("--out", metavar="PATH", help="write CSV here instead of stdout")
    for name in ("alpha", "beta", "d", "K"):
        run.add_argument(f"--{name}", type=number, help="override the table value")
    run.set_defaults(func=cmd_run)

    chk = sub.add_parser("check-lemmas", help="sample the real-line inequalities")
    chk.add_argument("--samples", type=int, default=10**6)
    chk.add_argument("--seed", type=int, default=42)
    chk.set_defaults(func=cmd_check_lemmas)

    val = sub.add_parser("value", help="evaluate a map and its derivative")
    val.add_argument("--map", required=True, choices=maps)
    val.add_argument("--t", required=True, type=float)
    val.set_defaults(func=cmd_value)

    bnd = sub.add_parser("bound", help="evaluate the constants and error bound")
    bnd.add_argument("--theorem", required=True, choices=["1", "2", "3", "4"])
    bnd.add_argument("--alpha", required=True, type=number)
    bnd.add_argument("--beta", required=True, type=number)
    bnd.add_argument("--d", required=True, type=number)
    bnd.add_argument("--K", type=number)
    bnd.add_argument("--n", required=True, type=int)
    bnd.set_defaults(func=cmd_bound)

    lst = sub.add_parser("list", help="print the integrand catalog")
    lst.set_defaults(func=cmd_list)
    return p


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except DomainError as exc:
        sys.stderr.write(f"conftrap: {exc}\n")
        return EXIT_DOMAIN
    except OSError as exc:
        sys.stderr.write(f"conftrap: {exc}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
