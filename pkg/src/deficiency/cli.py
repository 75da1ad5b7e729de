"""Command-line front end: ``deficiency <subcommand> [flags]``.

Every subcommand writes JSON or CSV to stdout (or ``--output``). Exit codes:
0 success, 2 usage error, 3 computation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import mpmath

from .exact import as_rational, rational_str

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 2, 3
NUM_DIGITS = 15


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument types


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    return n


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _rational(text: str) -> Fraction:
    """'p/q', integer or decimal literal, converted exactly (0.74 -> 37/50)."""
    try:
        return as_rational(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational or decimal literal: {text!r}")


def _grid(text: str) -> tuple[Fraction, Fraction, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("grid must be LO:HI:POINTS")
    try:
        lo, hi, pts = _rational(parts[0]), _rational(parts[1]), int(parts[2])
    except (argparse.ArgumentTypeError, ValueError):
        raise argparse.ArgumentTypeError(f"bad grid {text!r}")
    if pts < 1 or (pts > 1 and not lo < hi):
        raise argparse.ArgumentTypeError("grid needs LO < HI and POINTS >= 1")
    return lo, hi, pts


def _grid_points(spec) -> list[Fraction]:
    lo, hi, pts = spec
    if pts == 1:
        return [lo]
    return [lo + (hi - lo) * Fraction(i, pts - 1) for i in range(pts)]


def _num(x, digits: int = NUM_DIGITS) -> str:
    from .asymptotics import mp_to_decimal

    return mp_to_decimal(x, digits)


# ---------------------------------------------------------------------------
# subcommand bodies: each returns (json_obj, csv_header, csv_rows)


def cmd_thresholds(a):
    from .thresholds import threshold_set

    ts = threshold_set(a.n)
    rows = []
    for k, t in enumerate(ts.entries, 1):
        lo, hi = t.bounds()
        rows.append([k, rational_str(t.value) if t.is_exact else "", rational_str(lo), rational_str(hi),
                     t.decimal(a.digits)])
    return ts.to_json(a.digits), ["k", "exact", "lo", "hi", "decimal"], rows


def cmd_classify(a):
    from .thresholds import classify

    count = classify(a.n, a.c)
    return ({"n": a.n, "c": rational_str(a.c), "count": count},
            ["n", "c", "count"], [[a.n, rational_str(a.c), count]])


def cmd_deficiency(a):
    from .thresholds import deficiency_indices

    d = deficiency_indices(a.n, a.c)
    return ({"n": a.n, "c": rational_str(a.c), "n_plus": d, "n_minus": d},
            ["n", "c", "n_plus", "n_minus"], [[a.n, rational_str(a.c), d, d]])


def cmd_selfadjoint(a):
    from .thresholds import is_essentially_selfadjoint, selfadjoint_threshold

    text, (lo, hi) = selfadjoint_threshold(a.n, a.digits)
    obj = {"n": a.n, "c_n": text, "c_n_interval": [rational_str(lo), rational_str(hi)]}
    if a.c is not None:
        obj["c"] = rational_str(a.c)
        obj["essentially_selfadjoint"] = is_essentially_selfadjoint(a.n, a.c)
    header = list(obj)
    row = [v if not isinstance(v, list) else ";".join(v) for v in obj.values()]
    if "essentially_selfadjoint" in obj:
        row[-1] = str(obj["essentially_selfadjoint"]).lower()
    return obj, header, [row]


def cmd_bands(a):
    from .thresholds import band_table

    bands = band_table(a.n)
    rows = []
    for b in bands:
        rows.append([
            "-inf" if b.low is None else b.low.decimal(a.digits),
            str(b.low_closed).lower(),
            "inf" if b.high is None else b.high.decimal(a.digits),
            str(b.high_closed).lower(),
            b.count,
        ])
    return ([b.to_json(a.digits) for b in bands],
            ["low", "low_closed", "high", "high_closed", "count"], rows)


def cmd_roots(a):
    from .rootcount import numeric_roots

    inv = numeric_roots(a.n, a.c, a.precision)
    obj = inv.to_json()
    return obj, ["re", "im", "multiplicity"], [r for r in obj["roots"]]


def cmd_hpoly(a):
    from .hurwitz import build_hurwitz, h_poly_leading_law

    fam = build_hurwitz(a.n)
    coeffs = [rational_str(x) for x in fam.h_poly.coeffs]
    obj = {
        "n": a.n,
        "coefficients": coeffs,
        "degree": fam.h_poly.degree,
        "leading_law": str(h_poly_leading_law(a.n)),
        "det_sign": fam.det_sign,
        "linear_factor": [rational_str(x) for x in fam.linear_factor.coeffs],
    }
    return obj, ["power", "coefficient"], [[k, v] for k, v in enumerate(coeffs)]


def cmd_orlando(a):
    from .hurwitz import build_hurwitz, orlando_check, orlando_product

    h = build_hurwitz(a.n).h_poly(a.c)
    prod = orlando_product(a.n, a.c, a.precision)
    err = orlando_check(a.n, a.c, a.precision)
    obj = {
        "n": a.n,
        "c": rational_str(a.c),
        "h_value": rational_str(h),
        "product_re": _num(prod.real),
        "product_im": _num(prod.imag),
        "relative_error": mpmath.nstr(err, 5),
    }
    return obj, list(obj), [list(obj.values())]


def cmd_galois(a):
    from .galois import TARGETS, clear_denominators, find_all_targets, find_cycle_type_prime, g_poly

    if a.n < 2:
        raise UsageError("galois needs n >= 2")
    f = clear_denominators(g_poly(a.n))
    if a.target:
        evidence = {a.target: find_cycle_type_prime(f, a.target, a.pmax)}
    else:
        evidence = find_all_targets(f, a.pmax)
    objs = []
    for t in TARGETS:
        if t in evidence:
            ev = evidence[t]
            objs.append({"n": a.n, "scale": f.scale, "target": t, "prime": ev.prime,
                         "degrees": list(ev.degrees) if ev.degrees else None})
    rows = [[o["n"], o["scale"], o["target"], "" if o["prime"] is None else o["prime"],
             " ".join(map(str, o["degrees"] or []))] for o in objs]
    return objs, ["n", "scale", "target", "prime", "degrees"], rows


def cmd_table_a1(a):
    from .galois import TARGETS, table_a1

    if a.nmin < 2 or a.nmax < a.nmin:
        raise UsageError("need 2 <= nmin <= nmax")
    rows = table_a1(range(a.nmin, a.nmax + 1), a.pmax)
    header = ["n", *TARGETS]
    return rows, header, [[r["n"], *("" if r[t] is None else r[t] for t in TARGETS)] for r in rows]


def cmd_table_a2(a):
    from .asymptotics import table_a2

    rows = table_a2(a.nmax, a.digits, a.jobs)
    return ([{"n": r.n, "c_n": r.cn, "conjecture_value": r.conjecture_value} for r in rows],
            ["n", "c_n", "conjecture_value"], [[r.n, r.cn, r.conjecture_value] for r in rows])


def cmd_table_a3(a):
    from .asymptotics import table_a3

    rows = table_a3(a.nmax, a.digits, a.jobs)
    return ([{"n": r.n, "lower_bound": r.lower_bound, "mid_value": r.mid_value,
              "upper_bound": r.upper_bound, "sandwich": r.sandwich} for r in rows],
            ["n", "lower_bound", "mid_value", "upper_bound", "sandwich"],
            [[r.n, r.lower_bound, r.mid_value, r.upper_bound, str(r.sandwich).lower()] for r in rows])


def figure1_data(n: int, grid, precision: int = 256) -> list[list]:
    """Rows (x, c, Re alpha_1..2n, Re beta_1..2n) with c = sgn(x)|x|^(2n)."""
    from .indicial import beta_roots
    from .rootcount import numeric_roots

    rows = []
    for x in _grid_points(grid):
        c = x ** (2 * n) * (1 if x >= 0 else -1)
        alphas = numeric_roots(n, c, precision).alphas
        betas = beta_roots(n, c, precision)
        rows.append([rational_str(x), rational_str(c)]
                    + [_num(z.real) for z in alphas] + [_num(z.real) for z in betas])
    return rows


def cmd_figure1(a):
    rows = figure1_data(a.n, a.grid, a.precision)
    N = 2 * a.n
    header = ["x", "c"] + [f"re_alpha_{j}" for j in range(1, N + 1)] + [f"re_beta_{j}" for j in range(1, N + 1)]
    objs = [{"x": r[0], "c": r[1], "re_alpha": r[2:2 + N], "re_beta": r[2 + N:]} for r in rows]
    return objs, header, rows


def cmd_frobenius(a):
    from .frobenius import indicial_root, series_solution, solution_grid

    alpha = indicial_root(a.n, a.c, a.alpha_index, a.precision)
    s = series_solution(a.n, a.c, a.mu, alpha, a.K, a.precision)
    lo, hi, pts = a.grid
    if lo <= 0:
        raise UsageError("frobenius grid must lie in x > 0")
    if pts < 2:
        raise UsageError("frobenius grid needs at least 2 points")
    rows = solution_grid(s, lo, hi, pts)
    return ([{"x": x, "re_y": re, "im_y": im} for x, re, im in rows],
            ["x", "re_y", "im_y"], [list(r) for r in rows])


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="deficiency", description="Deficiency indices of x^(-2n)-perturbed (-1)^n d^2n/dx^2n.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, fmt="json", help=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        sp.add_argument("--format", choices=("json", "csv"), default=fmt)
        sp.add_argument("--output", "-o", default=None, help="write here instead of stdout")
        return sp

    sp = add("thresholds", cmd_thresholds, help="certified threshold set c_n^(1..n)")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--digits", type=_positive, default=20)

    for name, func, h in (("classify", cmd_classify, "number of L^2 power solutions at 0"),
                          ("deficiency", cmd_deficiency, "deficiency indices n_+ = n_-")):
        sp = add(name, func, help=h)
        sp.add_argument("--n", type=_order, required=True)
        sp.add_argument("--c", type=_rational, required=True)

    sp = add("selfadjoint", cmd_selfadjoint, help="essential self-adjointness test and c_n")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--c", type=_rational, default=None)
    sp.add_argument("--digits", type=_positive, default=16)

    sp = add("bands", cmd_bands, help="classification bands over the real c-line")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--digits", type=_positive, default=20)

    sp = add("roots", cmd_roots, help="indicial roots with multiplicities and half-plane counts")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--c", type=_rational, required=True)
    sp.add_argument("--precision", type=_positive, default=256)

    sp = add("hpoly", cmd_hpoly, help="exact h_{n-1}(c)")
    sp.add_argument("--n", type=_order, required=True)

    sp = add("orlando", cmd_orlando, help="pairwise root-sum product against h_{n-1}(c)")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--c", type=_rational, required=True)
    sp.add_argument("--precision", type=_positive, default=256)

    sp = add("galois", cmd_galois, help="Dedekind cycle-type primes for g_{n-1}")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--pmax", type=_positive, default=10**8)
    sp.add_argument("--target", choices=("full-cycle", "(n-2)-cycle", "transposition"), default=None)

    sp = add("table-a1", cmd_table_a1, fmt="csv", help="smallest cycle-type primes, n = nmin..nmax")
    sp.add_argument("--nmin", type=_order, default=4)
    sp.add_argument("--nmax", type=_order, default=10)
    sp.add_argument("--pmax", type=_positive, default=10**8)

    sp = add("table-a2", cmd_table_a2, fmt="csv", help="c_n against (2n^2/pi)^(2n)")
    sp.add_argument("--nmax", type=_order, default=12)
    sp.add_argument("--digits", type=_positive, default=6)
    sp.add_argument("--jobs", type=_positive, default=1)

    sp = add("table-a3", cmd_table_a3, fmt="csv", help="2n^2/pi < c_n^(1/2n) < n/sin(pi/2n)")
    sp.add_argument("--nmax", type=_order, default=25)
    sp.add_argument("--digits", type=_positive, default=8)
    sp.add_argument("--jobs", type=_positive, default=1)

    sp = add("figure1", cmd_figure1, fmt="csv", help="Re alpha_j and Re beta_j along x = sgn(c)|c|^(1/2n)")
    sp.add_argument("--n", type=_order, default=3)
    sp.add_argument("--grid", type=_grid, default=_grid("-8:8:65"))
    sp.add_argument("--precision", type=_positive, default=256)

    sp = add("frobenius", cmd_frobenius, fmt="csv", help="Frobenius series solution on an x-grid")
    sp.add_argument("--n", type=_order, required=True)
    sp.add_argument("--c", type=_rational, required=True)
    sp.add_argument("--mu", type=_rational, required=True)
    sp.add_argument("--alpha-index", type=_positive, required=True)
    sp.add_argument("--K", type=_nonnegative, default=32)
    sp.add_argument("--grid", type=_grid, default=_grid("1/10:1:10"))
    sp.add_argument("--precision", type=_positive, default=256)
    return p


def render(obj, header, rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


_VALUE_FLAGS = ("--c", "--mu", "--grid")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Let ``--c -105/16`` mean ``--c=-105/16`` (argparse would read an option)."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-") and argv[i + 1][1:2].isdigit():
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    if getattr(args, "digits", 1) > 50 and args.command in ("table-a2", "table-a3"):
        print("deficiency: error: digits must be <= 50", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = render(*args.func(args), args.format)
    except UsageError as exc:
        print(f"deficiency: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # computation failures surface as exit 3
        print(f"deficiency: computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
