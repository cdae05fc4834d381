"""Command-line front end.

    monoindex index     --function sin --M 3.14159265 --n 100000
    monoindex index     --csv samples.csv --out text
    monoindex rearrange --function halpha --alpha 0 --n 200 --output curves.csv
    monoindex table     --out text
    monoindex converge  --function sin --M 6.283185307179586 --unit --tol 1e-4

``--M`` is the length of the domain ``[0, M]``.  ``sin`` and ``cos`` are the
plain trigonometric functions on that domain; ``halpha`` and ``constant`` are
stretched from ``[0, 1]`` onto it.  ``--unit`` reports the indices of the
pullback ``h(t) = f(tM)`` on ``[0, 1]`` instead.

Exit status: 0 success, 2 input error, 3 output error, 4 no convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from .corefn import AnalyticFunction, GridFunction, SampleRule, sample
from .indices import compute_indices, converge, trig_table
from .rearrangement import cumulative_pair, rearrange

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_OUTPUT = 3
EXIT_UNCONVERGED = 4

GRID_SPACING_TOL = 1e-9


class InputError(Exception):
    pass


class OutputError(Exception):
    pass


# -- serialization -----------------------------------------------------------


def _num(x: float) -> str:
    return "%.17g" % x


def dumps(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        if not math.isfinite(obj):
            raise ValueError(f"cannot serialize non-finite number {obj!r}")
        return _num(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _fmt4(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.4f}"
    return str(x)


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return str(x).lower()
    if isinstance(x, float):
        return _num(x)
    return str(x)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_csv_cell(v) for v in row])
    return buf.getvalue()


# -- input -------------------------------------------------------------------


def read_csv_grid(path: str | Path, M: float | None = None) -> GridFunction:
    """Read samples from a CSV file.

    Either one value per line, or ``t,value`` pairs whose ``t`` form a uniform
    grid.  A first line without any numbers is taken as a header.  ``M``
    defaults to 1 for bare values and to ``n * spacing`` for pairs.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: cannot read: {exc}") from None

    ts: list[float] = []
    vals: list[float] = []
    width = None
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), 1):
        cells = [c.strip() for c in row]
        if not cells or all(c == "" for c in cells):
            continue
        try:
            nums = [float(c) for c in cells]
        except ValueError:
            if lineno == 1 and not any(_is_number(c) for c in cells):
                continue
            raise InputError(f"{path}:{lineno}: not a number in {row!r}") from None
        if len(nums) not in (1, 2):
            raise InputError(f"{path}:{lineno}: expected 1 or 2 columns, got {len(nums)}")
        if width is None:
            width = len(nums)
        elif len(nums) != width:
            raise InputError(f"{path}:{lineno}: expected {width} columns, got {len(nums)}")
        if not all(math.isfinite(v) for v in nums):
            raise InputError(f"{path}:{lineno}: non-finite value in {row!r}")
        if width == 2:
            ts.append(nums[0])
        vals.append(nums[-1])

    if not vals:
        raise InputError(f"{path}: no data rows")
    if width == 2 and len(ts) > 1:
        steps = np.diff(ts)
        h = steps[0]
        if h <= 0:
            raise InputError(f"{path}: t column must be increasing")
        bad = np.flatnonzero(np.abs(steps - h) > GRID_SPACING_TOL)
        if bad.size:
            raise InputError(f"{path}:{int(bad[0]) + 2}: t values do not form a uniform grid")
        if M is None:
            M = h * len(vals)
    try:
        return GridFunction(np.array(vals), 1.0 if M is None else M)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def _builtin(args) -> AnalyticFunction:
    kind = args.function
    if kind in ("sin", "cos"):
        # sin(t) on [0, M] pulls back to sin(tM) on [0, 1]
        return getattr(AnalyticFunction, kind)(1.0 if args.M is None else args.M)
    if kind == "halpha":
        if args.alpha is None:
            raise InputError("--function halpha needs --alpha")
        return AnalyticFunction.halpha(args.alpha)
    return AnalyticFunction.constant(args.d)


def _check_M(args) -> None:
    if args.M is not None and not (math.isfinite(args.M) and args.M > 0):
        raise InputError(f"--M must be positive, got {args.M}")


def load_source(args) -> GridFunction:
    _check_M(args)
    if args.csv is not None:
        g = read_csv_grid(args.csv, args.M)
    else:
        if args.n is None:
            raise InputError("builtin functions need --n")
        if args.n < 1:
            raise InputError(f"--n must be positive, got {args.n}")
        try:
            g = sample(_builtin(args), args.n, args.rule)
            g = g.with_domain(1.0 if args.M is None else args.M)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    return g.with_domain(1.0) if args.unit else g


# -- commands ----------------------------------------------------------------


def cmd_index(args) -> tuple[str, int]:
    report = compute_indices(load_source(args))
    d = report.as_dict()
    if args.out == "json":
        return dumps(d) + "\n", EXIT_OK
    if args.out == "csv":
        return _csv_text(list(d), [list(d.values())]), EXIT_OK
    return "".join(f"{k:<8} {_fmt4(v)}\n" for k, v in d.items()), EXIT_OK


REARRANGE_HEADER = ("t", "h", "rearranged", "H", "convex_rearranged")


def rearrangement_curves(g: GridFunction) -> dict[str, np.ndarray]:
    """Step function, rearrangement and both cumulative integrals at cell midpoints.

    The cumulative integrals are piecewise linear, so their midpoint values
    are the averages of the neighbouring grid-node values.
    """
    pair = cumulative_pair(g)
    return {
        "t": (np.arange(g.n) + 0.5) * g.cell_width,
        "h": np.asarray(g.values),
        "rearranged": rearrange(g).sorted_values,
        "H": 0.5 * (pair.H[:-1] + pair.H[1:]),
        "convex_rearranged": 0.5 * (pair.C[:-1] + pair.C[1:]),
    }


def cmd_rearrange(args) -> tuple[str, int]:
    curves = rearrangement_curves(load_source(args))
    if args.out == "json":
        return dumps({k: v.tolist() for k, v in curves.items()}) + "\n", EXIT_OK
    rows = zip(*(curves[k].tolist() for k in REARRANGE_HEADER))
    return _csv_text(REARRANGE_HEADER, list(rows)), EXIT_OK


TABLE_KEYS = ("I_sin", "I_cos", "L_sin", "L_cos")
_M_LABELS = {1: "pi/2", 2: "pi", 3: "3pi/2", 4: "2pi"}


def _M_label(M: float) -> str:
    k = round(2 * M / math.pi)
    if k in _M_LABELS and math.isclose(M, k * math.pi / 2):
        return _M_LABELS[k]
    return f"{M:g}"


def cmd_table(args) -> tuple[str, int]:
    n = 100_000 if args.n is None else args.n
    if n < 1:
        raise InputError(f"--n must be positive, got {n}")
    unit = trig_table(n, scaled=False, rule=args.rule)
    scaled = trig_table(n, scaled=True, rule=args.rule)
    if args.out == "json":
        return dumps({"n": n, "unit_domain": unit, "domain_0_M": scaled}) + "\n", EXIT_OK
    if args.out == "csv":
        rows = [["unit", r["M"], *(r[k] for k in TABLE_KEYS)] for r in unit]
        rows += [["domain", r["M"], *(r[k] for k in TABLE_KEYS)] for r in scaled]
        return _csv_text(("table", "M", *TABLE_KEYS), rows), EXIT_OK
    lines = []
    for title, rows in (
        (f"sin(tM), cos(tM) on [0, 1], n = {n}", unit),
        (f"sin(t), cos(t) on [0, M], n = {n}", scaled),
    ):
        lines.append(title)
        lines.append(f"{'M':>6}  " + "  ".join(f"{k:>8}" for k in TABLE_KEYS))
        for r in rows:
            lines.append(
                f"{_M_label(r['M']):>6}  " + "  ".join(f"{r[k]:8.4f}" for k in TABLE_KEYS)
            )
        lines.append("")
    return "\n".join(lines), EXIT_OK


def cmd_converge(args) -> tuple[str, int]:
    _check_M(args)
    if args.csv is not None:
        raise InputError("converge needs a builtin --function, not --csv")
    if args.tol is None or not (args.tol > 0):
        raise InputError("converge needs a positive --tol")
    M = 1.0 if args.M is None else args.M
    n0 = 128 if args.n is None else args.n
    try:
        report = converge(
            _builtin(args),
            1.0 if args.unit else M,
            n0=n0,
            tol=args.tol,
            max_doublings=args.max_doublings,
            rule=args.rule,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    status = "converged" if report.converged else "unconverged"
    code = EXIT_OK if report.converged else EXIT_UNCONVERGED
    header = ("n", "index_I", "index_L", "gap_I", "gap_L", "status")
    rows = [list(step) + [""] for step in report.history]
    rows[-1][-1] = status
    if args.out == "json":
        d = report.as_dict()
        d["rows"] = [dict(zip(header[:-1], step)) for step in report.history]
        return dumps(d) + "\n", code
    if args.out == "csv":
        return _csv_text(header, rows), code
    lines = [f"{'n':>8}  {'index_I':>10}  {'index_L':>10}  {'gap_I':>10}  {'gap_L':>10}"]
    for n, i_, l_, gi, gl, st in rows:
        gaps = "  ".join(f"{g:10.3e}" if g is not None else f"{'-':>10}" for g in (gi, gl))
        lines.append(f"{n:>8}  {i_:10.4f}  {l_:10.4f}  {gaps}  {st}".rstrip())
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "index": cmd_index,
    "rearrange": cmd_rearrange,
    "table": cmd_table,
    "converge": cmd_converge,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("source")
    src.add_argument("--function", choices=("sin", "cos", "halpha", "constant"), default="sin")
    src.add_argument("--M", type=float, default=None, help="domain length (default 1)")
    src.add_argument("--alpha", type=float, default=None, help="parameter of halpha")
    src.add_argument("--d", type=float, default=0.0, help="value of constant")
    src.add_argument("--n", type=int, default=None, help="grid size (initial size for converge)")
    src.add_argument("--rule", choices=[r.value for r in SampleRule], default="midpoint")
    src.add_argument("--csv", default=None, help="read samples from a CSV file")
    src.add_argument("--unit", action="store_true", help="report indices of the pullback on [0, 1]")
    common.add_argument(
        "--out", choices=("json", "csv", "text"), default=None,
        help="output format (default json; csv for rearrange)",
    )
    common.add_argument("--output", "-o", default=None, help="write to a file instead of stdout")
    common.add_argument("--tol", type=float, default=None)
    common.add_argument("--max-doublings", type=int, default=20)

    parser = argparse.ArgumentParser(
        prog="monoindex", description="Indices of non-monotonicity of real functions."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("index", parents=[common], help="compute both indices")
    sub.add_parser("rearrange", parents=[common], help="emit rearrangement curves")
    sub.add_parser("table", parents=[common], help="indices of sin/cos for M in {pi/2, pi, 3pi/2, 2pi}")
    sub.add_parser("converge", parents=[common], help="refine the grid until the indices settle")
    return parser


def _write(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    try:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OutputError(f"{output}: cannot write: {exc}") from None


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.out is None:
        args.out = "csv" if args.command == "rearrange" else "json"
    try:
        text, code = COMMANDS[args.command](args)
        _write(text, args.output)
    except InputError as exc:
        print(f"monoindex: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OutputError as exc:
        print(f"monoindex: error: {exc}", file=sys.stderr)
        return EXIT_OUTPUT
    if code == EXIT_UNCONVERGED:
        print("monoindex: did not converge within --max-doublings", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
