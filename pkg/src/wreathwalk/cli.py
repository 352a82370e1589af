"""Command-line surface.

Subcommands
-----------
spectrum    exact deduplicated eigenvalue spectrum of a walk
distance    distance curve with every bound column; optional oracle check
threshold   mixing-time summary table rows for the chosen walk and group
oracle      brute-force convolution powers on the explicit group table
simulate    Monte Carlo walk runs with empirical TV against uniform
coupling    event-skeleton coupling experiment (connectivity time tails)
selftest    run the acceptance test suite; nonzero exit on any failure

Exit codes: 0 success, 1 validation failure or cap exceeded (the message
names the cap), 2 usage error.

Output is CSV by default (LF line endings, rationals as "p/q", floats as
shortest round-trip repr, partitions dot-joined with "-" for the empty
partition) or JSON with --format json (rows mirror the CSV columns; the
meta object carries run parameters).  Identical command lines, including
--seed, produce byte-identical output.  Randomized subcommands prepend a
"# rng=PCG64" comment line to CSV and record the generator in JSON meta.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import classify_base, distance_curve, mixing_threshold, threshold_rows
from .groups import build_group, symmetric_group
from .oracle import convolution_curve, exact_distances
from .reps import MAX_LABELS
from .simulate import (
    RNG_ALGORITHM,
    SimConfig,
    coupling_experiment,
    empirical_tv,
    run_walk_indices,
)
from .walks import build_measure, spectrum
from .wreath import MAX_WREATH_ORDER, build_wreath_table

SPECTRUM_COLUMNS = ("value_num", "value_den", "multiplicity", "n1", "lambda1")
DISTANCE_COLUMNS = ("k", "l2n_sq", "tv_upper_spectral", "tv_upper_coupling",
                    "l2_lower_dominant", "tv_lower_chebyshev")
THRESHOLD_COLUMNS = ("g_class", "metric", "direction", "formula", "asymptotic", "value")
ORACLE_COLUMNS = ("k", "return_prob", "l2n_sq", "tv")
SIMULATE_COLUMNS = ("k", "empirical_tv", "stderr", "exact_tv", "trials", "seed")
COUPLING_COLUMNS = ("c", "threshold", "empirical_tail", "limit", "stderr", "trials", "seed")


# ---------------------------------------------------------------------------
# serialization

def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _json_cell(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float) and not math.isfinite(v):
        return repr(v)
    return v


def emit(columns, rows, meta: dict, fmt: str, out: str | None) -> None:
    """Single-writer output assembly; byte-stable for identical inputs."""
    if fmt == "json":
        doc = {
            "meta": {k: _json_cell(v) for k, v in meta.items()},
            "columns": list(columns),
            "rows": [[_json_cell(c) for c in row] for row in rows],
        }
        text = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        buf = io.StringIO()
        if "rng" in meta:
            buf.write(f"# rng={meta['rng']}\n")
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_cell(c) for c in row])
        text = buf.getvalue()
    if out:
        Path(out).write_text(text, newline="")
    else:
        sys.stdout.write(text)


def _fmt_partition(p) -> str:
    return ".".join(str(x) for x in p) if p else "-"


# ---------------------------------------------------------------------------
# flag parsing helpers

def parse_krange(text: str) -> list[int]:
    """a..b[:step], or a single integer."""
    step = 1
    body = text
    if ":" in body:
        body, stext = body.split(":", 1)
        step = int(stext)
    if ".." in body:
        a_text, b_text = body.split("..", 1)
        a, b = int(a_text), int(b_text)
    else:
        a = b = int(body)
    if a < 0 or b < a or step < 1:
        raise ValueError(f"bad k range {text!r}")
    return list(range(a, b + 1, step))


def parse_clist(text: str) -> list[float]:
    vals = [float(x) for x in text.split(",") if x.strip() != ""]
    if not vals:
        raise ValueError("empty c list")
    return vals


def _check_common(args) -> None:
    if getattr(args, "n", None) is not None and args.n < 1:
        raise ValueError("n must be >= 1")
    seed = getattr(args, "seed", None)
    if seed is not None and not 0 <= seed < 2 ** 64:
        raise ValueError("seed must fit in an unsigned 64-bit integer")
    trials = getattr(args, "trials", None)
    if trials is not None and trials < 1:
        raise ValueError("trials must be >= 1")


def _group_for(args):
    """Base group for wreath walks; None for the sym walk."""
    if args.walk == "sym":
        return None
    if not args.group:
        raise ValueError("wreath walks need --group (Z:m, S:m, or file:path)")
    return build_group(args.group)


def _group_name(g, n: int) -> str:
    return g.name if g is not None else f"S_{n}"


def _exact_table(g, n: int, max_order: int):
    """Explicit multiplication table for oracle work; caps apply."""
    if g is None:
        if math.factorial(n) > max_order:
            raise ValueError(f"group order {math.factorial(n)} exceeds cap {max_order}")
        return symmetric_group(n)
    return build_wreath_table(g, n, max_order=max_order).group


# ---------------------------------------------------------------------------
# subcommands

def cmd_spectrum(args) -> int:
    _check_common(args)
    g = _group_for(args)
    spec = spectrum(args.walk, args.n, g, max_labels=args.max_labels)
    rows = []
    for line in spec.lines:
        if args.walk == "sym":
            n1, lam1 = args.n, line.witness
        else:
            n1, lam1 = line.witness.type[0], line.witness.lambdas[0]
        rows.append([line.value.numerator, line.value.denominator,
                     line.multiplicity, n1, _fmt_partition(lam1)])
    meta = {"subcommand": "spectrum", "walk": args.walk,
            "group": _group_name(g, args.n), "n": args.n,
            "order": spec.group_order, "distinct_values": len(spec.lines)}
    emit(SPECTRUM_COLUMNS, rows, meta, args.format, args.out)
    return 0


def cmd_distance(args) -> int:
    _check_common(args)
    g = _group_for(args)
    curve = distance_curve(args.walk, args.n, g, ks=args.k, max_labels=args.max_labels)
    rows = []
    for r in curve.rows:
        rows.append([r["k"]] + [None if r[c] is None else float(r[c])
                                for c in DISTANCE_COLUMNS[1:]])
    meta = {"subcommand": "distance", "walk": args.walk,
            "group": _group_name(g, args.n), "n": args.n, "mode": curve.mode}
    rc = 0
    if args.check_oracle:
        gt = _exact_table(g, args.n, args.max_order)
        measure = build_measure(args.walk, args.n, g)
        want = {r["k"]: r["l2n_sq"] for r in curve.rows}
        worst = Fraction(0)
        for k, dist in convolution_curve(gt, measure, sorted(want)):
            truth = exact_distances(dist, gt.order)["l2n_sq"]
            val = want[k]
            delta = abs(val - truth) if isinstance(val, Fraction) else abs(float(val) - float(truth))
            worst = max(worst, delta)
        ok = worst <= Fraction(1, 10 ** 9)
        print(f"oracle-check: walk={args.walk} group={_group_name(g, args.n)} "
              f"n={args.n} max |l2n_sq delta| = {float(worst)!r} "
              f"({'ok' if ok else 'MISMATCH'})", file=sys.stderr)
        if not ok:
            rc = 1
    emit(DISTANCE_COLUMNS, rows, meta, args.format, args.out)
    return rc


def cmd_threshold(args) -> int:
    _check_common(args)
    g = _group_for(args)
    gclass = "Sm" if args.walk == "sym" else classify_base(g)
    rows = []
    for r in threshold_rows(args.walk):
        if r.g_class != gclass:
            continue
        if args.metric and r.metric != args.metric:
            continue
        value = (mixing_threshold(g, args.n, args.walk, r.metric)
                 if r.direction == "sufficient" else None)
        rows.append([r.g_class, r.metric, r.direction, r.formula, r.asymptotic, value])
    meta = {"subcommand": "threshold", "walk": args.walk,
            "group": _group_name(g, args.n), "n": args.n, "g_class": gclass}
    emit(THRESHOLD_COLUMNS, rows, meta, args.format, args.out)
    return 0


def cmd_oracle(args) -> int:
    _check_common(args)
    g = _group_for(args)
    gt = _exact_table(g, args.n, args.max_order)
    measure = build_measure(args.walk, args.n, g)
    rows = []
    for k, dist in convolution_curve(gt, measure, sorted(set(args.k))):
        d = exact_distances(dist, gt.order)
        rows.append([k, dist[0], d["l2n_sq"], d["tv"]])
    meta = {"subcommand": "oracle", "walk": args.walk,
            "group": _group_name(g, args.n), "n": args.n, "order": gt.order}
    emit(ORACLE_COLUMNS, rows, meta, args.format, args.out)
    return 0


def _poisson_reference_tv(gt, measure, t: float, order: int) -> float | None:
    """TV of the continuized law P_t against uniform, via a Poisson mixture
    of exact convolution powers truncated below 1e-12 tail mass."""
    kcap = int(t + 12.0 * math.sqrt(t) + 30.0)
    if kcap > 400:
        return None
    mix = [0.0] * order
    lw = -t
    for k, dist in convolution_curve(gt, measure, list(range(kcap + 1))):
        w = math.exp(lw + k * math.log(t)) / math.factorial(k) if t > 0 else (1.0 if k == 0 else 0.0)
        if w > 0:
            for i, p in enumerate(dist):
                if p:
                    mix[i] += w * float(p)
    u = 1.0 / order
    return 0.5 * math.fsum(abs(m - u) for m in mix) + 0.5 * (1.0 - math.fsum(mix))


def cmd_simulate(args) -> int:
    _check_common(args)
    g = _group_for(args)
    gt = _exact_table(g, args.n, args.max_order)   # order cap; exact column
    measure = build_measure(args.walk, args.n, g)
    order = gt.order
    rows = []
    exact = {}
    if args.mode == "discrete":
        for k, dist in convolution_curve(gt, measure, sorted(set(args.k))):
            exact[k] = float(exact_distances(dist, order)["tv"])
    for k in args.k:
        if args.mode == "discrete":
            cfg = SimConfig(kind=args.walk, n=args.n, g=g, k=k,
                            trials=args.trials, seed=args.seed)
            ref = exact.get(k)
        else:
            cfg = SimConfig(kind=args.walk, n=args.n, g=g, t=float(k),
                            trials=args.trials, seed=args.seed, mode="continuized")
            ref = _poisson_reference_tv(gt, measure, float(k), order)
        tv, se = empirical_tv(run_walk_indices(cfg), None, order)
        rows.append([k, tv, se, ref, args.trials, args.seed])
    meta = {"subcommand": "simulate", "walk": args.walk,
            "group": _group_name(g, args.n), "n": args.n, "mode": args.mode,
            "trials": args.trials, "seed": args.seed, "rng": RNG_ALGORITHM}
    emit(SIMULATE_COLUMNS, rows, meta, args.format, args.out)
    return 0


def cmd_coupling(args) -> int:
    _check_common(args)
    rep = coupling_experiment(args.n, args.trials, args.c, args.seed)
    rows = [[r[c] for c in COUPLING_COLUMNS] for r in rep.rows]
    meta = {"subcommand": "coupling", "n": args.n, "trials": args.trials,
            "seed": args.seed, "rng": RNG_ALGORITHM}
    emit(COUPLING_COLUMNS, rows, meta, args.format, args.out)
    return 0


def cmd_selftest(args) -> int:
    root = Path(__file__).resolve().parents[2]
    acceptance = root / "tests" / "test_acceptance.py"
    if not acceptance.exists():
        print(f"error: acceptance suite not found at {acceptance}", file=sys.stderr)
        return 1
    return subprocess.call([sys.executable, "-m", "pytest", "-v", str(acceptance)])


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wreathwalk", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="subcommand", required=True)

    def add_io(sp):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    def add_walk(sp, need_group=True):
        if need_group:
            sp.add_argument("--group", default=None,
                            help="base group: Z:m, S:m (m <= 6), or file:path")
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--walk", choices=("sym", "independent", "paired"), required=True)

    sp = sub.add_parser("spectrum", help="exact eigenvalue spectrum")
    add_walk(sp)
    sp.add_argument("--max-labels", type=int, default=MAX_LABELS)
    add_io(sp)
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("distance", help="distance curve with bound columns")
    add_walk(sp)
    sp.add_argument("--k", type=parse_krange, default=None, help="a..b[:step]")
    sp.add_argument("--check-oracle", action="store_true",
                    help="verify l2n_sq against brute-force convolution (caps apply)")
    sp.add_argument("--max-labels", type=int, default=MAX_LABELS)
    sp.add_argument("--max-order", type=int, default=MAX_WREATH_ORDER)
    add_io(sp)
    sp.set_defaults(func=cmd_distance)

    sp = sub.add_parser("threshold", help="mixing-time table rows")
    add_walk(sp)
    sp.add_argument("--metric", choices=("l2", "tv"), default=None)
    add_io(sp)
    sp.set_defaults(func=cmd_threshold)

    sp = sub.add_parser("oracle", help="exact convolution-power distances")
    add_walk(sp)
    sp.add_argument("--k", type=parse_krange, default=list(range(11)), help="a..b[:step]")
    sp.add_argument("--max-order", type=int, default=MAX_WREATH_ORDER)
    add_io(sp)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("simulate", help="Monte Carlo runs with empirical TV")
    add_walk(sp)
    sp.add_argument("--k", type=parse_krange, default=list(range(11)),
                    help="step counts; time horizons t in continuized mode")
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0, help="unsigned 64-bit; each k row reruns from this seed")
    sp.add_argument("--mode", choices=("discrete", "continuized"), default="discrete")
    sp.add_argument("--max-order", type=int, default=MAX_WREATH_ORDER)
    add_io(sp)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("coupling", help="connectivity-time tail experiment")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--c", type=parse_clist, default=[0.0, 1.0, 2.0],
                    help="comma list of threshold offsets")
    sp.add_argument("--trials", type=int, default=10000)
    sp.add_argument("--seed", type=int, default=0)
    add_io(sp)
    sp.set_defaults(func=cmd_coupling)

    sp = sub.add_parser("selftest", help="run the acceptance suite")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
