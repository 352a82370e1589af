"""Sweep the distance curves for all three walks on one instance and write
a CSV per walk.

    python3 scripts/distance_curves.py --group Z:2 --n 6 --kmax 40 --outdir out/
"""
import argparse
from pathlib import Path

from wreathwalk.bounds import distance_curve, mixing_threshold
from wreathwalk.cli import DISTANCE_COLUMNS, emit
from wreathwalk.groups import build_group


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--group", default="Z:2")
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--kmax", type=int, default=40)
    ap.add_argument("--outdir", default="out")
    args = ap.parse_args()

    g = build_group(args.group)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    ks = list(range(args.kmax + 1))
    for kind in ("sym", "independent", "paired"):
        curve = distance_curve(kind, args.n, None if kind == "sym" else g, ks=ks)
        rows = [[r["k"]] + [None if r[c] is None else float(r[c])
                            for c in DISTANCE_COLUMNS[1:]] for r in curve.rows]
        path = outdir / f"distance_{kind}_{args.group.replace(':', '')}_n{args.n}.csv"
        meta = {"walk": kind, "group": args.group, "n": args.n, "mode": curve.mode}
        emit(DISTANCE_COLUMNS, rows, meta, "csv", str(path))
        thr = mixing_threshold(None if kind == "sym" else g, args.n, kind, "l2")
        print(f"{kind:12s} mode={curve.mode:14s} l2 threshold ~ {thr:8.2f} -> {path}")


if __name__ == "__main__":
    main()
