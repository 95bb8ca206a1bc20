#!/usr/bin/env python3
"""Render simulation CSV files as SVG figures.

Two figure kinds:

* ``curves``: logical error rate versus physical error rate, one series per
  code size n, with Wilson-interval error bars taken from the CSV.
* ``overhead``: encoding rate k/n versus the largest tolerated physical
  error rate (interpolated where the curve crosses P_log = 1e-3), one
  labeled point per code family row.

The input is the simulation CSV schema:
r,s,n,k,d,p,trials,failures,p_log,ci_low,ci_high,seed,rng
"""

import argparse
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

EXPECTED_HEADER = [
    "r", "s", "n", "k", "d", "p", "trials", "failures",
    "p_log", "ci_low", "ci_high", "seed", "rng",
]

TOLERATED_P_LOG = 1e-3  # target logical rate defining "tolerated" p


class SchemaMismatch(Exception):
    name = "SCHEMA_MISMATCH"


def read_rows(paths):
    rows = []
    for path in paths:
        with open(path, newline="") as f:
            reader = csv.DictReader(f)
            if reader.fieldnames != EXPECTED_HEADER:
                raise SchemaMismatch(
                    f"{path}: header {reader.fieldnames} != {EXPECTED_HEADER}"
                )
            for raw in reader:
                try:
                    rows.append({
                        "r": int(raw["r"]), "s": int(raw["s"]),
                        "n": int(raw["n"]), "k": int(raw["k"]),
                        "d": int(raw["d"]), "p": float(raw["p"]),
                        "trials": int(raw["trials"]),
                        "failures": int(raw["failures"]),
                        "p_log": float(raw["p_log"]),
                        "ci_low": float(raw["ci_low"]),
                        "ci_high": float(raw["ci_high"]),
                    })
                except (KeyError, ValueError) as e:
                    raise SchemaMismatch(f"{path}: bad row {raw}: {e}")
    if not rows:
        raise SchemaMismatch("no data rows in input")
    return rows


def group_by(rows, key):
    out = {}
    for row in rows:
        out.setdefault(key(row), []).append(row)
    return out


def curves_figure(rows):
    fig, ax = plt.subplots(figsize=(6, 4.5))
    series = group_by(rows, lambda w: (w["r"], w["s"], w["n"]))
    for (r, s, n), pts in sorted(series.items()):
        pts = sorted(pts, key=lambda w: w["p"])
        xs = [w["p"] for w in pts]
        ys = [w["p_log"] for w in pts]
        lo = [w["p_log"] - w["ci_low"] for w in pts]
        hi = [w["ci_high"] - w["p_log"] for w in pts]
        ax.errorbar(
            xs, ys, yerr=[lo, hi], marker="o", markersize=3,
            capsize=2, label=f"{{{r},{s}}} n={n}",
        )
    ax.set_xlabel("physical error rate p")
    ax.set_ylabel("logical error rate")
    ax.legend(loc="best", fontsize=8)
    return fig, ax


def tolerated_p(pts):
    """Largest p with P_log <= the target, interpolating between samples."""
    pts = sorted(pts, key=lambda w: w["p"])
    best = 0.0
    for a, b in zip(pts, pts[1:] + [None]):
        if a["p_log"] <= TOLERATED_P_LOG:
            best = a["p"]
            if b is not None and b["p_log"] > TOLERATED_P_LOG:
                gap = b["p_log"] - a["p_log"]
                frac = (TOLERATED_P_LOG - a["p_log"]) / gap if gap > 0 else 0.0
                best = a["p"] + frac * (b["p"] - a["p"])
    return best


def overhead_figure(rows):
    fig, ax = plt.subplots(figsize=(6, 4.5))
    series = group_by(rows, lambda w: (w["r"], w["s"], w["n"], w["k"]))
    for (r, s, n, k), pts in sorted(series.items()):
        x = tolerated_p(pts)
        y = k / n
        ax.scatter([x], [y], s=18, zorder=3)
        ax.annotate(f"{{{r},{s}}}", (x, y), textcoords="offset points",
                    xytext=(4, 4), fontsize=8)
    ax.set_xlabel(f"tolerated p (P_log <= {TOLERATED_P_LOG:g})")
    ax.set_ylabel("encoding rate k/n")
    return fig, ax


def render(kind, paths, out, xlim=None, ylim=None):
    rows = read_rows(paths)
    if kind == "curves":
        fig, ax = curves_figure(rows)
    else:
        fig, ax = overhead_figure(rows)
    if xlim:
        ax.set_xlim(*xlim)
    if ylim:
        ax.set_ylim(*ylim)
    fig.tight_layout()
    # a fixed hash salt plus no date metadata keeps the SVG reproducible
    plt.rcParams["svg.hashsalt"] = "plots"
    fig.savefig(out, format="svg", metadata={"Date": None})
    plt.close(fig)
    return fig


def parse_range(text):
    a, b = (float(x) for x in text.split(","))
    return a, b


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kind", required=True, choices=["curves", "overhead"])
    ap.add_argument("--in", dest="inputs", required=True, nargs="+",
                    metavar="CSV")
    ap.add_argument("--out", required=True)
    ap.add_argument("--xlim", type=parse_range, default=None)
    ap.add_argument("--ylim", type=parse_range, default=None)
    args = ap.parse_args(argv)
    try:
        render(args.kind, args.inputs, args.out, args.xlim, args.ylim)
    except SchemaMismatch as e:
        print(f"{SchemaMismatch.name}: {e}", file=sys.stderr)
        return 1
    except OSError as e:
        print(f"IO_ERROR: {e}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
