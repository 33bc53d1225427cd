"""Scaled histograms overlaid with the limiting density (needs matplotlib).

    python scripts/plot_histograms.py --m 3,9,4 --n-gens 5,17,8 --n 1000 --out gaps.png
"""
import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from weighted_lengths import TriangleDensity, direction_data, scaled_histogram, validate
from weighted_lengths.cli import parse_triple


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m", type=parse_triple, required=True)
    ap.add_argument("--n-gens", type=parse_triple, required=True)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--out", default="histogram.png")
    args = ap.parse_args()

    ws = validate(args.m, args.n_gens, theorem_mode=False)
    dd = direction_data(ws)
    tri = TriangleDensity(ws, dd)
    rows = scaled_histogram(ws, dd, args.n)
    xs = [float(p) for p, _ in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(xs, [float(v) for _, v in rows], ".", ms=2, color="tab:blue")
    ax.plot(xs, [float(tri(p)) for p, _ in rows], color="tab:red", lw=1)
    ax.set_title(f"m={ws.m}, n={ws.n}, element {args.n} (d={dd.d})")
    fig.tight_layout()
    fig.savefig(args.out, dpi=150)
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
