#!/usr/bin/env python3
"""Plot a capacity-cost sweep produced by `bssc sweep`.

Usage: plot_sweep.py curve.csv [out.png]
"""
import csv
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt


def main() -> int:
    if len(sys.argv) < 2:
        print(__doc__, file=sys.stderr)
        return 2
    path = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "sweep.png"

    kappa, capacity, lam, feasible = [], [], [], []
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            kappa.append(float(row["kappa"]))
            capacity.append(float(row["capacity"]))
            lam.append(float(row["lambda"]))
            feasible.append(int(row["markov_feasible"]))

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.plot(kappa, capacity, marker="o", ms=3)
    best = max(range(len(kappa)), key=lambda i: capacity[i])
    ax1.axvline(kappa[best], ls="--", lw=0.8, color="gray")
    ax1.set_xlabel(r"$\kappa$")
    ax1.set_ylabel("capacity [bits/use]")
    ax1.set_title("constrained capacity vs cost")

    ax2.plot(kappa, lam, label=r"$\lambda$")
    ax2.plot(kappa, kappa, label=r"$P(a{=}0\,|\,b_{prev}{=}0)$", ls=":")
    infeas = [k for k, f in zip(kappa, feasible) if not f]
    if infeas:
        for k in infeas:
            ax2.axvspan(k - 0.0125, k + 0.0125, color="red", alpha=0.08, lw=0)
        ax2.plot([], [], color="red", alpha=0.3, lw=6, label="markov infeasible")
    ax2.set_xlabel(r"$\kappa$")
    ax2.legend()
    ax2.set_title("achieving laws")

    fig.tight_layout()
    fig.savefig(out, dpi=150)
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
