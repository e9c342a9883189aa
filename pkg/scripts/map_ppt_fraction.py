"""Map the PPT fraction of shell-sampled states against the radius landscape.

For a d x d system this sweeps Hilbert-Schmidt shells from near zero up to
just inside the outer radius and tabulates acceptance, PPT fraction, and the
worst PT eigenvalue per shell, annotated with where the spectral-floor
radius 1/sqrt(N(N-1)), the claimed separable radius, and the claimed PPT
radius fall.  This is the experiment that shows the claimed radii admitting
NPT states for d > 2.

Usage: python scripts/map_ppt_fraction.py [--d 3] [--shells 24] [--samples 500] [--seed 0]
"""

import argparse
import math

from pptgeo.bipartite import BipartiteSplit
from pptgeo.bounds import ball_radius, ppt_radius, separable_radius
from pptgeo.harness import shell_scan, shells_to_csv


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--d", type=int, default=3)
    parser.add_argument("--shells", type=int, default=24)
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None, help="optional CSV path")
    args = parser.parse_args()

    d = args.d
    total = d * d
    outer = ball_radius(total)
    floor_radius = 1 / math.sqrt(total * (total - 1))
    r_sep = separable_radius(d, 2)
    r_ppt = ppt_radius(total)

    radii = [outer * (k + 1) / (args.shells + 1) for k in range(args.shells)]
    report = shell_scan(total, BipartiteSplit(d, d), radii,
                        samples_per_shell=args.samples, base_seed=args.seed)

    print(f"N={total}: spectral-floor radius={floor_radius:.4f}  "
          f"claimed separable={r_sep:.4f}  claimed PPT={r_ppt:.4f}  outer={outer:.4f}")
    print(f"{'radius':>8} {'acc':>5} {'ppt_frac':>9} {'min_pt':>10}  markers")
    for row in report.rows:
        markers = []
        if row.radius <= floor_radius:
            markers.append("<=floor")
        if row.radius <= r_sep:
            markers.append("<=sep")
        if row.radius <= r_ppt:
            markers.append("<=ppt")
        print(f"{row.radius:8.4f} {row.accepted:5d} {row.ppt_fraction:9.4f} "
              f"{row.min_pt_eig:10.4f}  {' '.join(markers)}")

    if args.out:
        with open(args.out, "w") as fh:
            fh.write(shells_to_csv(report))
        print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
