"""Run the radius claim checks for d = 2, 3, 4 and write JSON reports.

Usage: python scripts/run_claim_checks.py [--outdir out] [--samples 2000] [--seed 0]
"""

import argparse
from pathlib import Path

from pptgeo import serialize
from pptgeo.harness import claim_check, claim_report_to_dict


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--outdir", default="out")
    parser.add_argument("--samples", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for d in (2, 3, 4):
        report = claim_check(d, samples=args.samples, base_seed=args.seed)
        path = outdir / f"claim_check_d{d}.json"
        serialize.save_json(claim_report_to_dict(report), path)
        probe = report.probe
        probe_text = (
            f"probe p={probe.p:.6f} distance={probe.distance:.6f} "
            f"min_pt={probe.min_pt_eig:+.6f}" if probe else "no probe (p_star >= claimed p_m)"
        )
        print(f"d={d} N={d*d}: {report.verdict}")
        print(f"  p_star={report.sweep.p_star:.10f} claimed_pm={report.sweep.paper_pm:.10f} "
              f"oracle_pm={report.sweep.oracle_pm:.10f}")
        print(f"  {probe_text}")
        print(f"  wrote {path}")


if __name__ == "__main__":
    main()
