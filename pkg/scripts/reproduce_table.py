"""Recompute the optimized-angle table and compare with the stored reference values."""

import argparse
import math

from opteuler.table import compute_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=4)
    ap.add_argument("--mode", choices=["round", "trunc", "floor"], default="round")
    args = ap.parse_args()

    rows = compute_table(args.digits, args.mode)
    print(f"{'gate':<6}{'kappa':>6}{'E0 %':>10}{'ref':>10}  {'angles / pi':<36}{'err':>10}  flags")
    for r in rows:
        ang = " ".join(f"{a:.{args.digits}f}" for a in r.angles_pi)
        flags = []
        if not r.angles_ok:
            flags.append("angles")
        if not r.e0_ok:
            flags.append("E0")
        if not r.error_rounded < 3e-9:
            flags.append("err")
        k = "inf" if math.isinf(r.kappa) else f"{r.kappa:g}"
        print(f"{r.gate:<6}{k:>6}{r.e0_percent:>10.4f}{r.ref_e0_percent:>10.4f}  {ang:<36}"
              f"{r.error_rounded:>10.2e}  {','.join(flags)}")
    print(f"angles match {sum(r.angles_ok for r in rows)}/{len(rows)}, "
          f"E0 match {sum(r.e0_ok for r in rows)}/{len(rows)}, "
          f"error < 3e-9 {sum(r.error_rounded < 3e-9 for r in rows)}/{len(rows)}")


if __name__ == "__main__":
    main()
