"""CNOT error against kappa for standard and optimized single-qubit angles."""

import argparse

import numpy as np

from opteuler.cartan import cnot_error


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--kmin", type=float, default=1.0)
    ap.add_argument("--kmax", type=float, default=1000.0)
    ap.add_argument("--points", type=int, default=25)
    ap.add_argument("--out", default=None, help="optional CSV path")
    args = ap.parse_args()

    kappas = np.geomspace(args.kmin, args.kmax, args.points)
    rows = [(k, cnot_error(k, "standard").error, cnot_error(k, "optimized").error) for k in kappas]
    lines = ["kappa,error_standard,error_optimized"] + [f"{k!r},{s!r},{o!r}" for k, s, o in rows]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    for k, s, o in rows:
        print(f"{k:10.3f}  {s:12.4e}  {o:12.4e}")
    # kappa where the standard error first drops below 1e-4
    below = [k for k, s, _ in rows if s < 1e-4]
    if below:
        print(f"standard error < 1e-4 from kappa ~ {below[0]:.1f}")


if __name__ == "__main__":
    main()
