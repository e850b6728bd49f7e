"""Sequence lengths for random rotations and random state transfers versus the step bound."""

import argparse
import math
from collections import Counter

import numpy as np
from scipy.spatial.transform import Rotation

from opteuler.decomp import generalized_euler_angles, lowenthal_bound
from opteuler.rotkit import AxisFrame
from opteuler.transfer import TransferProblem, ladder_transfer, transfer_sequence


def frame_at(zeta):
    return AxisFrame([0.0, 0.0, 1.0], [math.sin(zeta), 0.0, math.cos(zeta)])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--zeta-deg", type=float, nargs="+", default=[15, 30, 45, 60, 75, 90])
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)

    for zd in args.zeta_deg:
        zeta = math.radians(zd)
        f = frame_at(zeta)
        bound = lowenthal_bound(zeta)
        R = Rotation.random(args.trials, random_state=rng.integers(2**32)).as_matrix()
        direct = Counter(len(generalized_euler_angles(r, f, method="direct").sequence) for r in R)
        best = Counter(len(generalized_euler_angles(r, f).sequence) for r in R)
        pts = rng.normal(size=(args.trials, 2, 3))
        a1, sh = Counter(), Counter()
        for s, t in pts:
            pb = TransferProblem.from_vectors(s / np.linalg.norm(s), t / np.linalg.norm(t), f)
            a1[len(ladder_transfer(pb).sequence.simplified())] += 1
            sh[len(transfer_sequence(pb))] += 1
        print(f"zeta {zd:5.1f} deg, bound {bound}")
        print(f"  gates     direct   {dict(sorted(direct.items()))}  over bound {sum(v for k, v in direct.items() if k > bound)}")
        print(f"  gates     shortest {dict(sorted(best.items()))}  over bound {sum(v for k, v in best.items() if k > bound)}")
        print(f"  transfer  ladder   {dict(sorted(a1.items()))}")
        print(f"  transfer  shortest {dict(sorted(sh.items()))}")


if __name__ == "__main__":
    main()
