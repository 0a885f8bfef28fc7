"""Composing two squeezing operators into one.

Walks the closed-form composition law: map each operator to a point in
the unit disk, combine the points with a Mobius transformation, and read
back the parameters of the single equivalent operator.  Every step is
cross-checked against plain matrix multiplication in the faithful 2x2
representation.
"""

import math

import numpy as np

from squeezeops import (
    SqueezeParam,
    compose_full,
    defining_generators,
    inverse,
    realize,
    to_disk,
)


def show(label, param):
    print(f"{label}: theta={param.theta:+.6f}  r={param.r:.6f}  phi={param.phi:+.6f}")


def main():
    first = SqueezeParam(theta=0.0, r=0.5, phi=0.0)
    second = SqueezeParam(theta=0.2, r=0.4, phi=1.3)
    show("first ", first)
    show("second", second)

    print("\ndisk coordinates eta = tanh(r) e^{i phi}:")
    for label, param in (("first ", first), ("second", second)):
        eta = to_disk(param).eta
        print(f"  {label}: {eta.real:+.6f} {eta.imag:+.6f}i  (|eta| = {abs(eta):.6f})")

    combined = compose_full(second, first)
    show("\ncombined", combined)

    gens = defining_generators()
    product = realize(second, gens) @ realize(first, gens)
    direct = realize(combined, gens)
    gap = np.abs(product - direct).max()
    print(f"matrix cross-check |S2 S1 - S_combined|_max = {gap:.3e}")

    undone = compose_full(inverse(combined), combined)
    print(f"\ncombined with its inverse: r = {undone.r:.3e} (identity)")

    # two equal-strength squeezes along the same axis add their r
    twice = compose_full(first, first)
    print(f"\nsame-axis stacking: r + r = {2 * first.r:.6f}, composed r = {twice.r:.6f}")
    assert math.isclose(twice.r, 2 * first.r, rel_tol=1e-12)


if __name__ == "__main__":
    main()
