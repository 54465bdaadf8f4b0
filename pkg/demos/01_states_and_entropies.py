"""Bloch vectors and the scalar primitives everything else builds on.

A qubit state is a real 3-vector r with |r| <= 1; pure states sit on the
sphere, the maximally mixed state at the origin.  Entropy and purity are
functions of |r| alone.
"""

import numpy as np

from qdiscord import (
    binary_entropy,
    example_pair_bloch,
    pure_overlap,
    purity,
    von_neumann_entropy,
)

print("binary entropy:")
for p in (0.5, 0.75, 0.9, 1.0):
    print(f"  h({p}) = {binary_entropy(p):.12f}")

print("\nvon Neumann entropy and purity vs Bloch norm (direction is irrelevant):")
for norm in (0.0, 0.5, 0.9, 1.0):
    r = np.array([0.0, 0.0, norm])
    print(f"  |r| = {norm:3.1f}   S = {von_neumann_entropy(r):.6f}   tr rho^2 = {purity(r):.6f}")

print("\nthe mirror pair at half-angle theta: overlap |<phi0|phi1>| = |cos theta|")
for theta in (0.0, np.pi / 6, np.pi / 4, np.pi / 2):
    a, b = example_pair_bloch(theta)
    print(
        f"  theta = {theta:6.4f}   a = ({a[0]:+.4f}, {a[1]:+.4f}, {a[2]:+.4f})"
        f"   overlap = {pure_overlap(a, b):.6f}"
    )
