"""The variational machinery behind the optimal measurement axis.

At an interior optimum the weighted log-odds defect vanishes.  For the
mirror pair the x axis satisfies the strongest sufficient condition (inverse
odds ratios) at every angle, while the z axis is also stationary: it is the
information minimum, not the maximum.
"""

import numpy as np

from qdiscord import (
    QubitEnsemble,
    check_analytic_conditions,
    geo_choice_classifier,
    geometric_discord,
    stationarity_residual,
)

theta = np.pi / 3
ens = QubitEnsemble.pure_pair(theta)
x_axis = np.array([1.0, 0.0, 0.0])
z_axis = np.array([0.0, 0.0, 1.0])
tilted = np.array([0.5, 0.0, np.sqrt(3.0) / 2.0])

print(f"mirror pair at theta = pi/3, equal weights")
for name, axis in (("x axis (optimum)", x_axis), ("z axis (minimum)", z_axis), ("tilted axis", tilted)):
    print(f"  {name:18s} residual = {stationarity_residual(ens, axis):.6e}")

print("\nsufficient-condition report at the x axis:")
report = check_analytic_conditions(ens, x_axis)
print(f"  inverse odds ratios: {report.odds_inverse_holds} (residual {report.odds_inverse_residual:.2e})")
print(f"  perpendicular balance: {report.perp_balance_holds} (residual {report.perp_balance_residual:.2e})")

print("\ngeometric-discord branch classification:")
for th, axis, label in (
    (np.pi / 6, z_axis, "theta=pi/6 at z"),
    (np.pi / 3, x_axis, "theta=pi/3 at x"),
):
    pair = QubitEnsemble.pure_pair(th)
    branch = geo_choice_classifier(pair, axis)
    n_opt = geometric_discord(pair).n_opt
    print(
        f"  {label}: branch '{branch.branch}'"
        f"  (optimal axis ({n_opt[0]:+.3f}, {n_opt[1]:+.3f}, {n_opt[2]:+.3f}))"
    )
