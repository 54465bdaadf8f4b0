"""Geometric discord as the minimum purity deficit over projective measurements.

The post-measurement purity along the axis n is an affine function of the
quadratic form n^T M n with M = lambda0^2 a a^T + lambda1^2 b b^T, so the
sphere optimization is exactly the top eigenpair of a symmetric 3x3 matrix.
The eigensolve below uses the trigonometric closed form of the
characteristic cubic, with a deterministic Jacobi fallback when the roots
are nearly degenerate; this keeps the module independent of both the
numerical eigenpackage and the grid oracle used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .discord import EIGENPAIR_METHOD, OptimizationResult, _single_axis
from .ensemble import QubitEnsemble
from .measurement import canonical_axis

# Discriminant of the characteristic roots below which the closed form is
# abandoned for Jacobi rotations outright.  Roots with a small but nonzero
# gap also lose accuracy (the acos argument is ill-conditioned there), so the
# closed-form result is additionally residual-checked before acceptance.
_DEGENERATE_DISC = 1e-24
_RESIDUAL_GUARD = 1e-12
# Eigenvalues within this of the top one are treated as a degenerate
# eigenspace and resolved by the lexicographic tie-break.
_EIGEN_GAP_TOL = 1e-12


class NonStationaryAxisError(ValueError):
    """Raised when a branch classification is requested at a non-stationary axis."""

    def __init__(self, residual: float, tolerance: float):
        super().__init__(
            f"axis is not stationary: residual {residual:.3e} exceeds {tolerance:.1e}"
        )
        self.residual = residual
        self.tolerance = tolerance


@dataclass(frozen=True, eq=False)
class GeoQuadraticForm:
    """The purity quadratic form M = l0^2 a a^T + l1^2 b b^T and its top eigenpair."""

    m: np.ndarray
    top_eigenvalue: float
    top_eigenvector: np.ndarray


@dataclass(frozen=True)
class GeoBranchReport:
    """Which sufficient cancellation pattern holds at a stationary axis.

    branch "+": a.n = +b.n together with l0^2 a_perp + l1^2 b_perp = 0.
    branch "-": a.n = -b.n together with l0^2 a_perp - l1^2 b_perp = 0.
    "neither" marks axes that are stationary by some other cancellation.
    """

    branch: str
    plus_dot_residual: float
    plus_perp_residual: float
    plus_holds: bool
    minus_dot_residual: float
    minus_perp_residual: float
    minus_holds: bool
    stationarity_residual: float
    tolerance: float


def ensemble_purity(ens: QubitEnsemble) -> float:
    """Purity of the label-qubit joint state: (l0^2 (1+|a|^2) + l1^2 (1+|b|^2))/2."""
    na2 = min(float(ens.a @ ens.a), 1.0)
    nb2 = min(float(ens.b @ ens.b), 1.0)
    return 0.5 * (ens.lambda0**2 * (1.0 + na2) + ens.lambda1**2 * (1.0 + nb2))


def quadratic_form(ens: QubitEnsemble) -> GeoQuadraticForm:
    """Build M and solve its top eigenpair (closed form, Jacobi fallback)."""
    m = ens.lambda0**2 * np.outer(ens.a, ens.a) + ens.lambda1**2 * np.outer(ens.b, ens.b)
    w, v = _top_eigenpair(m)
    return GeoQuadraticForm(m=m, top_eigenvalue=w, top_eigenvector=v)


def geometric_discord(ens: QubitEnsemble) -> OptimizationResult:
    """Minimum purity deficit over projective measurements on the qubit.

    value = ensemble_purity - (l0^2 + l1^2)/2 - top_eigenvalue(M)/2, which is
    zero exactly when the two Bloch vectors are collinear or a weight
    vanishes.  The optimal axis is the top eigenvector of M.
    """
    form = quadratic_form(ens)
    value = (
        ensemble_purity(ens)
        - 0.5 * (ens.lambda0**2 + ens.lambda1**2)
        - 0.5 * form.top_eigenvalue
    )
    n_opt = form.top_eigenvector
    return OptimizationResult(
        n_opt=n_opt,
        value=float(max(value, 0.0)),
        stationarity_residual=geo_stationarity_residual(ens, n_opt),
        evaluations=1,
        method=EIGENPAIR_METHOD,
    )


def example_geo_closed_form(theta: float) -> float:
    """Geometric discord of the equal-weight mirror pair: (1 - |cos 2t|)/8."""
    theta = float(theta)
    if not 0.0 <= theta <= np.pi:
        raise ValueError("theta must lie in [0, pi]")
    return (1.0 - abs(np.cos(2.0 * theta))) / 8.0


def geo_stationarity_residual(ens: QubitEnsemble, n) -> float:
    """Norm of l0^2 (a.n) a_perp + l1^2 (b.n) b_perp at the unit axis n.

    Polynomial in n, so there are no singular configurations; vanishes at
    every critical axis of the post-measurement purity.
    """
    n = _single_axis(n)
    an, bn = float(ens.a @ n), float(ens.b @ n)
    a_perp = ens.a - an * n
    b_perp = ens.b - bn * n
    vec = ens.lambda0**2 * an * a_perp + ens.lambda1**2 * bn * b_perp
    return float(np.linalg.norm(vec))


def geo_choice_classifier(
    ens: QubitEnsemble, n, tolerance: float = 1e-8
) -> GeoBranchReport:
    """Classify the cancellation pattern that makes the axis n stationary.

    Rejects non-stationary axes (NonStationaryAxisError carries the
    offending residual).  When both patterns hold simultaneously, the "+"
    branch is reported and both flags stay visible in the report.
    """
    n = _single_axis(n)
    residual = geo_stationarity_residual(ens, n)
    if residual > tolerance:
        raise NonStationaryAxisError(residual, tolerance)
    an, bn = float(ens.a @ n), float(ens.b @ n)
    a_perp = ens.a - an * n
    b_perp = ens.b - bn * n
    w0, w1 = ens.lambda0**2, ens.lambda1**2
    plus_dot = abs(an - bn)
    plus_perp = float(np.linalg.norm(w0 * a_perp + w1 * b_perp))
    minus_dot = abs(an + bn)
    minus_perp = float(np.linalg.norm(w0 * a_perp - w1 * b_perp))
    plus_holds = plus_dot <= tolerance and plus_perp <= tolerance
    minus_holds = minus_dot <= tolerance and minus_perp <= tolerance
    branch = "+" if plus_holds else ("-" if minus_holds else "neither")
    return GeoBranchReport(
        branch=branch,
        plus_dot_residual=plus_dot,
        plus_perp_residual=plus_perp,
        plus_holds=plus_holds,
        minus_dot_residual=minus_dot,
        minus_perp_residual=minus_perp,
        minus_holds=minus_holds,
        stationarity_residual=residual,
        tolerance=tolerance,
    )


# ---------------------------------------------------------------------------
# Symmetric 3x3 eigensolve: trigonometric closed form + Jacobi fallback
# ---------------------------------------------------------------------------

def _det3(m: np.ndarray) -> float:
    return float(
        m[0, 0] * (m[1, 1] * m[2, 2] - m[1, 2] * m[2, 1])
        - m[0, 1] * (m[1, 0] * m[2, 2] - m[1, 2] * m[2, 0])
        + m[0, 2] * (m[1, 0] * m[2, 1] - m[1, 1] * m[2, 0])
    )


def eigvals_symmetric3(m: np.ndarray) -> np.ndarray:
    """Eigenvalues of a symmetric 3x3 matrix, descending, in closed form.

    Trigonometric solution of the characteristic cubic; exact for diagonal
    input.  The acos argument is clamped into [-1, 1] against round-off.
    """
    m = np.asarray(m, dtype=float)
    p1 = m[0, 1] ** 2 + m[0, 2] ** 2 + m[1, 2] ** 2
    if p1 == 0.0:
        return np.sort(np.diag(m))[::-1].copy()
    q = float(np.trace(m)) / 3.0
    p2 = (m[0, 0] - q) ** 2 + (m[1, 1] - q) ** 2 + (m[2, 2] - q) ** 2 + 2.0 * p1
    p = np.sqrt(p2 / 6.0)
    r = _det3((m - q * np.eye(3)) / p) / 2.0
    phi = np.arccos(min(1.0, max(-1.0, r))) / 3.0
    w1 = q + 2.0 * p * np.cos(phi)
    w3 = q + 2.0 * p * np.cos(phi + 2.0 * np.pi / 3.0)
    return np.array([w1, 3.0 * q - w1 - w3, w3])


def _jacobi_eigh3(m: np.ndarray, sweeps: int = 50):
    """Cyclic Jacobi diagonalization of a symmetric 3x3 matrix.

    Deterministic and robust for degenerate spectra; returns eigenvalues
    descending with eigenvectors as matching columns.
    """
    a = np.array(m, dtype=float)
    v = np.eye(3)
    for _ in range(sweeps):
        off = np.sqrt(a[0, 1] ** 2 + a[0, 2] ** 2 + a[1, 2] ** 2)
        if off < 1e-300 or off < 1e-16 * max(1.0, float(np.abs(np.diag(a)).max())):
            break
        for p, q in ((0, 1), (0, 2), (1, 2)):
            apq = a[p, q]
            if apq == 0.0:
                continue
            tau = (a[q, q] - a[p, p]) / (2.0 * apq)
            t = np.sign(tau) / (abs(tau) + np.sqrt(1.0 + tau * tau)) if tau != 0.0 else 1.0
            c = 1.0 / np.sqrt(1.0 + t * t)
            s = t * c
            rot = np.eye(3)
            rot[p, p] = rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            v = v @ rot
    order = np.argsort(np.diag(a))[::-1]
    return np.diag(a)[order].copy(), v[:, order].copy()


def _eigvec_from_rows(m: np.ndarray, w: float) -> np.ndarray | None:
    """Null direction of (M - w I) from the largest cross product of its rows."""
    a = m - w * np.eye(3)
    crosses = [np.cross(a[i], a[j]) for i, j in ((0, 1), (0, 2), (1, 2))]
    norms = [float(np.linalg.norm(c)) for c in crosses]
    k = int(np.argmax(norms))
    if norms[k] < 1e-13:
        return None
    return crosses[k] / norms[k]


def _axis_rep(v: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    return canonical_axis(v, tol)


def _lex_max_rep_2d(p: np.ndarray, q: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Lexicographically largest antipode-normalized unit vector in span{p, q}."""
    for axis in (0, 1, 2):
        g0, g1 = float(p[axis]), float(q[axis])
        glen = np.hypot(g0, g1)
        if glen <= tol:
            continue
        vstar = (g0 * p + g1 * q) / glen
        if vstar[2] >= -tol:
            return _axis_rep(vstar)
        # The coordinate maximizer points below the z = 0 plane, so the best
        # normalized representative lies on the span's z = 0 line.
        u0 = q * p[2] - p * q[2]
        u0 = _axis_rep(u0 / np.linalg.norm(u0))
        # Its mirror image across vstar shares the coordinate value; prefer
        # it when it is a representative with a larger remaining tuple.
        twin = 2.0 * float(u0 @ vstar) * vstar - u0
        if twin[2] > tol and tuple(twin) > tuple(u0):
            return twin
        return u0
    raise ValueError("degenerate basis for tie-break")


def _top_eigenpair(m: np.ndarray) -> tuple[float, np.ndarray]:
    w = eigvals_symmetric3(m)
    disc = ((w[0] - w[1]) * (w[0] - w[2]) * (w[1] - w[2])) ** 2
    if disc >= _DEGENERATE_DISC:
        vec = _eigvec_from_rows(m, float(w[0]))
        if vec is not None:
            guard = _RESIDUAL_GUARD * max(1.0, abs(float(w[0])))
            if float(np.linalg.norm(m @ vec - w[0] * vec)) <= guard:
                return float(w[0]), _axis_rep(vec)
    wj, vj = _jacobi_eigh3(m)
    top = wj >= wj[0] - _EIGEN_GAP_TOL
    count = int(top.sum())
    if count == 1:
        return float(wj[0]), _axis_rep(vj[:, 0])
    if count == 2:
        return float(wj[0]), _lex_max_rep_2d(vj[:, 0], vj[:, 1])
    # Fully degenerate form (e.g. M = 0): every axis ties; x wins the tie-break.
    return float(wj[0]), np.array([1.0, 0.0, 0.0])
