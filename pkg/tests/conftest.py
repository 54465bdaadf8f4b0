import numpy as np
import pytest
from scipy.spatial.transform import Rotation

from qdiscord import QubitEnsemble


def random_rotation(rng: np.random.Generator) -> np.ndarray:
    q = rng.normal(size=4)
    return Rotation.from_quat(q / np.linalg.norm(q)).as_matrix()


def rotate_ensemble(ens: QubitEnsemble, rot: np.ndarray) -> QubitEnsemble:
    return QubitEnsemble(ens.lambda0, ens.lambda1, rot @ ens.a, rot @ ens.b)


def rotate_about(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rotation matrix for the given axis and angle (Rodrigues)."""
    axis = np.asarray(axis, float)
    axis = axis / np.linalg.norm(axis)
    k = np.array(
        [[0.0, -axis[2], axis[1]], [axis[2], 0.0, -axis[0]], [-axis[1], axis[0], 0.0]]
    )
    return np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)


def nondegenerate(ens: QubitEnsemble) -> bool:
    """Ensembles with a well-defined, non-flat optimum.

    Excludes near-equal weights products, near-identical states and
    near-collinear Bloch vectors, where the optimal axis is ill-conditioned.
    """
    return (
        ens.lambda0 * ens.lambda1 >= 1e-2
        and np.linalg.norm(ens.a - ens.b) >= 0.1
        and np.linalg.norm(np.cross(ens.a, ens.b)) >= 1e-2
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
