"""2x2 unitary arithmetic.

Axis-angle rotations, Hilbert-Schmidt fidelity, residual rotation angles
and the ZXZ Euler decomposition. Everything here is a pure function on
2x2 complex numpy arrays; global phase is never physically meaningful
and fidelity is blind to it.

Convention fixed once for the whole package:

    Z_alpha = diag(exp(-i*alpha/2), exp(+i*alpha/2))   (SU(2) z-rotation)

Under this convention the XY-plane rotation with drive phase phi satisfies
XY(phi, theta) = Z_phi . X_theta . Z_{-phi} exactly (no residual phase).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class InvalidAxisError(ValueError):
    """Rotation axis is not unit-norm."""


class InvalidUnitaryError(ValueError):
    """Input matrix is not unitary to the required tolerance."""


def mod_2pi(angle: float) -> float:
    """Fold an angle into [0, 2*pi)."""
    a = math.fmod(angle, TWO_PI)
    if a < 0.0:
        a += TWO_PI
    if a >= TWO_PI:  # fmod roundoff at the boundary
        a -= TWO_PI
    return a


def mod_pm_pi(angle: float) -> float:
    """Fold an angle into (-pi, pi]."""
    a = mod_2pi(angle)
    if a > math.pi:
        a -= TWO_PI
    return a


def is_unitary(u: np.ndarray, tol: float = 1e-9) -> bool:
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2):
        return False
    return bool(np.max(np.abs(u.conj().T @ u - IDENTITY)) <= tol)


def rotation_unitary(axis, theta: float) -> np.ndarray:
    """SU(2) rotation by `theta` about the unit vector `axis`.

    cos(theta/2)*I - i*sin(theta/2)*(nx*sx + ny*sy + nz*sz)
    """
    nx, ny, nz = float(axis[0]), float(axis[1]), float(axis[2])
    norm = math.sqrt(nx * nx + ny * ny + nz * nz)
    if abs(norm - 1.0) > 1e-9:
        raise InvalidAxisError(f"axis norm {norm!r} deviates from 1 by more than 1e-9")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array(
        [
            [c - 1j * s * nz, -1j * s * (nx - 1j * ny)],
            [-1j * s * (nx + 1j * ny), c + 1j * s * nz],
        ]
    )


def rz(alpha: float) -> np.ndarray:
    """Z-axis rotation, diag(e^{-i a/2}, e^{+i a/2})."""
    return rotation_unitary((0.0, 0.0, 1.0), alpha)


def rx(theta: float) -> np.ndarray:
    return rotation_unitary((1.0, 0.0, 0.0), theta)


def xy_rotation(phase: float, theta: float) -> np.ndarray:
    """Rotation about the XY-plane axis at angle `phase` from +x."""
    return rotation_unitary((math.cos(phase), math.sin(phase), 0.0), theta)


def compose(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """Unitary of applying `first` then `second` in time (= second @ first)."""
    return second @ first


def hs_fidelity(u: np.ndarray, v: np.ndarray) -> float:
    """|Tr(u^dag v)/2|^2 -- global-phase-invariant similarity in [0, 1]."""
    return abs(np.vdot(u, v)) ** 2 / 4.0


def residual_angle(f: float) -> float:
    """Coaxial rotation angle in [0, pi] that closes a fidelity gap.

    Inverse of F = cos^2(dtheta/2): dtheta = 2*arccos(sqrt(F)).
    """
    if f < -1e-9 or f > 1.0 + 1e-9:
        raise ValueError(f"fidelity {f!r} outside [0, 1] beyond roundoff tolerance")
    f = min(max(f, 0.0), 1.0)
    return 2.0 * math.acos(math.sqrt(f))


@dataclass(frozen=True)
class EulerZXZ:
    """ZXZ Euler angles plus the global phase of the source matrix.

    theta in [0, pi]; phi, lam, gamma in [0, 2*pi).
    """

    theta: float
    phi: float
    lam: float
    gamma: float


def euler_matrix(theta: float, phi: float, lam: float) -> np.ndarray:
    """Canonical ZXZ matrix form with real non-negative top-left entry.

    [[cos(t/2), -e^{i lam} sin(t/2)], [e^{i phi} sin(t/2), e^{i(lam+phi)} cos(t/2)]]
    """
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    return np.array(
        [
            [c, -cmath.exp(1j * lam) * s],
            [cmath.exp(1j * phi) * s, cmath.exp(1j * (lam + phi)) * c],
        ]
    )


def euler_zxz(u: np.ndarray) -> EulerZXZ:
    """Decompose a 2x2 unitary as e^{i gamma} * euler_matrix(theta, phi, lam).

    theta comes from |u00|; when theta is 0 or pi only one z-angle is
    determined, in which case lam is fixed to 0 and everything folds
    into phi.
    """
    u = np.asarray(u, dtype=complex)
    if not is_unitary(u):
        raise InvalidUnitaryError("input is not unitary within 1e-9")
    a00, a01 = u[0, 0], u[0, 1]
    a10, a11 = u[1, 0], u[1, 1]
    theta = 2.0 * math.acos(min(max(abs(a00), 0.0), 1.0))
    if abs(a10) == 0.0:  # theta = 0: diagonal matrix
        gamma = cmath.phase(a00)
        phi = cmath.phase(a11) - gamma
        lam = 0.0
    elif abs(a00) == 0.0:  # theta = pi: anti-diagonal matrix
        gamma = cmath.phase(-a01)
        phi = cmath.phase(a10) - gamma
        lam = 0.0
    else:
        gamma = cmath.phase(a00)
        phi = cmath.phase(a10) - gamma
        lam = cmath.phase(-a01) - gamma
    return EulerZXZ(theta, mod_2pi(phi), mod_2pi(lam), mod_2pi(gamma))
