"""Dense real-matrix primitives shared by every higher layer.

Provides the spectral radius with a strict stability flag, both
orientations of the discrete Lyapunov equation solved by Kronecker
vectorization, and column-stacking vec/unvec helpers.  Everything here
is a pure function of its inputs; sizes are desk scale (n of a few),
so exact dense solves beat anything iterative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, InstabilityError, NumericalError


def as_matrix(M, name: str = "matrix") -> np.ndarray:
    """Coerce to a finite 2-D float array, validating shape and entries."""
    A = np.asarray(M, dtype=float)
    if A.ndim == 0:
        A = A.reshape(1, 1)
    elif A.ndim == 1:
        raise DimensionError(f"{name} must be 2-D, got shape {A.shape}")
    if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
        raise DimensionError(f"{name} must be 2-D with positive dimensions, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise NumericalError(f"{name} contains non-finite entries")
    return A


def as_square(M, name: str = "matrix") -> np.ndarray:
    A = as_matrix(M, name)
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {A.shape}")
    return A


def require_symmetric(M, name: str = "matrix", rtol: float = 1e-9) -> np.ndarray:
    A = as_square(M, name)
    if np.linalg.norm(A - A.T) > rtol * (1.0 + np.linalg.norm(A)):
        raise DimensionError(f"{name} must be symmetric")
    return A


@dataclass(frozen=True)
class SpectralReport:
    """Spectral radius plus the strict discrete-time stability flag.

    ``stable`` is exactly ``radius < 1`` with no tolerance; callers that
    want a margin must apply their own.
    """

    radius: float
    stable: bool


def spectral_radius(M) -> SpectralReport:
    """Maximum eigenvalue modulus of a square matrix."""
    A = as_square(M)
    try:
        eigs = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"eigenvalue computation failed to converge: {exc}") from exc
    r = float(np.max(np.abs(eigs)))
    return SpectralReport(radius=r, stable=r < 1.0)


def vec(M) -> np.ndarray:
    """Stack the columns of M into a 1-D array."""
    return as_matrix(M).flatten(order="F")


def unvec(v, rows: int, cols: int) -> np.ndarray:
    """Inverse of :func:`vec` for the given target shape."""
    a = np.asarray(v, dtype=float).ravel()
    if a.size != rows * cols:
        raise DimensionError(f"cannot reshape length-{a.size} vector to {rows}x{cols}")
    return a.reshape((rows, cols), order="F")


def _dlyap_kernel(Acl: np.ndarray, Q: np.ndarray, transpose: bool) -> np.ndarray:
    """Solve X = Q + Acl' X Acl (transpose=True) or X = Q + Acl X Acl'.

    Direct Kronecker vectorization: (I - K ⊗ K) vec(X) = vec(Q) with
    K = Acl' resp. Acl.  No stability check; callers must have verified
    rad(Acl) < 1.
    """
    n = Acl.shape[0]
    K = Acl.T if transpose else Acl
    lhs = np.eye(n * n) - np.kron(K, K)
    try:
        x = np.linalg.solve(lhs, Q.flatten(order="F"))
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"Lyapunov system is singular: {exc}") from exc
    X = x.reshape((n, n), order="F")
    return 0.5 * (X + X.T)


def solve_dlyap_transpose(Acl, Q) -> np.ndarray:
    """Solve X = Q + Acl' X Acl for symmetric X.

    Requires rad(Acl) < 1 (otherwise the series defining X diverges) and
    symmetric Q.  The result is symmetrized to remove rounding skew.
    """
    A = as_square(Acl, "Acl")
    Qm = require_symmetric(Q, "Q")
    if A.shape != Qm.shape:
        raise DimensionError(f"Acl {A.shape} and Q {Qm.shape} must have matching shapes")
    rep = spectral_radius(A)
    if not rep.stable:
        raise InstabilityError(
            f"Lyapunov solve needs rad(Acl) < 1, got {rep.radius:.6g}", radius=rep.radius
        )
    return _dlyap_kernel(A, Qm, transpose=True)


def solve_dlyap(Acl, Q) -> np.ndarray:
    """Solve X = Q + Acl X Acl' for symmetric X (transposed orientation)."""
    A = as_square(Acl, "Acl")
    Qm = require_symmetric(Q, "Q")
    if A.shape != Qm.shape:
        raise DimensionError(f"Acl {A.shape} and Q {Qm.shape} must have matching shapes")
    rep = spectral_radius(A)
    if not rep.stable:
        raise InstabilityError(
            f"Lyapunov solve needs rad(Acl) < 1, got {rep.radius:.6g}", radius=rep.radius
        )
    return _dlyap_kernel(A, Qm, transpose=False)


def spectral_norm(M) -> float:
    """Maximum singular value."""
    return float(np.linalg.norm(np.atleast_2d(M), 2))


def fro_norm(M) -> float:
    return float(np.linalg.norm(M))
