import numpy as np
import scipy.linalg

from config import NUMERIC_TOLERANCE, ORTHONORMAL_TOLERANCE, PIVOT_TOLERANCE
from custom_logging.custom_logger import get_logger
from grassmann.model_space import PlaneFamily
from utils.exceptions import NumericalFailure

clogger = get_logger()
MODULE_NAME = "UNITARY_PLANE"


def orthonormal_range(matrix: np.ndarray, rcond: float = PIVOT_TOLERANCE) -> np.ndarray:
    """Orthonormal columns spanning the range; singular values below rcond * max are dropped"""
    if matrix.size == 0 or not np.any(matrix):
        return np.zeros((matrix.shape[0], 0), dtype=complex)
    return scipy.linalg.orth(matrix, rcond=rcond)


def projector(basis: np.ndarray) -> np.ndarray:
    return basis @ basis.conj().T


def shift_matrix(n: int, k: int) -> np.ndarray:
    """N on C^(kn): slot i to slot i+1, the top slot is killed"""
    return np.kron(np.eye(k, k=-1), np.eye(n)).astype(complex)


class NumericPlane:
    """
    W(z0) modulo lambda^(low+k) H_+ in the window [low, low+k): orthonormal
    columns in C^(kn), slot i occupying rows i*n .. (i+1)*n - 1
    """

    def __init__(self, basis: np.ndarray, n: int, k: int, low: int = 0):
        basis = np.asarray(basis, dtype=complex)
        if basis.ndim != 2 or basis.shape[0] != n * k:
            raise NumericalFailure(f"Plane basis has shape {basis.shape}, window needs {n * k} rows")
        gram = basis.conj().T @ basis
        if basis.shape[1] and np.linalg.norm(gram - np.eye(basis.shape[1])) > ORTHONORMAL_TOLERANCE:
            raise NumericalFailure("Plane basis columns are not orthonormal")
        self.basis = basis
        self.n = n
        self.k = k
        self.low = low

    @property
    def dim(self) -> int:
        return self.basis.shape[1]

    def slot(self, i: int) -> np.ndarray:
        return self.basis[i * self.n : (i + 1) * self.n, :]

    def projector(self) -> np.ndarray:
        return projector(self.basis)

    def invariance_residual(self) -> float:
        """|(I - P) N P|, zero when lambda W <= W"""
        if self.k == 0 or self.dim == 0:
            return 0.0
        p = self.projector()
        moved = shift_matrix(self.n, self.k) @ self.basis
        return float(np.linalg.norm(moved - p @ moved))

    def is_invariant(self, tolerance: float = NUMERIC_TOLERANCE) -> bool:
        return self.invariance_residual() <= tolerance

    def __repr__(self):
        return f"NumericPlane(n={self.n}, k={self.k}, low={self.low}, dim={self.dim})"


def evaluate_plane(plane: PlaneFamily, z0: complex) -> NumericPlane:
    space = plane.space
    columns = np.zeros((space.dim, plane.dim), dtype=complex)
    for j, vector in enumerate(plane.basis):
        for c, entry in enumerate(vector):
            if entry.is_zero:
                continue
            try:
                columns[c, j] = entry.evaluate(z0)
            except NumericalFailure as e:
                power, a = space.slot(c)
                raise NumericalFailure(
                    f"Basis vector {j}, lambda^{power} coordinate {a + 1}: {e}"
                ) from e

    if plane.dim:
        singular = scipy.linalg.svdvals(columns)
        if singular[-1] < PIVOT_TOLERANCE * max(singular[0], 1.0):
            raise NumericalFailure(
                f"W drops rank at z = {z0}: smallest singular value {singular[-1]:.3e}"
            )
        q, _ = np.linalg.qr(columns)
    else:
        q = columns

    clogger.debug(f"[{MODULE_NAME}] evaluated {plane!r} at z = {z0}")
    return NumericPlane(q, space.n, space.k, space.low)
