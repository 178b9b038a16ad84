import time
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg

from config import LAMBDA_SAMPLES, NUMERIC_TOLERANCE
from custom_logging.custom_logger import get_logger
from unitary.numeric_plane import NumericPlane, orthonormal_range, projector
from utils.exceptions import NumericalFailure, StructuralError

clogger = get_logger()
MODULE_NAME = "UNITARY_FACTORIZATION"


class PeelConvention(str, Enum):
    IMAGE = "image"  # V = constant terms of W
    KERNEL = "kernel"  # V = constant vectors inside W


class UnitonFactorization:
    """
    F(lambda) = lambda^shift (pi_V1 + lambda pi_V1^perp) ... (pi_Vk + lambda pi_Vk^perp)
    with F H_+ = W(z0)
    """

    def __init__(
        self,
        subspaces: List[np.ndarray],
        n: int,
        shift: int = 0,
        convention: PeelConvention = PeelConvention.IMAGE,
    ):
        self.subspaces = subspaces
        self.n = n
        self.shift = shift
        self.convention = convention

    @property
    def uniton_number(self) -> int:
        """Factors other than the identity and lambda I"""
        return sum(1 for v in self.subspaces if 0 < v.shape[1] < self.n)

    def factor(self, i: int) -> Tuple[np.ndarray, np.ndarray]:
        p = projector(self.subspaces[i])
        return p, np.eye(self.n) - p

    def coefficients(self) -> List[np.ndarray]:
        """Coefficients of F(lambda) in lambda^0, lambda^1, ..., without the lambda^shift scalar"""
        coeffs = [np.eye(self.n, dtype=complex)]
        for i in range(len(self.subspaces)):
            p, q = self.factor(i)
            out = [np.zeros((self.n, self.n), dtype=complex) for _ in range(len(coeffs) + 1)]
            for j, c in enumerate(coeffs):
                out[j] += c @ p
                out[j + 1] += c @ q
            coeffs = out
        return coeffs

    def loop_at(self, lam: complex) -> np.ndarray:
        value = sum(c * lam**j for j, c in enumerate(self.coefficients()))
        return value * lam**self.shift

    def __repr__(self):
        dims = [v.shape[1] for v in self.subspaces]
        return (
            f"UnitonFactorization(n={self.n}, shift={self.shift}, dims={dims}, "
            f"convention={self.convention.value})"
        )


def _peel(
    basis: np.ndarray, n: int, k: int, convention: PeelConvention, tolerance: float
) -> Optional[Tuple[np.ndarray, np.ndarray]]:
    """One factor off the left: returns (V, basis of (pi_V + lambda^-1 pi_V^perp) W in the shorter window)"""
    slot0 = basis[:n, :]
    if convention == PeelConvention.IMAGE or k == 1:
        v = orthonormal_range(slot0)
    else:
        kernel = scipy.linalg.null_space(basis[n:, :], rcond=tolerance)
        v = orthonormal_range(slot0 @ kernel) if kernel.size else np.zeros((n, 0), dtype=complex)

    p = projector(v)
    q = np.eye(n) - p
    # lambda^-1 part must vanish
    if np.linalg.norm(q @ slot0) > tolerance:
        return None

    slots = [basis[i * n : (i + 1) * n, :] for i in range(k)]
    moved = [p @ slots[i] + q @ slots[i + 1] for i in range(k - 1)]
    if not moved:
        return v, np.zeros((0, 0), dtype=complex)
    return v, orthonormal_range(np.vstack(moved))


def _toeplitz_range(coeffs: List[np.ndarray], n: int, k: int) -> np.ndarray:
    """F H_+ modulo lambda^k H_+ as the range of a block lower-triangular Toeplitz matrix"""
    t = np.zeros((k * n, k * n), dtype=complex)
    for row in range(k):
        for col in range(row + 1):
            j = row - col
            if j < len(coeffs):
                t[row * n : (row + 1) * n, col * n : (col + 1) * n] = coeffs[j]
    return orthonormal_range(t)


def roundtrip_error(factorization: UnitonFactorization, plane: NumericPlane) -> float:
    """Distance between the projectors onto F H_+ and W, both relative to the plane's window"""
    n, k = plane.n, plane.k
    if k == 0:
        return 0.0
    if factorization.shift != plane.low:
        return float("inf")
    image = _toeplitz_range(factorization.coefficients(), n, k)
    return float(np.linalg.norm(projector(image) - plane.projector(), 2))


def loop_unitarity_error(factorization: UnitonFactorization, samples: int = LAMBDA_SAMPLES) -> float:
    """max over sampled lambda on S^1 of |F* F - I|, together with |F(1) - I|"""
    n = factorization.n
    errors = [np.linalg.norm(factorization.loop_at(1.0) - np.eye(n))]
    for lam in np.exp(2j * np.pi * np.arange(samples) / samples):
        f = factorization.loop_at(lam)
        errors.append(np.linalg.norm(f.conj().T @ f - np.eye(n)))
    return float(max(errors))


def _factorize_with(
    plane: NumericPlane, convention: PeelConvention, tolerance: float
) -> Optional[UnitonFactorization]:
    n = plane.n
    basis = plane.basis
    subspaces = []
    for k in range(plane.k, 0, -1):
        peeled = _peel(basis, n, k, convention, tolerance)
        if peeled is None:
            return None
        v, basis = peeled
        subspaces.append(v)
    return UnitonFactorization(subspaces, n, plane.low, convention)


def uniton_factorize(
    plane: NumericPlane, tolerance: float = NUMERIC_TOLERANCE
) -> UnitonFactorization:
    start = time.time()
    if not plane.is_invariant(tolerance):
        raise StructuralError(
            f"W(z0) is not lambda-invariant: residual {plane.invariance_residual():.3e}"
        )

    failures = {}
    for convention in (PeelConvention.IMAGE, PeelConvention.KERNEL):
        factorization = _factorize_with(plane, convention, tolerance)
        if factorization is None:
            failures[convention.value] = "peeling left a lambda^-1 term"
            continue
        error = max(roundtrip_error(factorization, plane), loop_unitarity_error(factorization))
        if error <= tolerance:
            if factorization.uniton_number > plane.n - 1:
                clogger.warning(
                    f"[{MODULE_NAME}] uniton number {factorization.uniton_number} exceeds n - 1 = {plane.n - 1}"
                )
            clogger.log_performance(
                "uniton_factorize",
                time.time() - start,
                {
                    "convention": convention.value,
                    "uniton_number": factorization.uniton_number,
                    "roundtrip_error": error,
                },
            )
            return factorization
        failures[convention.value] = f"roundtrip error {error:.3e}"
        clogger.debug(f"[{MODULE_NAME}] {convention.value} peeling rejected: {failures[convention.value]}")

    raise StructuralError(f"No uniton factorization of W(z0): {failures}")


def phi_at(factorization: UnitonFactorization, tolerance: float = NUMERIC_TOLERANCE) -> np.ndarray:
    """F(-1) = (-1)^shift prod (pi_V - pi_V^perp)"""
    n = factorization.n
    phi = np.eye(n, dtype=complex) * (-1) ** factorization.shift
    for i in range(len(factorization.subspaces)):
        p, q = factorization.factor(i)
        phi = phi @ (p - q)
    if np.linalg.norm(phi.conj().T @ phi - np.eye(n)) > tolerance:
        raise NumericalFailure("phi is not unitary")
    return phi
