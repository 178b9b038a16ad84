from typing import Sequence

import numpy as np

from config import PIVOT_TOLERANCE
from exactalg.rational_function import RationalFunction
from utils.exceptions import InvalidInputError, NumericalFailure


def gram_schmidt(vectors: np.ndarray, tolerance: float = PIVOT_TOLERANCE) -> np.ndarray:
    """Modified Gram-Schmidt on the rows, <a|b> = a^dagger b; a dependent row raises"""
    result = np.zeros_like(vectors, dtype=complex)
    for j in range(vectors.shape[0]):
        v = vectors[j].astype(complex)
        scale = max(np.linalg.norm(v), 1.0)
        for i in range(j):
            v = v - (result[i].conj() @ v) * result[i]
        norm = np.linalg.norm(v)
        if norm <= tolerance * scale:
            raise NumericalFailure(f"Vector {j} is dependent on the previous ones (norm {norm:.3e})")
        result[j] = v / norm
    return result


def cartan_embedding(basis: np.ndarray) -> np.ndarray:
    """pi_V - pi_V^perp for orthonormal columns spanning V"""
    p = basis @ basis.conj().T
    return 2 * p - np.eye(basis.shape[0])


def eells_wood(f: Sequence[RationalFunction], i: int, z0: complex) -> np.ndarray:
    """
    Line ([f] + [f'] + ... + [f^(i)]) minus ([f] + ... + [f^(i-1)]) at z0,
    returned through the Cartan embedding
    """
    n = len(f)
    if not 0 <= i <= n - 1:
        raise InvalidInputError(f"Index i={i} outside 0..{n - 1}")

    derivatives = [list(f)]
    for _ in range(i):
        derivatives.append([e.derivative() for e in derivatives[-1]])
    try:
        rows = np.array([[e.evaluate(z0) for e in d] for d in derivatives], dtype=complex)
    except NumericalFailure as e:
        raise NumericalFailure(f"f has a pole at z = {z0}: {e}") from e

    try:
        orthonormal = gram_schmidt(rows)
    except NumericalFailure as e:
        raise NumericalFailure(f"f, ..., f^({i}) degenerate at z = {z0}: {e}") from e
    line = orthonormal[-1].reshape(n, 1)
    return cartan_embedding(line)
