import time
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from config import NUMERIC_TOLERANCE
from custom_logging.custom_logger import get_logger
from grassmann.model_space import PlaneFamily
from unitary.factorization import phi_at, uniton_factorize
from unitary.numeric_plane import evaluate_plane
from utils.exceptions import InvalidInputError, NumericalFailure

clogger = get_logger()
MODULE_NAME = "UNITARY_HARMONIC"


class HarmonicSample:
    """phi on a square grid: points[r, c] = center + x_c + i y_r, phi[r, c] an n x n unitary"""

    def __init__(self, points: np.ndarray, phi: np.ndarray, h: float):
        if points.ndim != 2 or phi.shape[:2] != points.shape:
            raise InvalidInputError(f"Grid shape {points.shape} does not match phi shape {phi.shape}")
        if h <= 0:
            raise InvalidInputError(f"Mesh width must be positive, got {h}")
        self.points = points
        self.phi = phi
        self.h = h

    @property
    def n(self) -> int:
        return self.phi.shape[-1]

    def unitarity_error(self) -> float:
        eye = np.eye(self.n)
        gram = np.einsum("rcji,rcjk->rcik", self.phi.conj(), self.phi)
        return float(np.max(np.linalg.norm(gram - eye, axis=(-2, -1))))

    def __repr__(self):
        return f"HarmonicSample(grid={self.points.shape}, n={self.n}, h={self.h})"


class ResidualReport(NamedTuple):
    h: float
    max_residual: float
    mean_residual: float
    center_residual: float

    def to_dict(self):
        return self._asdict()


def grid_points(center: complex, half_width: float, h: float) -> np.ndarray:
    if h <= 0:
        raise InvalidInputError(f"Mesh width must be positive, got {h}")
    steps = int(round(half_width / h))
    if steps < 1:
        raise InvalidInputError(f"half_width {half_width} holds no grid step of {h}")
    offsets = h * np.arange(-steps, steps + 1)
    x, y = np.meshgrid(offsets, offsets)
    return complex(center) + x + 1j * y


def phi_of_plane(plane: PlaneFamily, z0: complex, tolerance: float = NUMERIC_TOLERANCE) -> np.ndarray:
    return phi_at(uniton_factorize(evaluate_plane(plane, z0), tolerance), tolerance)


def sample_harmonic_map(
    plane: PlaneFamily,
    center: complex,
    half_width: float,
    h: float,
    tolerance: float = NUMERIC_TOLERANCE,
) -> HarmonicSample:
    start = time.time()
    points = grid_points(center, half_width, h)
    n = plane.space.n
    phi = np.zeros(points.shape + (n, n), dtype=complex)
    for index in np.ndindex(points.shape):
        phi[index] = phi_of_plane(plane, points[index], tolerance)
    sample = HarmonicSample(points, phi, h)
    clogger.log_performance(
        "sample_harmonic_map", time.time() - start, {"points": int(points.size), "h": h}
    )
    return sample


def residual_field(sample: HarmonicSample) -> np.ndarray:
    """
    (phi^-1 phi_zbar)_z + (phi^-1 phi_z)_zbar
      = phi^-1 (1/2 Laplacian phi - phi_z phi^-1 phi_zbar - phi_zbar phi^-1 phi_z)
    by central differences at interior points
    """
    phi, h = sample.phi, sample.h
    rows, cols = phi.shape[:2]
    if rows < 3 or cols < 3:
        raise InvalidInputError(f"Residual needs at least a 3 x 3 grid, got {rows} x {cols}")

    centre = phi[1:-1, 1:-1]
    east, west = phi[1:-1, 2:], phi[1:-1, :-2]
    north, south = phi[2:, 1:-1], phi[:-2, 1:-1]

    phi_x = (east - west) / (2 * h)
    phi_y = (north - south) / (2 * h)
    laplacian = (east + west + north + south - 4 * centre) / h**2
    phi_z = 0.5 * (phi_x - 1j * phi_y)
    phi_zbar = 0.5 * (phi_x + 1j * phi_y)
    inverse = np.conj(np.swapaxes(centre, -1, -2))

    inner = (
        0.5 * laplacian
        - phi_z @ inverse @ phi_zbar
        - phi_zbar @ inverse @ phi_z
    )
    return np.linalg.norm(inverse @ inner, axis=(-2, -1))


def harmonic_residual(sample: HarmonicSample) -> ResidualReport:
    residual = residual_field(sample)
    mid = (residual.shape[0] // 2, residual.shape[1] // 2)
    report = ResidualReport(
        h=float(sample.h),
        max_residual=float(residual.max()),
        mean_residual=float(residual.mean()),
        center_residual=float(residual[mid]),
    )
    clogger.debug(f"[{MODULE_NAME}] residual {report}")
    return report


def shared_node_max(residual: np.ndarray, stride: int, coarse_steps: int) -> float:
    """Max of an interior residual field over the interior nodes of a grid `stride` times coarser"""
    mid = residual.shape[0] // 2
    offsets = stride * np.arange(-(coarse_steps - 1), coarse_steps)
    return float(residual[np.ix_(mid + offsets, mid + offsets)].max())


def convergence_study(
    plane: PlaneFamily, center: complex, half_width: float, meshes: Sequence[float]
) -> Tuple[List[ResidualReport], List[float]]:
    """
    Residual reports on successively refined grids and the ratios of their max
    residuals. The max is taken over the interior nodes of the first grid, which
    every later grid contains, so each ratio compares the same points.
    """
    if not meshes:
        raise InvalidInputError("Convergence study needs at least one mesh width")
    coarse = meshes[0]
    coarse_steps = int(round(half_width / coarse))
    reports: List[ResidualReport] = []
    maxima: List[float] = []
    for h in meshes:
        stride = int(round(coarse / h))
        if stride < 1 or abs(stride * h - coarse) > 1e-9 * coarse:
            raise InvalidInputError(f"Mesh {h} does not refine {coarse} by an integer factor")
        sample = sample_harmonic_map(plane, center, half_width, h)
        reports.append(harmonic_residual(sample))
        maxima.append(shared_node_max(residual_field(sample), stride, coarse_steps))
    ratios = [a / b if b > 0 else float("inf") for a, b in zip(maxima, maxima[1:])]
    clogger.info(f"[{MODULE_NAME}] convergence ratios {ratios}")
    return reports, ratios


def constant_discrepancy(
    first: np.ndarray, second: np.ndarray
) -> Tuple[Optional[str], float]:
    """
    Whether first = D second (side "left") or first = second D (side "right")
    for one constant D over the grid; returns the side with the smaller deviation
    """
    if first.shape != second.shape:
        raise InvalidInputError("Sample grids differ in shape")
    flat_a = first.reshape((-1,) + first.shape[-2:])
    flat_b = second.reshape((-1,) + second.shape[-2:])
    inverse_b = np.conj(np.swapaxes(flat_b, -1, -2))

    left = flat_a @ inverse_b
    right = inverse_b @ flat_a
    deviations = {
        "left": float(np.max(np.linalg.norm(left - left[0], axis=(-2, -1)))),
        "right": float(np.max(np.linalg.norm(right - right[0], axis=(-2, -1)))),
    }
    side = min(deviations, key=deviations.get)
    return side, deviations[side]


def write_phi_csv(sample: HarmonicSample, path: str) -> None:
    n = sample.n
    header = ["re_z", "im_z"]
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            header.extend([f"phi_{a}{b}_re", f"phi_{a}{b}_im"])

    points = sample.points.reshape(-1)
    phi = sample.phi.reshape(-1, n * n)
    table = np.empty((points.size, 2 + 2 * n * n))
    table[:, 0] = points.real
    table[:, 1] = points.imag
    table[:, 2::2] = phi.real
    table[:, 3::2] = phi.imag
    np.savetxt(path, table, delimiter=",", header=",".join(header), comments="", fmt="%.12g")
    clogger.info(f"[{MODULE_NAME}] wrote {points.size} grid points to {path}")


def check_unitary(sample: HarmonicSample, tolerance: float = NUMERIC_TOLERANCE) -> None:
    error = sample.unitarity_error()
    if error > tolerance:
        raise NumericalFailure(f"phi*phi - I reaches {error:.3e} on the grid")
