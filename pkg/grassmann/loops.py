from typing import Dict, List

from canonical.uniton_type import UnitonType
from custom_logging.custom_logger import get_logger
from exactalg.rational_function import ZERO
from grassmann.model_space import ModelSpace, PlaneFamily, Vector
from loopalg.factors import LoopProduct
from loopalg.matrices import LaurentMatrix
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "GRASSMANN_LOOPS"


def _image_vectors(loop: LaurentMatrix, space: ModelSpace) -> List[Vector]:
    """loop * lambda^m e_a truncated to the window, for every m that survives"""
    vectors = []
    lo = loop.min_power()
    for m in range(0, space.high - lo):
        for a in range(loop.n):
            slots = {p + m: matrix.column(a) for p, matrix in loop.items()}
            vectors.append(space.vector_from_slots(slots))
    return vectors


def _multiply_slots(loop: LaurentMatrix, slots: Dict[int, Vector]) -> Dict[int, Vector]:
    n = loop.n
    out: Dict[int, Vector] = {}
    for p, matrix in loop.items():
        for q, part in slots.items():
            acc = out.setdefault(p + q, [ZERO] * n)
            for r in range(n):
                for c in range(n):
                    if matrix[r][c].is_zero or part[c].is_zero:
                        continue
                    acc[r] = acc[r] + matrix[r][c] * part[c]
    return out


def plane_of_loop(h: LoopProduct) -> PlaneFamily:
    """W = H H_+ in the tightest window [min power of H, -min power of H^-1)"""
    loop = h.expand()
    low = loop.min_power()
    high = -h.expand_inverse().min_power()
    space = ModelSpace(h.n, high - low, low)
    return PlaneFamily(space, _image_vectors(loop, space))


def model_from_loop(h: LoopProduct, uniton_type: UnitonType) -> PlaneFamily:
    """
    W = H gamma_v H_+ modulo lambda^k H_+, H being the big-cell factor exp C
    rejects H unless lambda^k H_+ <= W <= H_+
    """
    if h.n != uniton_type.n:
        raise InvalidInputError(f"Loop has size {h.n}, type has size {uniton_type.n}")
    k = uniton_type.k
    full = h * LoopProduct(h.n, [uniton_type.gamma()])
    loop = full.expand()

    if loop.min_power() < 0:
        raise InvalidInputError(
            f"W is not inside H_+: H gamma_v has a lambda^{loop.min_power()} term"
        )
    if -full.expand_inverse().min_power() > k:
        raise InvalidInputError(f"W does not contain lambda^{k} H_+")

    space = ModelSpace(h.n, k, 0)
    plane = PlaneFamily(space, _image_vectors(loop, space))
    clogger.debug(f"[{MODULE_NAME}] model_from_loop type {uniton_type}: dim W = {plane.dim}")
    return plane


def apply_loop(plane: PlaneFamily, gamma: LoopProduct) -> PlaneFamily:
    """gamma W for a z-independent loop gamma; the window moves with gamma"""
    if not gamma.is_z_independent():
        raise InvalidInputError("Only z-independent loops act on planes here")
    space = plane.space
    loop = gamma.expand()
    lo = space.low + loop.min_power()
    high = space.high - gamma.expand_inverse().min_power()
    target = ModelSpace(space.n, high - lo, lo)

    vectors = [
        target.vector_from_slots(_multiply_slots(loop, space.slots_of(v)))
        for v in plane.basis
    ]

    # gamma lambda^high H_+ = lambda^high gamma H_+
    for m in range(0, target.high - (space.high + loop.min_power())):
        for a in range(space.n):
            slots = {space.high + p + m: matrix.column(a) for p, matrix in loop.items()}
            vectors.append(target.vector_from_slots(slots))

    moved = PlaneFamily(target, vectors)
    low = moved.lowest_power()
    if low > target.low and low < target.high:
        moved = moved.in_window(low, target.high - low)
    return moved


def extract_X0(h: LoopProduct, uniton_type: UnitonType) -> PlaneFamily:
    """X_0 = H E_0 for H = exp C in big-cell form, as a span in the model space"""
    loop = h.expand()
    k = uniton_type.k
    outside = [p for p in loop.support() if p < 0 or p >= max(k, 1)]
    if outside:
        raise InvalidInputError(f"H is not in big-cell form: lambda powers {outside}")
    space = ModelSpace(h.n, k, 0)
    vectors = [
        space.vector_from_slots({p: matrix.column(r) for p, matrix in loop.items()})
        for r in uniton_type.eigenspace(0)
    ]
    return PlaneFamily(space, vectors)
