import time
from typing import Any, Dict, List, NamedTuple, Optional

from custom_logging.custom_logger import get_logger
from deform.path import DeformationPath, U3Data, lowering_path
from exactalg.integration import sphere_degree_data
from grassmann.degree import pluecker_degree
from grassmann.extended import check_ces
from grassmann.loops import apply_loop
from grassmann.model_space import PlaneFamily
from utils.exceptions import StructuralError

clogger = get_logger()
MODULE_NAME = "DEFORM_VERIFY"


def uniton_width(plane: PlaneFamily) -> int:
    """Smallest k' with lambda^(s+k') H_+ <= W <= lambda^s H_+ for some s"""
    space = plane.space
    for v in plane.basis:
        if not plane.contains(space.shift(v)):
            raise StructuralError("W is not lambda-invariant; width is undefined")
    bottom = plane.lowest_power()
    top = space.high
    while top - 1 >= bottom and plane.contains_slot(top - 1):
        top -= 1
    return top - bottom


def sandwich_flags(plane: PlaneFamily, data: U3Data) -> List[bool]:
    """
    lambda^2 H_+ + lambda A_0E_0 <= W, and W <= H_+ minus (A_0E_0)^perp
    (every lambda^0 component lies on the line A_0E_0)
    """
    space = plane.space
    line = data.x0_vector()
    first = plane.contains(space.vector_from_slots({1: line}))

    second = True
    for v in plane.basis:
        part = space.slots_of(v).get(0)
        if part is None:
            continue
        for a in range(3):
            for b in range(a + 1, 3):
                if not (part[a] * line[b] - part[b] * line[a]).is_zero:
                    second = False
    return [first, second]


def delta_zero_count(data: U3Data) -> int:
    """Zeros of delta on the sphere, the one at infinity included"""
    zeros, _ = sphere_degree_data(data.delta)
    return zeros


class EndpointReport(NamedTuple):
    width: int
    width_before: int
    sandwich: List[bool]
    gamma_reset: bool
    degree: int


class DeformationReport(NamedTuple):
    t: List[str]
    ces_ok: List[bool]
    degree: List[int]
    endpoint: EndpointReport
    delta_zeros: int
    delta_carries_degree: bool

    @property
    def degree_constant(self) -> bool:
        return len(set(self.degree)) == 1

    @property
    def accepted(self) -> bool:
        return (
            all(self.ces_ok)
            and self.degree_constant
            and self.delta_carries_degree
            and all(self.endpoint.sandwich)
            and self.endpoint.width < self.endpoint.width_before
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "t": self.t,
            "ces_ok": self.ces_ok,
            "degree": self.degree,
            "degree_constant": self.degree_constant,
            "endpoint": self.endpoint._asdict(),
            "delta_zeros": self.delta_zeros,
            "delta_carries_degree": self.delta_carries_degree,
            "accepted": self.accepted,
        }


def verify_path(path: DeformationPath) -> DeformationReport:
    start = time.time()
    ts, ces_ok, degrees = [], [], []
    plane: Optional[PlaneFamily] = None
    for point in path.points:
        plane = point.data.plane()
        ts.append(str(point.t))
        ces_ok.append(check_ces(plane).accepted)
        degrees.append(pluecker_degree(plane))

    moved = apply_loop(plane, path.premultiplier)
    endpoint = EndpointReport(
        width=uniton_width(moved),
        width_before=uniton_width(plane),
        sandwich=sandwich_flags(plane, path.endpoint),
        gamma_reset=path.gamma_reset,
        degree=pluecker_degree(moved),
    )
    zeros = delta_zero_count(path.start)
    report = DeformationReport(
        t=ts,
        ces_ok=ces_ok,
        degree=degrees,
        endpoint=endpoint,
        delta_zeros=zeros,
        delta_carries_degree=zeros == degrees[0],
    )

    clogger.log_performance(
        "verify_path",
        time.time() - start,
        {"points": len(ts), "accepted": report.accepted, "endpoint_width": endpoint.width},
    )
    if not report.accepted:
        clogger.warning(f"[{MODULE_NAME}] deformation report not accepted: {report.to_dict()}")
    return report


class WitnessReport(NamedTuple):
    first: DeformationReport
    second: DeformationReport

    @property
    def connected(self) -> bool:
        a, b = self.first, self.second
        return (
            a.accepted
            and b.accepted
            and a.degree[0] == b.degree[0]
            and a.endpoint.degree == b.endpoint.degree
            and a.endpoint.width == b.endpoint.width == 1
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "first": self.first.to_dict(),
            "second": self.second.to_dict(),
            "connected": self.connected,
        }


def connectivity_witness(first: U3Data, second: U3Data, m: int = 10) -> WitnessReport:
    """Both instances deform, with constant degree, to width-1 planes of equal degree"""
    report = WitnessReport(
        verify_path(lowering_path(first, m)), verify_path(lowering_path(second, m))
    )
    clogger.info(f"[{MODULE_NAME}] connectivity witness: connected = {report.connected}")
    return report
