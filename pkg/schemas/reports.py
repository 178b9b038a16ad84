from typing import Annotated, Dict, List, Optional

from pydantic import BaseModel, PlainSerializer

from deform.verification import DeformationReport, EndpointReport, WitnessReport
from exactalg.integration import IntegrationObstruction
from exactalg.residues import residue_report
from grassmann.extended import CesReport
from loopalg.operations import ExtendedReport, VerifyMode
from schemas.algebra import AlgebraModel, Entry, LaurentSchema, LoopSchema, MatrixRows
from schemas.planes import PlaneSchema
from unitary.factorization import UnitonFactorization
from unitary.harmonic import ResidualReport

# numeric results leave the process with 12 significant digits
Numeric = Annotated[float, PlainSerializer(lambda x: float(f"{x:.12g}"), return_type=float)]


class ExtendedReportSchema(AlgebraModel):
    accepted: bool
    mode: VerifyMode
    offending_powers: List[int]
    a_coefficient: Optional[MatrixRows] = None
    maurer_cartan: LaurentSchema

    @classmethod
    def from_report(cls, report: ExtendedReport) -> "ExtendedReportSchema":
        a = report.a_coefficient
        return cls(
            accepted=report.accepted,
            mode=report.mode,
            offending_powers=report.offending_powers,
            a_coefficient=[list(row) for row in a] if a is not None else None,
            maurer_cartan=LaurentSchema.from_laurent(report.maurer_cartan),
        )


class CesViolationSchema(AlgebraModel):
    basis_index: int
    test: str
    vector: List[Entry]


class CesReportSchema(AlgebraModel):
    accepted: bool
    violations: List[CesViolationSchema] = []

    @classmethod
    def from_report(cls, report: CesReport) -> "CesReportSchema":
        return cls(
            accepted=report.accepted,
            violations=[
                CesViolationSchema(basis_index=v.basis_index, test=v.test, vector=list(v.vector))
                for v in report.violations
            ],
        )


class DegreeReportSchema(BaseModel):
    degree: int
    dim: int
    width: Optional[int] = None
    schubert_count: Optional[int] = None
    x0_degree: Optional[int] = None
    degree_matches: Optional[bool] = None


class ResidueSchema(BaseModel):
    pole: str
    residue: str


class ObstructionSchema(AlgebraModel):
    remainder: Entry
    level: Optional[int] = None
    entry: Optional[List[int]] = None
    residues: List[ResidueSchema] = []

    @classmethod
    def from_obstruction(cls, obstruction: IntegrationObstruction) -> "ObstructionSchema":
        # entries are reported 1-based, the same way potentials are written
        entry = [i + 1 for i in obstruction.entry] if obstruction.entry is not None else None
        return cls(
            remainder=obstruction.remainder,
            level=obstruction.level,
            entry=entry,
            residues=[ResidueSchema(**r) for r in residue_report(obstruction)],
        )


class ResidualReportSchema(BaseModel):
    h: Numeric
    max_residual: Numeric
    mean_residual: Numeric
    center_residual: Numeric

    @classmethod
    def from_report(cls, report: ResidualReport) -> "ResidualReportSchema":
        return cls(**report.to_dict())


class FactorizationSchema(BaseModel):
    uniton_number: int
    shift: int
    convention: str
    dims: List[int]

    @classmethod
    def from_factorization(cls, factorization: UnitonFactorization) -> "FactorizationSchema":
        return cls(
            uniton_number=factorization.uniton_number,
            shift=factorization.shift,
            convention=factorization.convention.value,
            dims=[v.shape[1] for v in factorization.subspaces],
        )


class FactorReportSchema(BaseModel):
    """Output of the factor command: the factorization at the grid centre and the residual runs"""

    factorization: FactorizationSchema
    unitarity_error: Numeric
    residuals: List[ResidualReportSchema]
    ratios: List[Numeric] = []
    csv: Optional[str] = None


class EndpointSchema(BaseModel):
    width: int
    width_before: int
    sandwich: List[bool]
    gamma_reset: bool
    degree: int

    @classmethod
    def from_report(cls, report: EndpointReport) -> "EndpointSchema":
        return cls(**report._asdict())


class DeformationReportSchema(BaseModel):
    t: List[str]
    ces_ok: List[bool]
    degree: List[int]
    degree_constant: bool
    endpoint: EndpointSchema
    delta_zeros: int
    delta_carries_degree: bool
    accepted: bool

    @classmethod
    def from_report(cls, report: DeformationReport) -> "DeformationReportSchema":
        return cls(
            t=report.t,
            ces_ok=report.ces_ok,
            degree=report.degree,
            degree_constant=report.degree_constant,
            endpoint=EndpointSchema.from_report(report.endpoint),
            delta_zeros=report.delta_zeros,
            delta_carries_degree=report.delta_carries_degree,
            accepted=report.accepted,
        )


class WitnessReportSchema(BaseModel):
    first: DeformationReportSchema
    second: DeformationReportSchema
    connected: bool

    @classmethod
    def from_report(cls, report: WitnessReport) -> "WitnessReportSchema":
        return cls(
            first=DeformationReportSchema.from_report(report.first),
            second=DeformationReportSchema.from_report(report.second),
            connected=report.connected,
        )


class TypeListSchema(BaseModel):
    n: int
    types: List[str]
    dimensions: Dict[str, int]


class GenerateResultSchema(AlgebraModel):
    source: str
    type: str
    loop: Optional[LoopSchema] = None
    levels: Optional[List[MatrixRows]] = None
    plane: PlaneSchema
    degree: int
    width: int


class BoundSchema(BaseModel):
    bounds: Dict[str, int]
