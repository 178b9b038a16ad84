import argparse
import time
from pathlib import Path
from typing import Dict, List, Optional

import numpy as np
from pydantic import BaseModel

from canonical.bounds import uniton_bound
from canonical.frames import cpn_frame
from canonical.potential import build_H, solve_canonical, to_big_cell
from canonical.random_instances import random_b1
from canonical.uniton_type import UnitonType, enumerate_types
from cli.error_handler import EXIT_OK, EXIT_REJECTED, handle_command_errors
from cli.inputs import document_plane, document_type, load_document
from config import NUMERIC_TOLERANCE
from custom_logging.custom_logger import get_logger
from deform.path import lowering_path
from deform.verification import connectivity_witness, uniton_width, verify_path
from exactalg.integration import IntegrationObstruction
from exactalg.rational_function import RationalFunction
from exactalg.text_format import to_rational
from grassmann.degree import pluecker_degree, schubert_count, schubert_test_space, x0_degrees
from grassmann.extended import check_ces
from grassmann.frenet import frenet
from grassmann.loops import model_from_loop, plane_of_loop
from loopalg.factors import ExpNilpotent, LoopProduct
from loopalg.operations import VerifyMode, verify_extended
from schemas.algebra import LoopSchema, PotentialSchema, matrix_to_rows
from schemas.planes import FrenetSchema, PlaneSchema, U3DataSchema, split_vector
from schemas.reports import (
    BoundSchema,
    CesReportSchema,
    DeformationReportSchema,
    DegreeReportSchema,
    ExtendedReportSchema,
    FactorizationSchema,
    FactorReportSchema,
    GenerateResultSchema,
    ResidualReportSchema,
    TypeListSchema,
    WitnessReportSchema,
)
from unitary.factorization import uniton_factorize
from unitary.harmonic import (
    check_unitary,
    convergence_study,
    harmonic_residual,
    sample_harmonic_map,
    write_phi_csv,
)
from unitary.numeric_plane import evaluate_plane
from utils.exceptions import InvalidInputError, ObstructionError, StructuralError

clogger = get_logger()
MODULE_NAME = "CLI_COMMANDS"

# --a/--b/--c name the (1,2), (1,3), (2,3) entries of B_1
SHORTHAND_ENTRIES = {"a": "1,2", "b": "1,3", "c": "2,3"}


def emit(result: BaseModel, out: Optional[str] = None) -> None:
    text = result.model_dump_json(indent=2)
    print(text)
    if out:
        Path(out).write_text(text + "\n")
        clogger.info(f"[{MODULE_NAME}] wrote {out}")


def _write_artifacts(out_dir: str, loop: Optional[LoopSchema], plane: PlaneSchema) -> None:
    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    if loop is not None:
        (target / "loop.json").write_text(loop.model_dump_json(indent=2) + "\n")
    (target / "plane.json").write_text(plane.model_dump_json(indent=2) + "\n")
    clogger.info(f"[{MODULE_NAME}] wrote artifacts to {target}")


def _potential_from_args(args: argparse.Namespace) -> PotentialSchema:
    if args.potential:
        document = load_document(args.potential)
        if not isinstance(document, PotentialSchema):
            raise InvalidInputError(f"{args.potential} is not a potential")
        return document
    if not args.type:
        raise InvalidInputError("generate canonical needs --type or --potential")

    entries: Dict[str, str] = {}
    for name, key in SHORTHAND_ENTRIES.items():
        value = getattr(args, name)
        if value is not None:
            entries[key] = value
    for item in args.entry or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise InvalidInputError(f"--entry expects r,s=expression, got {item!r}")
        entries[key.strip()] = value
    return PotentialSchema(type=args.type, entries=entries)


def _generate_canonical(args: argparse.Namespace) -> GenerateResultSchema:
    schema = _potential_from_args(args)
    uniton_type = schema.uniton_type()
    if args.random:
        b1 = random_b1(uniton_type, np.random.default_rng(args.seed))
    else:
        b1 = schema.b1()

    potential = solve_canonical(uniton_type, b1, schema.constant_matrices())
    if isinstance(potential, IntegrationObstruction):
        r, s = potential.entry
        raise ObstructionError(potential, where=f"B_{potential.level} entry ({r + 1},{s + 1})")

    c, _ = to_big_cell(potential)
    plane = model_from_loop(LoopProduct(uniton_type.n, [ExpNilpotent(c)]), uniton_type)
    return GenerateResultSchema(
        source="canonical",
        type=str(uniton_type),
        loop=LoopSchema.from_loop(build_H(potential)),
        levels=[matrix_to_rows(m) for m in potential.levels],
        plane=PlaneSchema.from_plane(plane),
        degree=pluecker_degree(plane),
        width=uniton_width(plane),
    )


def _generate_frenet(args: argparse.Namespace) -> GenerateResultSchema:
    if args.input:
        schema = load_document(args.input)
        if not isinstance(schema, FrenetSchema):
            raise InvalidInputError(f"{args.input} is not Frenet data")
    else:
        if not args.row or not args.l:
            raise InvalidInputError("generate frenet needs --row and --l, or --input")
        schema = FrenetSchema(row=args.row, l=args.l, m=args.m, n=args.n)

    plane = frenet(schema.to_data())
    return GenerateResultSchema(
        source="frenet",
        type=",".join(str(x) for x in schema.row),
        plane=PlaneSchema.from_plane(plane),
        degree=pluecker_degree(plane),
        width=uniton_width(plane),
    )


def _generate_cpn(args: argparse.Namespace) -> GenerateResultSchema:
    if not args.f:
        raise InvalidInputError("generate cpn needs --f")
    f: List[RationalFunction] = [to_rational(part) for part in split_vector(args.f)]
    h = cpn_frame(f, args.i)
    plane = plane_of_loop(h)
    exponents = h.factors[-1].exponents
    return GenerateResultSchema(
        source="cpn",
        type=",".join(str(e) for e in exponents),
        loop=LoopSchema.from_loop(h),
        plane=PlaneSchema.from_plane(plane),
        degree=pluecker_degree(plane),
        width=uniton_width(plane),
    )


@handle_command_errors
def cmd_generate(args: argparse.Namespace) -> int:
    generators = {
        "canonical": _generate_canonical,
        "frenet": _generate_frenet,
        "cpn": _generate_cpn,
    }
    start = time.time()
    result = generators[args.source](args)
    if args.out:
        _write_artifacts(args.out, result.loop, result.plane)
    clogger.log_performance(
        f"generate {args.source}", time.time() - start, {"type": result.type, "degree": result.degree}
    )
    emit(result)
    return EXIT_OK


@handle_command_errors
def cmd_verify(args: argparse.Namespace) -> int:
    document = load_document(args.input)
    if isinstance(document, LoopSchema):
        report = verify_extended(document.to_loop(), VerifyMode(args.mode))
        result = ExtendedReportSchema.from_report(report)
    else:
        result = CesReportSchema.from_report(check_ces(document_plane(document, args.type)))

    emit(result, args.out)
    if not result.accepted:
        clogger.warning(f"[{MODULE_NAME}] {args.input} rejected")
        return EXIT_REJECTED
    return EXIT_OK


@handle_command_errors
def cmd_degree(args: argparse.Namespace) -> int:
    document = load_document(args.input)
    plane = document_plane(document, args.type)
    result = DegreeReportSchema(degree=pluecker_degree(plane), dim=plane.dim)

    try:
        result.width = uniton_width(plane)
    except StructuralError:
        clogger.info(f"[{MODULE_NAME}] plane is not lambda-invariant; no width")

    if args.schubert:
        uniton_type = document_type(document, args.type)
        result.schubert_count = schubert_count(plane, schubert_test_space(uniton_type), seed=args.seed)

    big_cell = None
    if isinstance(document, U3DataSchema):
        big_cell = document.to_data().loop()
    elif isinstance(document, LoopSchema) and args.type:
        big_cell = document.to_loop()
    if big_cell is not None:
        _, result.x0_degree = x0_degrees(big_cell, document_type(document, args.type))
        result.degree_matches = result.x0_degree == result.degree

    emit(result, args.out)
    return EXIT_OK


def _parse_center(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError as e:
        raise InvalidInputError(f"Cannot parse grid centre {text!r}") from e


@handle_command_errors
def cmd_factor(args: argparse.Namespace) -> int:
    document = load_document(args.input)
    plane = document_plane(document, args.type)
    center = _parse_center(args.center)
    tolerance = args.tolerance if args.tolerance is not None else NUMERIC_TOLERANCE
    meshes = args.h or [0.1]
    for h in meshes:
        if h <= 0:
            raise InvalidInputError(f"Mesh width must be positive, got {h}")

    with clogger.timed("factor", center=str(center), meshes=len(meshes)):
        factorization = uniton_factorize(evaluate_plane(plane, center), tolerance)
        sample = sample_harmonic_map(plane, center, args.half_width, meshes[0], tolerance)
    check_unitary(sample, tolerance)
    if args.csv:
        write_phi_csv(sample, args.csv)

    if len(meshes) > 1:
        reports, ratios = convergence_study(plane, center, args.half_width, meshes)
    else:
        reports, ratios = [harmonic_residual(sample)], []

    result = FactorReportSchema(
        factorization=FactorizationSchema.from_factorization(factorization),
        unitarity_error=sample.unitarity_error(),
        residuals=[ResidualReportSchema.from_report(r) for r in reports],
        ratios=ratios,
        csv=args.csv,
    )
    emit(result, args.out)
    return EXIT_OK


@handle_command_errors
def cmd_deform(args: argparse.Namespace) -> int:
    first = load_document(args.input)
    if not isinstance(first, U3DataSchema):
        raise InvalidInputError(f"{args.input} is not (2,1,0) deformation data")

    if args.witness:
        second = load_document(args.witness)
        if not isinstance(second, U3DataSchema):
            raise InvalidInputError(f"{args.witness} is not (2,1,0) deformation data")
        witness = connectivity_witness(first.to_data(), second.to_data(), args.m)
        emit(WitnessReportSchema.from_report(witness), args.out)
        return EXIT_OK if witness.connected else EXIT_REJECTED

    base_point = to_rational(args.base_point)
    if not base_point.is_constant:
        raise InvalidInputError(f"Base point must be a number, got {args.base_point!r}")
    with clogger.timed("deform", m=args.m):
        path = lowering_path(first.to_data(), args.m, base_point.constant_value())
        report = verify_path(path)
    emit(DeformationReportSchema.from_report(report), args.out)
    return EXIT_OK if report.accepted else EXIT_REJECTED


@handle_command_errors
def cmd_types(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise InvalidInputError(f"n must be positive, got {args.n}")
    types = enumerate_types(args.n)
    result = TypeListSchema(
        n=args.n,
        types=[str(t) for t in types],
        dimensions={str(t): t.filtration_dimension() for t in types},
    )
    emit(result, args.out)
    return EXIT_OK


@handle_command_errors
def cmd_bound(args: argparse.Namespace) -> int:
    emit(BoundSchema(bounds={label: uniton_bound(label) for label in args.groups}), args.out)
    return EXIT_OK


def check_type(text: str) -> str:
    """argparse type hook validating --type early"""
    try:
        UnitonType.parse(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e
    return text
