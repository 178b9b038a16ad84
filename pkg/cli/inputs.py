import json
from pathlib import Path
from typing import Any, Dict, Union

from canonical.uniton_type import UnitonType
from custom_logging.custom_logger import get_logger
from deform.path import TYPE_210
from grassmann.frenet import frenet
from grassmann.loops import model_from_loop, plane_of_loop
from grassmann.model_space import PlaneFamily
from schemas.algebra import LoopSchema, PotentialSchema
from schemas.planes import FrenetSchema, PlaneSchema, U3DataSchema
from utils.exceptions import InvalidInputError

clogger = get_logger()
MODULE_NAME = "CLI_INPUTS"

Document = Union[LoopSchema, PlaneSchema, FrenetSchema, U3DataSchema, PotentialSchema]


def read_json(path: str) -> Dict[str, Any]:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path}: expected a JSON object")
    clogger.debug(f"[{MODULE_NAME}] read {path}")
    return data


def parse_document(data: Dict[str, Any]) -> Document:
    """Dispatch on the distinguishing key of each input format"""
    document_map = {
        "factors": LoopSchema,
        "basis": PlaneSchema,
        "row": FrenetSchema,
        "alpha": U3DataSchema,
        "entries": PotentialSchema,
    }
    for key, schema in document_map.items():
        if key in data:
            return schema(**data)
    raise InvalidInputError(f"Unrecognised input document with keys {sorted(data)}")


def load_document(path: str) -> Document:
    return parse_document(read_json(path))


def document_plane(document: Document, type_text: str = None) -> PlaneFamily:
    """
    The plane a document stands for; a loop is read as H H_+, or as the
    big-cell factor of a model plane when a type is given
    """
    if isinstance(document, PlaneSchema):
        return document.to_plane()
    if isinstance(document, FrenetSchema):
        return frenet(document.to_data())
    if isinstance(document, U3DataSchema):
        return document.to_data().plane()
    if isinstance(document, LoopSchema):
        loop = document.to_loop()
        if type_text:
            return model_from_loop(loop, UnitonType.parse(type_text))
        return plane_of_loop(loop)
    raise InvalidInputError(f"{type(document).__name__} does not describe a plane")


def document_type(document: Document, type_text: str = None) -> UnitonType:
    if type_text:
        return UnitonType.parse(type_text)
    if isinstance(document, FrenetSchema):
        return UnitonType(document.row)
    if isinstance(document, U3DataSchema):
        return TYPE_210
    if isinstance(document, PotentialSchema):
        return document.uniton_type()
    raise InvalidInputError("This input needs --type")
