"""Derivation of a difference schema from a source metamodel.

For each source class ``MC`` three record classes are generated:
``AddedMC`` and ``DeletedMC`` each hold one ``MC`` via an ``element``
containment reference, and ``ChangedMC`` additionally carries an
``updatedElement`` reference back to ``MC``.  Abstract source classes get
all three as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ParseError
from ..model import ClassDef, Metamodel, ReferenceDef
from ..model import io as model_io

KIND_DIFFSCHEMA = "diffschema"

UPDATED_ELEMENT = "updatedElement"


@dataclass(frozen=True)
class DifferenceSchema:
    name: str
    classes: tuple[ClassDef, ...] = ()


def _holder(prefix: str, source: str, extra: tuple[ReferenceDef, ...] = ()) -> ClassDef:
    return ClassDef(
        name=f"{prefix}{source}",
        references=(ReferenceDef(name="element", target=source,
                                 containment=True, lowerBound=1, upperBound=1),
                    *extra))


def derive_difference_schema(source: Metamodel) -> DifferenceSchema:
    """Exactly three generated classes per source class; deterministic in
    the source class order."""
    classes: list[ClassDef] = []
    for c in source.classes:
        classes.append(_holder("Added", c.name))
        classes.append(_holder("Deleted", c.name))
        classes.append(_holder(
            "Changed", c.name,
            extra=(ReferenceDef(name=UPDATED_ELEMENT, target=c.name,
                                containment=False, lowerBound=1, upperBound=1),)))
    return DifferenceSchema(name=f"{source.name}Diff", classes=tuple(classes))


def schema_to_bytes(schema: DifferenceSchema) -> bytes:
    return model_io.dump_document({
        "formatVersion": model_io.FORMAT_VERSION, "kind": KIND_DIFFSCHEMA,
        "name": schema.name,
        "classes": [model_io.classdef_to_doc(c) for c in schema.classes]})


def schema_from_bytes(data: bytes) -> DifferenceSchema:
    doc = model_io.load_document(data, expected_kind=KIND_DIFFSCHEMA)
    if "name" not in doc:
        raise ParseError("missing field 'name' in difference schema")
    return DifferenceSchema(
        name=doc["name"],
        classes=tuple(model_io.classdef_from_doc(c) for c in doc.get("classes", ())))
