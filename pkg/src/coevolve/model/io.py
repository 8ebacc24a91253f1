"""Versioned JSON file formats and canonical serialization.

Every document carries ``formatVersion`` ("1.0") and a ``kind`` tag.  The
canonical form is fixed: schema-declared key order, authored array order,
UTF-8, LF line endings, 2-space indent, trailing newline.  ``serialize_model``
is deterministic, so structurally equal models produce byte-identical files.
"""

from __future__ import annotations

import json
from typing import Any

from ..errors import FormatVersionError, ParseError
from . import types as t

FORMAT_VERSION = "1.0"

KIND_METAMODEL = "metamodel"
KIND_GRAPH = "graph"
KIND_TOOLING = "tooling"
KIND_MAPPING = "mapping"
KIND_EMFGEN = "emfgen"

MODEL_KINDS = (KIND_METAMODEL, KIND_GRAPH, KIND_TOOLING, KIND_MAPPING, KIND_EMFGEN)

#: Conventional file extension per model kind.
EXTENSIONS = {
    KIND_METAMODEL: ".mm.json",
    KIND_GRAPH: ".graph.json",
    KIND_TOOLING: ".tool.json",
    KIND_MAPPING: ".map.json",
    KIND_EMFGEN: ".gen.json",
}


def dump_document(doc: dict[str, Any]) -> bytes:
    """Render a document dict in the canonical byte form."""
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def load_document(data: bytes, expected_kind: str | None = None) -> dict[str, Any]:
    try:
        doc = json.loads(data.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}",
                         position=(exc.lineno, exc.colno)) from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"document is not UTF-8: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    version = doc.get("formatVersion")
    if version != FORMAT_VERSION:
        raise FormatVersionError(f"unknown formatVersion {version!r} (expected '{FORMAT_VERSION}')")
    if expected_kind is not None and doc.get("kind") != expected_kind:
        raise ParseError(f"expected kind '{expected_kind}', found {doc.get('kind')!r}")
    return doc


def _req(obj: dict, key: str, where: str):
    if key not in obj:
        raise ParseError(f"missing field '{key}' in {where}")
    return obj[key]


# -- metamodel ---------------------------------------------------------------

def attribute_to_doc(a: t.AttributeDef) -> dict:
    doc: dict[str, Any] = {}
    if a.id is not None:
        doc["id"] = a.id
    doc["name"] = a.name
    doc["typeName"] = a.typeName
    return doc


def attribute_from_doc(doc: dict) -> t.AttributeDef:
    return t.AttributeDef(id=doc.get("id"),
                          name=_req(doc, "name", "attribute"),
                          typeName=_req(doc, "typeName", "attribute"))


def reference_to_doc(r: t.ReferenceDef) -> dict:
    doc: dict[str, Any] = {}
    if r.id is not None:
        doc["id"] = r.id
    doc.update(name=r.name, target=r.target, containment=r.containment,
               lowerBound=r.lowerBound, upperBound=r.upperBound)
    return doc


def reference_from_doc(doc: dict) -> t.ReferenceDef:
    return t.ReferenceDef(id=doc.get("id"),
                          name=_req(doc, "name", "reference"),
                          target=_req(doc, "target", "reference"),
                          containment=bool(doc.get("containment", False)),
                          lowerBound=int(doc.get("lowerBound", 0)),
                          upperBound=doc.get("upperBound", 1))


def classdef_to_doc(c: t.ClassDef) -> dict:
    doc: dict[str, Any] = {}
    if c.id is not None:
        doc["id"] = c.id
    doc["name"] = c.name
    doc["abstract"] = c.abstract
    doc["superTypes"] = list(c.superTypes)
    doc["attributes"] = [attribute_to_doc(a) for a in c.attributes]
    doc["references"] = [reference_to_doc(r) for r in c.references]
    return doc


def classdef_from_doc(doc: dict) -> t.ClassDef:
    return t.ClassDef(
        id=doc.get("id"),
        name=_req(doc, "name", "class"),
        abstract=bool(doc.get("abstract", False)),
        superTypes=tuple(doc.get("superTypes", ())),
        attributes=tuple(attribute_from_doc(a) for a in doc.get("attributes", ())),
        references=tuple(reference_from_doc(r) for r in doc.get("references", ())))


def metamodel_to_doc(m: t.Metamodel) -> dict:
    return {"formatVersion": FORMAT_VERSION, "kind": KIND_METAMODEL,
            "name": m.name, "classes": [classdef_to_doc(c) for c in m.classes]}


def metamodel_from_doc(doc: dict) -> t.Metamodel:
    return t.Metamodel(name=_req(doc, "name", "metamodel"),
                       classes=tuple(classdef_from_doc(c)
                                     for c in doc.get("classes", ())))


# -- graph -------------------------------------------------------------------

def graph_to_doc(g: t.GraphModel) -> dict:
    return {
        "formatVersion": FORMAT_VERSION, "kind": KIND_GRAPH,
        "figures": [{"name": f.name, "kind": f.kind} for f in g.figures],
        "nodes": [{"name": n.name, "figure": n.figure} for n in g.nodes],
        "connections": [{"name": c.name, "figure": c.figure} for c in g.connections],
        "diagramLabels": [{"name": l.name, "figure": l.figure} for l in g.diagramLabels],
    }


def graph_from_doc(doc: dict) -> t.GraphModel:
    return t.GraphModel(
        figures=tuple(t.FigureDef(_req(f, "name", "figure"), _req(f, "kind", "figure"))
                      for f in doc.get("figures", ())),
        nodes=tuple(t.NodeDef(_req(n, "name", "node"), _req(n, "figure", "node"))
                    for n in doc.get("nodes", ())),
        connections=tuple(t.ConnectionDef(_req(c, "name", "connection"),
                                          _req(c, "figure", "connection"))
                          for c in doc.get("connections", ())),
        diagramLabels=tuple(t.LabelDef(_req(l, "name", "diagram label"),
                                       _req(l, "figure", "diagram label"))
                            for l in doc.get("diagramLabels", ())))


# -- tooling -----------------------------------------------------------------

def tooling_to_doc(m: t.ToolingModel) -> dict:
    return {
        "formatVersion": FORMAT_VERSION, "kind": KIND_TOOLING,
        "palette": [{"name": g.name,
                     "tools": [{"title": tl.title, "description": tl.description}
                               for tl in g.tools]}
                    for g in m.palette],
    }


def tooling_from_doc(doc: dict) -> t.ToolingModel:
    return t.ToolingModel(palette=tuple(
        t.ToolGroup(name=_req(g, "name", "tool group"),
                    tools=tuple(t.CreationTool(_req(tl, "title", "tool"),
                                               tl.get("description", ""))
                                for tl in g.get("tools", ())))
        for g in doc.get("palette", ())))


# -- mapping -----------------------------------------------------------------

def featureref_to_doc(f: t.FeatureRef) -> dict:
    return {"className": f.className, "featureName": f.featureName,
            "recordedTypeName": f.recordedTypeName}


def featureref_from_doc(doc: dict) -> t.FeatureRef:
    return t.FeatureRef(className=_req(doc, "className", "feature ref"),
                        featureName=_req(doc, "featureName", "feature ref"),
                        recordedTypeName=_req(doc, "recordedTypeName", "feature ref"))


def _flm_to_doc(flm: t.FeatureLabelMapping) -> dict:
    return {"features": [featureref_to_doc(f) for f in flm.features],
            "diagramLabel": flm.diagramLabel}


def _flm_from_doc(doc: dict) -> t.FeatureLabelMapping:
    return t.FeatureLabelMapping(
        features=tuple(featureref_from_doc(f) for f in doc.get("features", ())),
        diagramLabel=_req(doc, "diagramLabel", "feature label mapping"))


def mapping_to_doc(m: t.MappingModel) -> dict:
    return {
        "formatVersion": FORMAT_VERSION, "kind": KIND_MAPPING,
        "topNodeReferences": [
            {"containmentFeature": featureref_to_doc(tnr.containmentFeature),
             "ownedChild": {
                 "domainMetaElement": tnr.ownedChild.domainMetaElement,
                 "tool": tnr.ownedChild.tool,
                 "diagramNode": tnr.ownedChild.diagramNode,
                 "labelMappings": [_flm_to_doc(f) for f in tnr.ownedChild.labelMappings]}}
            for tnr in m.topNodeReferences],
        "linkMappings": [
            {"domainMetaElement": lm.domainMetaElement,
             "tool": lm.tool,
             "diagramLink": lm.diagramLink,
             "sourceFeature": featureref_to_doc(lm.sourceFeature),
             "targetFeature": featureref_to_doc(lm.targetFeature)}
            for lm in m.linkMappings],
    }


def mapping_from_doc(doc: dict) -> t.MappingModel:
    tnrs = []
    for d in doc.get("topNodeReferences", ()):
        child = _req(d, "ownedChild", "top node reference")
        tnrs.append(t.TopNodeReference(
            containmentFeature=featureref_from_doc(
                _req(d, "containmentFeature", "top node reference")),
            ownedChild=t.NodeMapping(
                domainMetaElement=_req(child, "domainMetaElement", "node mapping"),
                tool=_req(child, "tool", "node mapping"),
                diagramNode=_req(child, "diagramNode", "node mapping"),
                labelMappings=tuple(_flm_from_doc(f)
                                    for f in child.get("labelMappings", ())))))
    links = tuple(
        t.LinkMapping(domainMetaElement=_req(d, "domainMetaElement", "link mapping"),
                      tool=_req(d, "tool", "link mapping"),
                      diagramLink=_req(d, "diagramLink", "link mapping"),
                      sourceFeature=featureref_from_doc(_req(d, "sourceFeature", "link mapping")),
                      targetFeature=featureref_from_doc(_req(d, "targetFeature", "link mapping")))
        for d in doc.get("linkMappings", ()))
    return t.MappingModel(topNodeReferences=tuple(tnrs), linkMappings=links)


# -- emfgen ------------------------------------------------------------------

def emfgen_to_doc(m: t.EmfGenModel) -> dict:
    return {
        "formatVersion": FORMAT_VERSION, "kind": KIND_EMFGEN,
        "packagePrefix": m.packagePrefix,
        "genClasses": [{"className": g.className, "genFeatures": list(g.genFeatures)}
                       for g in m.genClasses],
    }


def emfgen_from_doc(doc: dict) -> t.EmfGenModel:
    return t.EmfGenModel(
        packagePrefix=doc.get("packagePrefix", ""),
        genClasses=tuple(t.GenClass(className=_req(g, "className", "gen class"),
                                    genFeatures=tuple(g.get("genFeatures", ())))
                         for g in doc.get("genClasses", ())))


# -- dispatch ----------------------------------------------------------------

_TO_DOC = {
    t.Metamodel: metamodel_to_doc,
    t.GraphModel: graph_to_doc,
    t.ToolingModel: tooling_to_doc,
    t.MappingModel: mapping_to_doc,
    t.EmfGenModel: emfgen_to_doc,
}

_FROM_DOC = {
    KIND_METAMODEL: metamodel_from_doc,
    KIND_GRAPH: graph_from_doc,
    KIND_TOOLING: tooling_from_doc,
    KIND_MAPPING: mapping_from_doc,
    KIND_EMFGEN: emfgen_from_doc,
}


def parse_model(data: bytes, kind: str):
    """Parse a versioned document into the typed model for ``kind``.

    Per-model invariants are checked; violations raise
    :class:`~coevolve.errors.InvariantError` naming the offending element.
    """
    if kind not in _FROM_DOC:
        raise ParseError(f"unknown model kind '{kind}'")
    doc = load_document(data, expected_kind=kind)
    model = _FROM_DOC[kind](doc)
    model.check()
    return model


def serialize_model(model) -> bytes:
    """Canonical byte output; ``parse_model(serialize_model(m)) == m``."""
    to_doc = _TO_DOC.get(type(model))
    if to_doc is None:
        raise TypeError(f"not a serializable model: {type(model).__name__}")
    return dump_document(to_doc(model))


def kind_of(model) -> str:
    for klass, kind in ((t.Metamodel, KIND_METAMODEL), (t.GraphModel, KIND_GRAPH),
                        (t.ToolingModel, KIND_TOOLING), (t.MappingModel, KIND_MAPPING),
                        (t.EmfGenModel, KIND_EMFGEN)):
        if isinstance(model, klass):
            return kind
    raise TypeError(f"not a model: {type(model).__name__}")
