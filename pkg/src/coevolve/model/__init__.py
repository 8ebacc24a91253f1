from .types import (
    PRIMITIVE_TYPES, UNBOUNDED, FIGURE_KINDS,
    AttributeDef, ReferenceDef, ClassDef, Metamodel,
    FigureDef, NodeDef, ConnectionDef, LabelDef, GraphModel,
    CreationTool, ToolGroup, ToolingModel,
    FeatureRef, FeatureLabelMapping, NodeMapping, TopNodeReference,
    LinkMapping, MappingModel,
    GenClass, EmfGenModel, EditorModelSet,
)
from .io import (
    FORMAT_VERSION, MODEL_KINDS, EXTENSIONS,
    parse_model, serialize_model, kind_of,
)
from .resolve import Link, resolve, dangling, resolve_feature_ref, feature_type_name

__all__ = [
    "PRIMITIVE_TYPES", "UNBOUNDED", "FIGURE_KINDS",
    "AttributeDef", "ReferenceDef", "ClassDef", "Metamodel",
    "FigureDef", "NodeDef", "ConnectionDef", "LabelDef", "GraphModel",
    "CreationTool", "ToolGroup", "ToolingModel",
    "FeatureRef", "FeatureLabelMapping", "NodeMapping", "TopNodeReference",
    "LinkMapping", "MappingModel",
    "GenClass", "EmfGenModel", "EditorModelSet",
    "FORMAT_VERSION", "MODEL_KINDS", "EXTENSIONS",
    "parse_model", "serialize_model", "kind_of",
    "Link", "resolve", "dangling", "resolve_feature_ref", "feature_type_name",
]
