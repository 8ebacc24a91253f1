from .matching import Correspondence, match_elements, jaccard, class_similarity
from .model import (
    AddedClass, DeletedClass, ChangedClass,
    AddedAttribute, DeletedAttribute, ChangedAttribute,
    AddedReference, DeletedReference, ChangedReference,
    DiffEntry, DiffModel,
    compute_diff, apply_diff, canonicalize, canonical_equal,
    diff_to_bytes, diff_from_bytes, DIFF_EXTENSION, KIND_DIFF,
)
from .schema import (
    DifferenceSchema, derive_difference_schema,
    schema_to_bytes, schema_from_bytes, KIND_DIFFSCHEMA, UPDATED_ELEMENT,
)
from .catalog import (
    CatalogChange, ClassifiedDiff, classify_changes, classify_entries,
    CATALOG_KINDS,
    ADD_EMPTY_CONCRETE_CLASS, ADD_EMPTY_ABSTRACT_CLASS, ADD_SPECIALIZATION,
    DELETE_CONCRETE_CLASS, RENAME_CLASS, ADD_PROPERTY, DELETE_PROPERTY,
    RENAME_PROPERTY, MOVE_PROPERTY, PULL_UP_PROPERTY, CHANGE_PROPERTY_TYPE,
    UNCLASSIFIED,
)

__all__ = [
    "Correspondence", "match_elements", "jaccard", "class_similarity",
    "AddedClass", "DeletedClass", "ChangedClass",
    "AddedAttribute", "DeletedAttribute", "ChangedAttribute",
    "AddedReference", "DeletedReference", "ChangedReference",
    "DiffEntry", "DiffModel",
    "compute_diff", "apply_diff", "canonicalize", "canonical_equal",
    "diff_to_bytes", "diff_from_bytes", "DIFF_EXTENSION", "KIND_DIFF",
    "DifferenceSchema", "derive_difference_schema",
    "schema_to_bytes", "schema_from_bytes", "KIND_DIFFSCHEMA", "UPDATED_ELEMENT",
    "CatalogChange", "ClassifiedDiff", "classify_changes", "classify_entries",
    "CATALOG_KINDS",
    "ADD_EMPTY_CONCRETE_CLASS", "ADD_EMPTY_ABSTRACT_CLASS", "ADD_SPECIALIZATION",
    "DELETE_CONCRETE_CLASS", "RENAME_CLASS", "ADD_PROPERTY", "DELETE_PROPERTY",
    "RENAME_PROPERTY", "MOVE_PROPERTY", "PULL_UP_PROPERTY", "CHANGE_PROPERTY_TYPE",
    "UNCLASSIFIED",
]
