"""Difference schema derivation: 3 classes per source class, structure of
the Changed holders, serialization."""

import random

from coevolve.diff.schema import (UPDATED_ELEMENT, derive_difference_schema,
                                  schema_from_bytes, schema_to_bytes)
from coevolve.model import AttributeDef, ClassDef, Metamodel, ReferenceDef

from genutil import random_metamodel


def test_exactly_three_classes_per_source_class():
    rng = random.Random(11)
    for n in (1, 2, 5, 17, 50):
        mm = random_metamodel(rng, n_classes=n)
        schema = derive_difference_schema(mm)
        assert len(schema.classes) == 3 * n
        assert schema.name == mm.name + "Diff"


def test_changed_holders_carry_updated_element():
    rng = random.Random(12)
    for n in range(1, 51):
        mm = random_metamodel(rng, n_classes=n)
        schema = derive_difference_schema(mm)
        for c in schema.classes:
            refs = {r.name: r for r in c.references}
            assert refs["element"].containment
            if c.name.startswith("Changed"):
                assert UPDATED_ELEMENT in refs
                assert not refs[UPDATED_ELEMENT].containment
            else:
                assert UPDATED_ELEMENT not in refs


def test_meta_schema_application_yields_expected_names():
    # applying the derivation to the modeling-language meta-schema itself
    meta = Metamodel(name="Ecore", classes=(
        ClassDef(name="EClass", attributes=(AttributeDef("name", "string"),)),
        ClassDef(name="EAttribute", attributes=(AttributeDef("name", "string"),)),
        ClassDef(name="EReference", references=(
            ReferenceDef("eType", "EClass"),)),
    ))
    names = {c.name for c in derive_difference_schema(meta).classes}
    assert {"AddedEClass", "DeletedEClass", "ChangedEClass",
            "AddedEAttribute", "ChangedEAttribute"} <= names


def test_schema_serialization_round_trip():
    mm = random_metamodel(random.Random(13), n_classes=6)
    schema = derive_difference_schema(mm)
    assert schema_from_bytes(schema_to_bytes(schema)) == schema


def test_derivation_is_deterministic_in_source_order():
    mm = random_metamodel(random.Random(14), n_classes=4)
    assert schema_to_bytes(derive_difference_schema(mm)) == \
        schema_to_bytes(derive_difference_schema(mm))
