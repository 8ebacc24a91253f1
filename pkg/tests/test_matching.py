"""Element matching: ids beat names, rename detection, thresholds."""

from coevolve.model import AttributeDef, ClassDef, Metamodel, ReferenceDef
from coevolve.diff.matching import (RENAME_SIMILARITY_THRESHOLD, jaccard,
                                    match_elements)
from coevolve.diff.model import compute_diff
from coevolve.diff import model as dm


def _mm(*classes):
    return Metamodel(name="m", classes=tuple(classes))


def test_jaccard():
    assert jaccard(set(), set()) == 1.0
    assert jaccard({"a"}, set()) == 0.0
    assert jaccard({"a", "b"}, {"b", "c"}) == 1 / 3


def test_stable_ids_beat_names():
    old = _mm(ClassDef(name="A", id="k1"), ClassDef(name="B", id="k2"))
    new = _mm(ClassDef(name="B", id="k1"), ClassDef(name="A", id="k2"))
    corr = match_elements(old, new)
    assert corr.map_class("A") == "B"
    assert corr.map_class("B") == "A"


def test_rename_detected_by_shared_features():
    old = _mm(ClassDef(name="Topic", attributes=(
        AttributeDef("name", "string"), AttributeDef("weight", "int"))))
    new = _mm(ClassDef(name="Subject", attributes=(
        AttributeDef("name", "string"), AttributeDef("weight", "int"))))
    diff = compute_diff(old, new)
    assert [type(e).__name__ for e in diff.entries] == ["ChangedClass"]


def test_dissimilar_classes_not_matched():
    old = _mm(ClassDef(name="Topic", attributes=(AttributeDef("name", "string"),)))
    new = _mm(ClassDef(name="Wheel", attributes=(AttributeDef("radius", "float"),)))
    diff = compute_diff(old, new)
    # the added class arrives as a shell plus one entry per feature; the
    # deleted class carries its features implicitly
    assert sorted(type(e).__name__ for e in diff.entries) == \
        ["AddedAttribute", "AddedClass", "DeletedClass"]


def test_threshold_is_half():
    assert RENAME_SIMILARITY_THRESHOLD == 0.5


def test_feature_move_detected_by_id_across_classes():
    old = _mm(ClassDef(name="A", attributes=(AttributeDef("x", "int", id="f1"),)),
              ClassDef(name="B"))
    new = _mm(ClassDef(name="A"),
              ClassDef(name="B", attributes=(AttributeDef("y", "int", id="f1"),)))
    diff = compute_diff(old, new)
    (entry,) = diff.entries
    assert isinstance(entry, dm.ChangedAttribute)
    assert (entry.oldOwner, entry.old.name, entry.newOwner, entry.updated.name) \
        == ("A", "x", "B", "y")


def test_within_class_attribute_rename_requires_same_type():
    old = _mm(ClassDef(name="A", attributes=(AttributeDef("x", "int"),)))
    new = _mm(ClassDef(name="A", attributes=(AttributeDef("y", "string"),)))
    diff = compute_diff(old, new)
    assert sorted(type(e).__name__ for e in diff.entries) == \
        ["AddedAttribute", "DeletedAttribute"]


def test_reference_targets_compared_through_correspondence():
    # renaming a target class must not surface as a reference change
    old = _mm(ClassDef(name="A", attributes=(AttributeDef("name", "string"),)),
              ClassDef(name="H", references=(ReferenceDef("items", "A"),)))
    new = _mm(ClassDef(name="Z", attributes=(AttributeDef("name", "string"),)),
              ClassDef(name="H", references=(ReferenceDef("items", "Z"),)))
    diff = compute_diff(old, new)
    assert [type(e).__name__ for e in diff.entries] == ["ChangedClass"]
