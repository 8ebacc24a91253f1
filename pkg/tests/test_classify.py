"""Change classification against the fixed catalog."""

from coevolve import fixtures
from coevolve.diff import catalog as cat
from coevolve.diff.model import compute_diff
from coevolve.model import AttributeDef, ClassDef, Metamodel


def _classify(old, new):
    return cat.classify_changes(compute_diff(old, new), old, new)


def _kinds(scenario_name):
    sc = fixtures.scenario(scenario_name)
    return [c.kind for c in
            cat.classify_changes(sc.diff, sc.old.domain, sc.new_domain)]


def test_each_catalog_fixture_classifies_to_its_kind():
    expected = {
        "add-empty-concrete-class": cat.ADD_EMPTY_CONCRETE_CLASS,
        "add-empty-abstract-class": cat.ADD_EMPTY_ABSTRACT_CLASS,
        "add-specialization": cat.ADD_SPECIALIZATION,
        "delete-concrete-class": cat.DELETE_CONCRETE_CLASS,
        "rename-class": cat.RENAME_CLASS,
        "add-property": cat.ADD_PROPERTY,
        "delete-property": cat.DELETE_PROPERTY,
        "rename-property": cat.RENAME_PROPERTY,
        "move-property": cat.MOVE_PROPERTY,
        "pull-up-property": cat.PULL_UP_PROPERTY,
        "change-property-type": cat.CHANGE_PROPERTY_TYPE,
    }
    for name, kind in expected.items():
        assert _kinds(name) == [kind], name


def test_compound_pattern_shares_role_bindings(mind_map):
    classified = cat.classify_entries(mind_map.diff, mind_map.old.domain,
                                      mind_map.new_domain)
    ((_, spec),) = classified.of_kind(cat.ADD_SPECIALIZATION)
    ((_, pull),) = classified.of_kind(cat.PULL_UP_PROPERTY)
    assert spec.bindings == pull.bindings
    assert spec.binding_map == {"s1": "LiteratureTopic", "s2": "NamedElement",
                                "s3": "Topic", "s4": "name", "s5": "name"}


def test_abstractness_toggle_is_unclassified():
    old = Metamodel(name="m", classes=(ClassDef(name="A", abstract=False),))
    new = Metamodel(name="m", classes=(ClassDef(name="A", abstract=True),))
    (change,) = _classify(old, new)
    assert change.kind == cat.UNCLASSIFIED


def test_abstract_class_deletion_is_unclassified():
    old = Metamodel(name="m", classes=(
        ClassDef(name="A", abstract=True,
                 attributes=(AttributeDef("x", "int"),)),
        ClassDef(name="B")))
    new = Metamodel(name="m", classes=(ClassDef(name="B"),))
    (change,) = _classify(old, new)
    assert change.kind == cat.UNCLASSIFIED


def test_pull_up_vs_move_decided_by_new_inheritance():
    base = (ClassDef(name="S", abstract=True),)
    old = Metamodel(name="m", classes=(
        *base, ClassDef(name="A", superTypes=("S",),
                        attributes=(AttributeDef("x", "int"),))))
    pulled = Metamodel(name="m", classes=(
        ClassDef(name="S", abstract=True, attributes=(AttributeDef("x", "int"),)),
        ClassDef(name="A", superTypes=("S",))))
    (change,) = _classify(old, pulled)
    assert change.kind == cat.PULL_UP_PROPERTY

    old2 = Metamodel(name="m", classes=(
        ClassDef(name="A", attributes=(AttributeDef("x", "int"),)),
        ClassDef(name="B")))
    moved = Metamodel(name="m", classes=(
        ClassDef(name="A"),
        ClassDef(name="B", attributes=(AttributeDef("x", "int"),))))
    (change,) = _classify(old2, moved)
    assert change.kind == cat.MOVE_PROPERTY


def test_every_entry_gets_exactly_one_classification(all_scenarios):
    for sc in all_scenarios:
        classified = cat.classify_entries(sc.diff, sc.old.domain, sc.new_domain)
        assert len(classified.entries) == len(sc.diff.entries)
        for _, change in classified.entries:
            assert change.kind in (*cat.CATALOG_KINDS, cat.UNCLASSIFIED)
