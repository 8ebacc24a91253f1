"""Diff engine: round-trip property, ground-truth labels, serialization."""

import random
from collections import Counter

import pytest

from coevolve.errors import DiffConflictError
from coevolve.model import AttributeDef, ClassDef, Metamodel
from coevolve.diff.model import (DiffModel, apply_diff, canonical_equal,
                                 compute_diff, diff_from_bytes, diff_to_bytes)

from genutil import random_evolution, signature_of


def test_identical_inputs_yield_empty_diff():
    mm = Metamodel(name="m", classes=(
        ClassDef(name="A", attributes=(AttributeDef("x", "string"),)),))
    assert compute_diff(mm, mm).entries == ()


def test_apply_empty_diff_is_identity():
    mm = Metamodel(name="m", classes=(ClassDef(name="A"),))
    assert apply_diff(mm, DiffModel(entries=())) == mm


def test_round_trip_and_ground_truth_over_500_random_evolutions():
    rng = random.Random(20260823)
    for i in range(500):
        old, new, labels = random_evolution(rng, max_ops=6)
        diff = compute_diff(old, new)
        patched = apply_diff(old, diff)
        assert canonical_equal(patched, new), f"round-trip failed at case {i}"
        assert Counter(signature_of(e) for e in diff.entries) == Counter(labels), \
            f"ground-truth mismatch at case {i}"


def test_diff_serialization_round_trip():
    rng = random.Random(99)
    for _ in range(25):
        old, new, _ = random_evolution(rng)
        diff = compute_diff(old, new)
        assert diff_from_bytes(diff_to_bytes(diff)) == diff


def test_diff_entry_order_is_canonical():
    rng = random.Random(5)
    for _ in range(20):
        old, new, _ = random_evolution(rng)
        a = diff_to_bytes(compute_diff(old, new))
        b = diff_to_bytes(compute_diff(old, new))
        assert a == b


def test_apply_diff_conflict_on_missing_element():
    mm = Metamodel(name="m", classes=(ClassDef(name="A"),))
    other = Metamodel(name="m", classes=(ClassDef(name="B"),
                                         ClassDef(name="C")))
    diff = compute_diff(other, Metamodel(name="m", classes=(ClassDef(name="B"),)))
    with pytest.raises(DiffConflictError):
        apply_diff(mm, diff)  # deletes class C, which mm does not have


def test_compound_diff_is_exactly_the_expected_entry_set(mind_map):
    from coevolve.diff import model as dm
    entries = mind_map.diff.entries
    assert len(entries) == 5
    by_type = {type(e).__name__: [] for e in entries}
    for e in entries:
        by_type[type(e).__name__].append(e)
    added = {e.new.name: e.new for e in by_type["AddedClass"]}
    assert set(added) == {"NamedElement", "LiteratureTopic"}
    assert added["NamedElement"].abstract
    assert not added["LiteratureTopic"].abstract
    (changed,) = by_type["ChangedClass"]
    assert (changed.old.name, changed.updated.name) == ("Topic", "ScientificTopic")
    (moved,) = by_type["ChangedAttribute"]
    assert (moved.oldOwner, moved.old.name, moved.newOwner) == \
        ("Topic", "name", "NamedElement")
    (added_attr,) = by_type["AddedAttribute"]
    assert (added_attr.owner, added_attr.new.name) == ("NamedElement", "duration")
