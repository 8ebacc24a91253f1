"""Acceptance gate: one test (and one pass/fail line) per criterion."""

import random
from collections import Counter

from coevolve import fixtures
from coevolve.adapt import BEST_EFFORT, MINIMALISTIC, adapt_all
from coevolve.diff.model import (DiffModel, apply_diff, canonical_equal,
                                 compute_diff)
from coevolve.diff.schema import UPDATED_ELEMENT, derive_difference_schema
from coevolve.model import (AttributeDef, ClassDef, Metamodel, ReferenceDef)
from coevolve.model import io as model_io
from coevolve.soundness import EXPECTED, VERDICT_BROKEN, assert_matrix, validate

from genutil import random_evolution, random_metamodel, signature_of


def _before_after(sc):
    before = validate(sc.before, trace=sc.diff)
    after = validate(adapt_all(sc.diff, sc.old, BEST_EFFORT).outputs,
                     trace=sc.diff)
    return before, after


def test_criterion_1_verdict_matrix_reproduction():
    """All 11 catalog rows: before/after verdicts and levels, cell-for-cell."""
    for name in EXPECTED:
        before, after = _before_after(fixtures.scenario(name))
        assert_matrix(name, before, after)  # raises with every deviating cell
    print("CRITERION 1 PASS: 11 rows x (4 cells + level), before and after")


def test_criterion_2_compound_scenario():
    """Exact 5-entry diff; replicated tool and mapping; no broken model."""
    sc = fixtures.scenario("mind-map")
    entries = Counter(signature_of(e) for e in sc.diff.entries)
    assert entries == Counter([
        ("ChangedClass", "Topic", "ScientificTopic"),
        ("AddedClass", "NamedElement"),
        ("AddedClass", "LiteratureTopic"),
        ("ChangedAttribute", "Topic", "name", "NamedElement", "name"),
        ("AddedAttribute", "NamedElement", "duration"),
    ])
    abstracts = {e.new.name: e.new.abstract for e in sc.diff.entries
                 if signature_of(e)[0] == "AddedClass"}
    assert abstracts == {"NamedElement": True, "LiteratureTopic": False}

    outputs = adapt_all(sc.diff, sc.old, BEST_EFFORT).outputs
    tool = outputs.tooling.tool_titled("LiteratureTopic")
    assert tool is not None and tool.description == "Create new LiteratureTopic"
    tnr = next(t for t in outputs.mapping.topNodeReferences
               if t.ownedChild.domainMetaElement == "LiteratureTopic")
    sibling = next(t for t in outputs.mapping.topNodeReferences
                   if t.ownedChild.domainMetaElement == "ScientificTopic")
    assert tnr.ownedChild.diagramNode == sibling.ownedChild.diagramNode
    assert {f.diagramLabel for f in tnr.ownedChild.labelMappings} == \
        {f.diagramLabel for f in sibling.ownedChild.labelMappings}

    report = validate(outputs, trace=sc.diff)
    assert VERDICT_BROKEN not in report.verdicts.values()
    print("CRITERION 2 PASS: compound scenario diff, replication, no broken model")


def test_criterion_3_diff_round_trip_property():
    """>= 500 random evolutions: patch round-trip + ground-truth labels."""
    rng = random.Random(1618)
    for i in range(500):
        old, new, labels = random_evolution(rng, max_ops=6)
        diff = compute_diff(old, new)
        assert canonical_equal(apply_diff(old, diff), new), i
        assert Counter(signature_of(e) for e in diff.entries) == Counter(labels), i
    print("CRITERION 3 PASS: 500 random evolutions round-trip with exact labels")


def test_criterion_4_difference_schema_property():
    """3N classes for N in 1..50; ChangedMC carries updatedElement; the
    modeling meta-schema derives the expected class names."""
    rng = random.Random(271)
    for n in range(1, 51):
        mm = random_metamodel(rng, n_classes=n)
        schema = derive_difference_schema(mm)
        assert len(schema.classes) == 3 * n
        for c in schema.classes:
            if c.name.startswith("Changed"):
                assert any(r.name == UPDATED_ELEMENT for r in c.references)
    meta = Metamodel(name="Ecore", classes=(
        ClassDef(name="EClass", attributes=(AttributeDef("name", "string"),)),
        ClassDef(name="EAttribute", attributes=(AttributeDef("name", "string"),)),
        ClassDef(name="EReference", references=(ReferenceDef("eType", "EClass"),)),
    ))
    names = {c.name for c in derive_difference_schema(meta).classes}
    assert {"AddedEClass", "DeletedEClass", "ChangedEClass",
            "AddedEAttribute", "ChangedEAttribute"} <= names
    print("CRITERION 4 PASS: difference schema structure over N=1..50 and the meta-schema")


def test_criterion_5_graph_pass_through():
    """Fixtures and 100 random adaptations leave the graph byte-identical."""
    for sc in fixtures.all_scenarios():
        for strategy in (MINIMALISTIC, BEST_EFFORT):
            out = adapt_all(sc.diff, sc.old, strategy).outputs
            assert model_io.serialize_model(out.graph) == \
                model_io.serialize_model(sc.old.graph)
    from dataclasses import replace

    rng = random.Random(55)
    graph = fixtures.scenario("mind-map").old.graph  # any non-empty graph
    for _ in range(100):
        old, new, _ = random_evolution(rng)
        mset = replace(fixtures.scenario("mind-map").old, domain=old, graph=graph)
        out = adapt_all(compute_diff(old, new), mset, BEST_EFFORT).outputs
        assert model_io.serialize_model(out.graph) == \
            model_io.serialize_model(graph)
    print("CRITERION 5 PASS: graph model byte-identical through every adaptation")


def test_criterion_6_identity_and_determinism():
    """Empty diff is the identity; re-runs are byte-identical."""
    empty = DiffModel(entries=())
    for sc in fixtures.all_scenarios():
        for strategy in (MINIMALISTIC, BEST_EFFORT):
            out = adapt_all(empty, sc.old, strategy).outputs
            for field in ("domain", "graph", "tooling", "mapping", "emfgen"):
                assert model_io.serialize_model(getattr(out, field)) == \
                    model_io.serialize_model(getattr(sc.old, field))
            a = adapt_all(sc.diff, sc.old, strategy)
            b = adapt_all(sc.diff, sc.old, strategy)
            assert a.report_bytes() == b.report_bytes()
            for field in ("domain", "graph", "tooling", "mapping", "emfgen"):
                assert model_io.serialize_model(getattr(a.outputs, field)) == \
                    model_io.serialize_model(getattr(b.outputs, field))
    print("CRITERION 6 PASS: empty diff is identity; pipelines are deterministic")


def test_criterion_7_strategy_comparison():
    """Minimalistic: level 2, only the generator config touched;
    best-effort: level 3."""
    sc = fixtures.scenario("add-class-as-specialization")
    minimal = adapt_all(sc.diff, sc.old, MINIMALISTIC)
    assert validate(minimal.outputs, trace=sc.diff).level == 2
    assert minimal.outputs.emfgen != sc.old.emfgen
    for field in ("graph", "tooling", "mapping"):
        assert model_io.serialize_model(getattr(minimal.outputs, field)) == \
            model_io.serialize_model(getattr(sc.old, field))
    best = adapt_all(sc.diff, sc.old, BEST_EFFORT)
    assert validate(best.outputs, trace=sc.diff).level == 3
    print("CRITERION 7 PASS: minimalistic level 2 (emfgen only), best-effort level 3")
