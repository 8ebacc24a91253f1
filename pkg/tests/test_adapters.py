"""Adapter behavior: pass-through, identity, determinism, strategies."""

import random

from coevolve.adapt import BEST_EFFORT, MINIMALISTIC, adapt_all, adapt_emfgen
from coevolve.diff.model import DiffModel, compute_diff
from coevolve.model import io as model_io
from coevolve import fixtures

from genutil import random_evolution


def _editor_for(mm):
    # a canvas-less metamodel still yields a usable (if gap-ridden) set
    from coevolve.model import EditorModelSet, EmfGenModel, GenClass
    return EditorModelSet(domain=mm, emfgen=EmfGenModel(
        packagePrefix="p",
        genClasses=tuple(GenClass(c.name, c.feature_names) for c in mm.classes)))


def test_graph_passes_through_untouched_on_fixtures(all_scenarios):
    for sc in all_scenarios:
        for strategy in (MINIMALISTIC, BEST_EFFORT):
            plan = adapt_all(sc.diff, sc.old, strategy)
            assert model_io.serialize_model(plan.outputs.graph) == \
                model_io.serialize_model(sc.old.graph), sc.name


def test_graph_passes_through_on_100_random_adaptations():
    rng = random.Random(42)
    for _ in range(100):
        old, new, _ = random_evolution(rng)
        mset = _editor_for(old)
        plan = adapt_all(compute_diff(old, new), mset, BEST_EFFORT)
        assert model_io.serialize_model(plan.outputs.graph) == \
            model_io.serialize_model(mset.graph)


def test_empty_diff_makes_every_adapter_the_identity(all_scenarios):
    empty = DiffModel(entries=())
    for sc in all_scenarios:
        for strategy in (MINIMALISTIC, BEST_EFFORT):
            plan = adapt_all(empty, sc.old, strategy)
            for field in ("domain", "graph", "tooling", "mapping", "emfgen"):
                assert model_io.serialize_model(getattr(plan.outputs, field)) \
                    == model_io.serialize_model(getattr(sc.old, field))
            assert plan.firedRules == ()


def test_adaptation_is_deterministic(all_scenarios):
    for sc in all_scenarios:
        a = adapt_all(sc.diff, sc.old, BEST_EFFORT)
        b = adapt_all(sc.diff, sc.old, BEST_EFFORT)
        assert a == b


def test_outputs_parse_and_satisfy_model_invariants(all_scenarios):
    for sc in all_scenarios:
        for strategy in (MINIMALISTIC, BEST_EFFORT):
            out = adapt_all(sc.diff, sc.old, strategy).outputs
            for model in (out.domain, out.graph, out.tooling, out.mapping,
                          out.emfgen):
                data = model_io.serialize_model(model)
                assert model_io.parse_model(data, model_io.kind_of(model)) == model


def test_emfgen_adapter_syncs_names(all_scenarios):
    for sc in all_scenarios:
        synced = adapt_emfgen(sc.diff, sc.old.emfgen)
        domain_view = {(c.name, c.feature_names) for c in sc.new_domain.classes}
        gen_view = {(g.className, g.genFeatures) for g in synced.genClasses}
        assert {n for n, _ in domain_view} == {n for n, _ in gen_view}
        assert {(n, frozenset(f)) for n, f in domain_view} == \
            {(n, frozenset(f)) for n, f in gen_view}, sc.name


def test_best_effort_fires_a_superset_of_minimalistic_rules(all_scenarios):
    for sc in all_scenarios:
        minimal = adapt_all(sc.diff, sc.old, MINIMALISTIC)
        best = adapt_all(sc.diff, sc.old, BEST_EFFORT)
        minimal_rules = [r for r, _ in minimal.firedRules]
        best_rules = [r for r, _ in best.firedRules]
        for rule in minimal_rules:
            assert best_rules.count(rule) >= minimal_rules.count(rule), sc.name


def test_replication_creates_tool_and_mapping(mind_map):
    plan = adapt_all(mind_map.diff, mind_map.old, BEST_EFFORT)
    tool = plan.outputs.tooling.tool_titled("LiteratureTopic")
    assert tool is not None
    assert tool.description == "Create new LiteratureTopic"
    tnr = next(t for t in plan.outputs.mapping.topNodeReferences
               if t.ownedChild.domainMetaElement == "LiteratureTopic")
    sibling = next(t for t in plan.outputs.mapping.topNodeReferences
                   if t.ownedChild.domainMetaElement == "ScientificTopic")
    assert tnr.ownedChild.diagramNode == sibling.ownedChild.diagramNode
    assert tnr.ownedChild.labelMappings[0].diagramLabel == \
        sibling.ownedChild.labelMappings[0].diagramLabel


def test_minimalistic_does_not_replicate(mind_map):
    plan = adapt_all(mind_map.diff, mind_map.old, MINIMALISTIC)
    assert plan.outputs.tooling.tool_titled("LiteratureTopic") is None
    assert all(t.ownedChild.domainMetaElement != "LiteratureTopic"
               for t in plan.outputs.mapping.topNodeReferences)


def test_rename_refreshes_tool_titles(all_scenarios):
    sc = next(s for s in all_scenarios if s.name == "rename-class")
    plan = adapt_all(sc.diff, sc.old, MINIMALISTIC)
    titles = [t.title for t in plan.outputs.tooling.tools]
    assert "Z" in titles and "A" not in titles


def test_deleted_class_tool_and_mapping_removed(all_scenarios):
    sc = next(s for s in all_scenarios if s.name == "delete-concrete-class")
    plan = adapt_all(sc.diff, sc.old, MINIMALISTIC)
    assert plan.outputs.tooling.tool_titled("B") is None
    assert all(t.ownedChild.domainMetaElement != "B"
               for t in plan.outputs.mapping.topNodeReferences)
