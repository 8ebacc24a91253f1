"""Mapping adapter: rewrites name-based references for renames and pull-ups,
drops mappings for deleted or no-longer-displayable elements, extends label
mappings for added properties, and (best-effort) replicates a sibling's top
node reference for a class added as a specialization.

Runs after the tooling adapter: the replicated node mapping must reference
the freshly created tool title.
"""

from __future__ import annotations

from dataclasses import replace

from ..model import (FeatureLabelMapping, FeatureRef, LinkMapping, MappingModel,
                     Metamodel, NodeMapping, ToolingModel, TopNodeReference)
from ..model.resolve import feature_type_name, resolve_feature_ref
from ..diff import model as dm
from ..diff import catalog as cat
from ..diff.model import apply_diff
from .replicate import rename_rewrites, replace_whole_word, specialization_plans
from .strategy import BEST_EFFORT, check_strategy
from .tooling import tool_bindings

RULE_ADDED_SPECIALIZATION_NODE = "AddedSpecializationClassToNodeMapping"
RULE_RENAMED_ELEMENT_MAPPING = "RenamedElementToMapping"
RULE_PULLED_UP_FEATURE = "PulledUpPropertyToFeatureLabelMapping"
RULE_DELETED_CLASS_MAPPING = "DeletedClassToMapping"
RULE_REMOVED_LABEL_MAPPING = "RemovedFeatureLabelMapping"
RULE_ADDED_PROPERTY_LABEL = "AddedPropertyToFeatureLabelMapping"


def adapt_mapping(diff: dm.DiffModel, mapping: MappingModel,
                  tooling_after: ToolingModel, strategy: str,
                  domain: Metamodel) -> MappingModel:
    out, _, _ = adapt_mapping_traced(diff, mapping, tooling_after, strategy, domain)
    return out


def adapt_mapping_traced(diff: dm.DiffModel, mapping: MappingModel,
                         tooling_after: ToolingModel, strategy: str,
                         domain: Metamodel
                         ) -> tuple[MappingModel, list, list[str]]:
    check_strategy(strategy)
    new = apply_diff(domain, diff)
    classified = cat.classify_entries(diff, domain, new)
    fired: list[tuple[str, tuple[tuple[str, str], ...]]] = []
    skipped: list[str] = []

    class_rename = diff.rename_map()
    feature_moves: dict[tuple[str, str], tuple[str, str, str]] = {}
    for e in diff.entries:
        if isinstance(e, (dm.ChangedAttribute, dm.ChangedReference)):
            feature_moves[(e.oldOwner, e.old.name)] = (
                e.newOwner, e.updated.name, feature_type_name(e.updated))

    # tool titles change in lockstep with the tooling adapter's rewrites
    bound = tool_bindings(mapping)
    rewrites = rename_rewrites(diff)

    def new_tool_title(title: str) -> str:
        b = bound.get(title, {"classes": set(), "features": set()})
        bound_names = set(b["classes"]) | {f for _, f in b["features"]}
        out = title
        for old_name, name in rewrites:
            if old_name in bound_names:
                out = replace_whole_word(out, old_name, name)
        return out

    rewrote = False

    def fix_ref(ref: FeatureRef) -> FeatureRef:
        nonlocal rewrote
        move = feature_moves.get((ref.className, ref.featureName))
        if move is not None:
            owner, name, type_name = move
            fixed = FeatureRef(className=owner, featureName=name,
                               recordedTypeName=type_name)
            rewrote = rewrote or fixed != ref
            return fixed
        owner = class_rename.get(ref.className, ref.className)
        recorded = class_rename.get(ref.recordedTypeName, ref.recordedTypeName)
        fixed = replace(ref, className=owner, recordedTypeName=recorded)
        rewrote = rewrote or fixed != ref
        return fixed

    def fix_class(name: str) -> str:
        nonlocal rewrote
        out = class_rename.get(name, name)
        rewrote = rewrote or out != name
        return out

    # elements slated for removal
    deleted_classes = {c.binding_map["className"]
                       for _, c in classified.of_kind(cat.DELETE_CONCRETE_CLASS)}
    deleted_classes |= {e.old.name for e in diff.entries
                        if isinstance(e, dm.DeletedClass)}
    undisplayable = set()  # (old owner, old feature name): label mappings to drop
    for kind in (cat.DELETE_PROPERTY, cat.MOVE_PROPERTY, cat.CHANGE_PROPERTY_TYPE):
        for entry, _ in classified.of_kind(kind):
            if isinstance(entry, (dm.DeletedAttribute, dm.DeletedReference)):
                undisplayable.add((entry.owner, entry.old.name))
            else:
                undisplayable.add((entry.oldOwner, entry.old.name))

    def keep_flm(flm: FeatureLabelMapping) -> bool:
        return not any((r.className, r.featureName) in undisplayable
                       for r in flm.features)

    pulled = {(e.oldOwner, e.old.name)
              for e, c in classified.of_kind(cat.PULL_UP_PROPERTY)}

    tnrs: list[TopNodeReference] = []
    for tnr in mapping.topNodeReferences:
        nm = tnr.ownedChild
        if nm.domainMetaElement in deleted_classes:
            fired.append((RULE_DELETED_CLASS_MAPPING,
                          (("className", nm.domainMetaElement),)))
            continue
        if (tnr.containmentFeature.className, tnr.containmentFeature.featureName) \
                in undisplayable:
            fired.append((RULE_DELETED_CLASS_MAPPING,
                          (("className", nm.domainMetaElement),)))
            continue
        label_mappings = []
        for flm in nm.labelMappings:
            if not keep_flm(flm):
                fired.append((RULE_REMOVED_LABEL_MAPPING,
                              (("diagramLabel", flm.diagramLabel),)))
                continue
            was_pulled = any((r.className, r.featureName) in pulled
                             for r in flm.features)
            fixed = replace(flm, features=tuple(fix_ref(r) for r in flm.features))
            if was_pulled:
                fired.append((RULE_PULLED_UP_FEATURE,
                              (("diagramLabel", flm.diagramLabel),)))
            label_mappings.append(fixed)
        tnrs.append(TopNodeReference(
            containmentFeature=fix_ref(tnr.containmentFeature),
            ownedChild=NodeMapping(
                domainMetaElement=fix_class(nm.domainMetaElement),
                tool=new_tool_title(nm.tool),
                diagramNode=nm.diagramNode,
                labelMappings=tuple(label_mappings))))

    links: list[LinkMapping] = []
    for lm in mapping.linkMappings:
        if lm.domainMetaElement in deleted_classes:
            fired.append((RULE_DELETED_CLASS_MAPPING,
                          (("className", lm.domainMetaElement),)))
            continue
        if any((r.className, r.featureName) in undisplayable
               for r in (lm.sourceFeature, lm.targetFeature)):
            fired.append((RULE_DELETED_CLASS_MAPPING,
                          (("className", lm.domainMetaElement),)))
            continue
        links.append(LinkMapping(
            domainMetaElement=fix_class(lm.domainMetaElement),
            tool=new_tool_title(lm.tool),
            diagramLink=lm.diagramLink,
            sourceFeature=fix_ref(lm.sourceFeature),
            targetFeature=fix_ref(lm.targetFeature)))

    if rewrote:
        fired.insert(0, (RULE_RENAMED_ELEMENT_MAPPING, ()))

    if strategy == BEST_EFFORT:
        _extend_labels(classified, tnrs, new, fired)
        _replicate(classified, diff, mapping, new, tnrs, fired, skipped)

    return MappingModel(topNodeReferences=tuple(tnrs), linkMappings=tuple(links)), \
        fired, skipped


def _extend_labels(classified, tnrs, new: Metamodel, fired) -> None:
    """Added properties join the owning node's existing first label mapping;
    no graph adapter exists, so no new label figure can be assumed."""
    for entry, change in classified.of_kind(cat.ADD_PROPERTY):
        if not isinstance(entry, dm.AddedAttribute):
            continue  # references are not label material
        for i, tnr in enumerate(tnrs):
            nm = tnr.ownedChild
            if nm.domainMetaElement != entry.owner or not nm.labelMappings:
                continue
            flm = nm.labelMappings[0]
            ref = FeatureRef(className=entry.owner, featureName=entry.new.name,
                             recordedTypeName=entry.new.typeName)
            extended = replace(flm, features=(*flm.features, ref))
            tnrs[i] = replace(tnr, ownedChild=replace(
                nm, labelMappings=(extended, *nm.labelMappings[1:])))
            fired.append((RULE_ADDED_PROPERTY_LABEL, change.bindings))
            break


def _replicate(classified, diff, mapping, new: Metamodel, tnrs, fired, skipped) -> None:
    plans, plan_skips = specialization_plans(classified, diff, mapping, new)
    skipped.extend(plan_skips)
    existing = {tnr.ownedChild.domainMetaElement for tnr in tnrs}
    for plan in plans:
        if plan.new_class in existing:
            skipped.append(f"{plan.new_class}: node mapping already present")
            continue
        sibling = next((tnr for tnr in tnrs
                        if tnr.ownedChild.domainMetaElement == plan.sibling_new), None)
        if sibling is None:
            skipped.append(f"{plan.new_class}: sibling '{plan.sibling_new}' "
                           f"lost its node mapping")
            continue
        containment = _reresolved(sibling.containmentFeature, new)
        tnrs.append(TopNodeReference(
            containmentFeature=containment,
            ownedChild=NodeMapping(
                domainMetaElement=plan.new_class,
                tool=plan.new_tool_title,
                diagramNode=sibling.ownedChild.diagramNode,
                labelMappings=tuple(
                    replace(flm, features=tuple(_reresolved(r, new)
                                                for r in flm.features))
                    for flm in sibling.ownedChild.labelMappings))))
        existing.add(plan.new_class)
        fired.append((RULE_ADDED_SPECIALIZATION_NODE, plan.bindings))


def _reresolved(ref: FeatureRef, new: Metamodel) -> FeatureRef:
    """Refresh the recorded type against the new metamodel when the feature
    resolves; dangling refs are copied verbatim and left to the soundness
    analysis."""
    feature = resolve_feature_ref(new, ref)
    if feature is None:
        return ref
    return replace(ref, recordedTypeName=feature_type_name(feature))
