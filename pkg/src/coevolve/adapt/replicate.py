"""Shared context for the specialization replication rules.

When a new concrete class arrives as a specialization, the tooling and
mapping adapters both replicate the management of an existing concrete
sibling.  The sibling choice and the generated tool title must agree between
the two adapters, so they are computed once here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..model import MappingModel, Metamodel
from ..diff import model as dm
from ..diff import catalog as cat


def replace_whole_word(text: str, old: str, new: str) -> str:
    """Whole-word substitution; returns ``text`` unchanged when the word
    does not occur."""
    return re.sub(rf"\b{re.escape(old)}\b", new, text)


def rename_rewrites(diff: dm.DiffModel) -> list[tuple[str, str]]:
    """(old name, new name) pairs for renamed classes and renamed features,
    used to refresh tool titles and descriptions."""
    pairs = []
    for e in diff.entries:
        if isinstance(e, dm.ChangedClass) and e.old.name != e.updated.name:
            pairs.append((e.old.name, e.updated.name))
        elif isinstance(e, (dm.ChangedAttribute, dm.ChangedReference)) \
                and e.old.name != e.updated.name:
            pairs.append((e.old.name, e.updated.name))
    return pairs


@dataclass(frozen=True)
class SpecializationPlan:
    new_class: str
    super_class: str
    sibling_old: str      # sibling class name in the old metamodel
    sibling_new: str
    sibling_tool: str     # sibling's tool title as authored in the old models
    new_tool_title: str
    new_tool_description: str
    bindings: tuple[tuple[str, str], ...]


def _node_mapping_for(mapping: MappingModel, class_name: str):
    for tnr in mapping.topNodeReferences:
        if tnr.ownedChild.domainMetaElement == class_name:
            return tnr
    return None


def specialization_plans(classified: cat.ClassifiedDiff, diff: dm.DiffModel,
                         mapping: MappingModel, new: Metamodel
                         ) -> tuple[list[SpecializationPlan], list[str]]:
    """Replication plans for every added-class specialization, plus
    diagnostics for the ones that had to be skipped."""
    rename = diff.rename_map()
    inverse_rename = {v: k for k, v in rename.items()}
    plans: list[SpecializationPlan] = []
    skipped: list[str] = []

    for entry, change in classified.of_kind(cat.ADD_SPECIALIZATION):
        if not isinstance(entry, dm.AddedClass):
            continue  # an existing class became a specialization: nothing to replicate
        bindings = change.binding_map
        new_class = entry.new.name
        super_class = bindings.get("s2") or bindings.get("superClass") \
            or (entry.new.superTypes[0] if entry.new.superTypes else None)
        if super_class is None:
            skipped.append(f"{new_class}: added class has no superclass to replicate from")
            continue

        if "s3" in bindings:
            sibling_new = rename.get(bindings["s3"], bindings["s3"])
        else:
            sibling_new = _pick_sibling(new, new_class, super_class,
                                        mapping, inverse_rename)
        if sibling_new is None:
            skipped.append(f"{new_class}: no concrete sibling with a node mapping")
            continue
        sibling_old = inverse_rename.get(sibling_new, sibling_new)

        node = _node_mapping_for(mapping, sibling_old)
        if node is None:
            skipped.append(f"{new_class}: sibling '{sibling_old}' has no node mapping")
            continue
        sibling_tool = node.ownedChild.tool

        # the sibling's tool title as the tooling adapter will have left it
        title = sibling_tool
        for old_name, new_name in rename_rewrites(diff):
            title = replace_whole_word(title, old_name, new_name)
        substituted = replace_whole_word(title, sibling_new, new_class)
        if substituted == title:
            substituted = replace_whole_word(title, sibling_old, new_class)
        if substituted == title:
            substituted = new_class

        plans.append(SpecializationPlan(
            new_class=new_class, super_class=super_class,
            sibling_old=sibling_old, sibling_new=sibling_new,
            sibling_tool=sibling_tool,
            new_tool_title=substituted,
            new_tool_description=f"Create new {new_class}",
            bindings=change.bindings))
    return plans, skipped


def _pick_sibling(new: Metamodel, new_class: str, super_class: str,
                  mapping: MappingModel, inverse_rename: dict[str, str]):
    """Concrete sibling under the same superclass whose node mapping exists,
    lexicographically smallest; the spec's source pattern has no ordering,
    ours is made deterministic."""
    candidates = []
    for c in new.classes:
        if c.name == new_class or c.abstract:
            continue
        if super_class not in new.supertype_closure(c.name):
            continue
        old_name = inverse_rename.get(c.name, c.name)
        if _node_mapping_for(mapping, old_name) is not None:
            candidates.append(c.name)
    return min(candidates) if candidates else None
