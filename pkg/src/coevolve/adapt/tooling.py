"""Tooling adapter: removes tools for deleted concepts, refreshes titles for
renamed ones, and (best-effort) creates a creation tool for a class added as
a specialization by substituting the sibling's name in its tool title."""

from __future__ import annotations

from dataclasses import replace

from ..model import CreationTool, MappingModel, Metamodel, ToolGroup, ToolingModel
from ..diff import model as dm
from ..diff import catalog as cat
from ..diff.model import apply_diff
from .replicate import rename_rewrites, replace_whole_word, specialization_plans
from .strategy import BEST_EFFORT, check_strategy

RULE_ADDED_SPECIALIZATION_TOOL = "AddedSpecializationClassToCreationTool"
RULE_DELETED_CLASS_TOOL = "DeletedClassToCreationTool"
RULE_RENAMED_ELEMENT_TOOL = "RenamedElementToCreationTool"


def tool_bindings(mapping: MappingModel) -> dict[str, dict]:
    """Tool title -> the domain elements the tool is bound to through the
    mapping model (tools carry no domain references themselves)."""
    bound: dict[str, dict] = {}

    def entry(title):
        return bound.setdefault(title, {"classes": set(), "features": set()})

    for tnr in mapping.topNodeReferences:
        nm = tnr.ownedChild
        e = entry(nm.tool)
        e["classes"].add(nm.domainMetaElement)
        for flm in nm.labelMappings:
            for ref in flm.features:
                e["features"].add((ref.className, ref.featureName))
    for lm in mapping.linkMappings:
        e = entry(lm.tool)
        e["classes"].add(lm.domainMetaElement)
        for ref in (lm.sourceFeature, lm.targetFeature):
            e["features"].add((ref.className, ref.featureName))
    return bound


def adapt_tooling(diff: dm.DiffModel, mapping: MappingModel, tooling: ToolingModel,
                  strategy: str, domain: Metamodel) -> ToolingModel:
    out, _, _ = adapt_tooling_traced(diff, mapping, tooling, strategy, domain)
    return out


def adapt_tooling_traced(diff: dm.DiffModel, mapping: MappingModel,
                         tooling: ToolingModel, strategy: str, domain: Metamodel
                         ) -> tuple[ToolingModel, list, list[str]]:
    """Adapted tooling plus (fired rules, skip diagnostics)."""
    check_strategy(strategy)
    new = apply_diff(domain, diff)
    classified = cat.classify_entries(diff, domain, new)
    bound = tool_bindings(mapping)
    fired: list[tuple[str, tuple[tuple[str, str], ...]]] = []
    skipped: list[str] = []

    deleted_classes = {c.binding_map["className"]
                       for _, c in classified.of_kind(cat.DELETE_CONCRETE_CLASS)}
    # affected-property kinds remove tools bound to the property alone; a
    # tool bound to a surviving class stays (its class still needs creating)
    gone_features = set()
    for kind in (cat.DELETE_PROPERTY, cat.MOVE_PROPERTY, cat.CHANGE_PROPERTY_TYPE):
        for entry, _ in classified.of_kind(kind):
            if isinstance(entry, (dm.DeletedAttribute, dm.DeletedReference)):
                gone_features.add((entry.owner, entry.old.name))
            else:
                gone_features.add((entry.oldOwner, entry.old.name))

    def doomed(title: str) -> bool:
        b = bound.get(title)
        if b is None:
            return False
        if b["classes"] & deleted_classes:
            return True
        survivors = b["classes"] - deleted_classes
        return not survivors and b["features"] and b["features"] <= gone_features

    rewrites = rename_rewrites(diff)

    def refreshed(tool: CreationTool) -> CreationTool:
        b = bound.get(tool.title, {"classes": set(), "features": set()})
        bound_names = set(b["classes"]) | {f for _, f in b["features"]}
        title, description = tool.title, tool.description
        for old_name, new_name in rewrites:
            if old_name in bound_names:
                title = replace_whole_word(title, old_name, new_name)
                description = replace_whole_word(description, old_name, new_name)
        if (title, description) != (tool.title, tool.description):
            fired.append((RULE_RENAMED_ELEMENT_TOOL,
                          (("oldTitle", tool.title), ("newTitle", title))))
        return replace(tool, title=title, description=description)

    groups: list[ToolGroup] = []
    for g in tooling.palette:
        tools = []
        for tool in g.tools:
            if doomed(tool.title):
                fired.append((RULE_DELETED_CLASS_TOOL, (("title", tool.title),)))
                continue
            tools.append(refreshed(tool))
        groups.append(replace(g, tools=tuple(tools)))

    if strategy == BEST_EFFORT:
        plans, plan_skips = specialization_plans(classified, diff, mapping, new)
        skipped.extend(plan_skips)
        existing = {t.title for g in groups for t in g.tools}
        for plan in plans:
            if plan.new_tool_title in existing:
                skipped.append(f"{plan.new_class}: tool title "
                               f"'{plan.new_tool_title}' already present")
                continue
            tool = CreationTool(title=plan.new_tool_title,
                                description=plan.new_tool_description)
            target = _group_of(groups, tooling, plan.sibling_tool)
            groups[target] = replace(groups[target],
                                     tools=(*groups[target].tools, tool))
            existing.add(tool.title)
            fired.append((RULE_ADDED_SPECIALIZATION_TOOL, plan.bindings))

    return ToolingModel(palette=tuple(groups)), fired, skipped


def _group_of(groups: list[ToolGroup], original: ToolingModel, sibling_title: str) -> int:
    for i, g in enumerate(original.palette):
        if any(t.title == sibling_title for t in g.tools):
            return i
    return 0 if groups else _ensure_default(groups)


def _ensure_default(groups: list[ToolGroup]) -> int:
    groups.append(ToolGroup(name="default"))
    return len(groups) - 1
