"""Editor soundness validation: per-model blame and the overall level.

Verdicts per companion model: ``×`` broken (some error-causing finding),
``○`` capability gap, ``•`` ok.  Level is 1 if any model is broken, 2 if any
model has a gap, else 3.  Level 4 (human-certified) is never emitted.

The rules are name-based.  With a diff passed as ``trace``, staleness caused
by a pure rename is degraded from broken to gap for tooling bindings (the
editor still runs, the tool merely stopped having an effect); mapping
references stay broken either way.  Without a trace validation is strictly
name-based and may blame more models.

Two structural exemptions keep the rules honest:

* abstract classes need no representation (they cannot be instantiated);
* "canvas" classes, those owning a containment feature used as a mapping's
  containment feature, are represented by the diagram surface itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import (EditorModelSet, FeatureRef, Metamodel, MappingModel,
                     ToolingModel)
from ..model import io as model_io
from ..model.resolve import feature_type_name, resolve_feature_ref
from ..diff import model as dm

BROKEN = "Broken"
GAP = "Gap"

MODEL_EMFGEN = "EmfGen"
MODEL_GRAPH = "Graph"
MODEL_TOOLING = "Tooling"
MODEL_MAPPING = "Mapping"
MODELS = (MODEL_EMFGEN, MODEL_GRAPH, MODEL_TOOLING, MODEL_MAPPING)

VERDICT_BROKEN = "×"
VERDICT_GAP = "○"
VERDICT_OK = "•"

LEVEL_BROKEN = 1
LEVEL_GAP = 2
LEVEL_SOUND = 3


@dataclass(frozen=True)
class Finding:
    severity: str  # BROKEN | GAP
    model: str     # one of MODELS
    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class BlameReport:
    perModel: tuple[tuple[str, str], ...]  # model -> verdict symbol
    findings: tuple[Finding, ...]
    level: int

    @property
    def verdicts(self) -> dict[str, str]:
        return dict(self.perModel)

    def to_doc(self) -> dict:
        return {
            "formatVersion": model_io.FORMAT_VERSION, "kind": "blame",
            "perModel": dict(self.perModel),
            "level": self.level,
            "findings": [{"severity": f.severity, "model": f.model, "code": f.code,
                          "subject": f.subject, "message": f.message}
                         for f in self.findings],
        }

    def to_bytes(self) -> bytes:
        return model_io.dump_document(self.to_doc())


def level_of(verdicts: dict[str, str]) -> int:
    values = set(verdicts.values())
    if VERDICT_BROKEN in values:
        return LEVEL_BROKEN
    if VERDICT_GAP in values:
        return LEVEL_GAP
    return LEVEL_SOUND


@dataclass
class _Trace:
    """Evolution facts extracted from the diff used as trace."""

    renamed_classes: dict[str, str]           # old -> new
    renamed_features: dict[tuple, tuple]      # pure renames (owner kept)
    moved_features: set[tuple]                # old (owner, name)
    deleted_classes: set[str]
    deleted_features: set[tuple]
    type_changed: set[tuple]

    @staticmethod
    def from_diff(diff: dm.DiffModel) -> "_Trace":
        rename = diff.rename_map()
        renamed_classes = {o: n for o, n in rename.items() if o != n}
        renamed_features: dict[tuple, tuple] = {}
        moved: set[tuple] = set()
        type_changed: set[tuple] = set()
        deleted_classes = set()
        deleted_features = set()
        for e in diff.entries:
            if isinstance(e, dm.DeletedClass):
                deleted_classes.add(e.old.name)
                deleted_features.update((e.old.name, f) for f in e.old.feature_names)
            elif isinstance(e, (dm.DeletedAttribute, dm.DeletedReference)):
                deleted_features.add((e.owner, e.old.name))
            elif isinstance(e, (dm.ChangedAttribute, dm.ChangedReference)):
                key = (e.oldOwner, e.old.name)
                if rename.get(e.oldOwner, e.oldOwner) != e.newOwner:
                    moved.add(key)
                elif e.old.name != e.updated.name:
                    renamed_features[key] = (e.newOwner, e.updated.name)
                elif feature_type_name(e.old) != feature_type_name(e.updated):
                    type_changed.add(key)
        return _Trace(renamed_classes=renamed_classes,
                      renamed_features=renamed_features,
                      moved_features=moved, deleted_classes=deleted_classes,
                      deleted_features=deleted_features, type_changed=type_changed)


# ---------------------------------------------------------------------------
# Shared structural views
# ---------------------------------------------------------------------------

def _canvas_classes(domain: Metamodel, mapping: MappingModel) -> set[str]:
    canvas = set()
    for tnr in mapping.topNodeReferences:
        ref = tnr.containmentFeature
        feature = resolve_feature_ref(domain, ref)
        if feature is not None and getattr(feature, "containment", False):
            canvas.add(ref.className)
    return canvas


def _needs_representation(domain: Metamodel, canvas: set[str]):
    return [c for c in domain.classes if not c.abstract and c.name not in canvas]


def _ref_ok(domain: Metamodel, ref: FeatureRef) -> bool:
    feature = resolve_feature_ref(domain, ref)
    return feature is not None and feature_type_name(feature) == ref.recordedTypeName


def _class_mappings(mapping: MappingModel, class_name: str):
    nodes = [tnr for tnr in mapping.topNodeReferences
             if tnr.ownedChild.domainMetaElement == class_name]
    links = [lm for lm in mapping.linkMappings
             if lm.domainMetaElement == class_name]
    return nodes, links


def _display_index(domain: Metamodel, mapping: MappingModel):
    """(owner, feature) -> list of (mapped class, FLM, ok, dedicated)."""
    index: dict[tuple, list] = {}
    for tnr in mapping.topNodeReferences:
        nm = tnr.ownedChild
        for flm in nm.labelMappings:
            ok = all(_ref_ok(domain, r) for r in flm.features)
            dedicated = len(flm.features) == 1
            for r in flm.features:
                index.setdefault((r.className, r.featureName), []).append(
                    (nm.domainMetaElement, flm, ok, dedicated))
    return index


def _displayable_attr_owners(domain: Metamodel, needing_names: set[str]) -> set[tuple]:
    """Declared (owner, attribute) pairs whose display matters: the owner is
    itself representation-needing or has a representation-needing subclass."""
    relevant_classes = set(needing_names)
    for c in domain.classes:
        if c.name in needing_names:
            relevant_classes.update(domain.supertype_closure(c.name))
    pairs = set()
    for c in domain.classes:
        if c.name in relevant_classes:
            pairs.update((c.name, a.name) for a in c.attributes)
    return pairs


# ---------------------------------------------------------------------------
# Per-model rule groups
# ---------------------------------------------------------------------------

def _check_emfgen(mset: EditorModelSet, out: list[Finding]) -> None:
    domain, emfgen = mset.domain, mset.emfgen
    domain_classes = {c.name for c in domain.classes}
    gen_classes = {g.className for g in emfgen.genClasses}
    for name in sorted(domain_classes - gen_classes):
        out.append(Finding(BROKEN, MODEL_EMFGEN, "missing-gen-class", name,
                           f"domain class '{name}' is not in the generator config"))
    for name in sorted(gen_classes - domain_classes):
        out.append(Finding(BROKEN, MODEL_EMFGEN, "extra-gen-class", name,
                           f"generator config lists unknown class '{name}'"))
    for g in emfgen.genClasses:
        c = domain.class_named(g.className)
        if c is None:
            continue
        declared = set(c.feature_names)
        listed = set(g.genFeatures)
        for name in sorted(declared - listed):
            out.append(Finding(BROKEN, MODEL_EMFGEN, "missing-gen-feature",
                               f"{g.className}.{name}",
                               f"feature '{g.className}.{name}' is not in the "
                               f"generator config"))
        for name in sorted(listed - declared):
            out.append(Finding(BROKEN, MODEL_EMFGEN, "extra-gen-feature",
                               f"{g.className}.{name}",
                               f"generator config lists unknown feature "
                               f"'{g.className}.{name}'"))


def _check_mapping(mset: EditorModelSet, canvas: set[str], out: list[Finding]) -> None:
    domain, mapping, tooling, graph = mset.domain, mset.mapping, mset.tooling, mset.graph
    class_names = {c.name for c in domain.classes}
    tool_titles = {t.title for t in tooling.tools}
    node_names = {n.name for n in graph.nodes}
    label_names = {l.name for l in graph.diagramLabels}
    connection_names = {c.name for c in graph.connections}

    def dangle(path, name, what):
        out.append(Finding(BROKEN, MODEL_MAPPING, "dangling-reference",
                           path, f"{what} '{name}' does not resolve"))

    def check_ref(path, ref: FeatureRef):
        feature = resolve_feature_ref(domain, ref)
        if feature is None:
            dangle(path, f"{ref.className}.{ref.featureName}", "feature")
        elif feature_type_name(feature) != ref.recordedTypeName:
            out.append(Finding(
                BROKEN, MODEL_MAPPING, "stale-type", path,
                f"feature '{ref.className}.{ref.featureName}' is "
                f"'{feature_type_name(feature)}' but was linked as "
                f"'{ref.recordedTypeName}'"))

    for i, tnr in enumerate(mapping.topNodeReferences):
        base = f"topNodeReferences[{i}]"
        check_ref(f"{base}.containmentFeature", tnr.containmentFeature)
        nm = tnr.ownedChild
        if nm.domainMetaElement not in class_names:
            dangle(f"{base}.ownedChild.domainMetaElement", nm.domainMetaElement, "class")
        if nm.tool not in tool_titles:
            dangle(f"{base}.ownedChild.tool", nm.tool, "tool")
        if nm.diagramNode not in node_names:
            dangle(f"{base}.ownedChild.diagramNode", nm.diagramNode, "graph node")
        for j, flm in enumerate(nm.labelMappings):
            if flm.diagramLabel not in label_names:
                dangle(f"{base}.ownedChild.labelMappings[{j}].diagramLabel",
                       flm.diagramLabel, "diagram label")
            for k, ref in enumerate(flm.features):
                check_ref(f"{base}.ownedChild.labelMappings[{j}].features[{k}]", ref)
    for i, lm in enumerate(mapping.linkMappings):
        base = f"linkMappings[{i}]"
        if lm.domainMetaElement not in class_names:
            dangle(f"{base}.domainMetaElement", lm.domainMetaElement, "class")
        if lm.tool not in tool_titles:
            dangle(f"{base}.tool", lm.tool, "tool")
        if lm.diagramLink not in connection_names:
            dangle(f"{base}.diagramLink", lm.diagramLink, "connection")
        check_ref(f"{base}.sourceFeature", lm.sourceFeature)
        check_ref(f"{base}.targetFeature", lm.targetFeature)

    # capability gaps
    needing = _needs_representation(domain, canvas)
    for c in needing:
        nodes, links = _class_mappings(mapping, c.name)
        if not nodes and not links:
            out.append(Finding(GAP, MODEL_MAPPING, "unmapped-class", c.name,
                               f"concrete class '{c.name}' has no node or link mapping"))
    display = _display_index(domain, mapping)
    needing_names = {c.name for c in needing}
    for owner, attr in sorted(_displayable_attr_owners(domain, needing_names)):
        hits = display.get((owner, attr), ())
        if not any(ok for _, _, ok, _ in hits):
            out.append(Finding(GAP, MODEL_MAPPING, "undisplayed-attribute",
                               f"{owner}.{attr}",
                               f"attribute '{owner}.{attr}' appears in no "
                               f"feature label mapping"))


def _check_tooling(mset: EditorModelSet, canvas: set[str],
                   trace: _Trace | None, out: list[Finding]) -> None:
    domain, mapping, tooling = mset.domain, mset.mapping, mset.tooling
    class_names = {c.name for c in domain.classes}
    titles = {t.title for t in tooling.tools}

    # bindings: tool title -> bound classes / feature refs
    bound_classes: dict[str, set[str]] = {}
    bound_refs: dict[str, list[FeatureRef]] = {}
    for tnr in mapping.topNodeReferences:
        nm = tnr.ownedChild
        bound_classes.setdefault(nm.tool, set()).add(nm.domainMetaElement)
        for flm in nm.labelMappings:
            bound_refs.setdefault(nm.tool, []).extend(flm.features)
    for lm in mapping.linkMappings:
        bound_classes.setdefault(lm.tool, set()).add(lm.domainMetaElement)
        bound_refs.setdefault(lm.tool, []).extend(
            (lm.sourceFeature, lm.targetFeature))

    def broken(title, subject, why):
        out.append(Finding(BROKEN, MODEL_TOOLING, "broken-binding",
                           f"{title}:{subject}",
                           f"tool '{title}' is bound to {why}"))

    def stale(title, subject, why):
        out.append(Finding(GAP, MODEL_TOOLING, "stale-binding",
                           f"{title}:{subject}",
                           f"tool '{title}' is bound to {why}"))

    for title in sorted(titles):
        for cname in sorted(bound_classes.get(title, ())):
            if cname in class_names:
                if trace is not None:
                    for old, new in trace.renamed_classes.items():
                        if cname == new and _contains_word(title, old):
                            out.append(Finding(
                                GAP, MODEL_TOOLING, "stale-title", title,
                                f"tool title '{title}' still uses the old "
                                f"name '{old}' of class '{new}'"))
                continue
            if trace is not None and cname in trace.renamed_classes:
                stale(title, cname, f"class '{cname}', which was renamed")
            else:
                broken(title, cname, f"class '{cname}', which no longer exists")
        for ref in bound_refs.get(title, ()):
            key = (ref.className, ref.featureName)
            subject = f"{ref.className}.{ref.featureName}"
            feature = resolve_feature_ref(domain, ref)
            if feature is not None:
                if feature_type_name(feature) != ref.recordedTypeName:
                    broken(title, subject,
                           f"feature '{subject}', whose type changed")
                continue
            if trace is not None:
                if key in trace.renamed_features:
                    stale(title, subject, f"feature '{subject}', which was renamed")
                    continue
                renamed_owner = trace.renamed_classes.get(ref.className)
                if renamed_owner is not None and resolve_feature_ref(
                        domain, FeatureRef(renamed_owner, ref.featureName,
                                           ref.recordedTypeName)) is not None:
                    stale(title, subject,
                          f"feature '{subject}' of the renamed class "
                          f"'{renamed_owner}'")
                    continue
                if key in trace.moved_features:
                    broken(title, subject, f"feature '{subject}', which was moved")
                    continue
            broken(title, subject, f"feature '{subject}', which no longer exists")

    # gaps: missing creation tool per concrete class
    for c in _needs_representation(domain, canvas):
        nodes, links = _class_mappings(mapping, c.name)
        tools = {nm.ownedChild.tool for nm in nodes} | {lm.tool for lm in links}
        if not (tools & titles):
            out.append(Finding(GAP, MODEL_TOOLING, "missing-tool", c.name,
                               f"no creation tool exists for concrete class "
                               f"'{c.name}'"))

    # gaps: tool with no binding at all
    referenced = set(bound_classes) | set(bound_refs)
    for title in sorted(titles - referenced):
        out.append(Finding(GAP, MODEL_TOOLING, "useless-tool", title,
                           f"tool '{title}' is referenced by no mapping"))

    # gaps: no dedicated editing affordance for an attribute
    display = _display_index(domain, mapping)
    needing_names = {c.name for c in _needs_representation(domain, canvas)}
    for owner, attr in sorted(_displayable_attr_owners(domain, needing_names)):
        hits = display.get((owner, attr), ())
        if not any(ok and dedicated for _, _, ok, dedicated in hits):
            out.append(Finding(GAP, MODEL_TOOLING, "undisplayed-attribute",
                               f"{owner}.{attr}",
                               f"attribute '{owner}.{attr}' has no dedicated "
                               f"label mapping to edit it through"))


def _check_graph(mset: EditorModelSet, canvas: set[str], out: list[Finding]) -> None:
    domain, mapping, graph = mset.domain, mset.mapping, mset.graph
    class_names = {c.name for c in domain.classes}
    node_names = {n.name for n in graph.nodes}
    connection_names = {c.name for c in graph.connections}
    label_names = {l.name for l in graph.diagramLabels}

    needing = _needs_representation(domain, canvas)

    # a class is drawn when a healthy mapping chain reaches a graph element
    drawn_nodes: set[str] = set()
    drawn_labels: set[str] = set()
    drawn_connections: set[str] = set()
    represented: set[str] = set()
    node_flms: dict[str, list] = {}
    for tnr in mapping.topNodeReferences:
        nm = tnr.ownedChild
        if nm.domainMetaElement in class_names and nm.diagramNode in node_names:
            represented.add(nm.domainMetaElement)
            drawn_nodes.add(nm.diagramNode)
            node_flms.setdefault(nm.domainMetaElement, []).extend(nm.labelMappings)
        for flm in nm.labelMappings:
            if flm.diagramLabel in label_names and \
                    all(_ref_ok(domain, r) for r in flm.features):
                drawn_labels.add(flm.diagramLabel)
    for lm in mapping.linkMappings:
        if lm.domainMetaElement in class_names and lm.diagramLink in connection_names:
            represented.add(lm.domainMetaElement)
            drawn_connections.add(lm.diagramLink)

    for c in needing:
        if c.name not in represented:
            out.append(Finding(GAP, MODEL_GRAPH, "unrepresented-class", c.name,
                               f"no graphical element is wired to concrete "
                               f"class '{c.name}'"))

    # every inherited attribute of a drawn class needs its own healthy label
    for c in needing:
        if c.name not in represented:
            continue
        flms = node_flms.get(c.name, [])
        for owner, attr in domain.flattened_attributes(c.name):
            hit = any(len(flm.features) == 1
                      and flm.diagramLabel in label_names
                      and flm.features[0].className == owner
                      and flm.features[0].featureName == attr.name
                      and _ref_ok(domain, flm.features[0])
                      for flm in flms)
            if not hit:
                out.append(Finding(
                    GAP, MODEL_GRAPH, "undisplayed-attribute",
                    f"{c.name}:{owner}.{attr.name}",
                    f"class '{c.name}' has no dedicated label figure for "
                    f"attribute '{owner}.{attr.name}'"))

    # unused concrete-syntax elements (kept around for future re-use)
    used_figures: set[str] = set()
    for n in graph.nodes:
        if n.name in drawn_nodes:
            used_figures.add(n.figure)
        else:
            out.append(Finding(GAP, MODEL_GRAPH, "unused-element", n.name,
                               f"graph node '{n.name}' is referenced by no "
                               f"valid node mapping"))
    for c in graph.connections:
        if c.name in drawn_connections:
            used_figures.add(c.figure)
        else:
            out.append(Finding(GAP, MODEL_GRAPH, "unused-element", c.name,
                               f"connection '{c.name}' is referenced by no "
                               f"valid link mapping"))
    for l in graph.diagramLabels:
        if l.name in drawn_labels:
            used_figures.add(l.figure)
        else:
            out.append(Finding(GAP, MODEL_GRAPH, "unused-element", l.name,
                               f"diagram label '{l.name}' is referenced by no "
                               f"valid feature label mapping"))
    for f in graph.figures:
        if f.name not in used_figures:
            out.append(Finding(GAP, MODEL_GRAPH, "unused-element", f.name,
                               f"figure '{f.name}' is not used by any wired "
                               f"graph element"))


def _contains_word(text: str, word: str) -> bool:
    import re
    return re.search(rf"\b{re.escape(word)}\b", text) is not None


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def validate(mset: EditorModelSet, trace: dm.DiffModel | None = None) -> BlameReport:
    """Pure and deterministic; findings are ordered by (model, code, subject)."""
    trace_info = _Trace.from_diff(trace) if trace is not None else None
    canvas = _canvas_classes(mset.domain, mset.mapping)

    findings: list[Finding] = []
    _check_emfgen(mset, findings)
    _check_graph(mset, canvas, findings)
    _check_tooling(mset, canvas, trace_info, findings)
    _check_mapping(mset, canvas, findings)
    findings.sort(key=lambda f: (f.model, f.code, f.subject))

    verdicts = {}
    for model in MODELS:
        severities = {f.severity for f in findings if f.model == model}
        if BROKEN in severities:
            verdicts[model] = VERDICT_BROKEN
        elif GAP in severities:
            verdicts[model] = VERDICT_GAP
        else:
            verdicts[model] = VERDICT_OK

    return BlameReport(perModel=tuple((m, verdicts[m]) for m in MODELS),
                       findings=tuple(findings), level=level_of(verdicts))
