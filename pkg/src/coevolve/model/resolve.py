"""Resolution of name-based cross-model links.

The companion models point at the domain, the graph, and the palette purely
by name.  ``resolve`` walks every such link and records whether it lands on
an element.  Dangling links are data, not errors: the result feeds the
soundness analysis.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import types as t


@dataclass(frozen=True)
class Link:
    """One cross-model link occurrence.

    ``source`` is the model holding the link, ``path`` locates the link
    inside it, ``targetKind`` says what the name is supposed to denote.
    """

    source: str           # "mapping" | "emfgen"
    path: str
    targetKind: str       # "class" | "feature" | "tool" | "node" | "label" | "connection"
    name: str
    resolved: bool


def _declared_feature(domain: t.Metamodel, class_name: str, feature_name: str):
    """Look up a feature declared directly on the named class (inherited
    features do not count: feature refs point at the declaring class)."""
    c = domain.class_named(class_name)
    if c is None:
        return None
    for a in c.attributes:
        if a.name == feature_name:
            return a
    for r in c.references:
        if r.name == feature_name:
            return r
    return None


def feature_type_name(feature) -> str:
    """Current type of a feature: primitive name for attributes, target
    class name for references."""
    if isinstance(feature, t.AttributeDef):
        return feature.typeName
    return feature.target


def resolve_feature_ref(domain: t.Metamodel, ref: t.FeatureRef):
    """Resolved feature for a FeatureRef, or None when dangling."""
    return _declared_feature(domain, ref.className, ref.featureName)


def resolve(mset: t.EditorModelSet) -> list[Link]:
    """Total over arbitrarily broken link sets; never mutates its input."""
    domain, graph, tooling, mapping, emfgen = (
        mset.domain, mset.graph, mset.tooling, mset.mapping, mset.emfgen)
    node_names = {n.name for n in graph.nodes}
    label_names = {l.name for l in graph.diagramLabels}
    connection_names = {c.name for c in graph.connections}
    tool_titles = {tl.title for tl in tooling.tools}
    class_names = {c.name for c in domain.classes}

    links: list[Link] = []

    def add(path, kind, name, ok):
        links.append(Link("mapping", path, kind, name, ok))

    def add_ref(path, ref: t.FeatureRef):
        ok = resolve_feature_ref(domain, ref) is not None
        add(path, "feature", f"{ref.className}.{ref.featureName}", ok)

    for i, tnr in enumerate(mapping.topNodeReferences):
        base = f"topNodeReferences[{i}]"
        add_ref(f"{base}.containmentFeature", tnr.containmentFeature)
        nm = tnr.ownedChild
        add(f"{base}.ownedChild.domainMetaElement", "class", nm.domainMetaElement,
            nm.domainMetaElement in class_names)
        add(f"{base}.ownedChild.tool", "tool", nm.tool, nm.tool in tool_titles)
        add(f"{base}.ownedChild.diagramNode", "node", nm.diagramNode,
            nm.diagramNode in node_names)
        for j, flm in enumerate(nm.labelMappings):
            add(f"{base}.ownedChild.labelMappings[{j}].diagramLabel", "label",
                flm.diagramLabel, flm.diagramLabel in label_names)
            for k, ref in enumerate(flm.features):
                add_ref(f"{base}.ownedChild.labelMappings[{j}].features[{k}]", ref)

    for i, lm in enumerate(mapping.linkMappings):
        base = f"linkMappings[{i}]"
        add(f"{base}.domainMetaElement", "class", lm.domainMetaElement,
            lm.domainMetaElement in class_names)
        add(f"{base}.tool", "tool", lm.tool, lm.tool in tool_titles)
        add(f"{base}.diagramLink", "connection", lm.diagramLink,
            lm.diagramLink in connection_names)
        add_ref(f"{base}.sourceFeature", lm.sourceFeature)
        add_ref(f"{base}.targetFeature", lm.targetFeature)

    for i, gc in enumerate(emfgen.genClasses):
        links.append(Link("emfgen", f"genClasses[{i}]", "class", gc.className,
                          gc.className in class_names))
        c = domain.class_named(gc.className)
        declared = set(c.feature_names) if c is not None else set()
        for j, feat in enumerate(gc.genFeatures):
            links.append(Link("emfgen", f"genClasses[{i}].genFeatures[{j}]",
                              "feature", f"{gc.className}.{feat}",
                              feat in declared))

    return links


def dangling(links: list[Link]) -> list[Link]:
    return [l for l in links if not l.resolved]
