"""Built-in evolution scenarios.

Each scenario pairs a sound editor model set with an evolved domain
metamodel: one scenario per catalog change, the compound mind-map scenario,
and a plain add-class-as-specialization scenario.  The editor companions are
derived mechanically from the old metamodel so that every scenario starts
from a level-3 editor.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from functools import cached_property

from .model import (AttributeDef, ClassDef, ConnectionDef, CreationTool,
                    EditorModelSet, EmfGenModel, FeatureLabelMapping,
                    FeatureRef, FigureDef, GenClass, GraphModel, LabelDef,
                    LinkMapping, MappingModel, Metamodel, NodeDef, NodeMapping,
                    ReferenceDef, ToolGroup, ToolingModel, TopNodeReference)
from .model.resolve import feature_type_name
from .diff.model import DiffModel, compute_diff

UNBOUNDED = "unbounded"


def sound_editor(domain: Metamodel, canvas: str,
                 link_classes: dict[str, tuple[str, str]] | None = None
                 ) -> EditorModelSet:
    """A fully sound editor model set for ``domain``.

    ``canvas`` names the class represented by the diagram surface;
    ``link_classes`` maps class names drawn as connections to the names of
    their (source, target) reference features.
    """
    domain.check()
    link_classes = link_classes or {}
    canvas_class = domain.class_named(canvas)

    def containment_for(name: str) -> FeatureRef:
        acceptable = {name} | domain.supertype_closure(name)
        for r in canvas_class.references:
            if r.containment and r.target in acceptable:
                return FeatureRef(className=canvas, featureName=r.name,
                                  recordedTypeName=r.target)
        raise ValueError(f"no containment feature on '{canvas}' for '{name}'")

    figures, nodes, connections, labels = [], [], [], []
    tools, tnrs, links = [], [], []
    for c in domain.classes:
        if c.abstract or c.name == canvas:
            continue
        tools.append(CreationTool(title=c.name,
                                  description=f"Create new {c.name}"))
        if c.name in link_classes:
            figures.append(FigureDef(name=f"{c.name}Figure", kind="Polyline"))
            connections.append(ConnectionDef(name=f"{c.name}Link",
                                             figure=f"{c.name}Figure"))
            src, tgt = link_classes[c.name]
            by_name = {r.name: r for r in c.references}
            links.append(LinkMapping(
                domainMetaElement=c.name, tool=c.name,
                diagramLink=f"{c.name}Link",
                sourceFeature=FeatureRef(c.name, src,
                                         feature_type_name(by_name[src])),
                targetFeature=FeatureRef(c.name, tgt,
                                         feature_type_name(by_name[tgt]))))
            continue
        figures.append(FigureDef(name=f"{c.name}Figure", kind="Rectangle"))
        nodes.append(NodeDef(name=f"{c.name}Node", figure=f"{c.name}Figure"))
        flms = []
        for owner, attr in domain.flattened_attributes(c.name):
            label = f"{c.name}{attr.name}Label"
            figures.append(FigureDef(name=f"{label}Figure", kind="Label"))
            labels.append(LabelDef(name=label, figure=f"{label}Figure"))
            flms.append(FeatureLabelMapping(
                features=(FeatureRef(owner, attr.name, attr.typeName),),
                diagramLabel=label))
        tnrs.append(TopNodeReference(
            containmentFeature=containment_for(c.name),
            ownedChild=NodeMapping(domainMetaElement=c.name,
                                   tool=c.name,
                                   diagramNode=f"{c.name}Node",
                                   labelMappings=tuple(flms))))

    emfgen = EmfGenModel(
        packagePrefix=domain.name.lower(),
        genClasses=tuple(GenClass(className=c.name, genFeatures=c.feature_names)
                         for c in domain.classes))
    return EditorModelSet(
        domain=domain,
        graph=GraphModel(figures=tuple(figures), nodes=tuple(nodes),
                         connections=tuple(connections),
                         diagramLabels=tuple(labels)),
        tooling=ToolingModel(palette=(
            ToolGroup(name="default", tools=tuple(tools)),)),
        mapping=MappingModel(topNodeReferences=tuple(tnrs),
                             linkMappings=tuple(links)),
        emfgen=emfgen)


@dataclass(frozen=True)
class Scenario:
    name: str
    description: str
    old: EditorModelSet
    new_domain: Metamodel

    @cached_property
    def diff(self) -> DiffModel:
        return compute_diff(self.old.domain, self.new_domain)

    @cached_property
    def before(self) -> EditorModelSet:
        """Evolved domain, companion models not yet adapted."""
        return replace(self.old, domain=self.new_domain)


def _cls(name, *, abstract=False, supers=(), attrs=(), refs=(), id=None):
    return ClassDef(name=name, abstract=abstract, superTypes=tuple(supers),
                    attributes=tuple(attrs), references=tuple(refs), id=id)


def _root(*contained: tuple[str, str]) -> ClassDef:
    """A canvas class with one unbounded containment per (refName, target)."""
    return _cls("Root", refs=[ReferenceDef(name=n, target=t, containment=True,
                                           upperBound=UNBOUNDED)
                              for n, t in contained])


def _single_class_base() -> Metamodel:
    return Metamodel(name="Sample", classes=(
        _root(("elements", "A")),
        _cls("A", attrs=[AttributeDef("name", "string")]),
    ))


def _scenario(name, description, old_domain, new_domain, canvas="Root",
              link_classes=None) -> Scenario:
    new_domain.check()
    return Scenario(name=name, description=description,
                    old=sound_editor(old_domain, canvas, link_classes),
                    new_domain=new_domain)


def _add_empty_concrete_class() -> Scenario:
    old = _single_class_base()
    new = replace(old, classes=(*old.classes, _cls("B")))
    return _scenario("add-empty-concrete-class",
                     "a new concrete class appears without any supertype",
                     old, new)


def _add_empty_abstract_class() -> Scenario:
    old = _single_class_base()
    new = replace(old, classes=(*old.classes, _cls("B", abstract=True)))
    return _scenario("add-empty-abstract-class",
                     "a new abstract class appears", old, new)


def _add_specialization() -> Scenario:
    old = Metamodel(name="Sample", classes=(
        _root(("elements", "A")),
        _cls("A", attrs=[AttributeDef("name", "string")]),
        _cls("S", abstract=True),
    ))
    new = replace(old, classes=tuple(
        replace(c, superTypes=("S",)) if c.name == "A" else c
        for c in old.classes))
    return _scenario("add-specialization",
                     "an existing class is put under an existing empty "
                     "abstract class", old, new)


def _delete_concrete_class() -> Scenario:
    old = Metamodel(name="Sample", classes=(
        _root(("elements", "A")),
        _cls("A", attrs=[AttributeDef("name", "string")]),
        _cls("B", supers=("A",)),
    ))
    new = replace(old, classes=tuple(c for c in old.classes if c.name != "B"))
    return _scenario("delete-concrete-class",
                     "a concrete subclass disappears", old, new)


def _rename_class() -> Scenario:
    old = _single_class_base()
    new = Metamodel(name="Sample", classes=(
        _root(("elements", "Z")),
        _cls("Z", attrs=[AttributeDef("name", "string")]),
    ))
    return _scenario("rename-class", "class A becomes Z", old, new)


def _add_property() -> Scenario:
    old = _single_class_base()
    new = replace(old, classes=tuple(
        replace(c, attributes=(*c.attributes, AttributeDef("count", "int")))
        if c.name == "A" else c for c in old.classes))
    return _scenario("add-property", "class A gains an attribute", old, new)


def _property_rich_base() -> Metamodel:
    return Metamodel(name="Sample", classes=(
        _root(("elements", "A")),
        _cls("A", attrs=[AttributeDef("name", "string"),
                         AttributeDef("count", "int")]),
    ))


def _delete_property() -> Scenario:
    old = _property_rich_base()
    new = replace(old, classes=tuple(
        replace(c, attributes=tuple(a for a in c.attributes
                                    if a.name != "count"))
        if c.name == "A" else c for c in old.classes))
    return _scenario("delete-property", "class A loses an attribute", old, new)


def _rename_property() -> Scenario:
    old = _single_class_base()
    new = replace(old, classes=tuple(
        replace(c, attributes=(AttributeDef("label", "string"),))
        if c.name == "A" else c for c in old.classes))
    return _scenario("rename-property", "A.name becomes A.label", old, new)


def _move_property() -> Scenario:
    old = Metamodel(name="Sample", classes=(
        _root(("as", "A"), ("bs", "B")),
        _cls("A", attrs=[AttributeDef("name", "string"),
                         AttributeDef("count", "int")]),
        _cls("B", attrs=[AttributeDef("name", "string")]),
    ))
    new = replace(old, classes=(
        old.classes[0],
        _cls("A", attrs=[AttributeDef("name", "string")]),
        _cls("B", attrs=[AttributeDef("name", "string"),
                         AttributeDef("count", "int")]),
    ))
    return _scenario("move-property",
                     "A.count moves to the unrelated class B", old, new)


def _pull_up_property() -> Scenario:
    old = Metamodel(name="Sample", classes=(
        _root(("elements", "Base")),
        _cls("Base", abstract=True),
        _cls("Sub", supers=("Base",), attrs=[AttributeDef("count", "int")]),
        _cls("Sub2", supers=("Base",)),
    ))
    new = replace(old, classes=(
        old.classes[0],
        _cls("Base", abstract=True, attrs=[AttributeDef("count", "int")]),
        _cls("Sub", supers=("Base",)),
        _cls("Sub2", supers=("Base",)),
    ))
    return _scenario("pull-up-property",
                     "Sub.count is pulled up into the shared superclass",
                     old, new)


def _change_property_type() -> Scenario:
    old = _property_rich_base()
    new = replace(old, classes=tuple(
        replace(c, attributes=(AttributeDef("name", "string"),
                               AttributeDef("count", "string")))
        if c.name == "A" else c for c in old.classes))
    return _scenario("change-property-type",
                     "A.count changes from int to string", old, new)


def _mind_map() -> Scenario:
    old = Metamodel(name="Mindmap", classes=(
        _cls("Mindmap", refs=[
            ReferenceDef("topics", "Topic", containment=True,
                         upperBound=UNBOUNDED),
            ReferenceDef("relations", "Relation", containment=True,
                         upperBound=UNBOUNDED)]),
        _cls("Topic", attrs=[AttributeDef("name", "string")], id="c.topic"),
        _cls("Relation", refs=[ReferenceDef("source", "Topic", lowerBound=1),
                               ReferenceDef("target", "Topic", lowerBound=1)]),
    ))
    new = Metamodel(name="Mindmap", classes=(
        _cls("Mindmap", refs=[
            ReferenceDef("topics", "ScientificTopic", containment=True,
                         upperBound=UNBOUNDED),
            ReferenceDef("relations", "Relation", containment=True,
                         upperBound=UNBOUNDED)]),
        _cls("NamedElement", abstract=True,
             attrs=[AttributeDef("name", "string"),
                    AttributeDef("duration", "int")]),
        _cls("ScientificTopic", supers=("NamedElement",), id="c.topic"),
        _cls("LiteratureTopic", supers=("NamedElement",)),
        _cls("Relation", refs=[
            ReferenceDef("source", "ScientificTopic", lowerBound=1),
            ReferenceDef("target", "ScientificTopic", lowerBound=1)]),
    ))
    return _scenario(
        "mind-map",
        "compound change: Topic becomes ScientificTopic under a new abstract "
        "NamedElement that takes over 'name', gains 'duration', and a new "
        "LiteratureTopic specialization appears",
        old, new, canvas="Mindmap",
        link_classes={"Relation": ("source", "target")})


def _add_class_as_specialization() -> Scenario:
    old = Metamodel(name="Sample", classes=(
        _root(("elements", "Base")),
        _cls("Base", abstract=True, attrs=[AttributeDef("name", "string")]),
        _cls("Item", supers=("Base",)),
    ))
    new = replace(old, classes=(*old.classes, _cls("Ext", supers=("Base",))))
    return _scenario("add-class-as-specialization",
                     "a new concrete class appears under an existing "
                     "abstract class with a managed sibling", old, new)


_BUILDERS = {
    "add-empty-concrete-class": _add_empty_concrete_class,
    "add-empty-abstract-class": _add_empty_abstract_class,
    "add-specialization": _add_specialization,
    "delete-concrete-class": _delete_concrete_class,
    "rename-class": _rename_class,
    "add-property": _add_property,
    "delete-property": _delete_property,
    "rename-property": _rename_property,
    "move-property": _move_property,
    "pull-up-property": _pull_up_property,
    "change-property-type": _change_property_type,
    "mind-map": _mind_map,
    "add-class-as-specialization": _add_class_as_specialization,
}

#: the rows of the verdict matrix, in catalog order
CATALOG_SCENARIOS = tuple(n for n in _BUILDERS
                          if n not in ("mind-map", "add-class-as-specialization"))


def scenario_names() -> tuple[str, ...]:
    return tuple(_BUILDERS)


def scenario(name: str) -> Scenario:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise KeyError(f"unknown scenario '{name}' "
                       f"(known: {', '.join(_BUILDERS)})") from None


def all_scenarios() -> tuple[Scenario, ...]:
    return tuple(b() for b in _BUILDERS.values())


def dump_scenario(sc: Scenario, directory) -> None:
    """Write a scenario as files: the old model set under ``old/`` plus the
    evolved metamodel as ``new.mm.json``."""
    from pathlib import Path

    from .model.io import serialize_model
    from .workspace import write_model_set

    directory = Path(directory)
    write_model_set(directory / "old", sc.old)
    (directory / "new.mm.json").write_bytes(serialize_model(sc.new_domain))
