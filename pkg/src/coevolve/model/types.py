"""Immutable value types for the domain metamodel and the four companion
editor-definition models.

Cross-model links are plain strings (names and tool titles).  Dangling links
are representable on purpose: a broken mapping model must parse so that the
soundness analysis can blame it.  Only per-model structural invariants are
enforced here, via :meth:`check`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..errors import InvariantError

PRIMITIVE_TYPES = ("string", "int", "boolean", "float")

UNBOUNDED = "unbounded"

FIGURE_KINDS = ("Rectangle", "Ellipse", "Polyline", "Label")


# ---------------------------------------------------------------------------
# Domain metamodel
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AttributeDef:
    name: str
    typeName: str
    id: str | None = None

    def check(self, owner: str) -> None:
        if self.typeName not in PRIMITIVE_TYPES:
            raise InvariantError(
                f"attribute '{owner}.{self.name}' has unknown type "
                f"'{self.typeName}' (allowed: {', '.join(PRIMITIVE_TYPES)})",
                subject=f"{owner}.{self.name}",
            )


@dataclass(frozen=True)
class ReferenceDef:
    name: str
    target: str
    containment: bool = False
    lowerBound: int = 0
    upperBound: int | str = 1
    id: str | None = None

    def check(self, owner: str) -> None:
        subject = f"{owner}.{self.name}"
        if self.lowerBound < 0:
            raise InvariantError(f"reference '{subject}' has negative lowerBound", subject=subject)
        if self.upperBound != UNBOUNDED:
            if not isinstance(self.upperBound, int) or self.upperBound < 1:
                raise InvariantError(
                    f"reference '{subject}' upperBound must be a positive "
                    f"integer or '{UNBOUNDED}'", subject=subject)
            if self.lowerBound > self.upperBound:
                raise InvariantError(
                    f"reference '{subject}' has lowerBound > upperBound", subject=subject)


@dataclass(frozen=True)
class ClassDef:
    name: str
    abstract: bool = False
    superTypes: tuple[str, ...] = ()
    attributes: tuple[AttributeDef, ...] = ()
    references: tuple[ReferenceDef, ...] = ()
    id: str | None = None

    @property
    def feature_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes) + tuple(r.name for r in self.references)

    def shell(self) -> "ClassDef":
        """Class-level snapshot without features (used in diff entries)."""
        return replace(self, attributes=(), references=())


@dataclass(frozen=True)
class Metamodel:
    name: str
    classes: tuple[ClassDef, ...] = ()

    def class_named(self, name: str) -> ClassDef | None:
        for c in self.classes:
            if c.name == name:
                return c
        return None

    def supertype_closure(self, name: str) -> set[str]:
        """All transitive supertype names of the named class."""
        seen: set[str] = set()
        stack = list((self.class_named(name) or ClassDef(name)).superTypes)
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            c = self.class_named(s)
            if c is not None:
                stack.extend(c.superTypes)
        return seen

    def flattened_attributes(self, name: str) -> tuple[tuple[str, AttributeDef], ...]:
        """Declared plus inherited attributes as (owner name, attribute)."""
        out = []
        for owner in (name, *sorted(self.supertype_closure(name))):
            c = self.class_named(owner)
            if c is not None:
                out.extend((owner, a) for a in c.attributes)
        return tuple(out)

    def check(self) -> None:
        names = [c.name for c in self.classes]
        for n in names:
            if names.count(n) > 1:
                raise InvariantError(f"duplicate class name '{n}'", subject=n)
        ids = [e.id for c in self.classes
               for e in (c, *c.attributes, *c.references) if e.id is not None]
        for i in ids:
            if ids.count(i) > 1:
                raise InvariantError(f"duplicate element id '{i}'", subject=i)
        byname = {c.name: c for c in self.classes}
        for c in self.classes:
            for s in c.superTypes:
                if s not in byname:
                    raise InvariantError(
                        f"class '{c.name}' extends unknown class '{s}'", subject=c.name)
            for a in c.attributes:
                a.check(c.name)
            for r in c.references:
                r.check(c.name)
                if r.target not in byname:
                    raise InvariantError(
                        f"reference '{c.name}.{r.name}' targets unknown class "
                        f"'{r.target}'", subject=f"{c.name}.{r.name}")
        self._check_acyclic(byname)
        for c in self.classes:
            feats = [n for owner in (c.name, *self.supertype_closure(c.name))
                     if owner in byname
                     for n in byname[owner].feature_names]
            for n in feats:
                if feats.count(n) > 1:
                    raise InvariantError(
                        f"feature '{n}' duplicated in class '{c.name}' "
                        f"(including inherited features)", subject=f"{c.name}.{n}")

    def _check_acyclic(self, byname: dict[str, ClassDef]) -> None:
        for start in byname:
            seen = set()
            stack = list(byname[start].superTypes)
            while stack:
                s = stack.pop()
                if s == start:
                    raise InvariantError(
                        f"inheritance cycle through class '{start}'", subject=start)
                if s in seen or s not in byname:
                    continue
                seen.add(s)
                stack.extend(byname[s].superTypes)


# ---------------------------------------------------------------------------
# Graphical definition model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FigureDef:
    name: str
    kind: str


@dataclass(frozen=True)
class NodeDef:
    name: str
    figure: str


@dataclass(frozen=True)
class ConnectionDef:
    name: str
    figure: str


@dataclass(frozen=True)
class LabelDef:
    name: str
    figure: str


@dataclass(frozen=True)
class GraphModel:
    figures: tuple[FigureDef, ...] = ()
    nodes: tuple[NodeDef, ...] = ()
    connections: tuple[ConnectionDef, ...] = ()
    diagramLabels: tuple[LabelDef, ...] = ()

    def check(self) -> None:
        for f in self.figures:
            if f.kind not in FIGURE_KINDS:
                raise InvariantError(
                    f"figure '{f.name}' has unknown kind '{f.kind}'", subject=f.name)
        fignames = [f.name for f in self.figures]
        for category, elems in (("figure", self.figures), ("node", self.nodes),
                                ("connection", self.connections),
                                ("diagram label", self.diagramLabels)):
            names = [e.name for e in elems]
            for n in names:
                if names.count(n) > 1:
                    raise InvariantError(f"duplicate {category} name '{n}'", subject=n)
        for e in (*self.nodes, *self.connections, *self.diagramLabels):
            if e.figure not in fignames:
                raise InvariantError(
                    f"graph element '{e.name}' references unknown figure "
                    f"'{e.figure}'", subject=e.name)


# ---------------------------------------------------------------------------
# Tooling definition model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CreationTool:
    title: str
    description: str = ""


@dataclass(frozen=True)
class ToolGroup:
    name: str
    tools: tuple[CreationTool, ...] = ()


@dataclass(frozen=True)
class ToolingModel:
    palette: tuple[ToolGroup, ...] = ()

    @property
    def tools(self) -> tuple[CreationTool, ...]:
        return tuple(t for g in self.palette for t in g.tools)

    def tool_titled(self, title: str) -> CreationTool | None:
        for t in self.tools:
            if t.title == title:
                return t
        return None

    def check(self) -> None:
        titles = [t.title for t in self.tools]
        for t in titles:
            if titles.count(t) > 1:
                raise InvariantError(f"duplicate tool title '{t}'", subject=t)


# ---------------------------------------------------------------------------
# Mapping model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FeatureRef:
    """Name-based pointer to a declared feature; ``recordedTypeName`` stores
    the feature's type at link time so stale typing is detectable."""

    className: str
    featureName: str
    recordedTypeName: str


@dataclass(frozen=True)
class FeatureLabelMapping:
    features: tuple[FeatureRef, ...]
    diagramLabel: str


@dataclass(frozen=True)
class NodeMapping:
    domainMetaElement: str
    tool: str
    diagramNode: str
    labelMappings: tuple[FeatureLabelMapping, ...] = ()


@dataclass(frozen=True)
class TopNodeReference:
    containmentFeature: FeatureRef
    ownedChild: NodeMapping


@dataclass(frozen=True)
class LinkMapping:
    domainMetaElement: str
    tool: str
    diagramLink: str
    sourceFeature: FeatureRef
    targetFeature: FeatureRef


@dataclass(frozen=True)
class MappingModel:
    topNodeReferences: tuple[TopNodeReference, ...] = ()
    linkMappings: tuple[LinkMapping, ...] = ()

    def check(self) -> None:
        # Structural well-formedness only: resolution against the domain is
        # the soundness analysis, and broken mappings must stay parseable.
        pass


# ---------------------------------------------------------------------------
# EMF generator configuration model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GenClass:
    className: str
    genFeatures: tuple[str, ...] = ()


@dataclass(frozen=True)
class EmfGenModel:
    packagePrefix: str = ""
    genClasses: tuple[GenClass, ...] = ()

    def check(self) -> None:
        names = [g.className for g in self.genClasses]
        for n in names:
            if names.count(n) > 1:
                raise InvariantError(f"duplicate genClass '{n}'", subject=n)


# ---------------------------------------------------------------------------
# The full editor model set
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EditorModelSet:
    domain: Metamodel = field(default_factory=lambda: Metamodel(name="empty"))
    graph: GraphModel = field(default_factory=GraphModel)
    tooling: ToolingModel = field(default_factory=ToolingModel)
    mapping: MappingModel = field(default_factory=MappingModel)
    emfgen: EmfGenModel = field(default_factory=EmfGenModel)
