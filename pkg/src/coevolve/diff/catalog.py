"""Classification of diff entries against the fixed change catalog.

Every diff entry is covered by exactly one catalog change, or surfaced as
``Unclassified``.  The compound specialization pattern (new concrete class
under a new abstract superclass that an existing class was also put under,
with an attribute pulled up into the superclass) is matched before the
atomic rules, so that its classifications share role bindings s1..s5.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import Metamodel
from . import model as dm

ADD_EMPTY_CONCRETE_CLASS = "AddEmptyConcreteClass"
ADD_EMPTY_ABSTRACT_CLASS = "AddEmptyAbstractClass"
ADD_SPECIALIZATION = "AddSpecialization"
DELETE_CONCRETE_CLASS = "DeleteConcreteClass"
RENAME_CLASS = "RenameClass"
ADD_PROPERTY = "AddProperty"
DELETE_PROPERTY = "DeleteProperty"
RENAME_PROPERTY = "RenameProperty"
MOVE_PROPERTY = "MoveProperty"
PULL_UP_PROPERTY = "PullUpProperty"
CHANGE_PROPERTY_TYPE = "ChangePropertyType"
UNCLASSIFIED = "Unclassified"

CATALOG_KINDS = (
    ADD_EMPTY_CONCRETE_CLASS, ADD_EMPTY_ABSTRACT_CLASS, ADD_SPECIALIZATION,
    DELETE_CONCRETE_CLASS, RENAME_CLASS, ADD_PROPERTY, DELETE_PROPERTY,
    RENAME_PROPERTY, MOVE_PROPERTY, PULL_UP_PROPERTY, CHANGE_PROPERTY_TYPE,
)


@dataclass(frozen=True)
class CatalogChange:
    kind: str
    bindings: tuple[tuple[str, str], ...] = ()

    @property
    def binding_map(self) -> dict[str, str]:
        return dict(self.bindings)

    @staticmethod
    def make(kind: str, **bindings: str) -> "CatalogChange":
        return CatalogChange(kind, tuple(sorted(bindings.items())))


def _compound_matches(diff: dm.DiffModel):
    """Matches of the 5-role specialization-with-pull-up source pattern.

    Returns {entry index: CatalogChange} for the entries the pattern covers.
    """
    entries = diff.entries
    added_concrete = [(i, e) for i, e in enumerate(entries)
                      if isinstance(e, dm.AddedClass) and not e.new.abstract]
    added_abstract = {e.new.name: (i, e) for i, e in enumerate(entries)
                      if isinstance(e, dm.AddedClass) and e.new.abstract}
    changed = [(i, e) for i, e in enumerate(entries) if isinstance(e, dm.ChangedClass)]
    pulled = [(i, e) for i, e in enumerate(entries) if isinstance(e, dm.ChangedAttribute)]

    covered: dict[int, CatalogChange] = {}
    for i1, s1 in added_concrete:
        for s2name in s1.new.superTypes:
            if s2name not in added_abstract:
                continue
            for i3, s3 in changed:
                if s2name not in s3.updated.superTypes:
                    continue
                for i4, s4 in pulled:
                    if s4.oldOwner != s3.old.name or s4.newOwner != s2name:
                        continue
                    bindings = dict(s1=s1.new.name, s2=s2name, s3=s3.old.name,
                                    s4=s4.old.name, s5=s4.updated.name)
                    covered.setdefault(i1, CatalogChange.make(ADD_SPECIALIZATION, **bindings))
                    covered.setdefault(i4, CatalogChange.make(PULL_UP_PROPERTY, **bindings))
    return covered


def _classify_entry(e: dm.DiffEntry, rename: dict[str, str], new: Metamodel) -> CatalogChange:
    if isinstance(e, dm.AddedClass):
        if e.new.abstract:
            return CatalogChange.make(ADD_EMPTY_ABSTRACT_CLASS, className=e.new.name)
        if e.new.superTypes:
            return CatalogChange.make(ADD_SPECIALIZATION, className=e.new.name,
                                      superClass=e.new.superTypes[0])
        return CatalogChange.make(ADD_EMPTY_CONCRETE_CLASS, className=e.new.name)

    if isinstance(e, dm.DeletedClass):
        if e.old.abstract:
            return CatalogChange.make(UNCLASSIFIED, className=e.old.name,
                                      reason="deletion of an abstract class")
        return CatalogChange.make(DELETE_CONCRETE_CLASS, className=e.old.name)

    if isinstance(e, dm.ChangedClass):
        if e.old.name != e.updated.name:
            return CatalogChange.make(RENAME_CLASS, oldName=e.old.name,
                                      newName=e.updated.name)
        if e.old.abstract != e.updated.abstract:
            # abstractness toggles are surfaced, not guessed
            return CatalogChange.make(UNCLASSIFIED, className=e.old.name,
                                      reason="abstractness changed")
        mapped_old = {rename.get(s, s) for s in e.old.superTypes}
        gained = [s for s in e.updated.superTypes if s not in mapped_old]
        if gained and set(e.updated.superTypes) >= mapped_old:
            return CatalogChange.make(ADD_SPECIALIZATION, className=e.old.name,
                                      superClass=gained[0])
        return CatalogChange.make(UNCLASSIFIED, className=e.old.name,
                                  reason="unsupported class change")

    if isinstance(e, (dm.AddedAttribute, dm.AddedReference)):
        return CatalogChange.make(ADD_PROPERTY, owner=e.owner, property=e.new.name)

    if isinstance(e, (dm.DeletedAttribute, dm.DeletedReference)):
        return CatalogChange.make(DELETE_PROPERTY, owner=e.owner, property=e.old.name)

    # changed feature
    owner_now = rename.get(e.oldOwner, e.oldOwner)
    if owner_now != e.newOwner:
        if e.newOwner in new.supertype_closure(owner_now):
            return CatalogChange.make(PULL_UP_PROPERTY, property=e.old.name,
                                      owner=e.oldOwner, newOwner=e.newOwner)
        return CatalogChange.make(MOVE_PROPERTY, property=e.old.name,
                                  owner=e.oldOwner, newOwner=e.newOwner)
    if e.old.name != e.updated.name:
        return CatalogChange.make(RENAME_PROPERTY, owner=e.oldOwner,
                                  oldName=e.old.name, newName=e.updated.name)
    if isinstance(e, dm.ChangedAttribute) and e.old.typeName != e.updated.typeName:
        return CatalogChange.make(CHANGE_PROPERTY_TYPE, owner=e.oldOwner,
                                  property=e.old.name, oldType=e.old.typeName,
                                  newType=e.updated.typeName)
    if isinstance(e, dm.ChangedReference) and \
            rename.get(e.old.target, e.old.target) != e.updated.target:
        return CatalogChange.make(CHANGE_PROPERTY_TYPE, owner=e.oldOwner,
                                  property=e.old.name, oldType=e.old.target,
                                  newType=e.updated.target)
    return CatalogChange.make(UNCLASSIFIED, owner=e.oldOwner, property=e.old.name,
                              reason="unsupported property change")


@dataclass(frozen=True)
class ClassifiedDiff:
    """Diff entries paired with the catalog change that covers each."""

    entries: tuple[tuple[dm.DiffEntry, CatalogChange], ...] = ()

    @property
    def changes(self) -> tuple[CatalogChange, ...]:
        return tuple(c for _, c in self.entries)

    def of_kind(self, kind: str) -> tuple[tuple[dm.DiffEntry, CatalogChange], ...]:
        return tuple((e, c) for e, c in self.entries if c.kind == kind)


def classify_changes(diff: dm.DiffModel, old: Metamodel, new: Metamodel) -> list[CatalogChange]:
    """One catalog change (or Unclassified) per diff entry."""
    return [c for _, c in classify_entries(diff, old, new).entries]


def classify_entries(diff: dm.DiffModel, old: Metamodel, new: Metamodel) -> ClassifiedDiff:
    rename = diff.rename_map()
    compound = _compound_matches(diff)
    out = []
    for i, e in enumerate(diff.entries):
        change = compound.get(i)
        if change is None:
            change = _classify_entry(e, rename, new)
        out.append((e, change))
    return ClassifiedDiff(entries=tuple(out))
