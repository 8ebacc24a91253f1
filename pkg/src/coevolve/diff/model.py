"""Difference model: entry types, diff computation, and patch application.

Conventions:

* Class entries carry feature-free shells; every feature addition, removal,
  move, or change is its own entry.  The one exception is ``DeletedClass``,
  which carries the full old class: deleting a class deletes its features
  implicitly, so no per-feature entries accompany it.
* Old-side fields (``old``, ``oldOwner``) are in the old metamodel's
  namespace; new-side fields (``new``, ``updated``, ``owner``, ``newOwner``)
  are in the new one.
* Matched elements are compared modulo the class correspondence: a reference
  whose target merely followed a class rename produces no entry.
* Entries are kept in canonical order (class entries before feature entries,
  then by entry kind and element name) so serialized diffs are byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from ..errors import DiffConflictError, ParseError
from ..model import AttributeDef, ClassDef, Metamodel, ReferenceDef
from ..model import io as model_io
from .matching import Correspondence, match_elements

KIND_DIFF = "diff"
DIFF_EXTENSION = ".diff.json"


@dataclass(frozen=True)
class AddedClass:
    new: ClassDef  # shell: features arrive as separate entries


@dataclass(frozen=True)
class DeletedClass:
    old: ClassDef  # full class: features go down with it


@dataclass(frozen=True)
class ChangedClass:
    old: ClassDef
    updated: ClassDef


@dataclass(frozen=True)
class AddedAttribute:
    owner: str
    new: AttributeDef


@dataclass(frozen=True)
class DeletedAttribute:
    owner: str
    old: AttributeDef


@dataclass(frozen=True)
class ChangedAttribute:
    oldOwner: str
    old: AttributeDef
    newOwner: str
    updated: AttributeDef


@dataclass(frozen=True)
class AddedReference:
    owner: str
    new: ReferenceDef


@dataclass(frozen=True)
class DeletedReference:
    owner: str
    old: ReferenceDef


@dataclass(frozen=True)
class ChangedReference:
    oldOwner: str
    old: ReferenceDef
    newOwner: str
    updated: ReferenceDef


DiffEntry = Union[AddedClass, DeletedClass, ChangedClass,
                  AddedAttribute, DeletedAttribute, ChangedAttribute,
                  AddedReference, DeletedReference, ChangedReference]

_CLASS_ENTRIES = (AddedClass, DeletedClass, ChangedClass)


@dataclass(frozen=True)
class DiffModel:
    entries: tuple[DiffEntry, ...] = ()

    def __len__(self) -> int:
        return len(self.entries)

    def rename_map(self) -> dict[str, str]:
        """Old class name -> new class name for every changed class."""
        return {e.old.name: e.updated.name for e in self.entries
                if isinstance(e, ChangedClass)}


def _entry_sort_key(entry: DiffEntry):
    kind = type(entry).__name__
    if isinstance(entry, _CLASS_ENTRIES):
        name = entry.new.name if isinstance(entry, AddedClass) else entry.old.name
        return (0, kind, name, "")
    if isinstance(entry, (AddedAttribute, AddedReference)):
        return (1, kind, entry.owner, entry.new.name)
    if isinstance(entry, (DeletedAttribute, DeletedReference)):
        return (1, kind, entry.owner, entry.old.name)
    return (1, kind, entry.oldOwner, entry.old.name)


def canonical_entries(entries) -> tuple[DiffEntry, ...]:
    return tuple(sorted(entries, key=_entry_sort_key))


# ---------------------------------------------------------------------------
# Canonical metamodel equality
# ---------------------------------------------------------------------------

def canonicalize(m: Metamodel) -> Metamodel:
    """Order-insensitive normal form: classes, features, and supertype lists
    sorted by name.  Used for the diff round-trip equality check."""
    classes = []
    for c in sorted(m.classes, key=lambda c: c.name):
        classes.append(replace(
            c,
            superTypes=tuple(sorted(c.superTypes)),
            attributes=tuple(sorted(c.attributes, key=lambda a: a.name)),
            references=tuple(sorted(c.references, key=lambda r: r.name))))
    return replace(m, classes=tuple(classes))


def canonical_equal(a: Metamodel, b: Metamodel) -> bool:
    return canonicalize(a) == canonicalize(b)


# ---------------------------------------------------------------------------
# Diff computation
# ---------------------------------------------------------------------------

def _class_level_equal(old: ClassDef, new: ClassDef, corr: Correspondence) -> bool:
    mapped_supers = tuple(corr.map_class(s) for s in old.superTypes)
    return (old.name == new.name and old.abstract == new.abstract
            and mapped_supers == new.superTypes)


def _attr_equal(old: AttributeDef, new: AttributeDef) -> bool:
    return old.name == new.name and old.typeName == new.typeName


def _ref_equal(old: ReferenceDef, new: ReferenceDef, corr: Correspondence) -> bool:
    return (old.name == new.name
            and corr.map_class(old.target) == new.target
            and old.containment == new.containment
            and old.lowerBound == new.lowerBound
            and old.upperBound == new.upperBound)


def compute_diff(old: Metamodel, new: Metamodel,
                 correspondence: Correspondence | None = None) -> DiffModel:
    """Complete (``apply_diff(old, result)`` equals ``new`` up to canonical
    ordering) and minimal with respect to the correspondence."""
    corr = correspondence if correspondence is not None else match_elements(old, new)
    entries: list[DiffEntry] = []

    old_by_name = {c.name: c for c in old.classes}
    new_by_name = {c.name: c for c in new.classes}

    matched_new_classes = set()
    deleted_classes = set()
    for c in old.classes:
        target = corr.classes.get(c.name)
        if target is None or target not in new_by_name:
            entries.append(DeletedClass(old=c))
            deleted_classes.add(c.name)
            continue
        matched_new_classes.add(target)
        n = new_by_name[target]
        if not _class_level_equal(c, n, corr):
            entries.append(ChangedClass(old=c.shell(), updated=n.shell()))
    for c in new.classes:
        if c.name not in matched_new_classes:
            entries.append(AddedClass(new=c.shell()))

    entries.extend(_feature_entries(
        old, new, corr, deleted_classes,
        "attributes", corr.attributes, AddedAttribute, DeletedAttribute,
        ChangedAttribute, lambda o, n: _attr_equal(o, n)))
    entries.extend(_feature_entries(
        old, new, corr, deleted_classes,
        "references", corr.references, AddedReference, DeletedReference,
        ChangedReference, lambda o, n: _ref_equal(o, n, corr)))

    return DiffModel(entries=canonical_entries(entries))


def _feature_entries(old, new, corr, deleted_classes, field_name, table,
                     added_cls, deleted_cls, changed_cls, equal):
    entries = []
    new_index = {}
    for c in new.classes:
        for f in getattr(c, field_name):
            new_index[(c.name, f.name)] = f
    matched_new = set()
    for c in old.classes:
        if c.name in deleted_classes:
            continue  # class deletion subsumes its features
        for f in getattr(c, field_name):
            target = table.get((c.name, f.name))
            if target is None or target not in new_index:
                entries.append(deleted_cls(owner=c.name, old=f))
                continue
            matched_new.add(target)
            nf = new_index[target]
            same_owner = corr.map_class(c.name) == target[0]
            if same_owner and equal(f, nf):
                continue
            entries.append(changed_cls(oldOwner=c.name, old=f,
                                       newOwner=target[0], updated=nf))
    for (owner, _), f in new_index.items():
        if (owner, f.name) not in matched_new:
            entries.append(added_cls(owner=owner, new=f))
    return entries


# ---------------------------------------------------------------------------
# Patch application
# ---------------------------------------------------------------------------

def apply_diff(old: Metamodel, diff: DiffModel) -> Metamodel:
    """Deterministic patched metamodel: additions appended in canonical
    position, deletions removed, changes replaced by the updated element."""
    rename = diff.rename_map()
    changed = {e.old.name: e for e in diff.entries if isinstance(e, ChangedClass)}
    deleted = {e.old.name for e in diff.entries if isinstance(e, DeletedClass)}
    added = [e.new for e in diff.entries if isinstance(e, AddedClass)]

    for name in (*changed, *deleted):
        if old.class_named(name) is None:
            raise DiffConflictError(f"class '{name}' not present in the old metamodel")

    # class phase: mutable (name -> feature lists) in new-namespace
    classes: list[dict] = []
    for c in old.classes:
        if c.name in deleted:
            continue
        if c.name in changed:
            shell = changed[c.name].updated
            head = dict(id=shell.id, name=shell.name, abstract=shell.abstract,
                        superTypes=tuple(shell.superTypes))
        else:
            head = dict(id=c.id, name=c.name, abstract=c.abstract,
                        superTypes=tuple(rename.get(s, s) for s in c.superTypes))
        head["attributes"] = [replace(a) for a in c.attributes]
        head["references"] = [replace(r, target=rename.get(r.target, r.target))
                              for r in c.references]
        head["_oldName"] = c.name
        classes.append(head)
    for shell in added:
        classes.append(dict(id=shell.id, name=shell.name, abstract=shell.abstract,
                            superTypes=tuple(shell.superTypes),
                            attributes=[], references=[], _oldName=None))

    by_new_name = {}
    by_old_name = {}
    for head in classes:
        if head["name"] in by_new_name:
            raise DiffConflictError(f"duplicate class '{head['name']}' after patch")
        by_new_name[head["name"]] = head
        if head["_oldName"] is not None:
            by_old_name[head["_oldName"]] = head

    def feature_list(head, feature):
        return head["attributes" if isinstance(feature, AttributeDef) else "references"]

    def take(owner_old: str, feature) -> None:
        head = by_old_name.get(owner_old)
        if head is None:
            raise DiffConflictError(f"class '{owner_old}' not present in the old metamodel")
        pool = feature_list(head, feature)
        hits = [f for f in pool if f.name == feature.name]
        if len(hits) != 1:
            raise DiffConflictError(
                f"feature '{owner_old}.{feature.name}' "
                f"{'missing' if not hits else 'duplicated'} in the old metamodel")
        pool.remove(hits[0])

    def put(owner_new: str, feature) -> None:
        head = by_new_name.get(owner_new)
        if head is None:
            raise DiffConflictError(f"class '{owner_new}' not present after patch")
        feature_list(head, feature).append(feature)

    for e in diff.entries:
        if isinstance(e, (DeletedAttribute, DeletedReference)):
            take(e.owner, e.old)
        elif isinstance(e, (ChangedAttribute, ChangedReference)):
            take(e.oldOwner, e.old)
            put(e.newOwner, e.updated)
    for e in diff.entries:
        if isinstance(e, (AddedAttribute, AddedReference)):
            put(e.owner, e.new)

    return Metamodel(name=old.name, classes=tuple(
        ClassDef(id=h["id"], name=h["name"], abstract=h["abstract"],
                 superTypes=h["superTypes"],
                 attributes=tuple(h["attributes"]),
                 references=tuple(h["references"]))
        for h in classes))


# ---------------------------------------------------------------------------
# Serialization (.diff.json, kind "diff")
# ---------------------------------------------------------------------------

def _entry_to_doc(e: DiffEntry) -> dict:
    kind = type(e).__name__
    if isinstance(e, AddedClass):
        return {"entry": kind, "new": model_io.classdef_to_doc(e.new)}
    if isinstance(e, DeletedClass):
        return {"entry": kind, "old": model_io.classdef_to_doc(e.old)}
    if isinstance(e, ChangedClass):
        return {"entry": kind, "old": model_io.classdef_to_doc(e.old),
                "updated": model_io.classdef_to_doc(e.updated)}
    if isinstance(e, (AddedAttribute, AddedReference)):
        enc = (model_io.attribute_to_doc if isinstance(e, AddedAttribute)
               else model_io.reference_to_doc)
        return {"entry": kind, "owner": e.owner, "new": enc(e.new)}
    if isinstance(e, (DeletedAttribute, DeletedReference)):
        enc = (model_io.attribute_to_doc if isinstance(e, DeletedAttribute)
               else model_io.reference_to_doc)
        return {"entry": kind, "owner": e.owner, "old": enc(e.old)}
    enc = (model_io.attribute_to_doc if isinstance(e, ChangedAttribute)
           else model_io.reference_to_doc)
    return {"entry": kind, "oldOwner": e.oldOwner, "old": enc(e.old),
            "newOwner": e.newOwner, "updated": enc(e.updated)}


def diff_to_bytes(diff: DiffModel) -> bytes:
    return model_io.dump_document({
        "formatVersion": model_io.FORMAT_VERSION, "kind": KIND_DIFF,
        "entries": [_entry_to_doc(e) for e in diff.entries]})


def diff_from_bytes(data: bytes) -> DiffModel:
    doc = model_io.load_document(data, expected_kind=KIND_DIFF)
    entries = []
    for d in doc.get("entries", ()):
        kind = d.get("entry")
        if kind == "AddedClass":
            entries.append(AddedClass(new=model_io.classdef_from_doc(d["new"])))
        elif kind == "DeletedClass":
            entries.append(DeletedClass(old=model_io.classdef_from_doc(d["old"])))
        elif kind == "ChangedClass":
            entries.append(ChangedClass(old=model_io.classdef_from_doc(d["old"]),
                                        updated=model_io.classdef_from_doc(d["updated"])))
        elif kind in ("AddedAttribute", "AddedReference"):
            dec = (model_io.attribute_from_doc if kind == "AddedAttribute"
                   else model_io.reference_from_doc)
            cls = AddedAttribute if kind == "AddedAttribute" else AddedReference
            entries.append(cls(owner=d["owner"], new=dec(d["new"])))
        elif kind in ("DeletedAttribute", "DeletedReference"):
            dec = (model_io.attribute_from_doc if kind == "DeletedAttribute"
                   else model_io.reference_from_doc)
            cls = DeletedAttribute if kind == "DeletedAttribute" else DeletedReference
            entries.append(cls(owner=d["owner"], old=dec(d["old"])))
        elif kind in ("ChangedAttribute", "ChangedReference"):
            dec = (model_io.attribute_from_doc if kind == "ChangedAttribute"
                   else model_io.reference_from_doc)
            cls = ChangedAttribute if kind == "ChangedAttribute" else ChangedReference
            entries.append(cls(oldOwner=d["oldOwner"], old=dec(d["old"]),
                               newOwner=d["newOwner"], updated=dec(d["updated"])))
        else:
            raise ParseError(f"unknown diff entry kind {kind!r}")
    return DiffModel(entries=tuple(entries))
