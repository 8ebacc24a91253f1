"""Generator-configuration adapter: keeps the class/feature name lists in
sync with the evolved domain model.  Both strategies apply it in full; it is
the co-change that unbreaks the generator run."""

from __future__ import annotations

from ..model import EmfGenModel, GenClass
from ..diff import model as dm


def adapt_emfgen(diff: dm.DiffModel, emfgen: EmfGenModel) -> EmfGenModel:
    """Additions appended, deletions removed, renames rewritten in place,
    moves re-homed; the package prefix is preserved."""
    deleted = {e.old.name for e in diff.entries if isinstance(e, dm.DeletedClass)}
    rename = diff.rename_map()

    # class phase; keep authored order, track old names for feature re-homing
    heads: list[dict] = []
    for gc in emfgen.genClasses:
        if gc.className in deleted:
            continue
        heads.append({"old": gc.className,
                      "name": rename.get(gc.className, gc.className),
                      "features": list(gc.genFeatures)})
    for e in diff.entries:
        if isinstance(e, dm.AddedClass):
            heads.append({"old": None, "name": e.new.name, "features": []})

    by_old = {h["old"]: h for h in heads if h["old"] is not None}
    by_new = {h["name"]: h for h in heads}

    def ensure(owner_new: str) -> dict:
        head = by_new.get(owner_new)
        if head is None:
            head = {"old": None, "name": owner_new, "features": []}
            heads.append(head)
            by_new[owner_new] = head
        return head

    def drop(owner_old: str, name: str) -> None:
        head = by_old.get(owner_old)
        if head is not None and name in head["features"]:
            head["features"].remove(name)

    for e in diff.entries:
        if isinstance(e, (dm.DeletedAttribute, dm.DeletedReference)):
            drop(e.owner, e.old.name)
        elif isinstance(e, (dm.ChangedAttribute, dm.ChangedReference)):
            drop(e.oldOwner, e.old.name)
            head = ensure(e.newOwner)
            if e.updated.name not in head["features"]:
                head["features"].append(e.updated.name)
    for e in diff.entries:
        if isinstance(e, (dm.AddedAttribute, dm.AddedReference)):
            head = ensure(e.owner)
            if e.new.name not in head["features"]:
                head["features"].append(e.new.name)

    return EmfGenModel(
        packagePrefix=emfgen.packagePrefix,
        genClasses=tuple(GenClass(className=h["name"], genFeatures=tuple(h["features"]))
                         for h in heads))
