"""Correspondence helpers shared by the adapters.

Each helper navigates a diff between two metamodel versions and answers
where an old element ended up.  Callers must guard deleted elements:
lookups for elements without a counterpart raise
:class:`~coevolve.errors.MissingElementError`.
"""

from __future__ import annotations

from ..errors import MissingElementError
from ..model import Metamodel
from ..diff import model as dm


def _changed_class_entry(diff: dm.DiffModel, name: str):
    for e in diff.entries:
        if isinstance(e, dm.ChangedClass) and e.old.name == name:
            return e
    return None


def _changed_attribute_entry(diff: dm.DiffModel, owner: str, name: str):
    for e in diff.entries:
        if isinstance(e, dm.ChangedAttribute) and (e.oldOwner, e.old.name) == (owner, name):
            return e
    return None


def class_in_new_metamodel(diff: dm.DiffModel, old: Metamodel, new: Metamodel,
                           name: str) -> str:
    """Counterpart of an old class in the new metamodel (identity when the
    class is unchanged)."""
    for e in diff.entries:
        if isinstance(e, dm.DeletedClass) and e.old.name == name:
            raise MissingElementError(f"class '{name}' was deleted")
    changed = _changed_class_entry(diff, name)
    target = changed.updated.name if changed is not None else name
    if new.class_named(target) is None:
        raise MissingElementError(f"class '{name}' has no counterpart in the new metamodel")
    return target


def is_moved(diff: dm.DiffModel, owner: str, name: str) -> bool:
    e = _changed_attribute_entry(diff, owner, name)
    if e is None:
        return False
    rename = diff.rename_map()
    return rename.get(e.oldOwner, e.oldOwner) != e.newOwner


def is_moved_to_added_class(diff: dm.DiffModel, owner: str, name: str) -> bool:
    e = _changed_attribute_entry(diff, owner, name)
    if e is None:
        return False
    if not is_moved(diff, owner, name):
        return False
    return any(isinstance(a, dm.AddedClass) and a.new.name == e.newOwner
               for a in diff.entries)


def is_renamed(diff: dm.DiffModel, owner: str, name: str) -> bool:
    e = _changed_attribute_entry(diff, owner, name)
    return e is not None and e.old.name != e.updated.name


def new_container(diff: dm.DiffModel, old: Metamodel, new: Metamodel,
                  owner: str, name: str) -> str:
    """Owner of an old attribute in the new metamodel, preferring the added
    class it was moved to."""
    e = _changed_attribute_entry(diff, owner, name)
    if e is not None:
        if new.class_named(e.newOwner) is None:
            raise MissingElementError(
                f"attribute '{owner}.{name}' moved to unknown class '{e.newOwner}'")
        return e.newOwner
    for d in diff.entries:
        if isinstance(d, dm.DeletedAttribute) and (d.owner, d.old.name) == (owner, name):
            raise MissingElementError(f"attribute '{owner}.{name}' was deleted")
        if isinstance(d, dm.DeletedClass) and d.old.name == owner:
            raise MissingElementError(f"class '{owner}' was deleted")
    return class_in_new_metamodel(diff, old, new, owner)
