"""Correspondence computation between two metamodel versions.

Elements are matched by stable id when both sides carry ids, otherwise by
equal name within equal kind, otherwise as rename candidates paired by
structural similarity (Jaccard over feature and supertype names for classes)
with a conservative 0.5 threshold.  Ties break by lexicographic name order so
matching is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..model import AttributeDef, ClassDef, Metamodel, ReferenceDef

RENAME_SIMILARITY_THRESHOLD = 0.5

FeatureKey = tuple[str, str]  # (owner class name, feature name)


@dataclass
class Correspondence:
    """Partial injective map from old elements to new elements, keyed by
    name (classes) or (owner, name) pairs (features)."""

    classes: dict[str, str] = field(default_factory=dict)
    attributes: dict[FeatureKey, FeatureKey] = field(default_factory=dict)
    references: dict[FeatureKey, FeatureKey] = field(default_factory=dict)

    def map_class(self, name: str) -> str:
        return self.classes.get(name, name)


def ids_conflict(old_id: str | None, new_id: str | None) -> bool:
    """Both elements carry stable ids and they differ: known-distinct, never
    a match candidate."""
    return old_id is not None and new_id is not None and old_id != new_id


def jaccard(a: set[str], b: set[str]) -> float:
    if not a and not b:
        return 1.0
    union = a | b
    return len(a & b) / len(union)


def class_similarity(old: ClassDef, new: ClassDef) -> float:
    return jaccard(set(old.feature_names) | set(old.superTypes),
                   set(new.feature_names) | set(new.superTypes))


def _attr_similarity(old: AttributeDef, new: AttributeDef) -> float:
    return 1.0 if old.typeName == new.typeName else 0.0


def _ref_similarity(old: ReferenceDef, new: ReferenceDef, corr: Correspondence) -> float:
    score = 0.0
    if corr.map_class(old.target) == new.target:
        score += 0.5
    if old.containment == new.containment:
        score += 0.25
    if (old.lowerBound, old.upperBound) == (new.lowerBound, new.upperBound):
        score += 0.25
    return score


def _match_by_rename(old_pool, new_pool, similarity, name_of=lambda e: e.name):
    """Greedy best-score pairing over the remaining unmatched elements."""
    candidates = []
    for o in old_pool:
        for n in new_pool:
            s = similarity(o, n)
            if s >= RENAME_SIMILARITY_THRESHOLD:
                candidates.append((-s, name_of(o), name_of(n), o, n))
    candidates.sort(key=lambda c: c[:3])
    matched = []
    used_old: set[int] = set()
    used_new: set[int] = set()
    for _, _, _, o, n in candidates:
        if id(o) in used_old or id(n) in used_new:
            continue
        used_old.add(id(o))
        used_new.add(id(n))
        matched.append((o, n))
    return matched


def match_elements(old: Metamodel, new: Metamodel) -> Correspondence:
    corr = Correspondence()

    old_classes = list(old.classes)
    new_classes = list(new.classes)

    # 1. stable ids
    new_by_id = {c.id: c for c in new_classes if c.id is not None}
    for c in list(old_classes):
        if c.id is not None and c.id in new_by_id:
            corr.classes[c.name] = new_by_id[c.id].name
            old_classes.remove(c)
            new_classes.remove(new_by_id[c.id])

    # 2. equal names
    new_by_name = {c.name: c for c in new_classes}
    for c in list(old_classes):
        other = new_by_name.get(c.name)
        if other is not None and not ids_conflict(c.id, other.id):
            corr.classes[c.name] = c.name
            old_classes.remove(c)
            new_classes.remove(other)

    # 3. rename candidates by structural similarity
    def class_sim(o: ClassDef, n: ClassDef) -> float:
        return 0.0 if ids_conflict(o.id, n.id) else class_similarity(o, n)

    for o, n in _match_by_rename(old_classes, new_classes, class_sim):
        corr.classes[o.name] = n.name

    _match_features(old, new, corr)
    return corr


def _match_features(old: Metamodel, new: Metamodel, corr: Correspondence) -> None:
    new_owner = {}
    for c in new.classes:
        for f in (*c.attributes, *c.references):
            new_owner[id(f)] = c.name

    old_attrs = [(c.name, a) for c in old.classes for a in c.attributes]
    new_attrs = [(c.name, a) for c in new.classes for a in c.attributes]
    old_refs = [(c.name, r) for c in old.classes for r in c.references]
    new_refs = [(c.name, r) for c in new.classes for r in c.references]

    for kind, old_pool, new_pool, table in (
            ("attribute", old_attrs, new_attrs, corr.attributes),
            ("reference", old_refs, new_refs, corr.references)):
        # ids first: id matches may cross class boundaries (moves)
        new_by_id = {f.id: (owner, f) for owner, f in new_pool if f.id is not None}
        for owner, f in list(old_pool):
            if f.id is not None and f.id in new_by_id:
                nowner, nf = new_by_id[f.id]
                table[(owner, f.name)] = (nowner, nf.name)
                old_pool.remove((owner, f))
                new_pool.remove((nowner, nf))

        # same name within the corresponding class
        new_by_key = {(owner, f.name): (owner, f) for owner, f in new_pool}
        for owner, f in list(old_pool):
            key = (corr.map_class(owner), f.name)
            if key in new_by_key:
                nowner, nf = new_by_key[key]
                if ids_conflict(f.id, nf.id):
                    continue
                del new_by_key[key]
                table[(owner, f.name)] = (nowner, nf.name)
                old_pool.remove((owner, f))
                new_pool.remove((nowner, nf))

        # same name elsewhere: a move
        for owner, f in list(old_pool):
            hits = sorted((nowner, nf) for nowner, nf in new_pool
                          if nf.name == f.name and not ids_conflict(f.id, nf.id))
            if hits:
                nowner, nf = hits[0]
                table[(owner, f.name)] = (nowner, nf.name)
                old_pool.remove((owner, f))
                new_pool.remove((nowner, nf))

        # rename candidates within the corresponding class
        if kind == "attribute":
            sim = lambda o, n: (0.0 if ids_conflict(o[1].id, n[1].id)
                                else _attr_similarity(o[1], n[1]))  # noqa: E731
        else:
            sim = lambda o, n: (0.0 if ids_conflict(o[1].id, n[1].id)
                                else _ref_similarity(o[1], n[1], corr))  # noqa: E731
        by_class: dict[str, tuple[list, list]] = {}
        for owner, f in old_pool:
            by_class.setdefault(corr.map_class(owner), ([], []))[0].append((owner, f))
        for owner, f in new_pool:
            by_class.setdefault(owner, ([], []))[1].append((owner, f))
        for opool, npool in by_class.values():
            pairs = _match_by_rename(opool, npool, sim, name_of=lambda e: e[1].name)
            for (oowner, of), (nowner, nf) in pairs:
                table[(oowner, of.name)] = (nowner, nf.name)
