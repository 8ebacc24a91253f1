"""Loading and writing editor model sets as directories of JSON files.

A model set directory holds exactly one file per kind, recognized by the
conventional extensions (``.mm.json``, ``.graph.json``, ``.tool.json``,
``.map.json``, ``.gen.json``).
"""

from __future__ import annotations

from pathlib import Path

from .errors import ModelError
from .model import EditorModelSet
from .model import io as model_io

_FIELD_BY_KIND = {
    model_io.KIND_METAMODEL: "domain",
    model_io.KIND_GRAPH: "graph",
    model_io.KIND_TOOLING: "tooling",
    model_io.KIND_MAPPING: "mapping",
    model_io.KIND_EMFGEN: "emfgen",
}


def kind_of_path(path: Path) -> str | None:
    for kind, ext in model_io.EXTENSIONS.items():
        if path.name.endswith(ext):
            return kind
    return None


def load_model(path: Path):
    """Load a single model file, inferring the kind from the extension."""
    kind = kind_of_path(path)
    if kind is None:
        raise ModelError(f"cannot infer model kind from file name '{path.name}'")
    return model_io.parse_model(path.read_bytes(), kind)


def scan_model_set(directory: Path) -> dict[str, Path]:
    """Kind -> file path; exactly one file per kind must be present."""
    found: dict[str, Path] = {}
    for path in sorted(directory.iterdir()):
        kind = kind_of_path(path)
        if kind is None:
            continue
        if kind in found:
            raise ModelError(f"multiple '{model_io.EXTENSIONS[kind]}' files in "
                             f"{directory}: {found[kind].name}, {path.name}")
        found[kind] = path
    missing = [model_io.EXTENSIONS[k] for k in model_io.MODEL_KINDS if k not in found]
    if missing:
        raise ModelError(f"model set in {directory} is missing "
                         f"{', '.join(missing)} file(s)")
    return found


def load_model_set(directory: Path) -> tuple[EditorModelSet, dict[str, Path]]:
    paths = scan_model_set(directory)
    fields = {_FIELD_BY_KIND[kind]: model_io.parse_model(path.read_bytes(), kind)
              for kind, path in paths.items()}
    return EditorModelSet(**fields), paths


def write_model_set(directory: Path, mset: EditorModelSet,
                    names: dict[str, str] | None = None) -> dict[str, Path]:
    """Write all five models; ``names`` optionally overrides the file name
    used per kind (defaults to the lowercased domain name plus extension)."""
    directory.mkdir(parents=True, exist_ok=True)
    names = names or {}
    base = mset.domain.name.lower()
    written: dict[str, Path] = {}
    for kind, field in _FIELD_BY_KIND.items():
        model = getattr(mset, field)
        path = directory / names.get(kind, base + model_io.EXTENSIONS[kind])
        path.write_bytes(model_io.serialize_model(model))
        written[kind] = path
    return written
