"""Co-evolution of graphical-editor definition models.

When the domain metamodel of a generated graphical editor changes, the
dependent definition models (graphical, tooling, mapping, generator config)
silently break or lose capabilities.  This package computes a model-based
difference between two metamodel versions, classifies it against a fixed
change catalog, adapts the dependent models through rule-based adapters, and
blames any remaining unsoundness on the responsible model.
"""

from .errors import (DiffConflictError, FormatVersionError, InvariantError,
                     MissingElementError, ModelError, ParseError)
from .model import EditorModelSet, Metamodel
from .diff.model import DiffModel, apply_diff, compute_diff
from .diff.catalog import classify_changes
from .diff.schema import derive_difference_schema
from .adapt import BEST_EFFORT, MINIMALISTIC, adapt_all
from .soundness import BlameReport, validate

__version__ = "0.1.0"

__all__ = [
    "ModelError", "ParseError", "FormatVersionError", "InvariantError",
    "DiffConflictError", "MissingElementError",
    "Metamodel", "EditorModelSet",
    "DiffModel", "compute_diff", "apply_diff", "classify_changes",
    "derive_difference_schema",
    "MINIMALISTIC", "BEST_EFFORT", "adapt_all",
    "BlameReport", "validate",
    "__version__",
]
