from .validate import (BROKEN, GAP, MODELS, MODEL_EMFGEN, MODEL_GRAPH,
                       MODEL_MAPPING, MODEL_TOOLING, VERDICT_BROKEN,
                       VERDICT_GAP, VERDICT_OK, LEVEL_BROKEN, LEVEL_GAP,
                       LEVEL_SOUND, BlameReport, Finding, level_of, validate)
from .matrix import EXPECTED, Expectation, assert_matrix
from .render import render_delimited, render_figure, render_table

__all__ = [
    "BROKEN", "GAP", "MODELS", "MODEL_EMFGEN", "MODEL_GRAPH", "MODEL_MAPPING",
    "MODEL_TOOLING", "VERDICT_BROKEN", "VERDICT_GAP", "VERDICT_OK",
    "LEVEL_BROKEN", "LEVEL_GAP", "LEVEL_SOUND",
    "BlameReport", "Finding", "level_of", "validate",
    "EXPECTED", "Expectation", "assert_matrix",
    "render_delimited", "render_figure", "render_table",
]
