"""Expected soundness verdicts for the catalog scenarios.

For every catalog change the expectation covers two states:

* ``before``: the domain model has evolved but the companion models have not
  been touched yet (validated with the diff as trace);
* ``after``: the companion models were adapted with the best-effort strategy.

Cells are in model order EmfGen, Graph, Tooling, Mapping, followed by the
overall level.
"""

from __future__ import annotations

from dataclasses import dataclass

from .validate import MODELS, BlameReport

_B, _G, _O = "×", "○", "•"


@dataclass(frozen=True)
class Expectation:
    verdicts: tuple[str, str, str, str]  # EmfGen, Graph, Tooling, Mapping
    level: int

    def as_dict(self) -> dict[str, str]:
        return dict(zip(MODELS, self.verdicts))


def _row(cells: str, level: int) -> Expectation:
    return Expectation(verdicts=tuple(cells), level=level)


#: scenario name -> (before, after best-effort)
EXPECTED: dict[str, tuple[Expectation, Expectation]] = {
    "add-empty-concrete-class": (_row("×○○○", 1), _row("•○○○", 2)),
    "add-empty-abstract-class": (_row("×•••", 1), _row("••••", 3)),
    "add-specialization":       (_row("••••", 3), _row("••••", 3)),
    "delete-concrete-class":    (_row("×○××", 1), _row("•○••", 2)),
    "rename-class":             (_row("×○○×", 1), _row("••••", 3)),
    "add-property":             (_row("×○○○", 1), _row("•○○•", 2)),
    "delete-property":          (_row("×○××", 1), _row("•○••", 2)),
    "rename-property":          (_row("×○○×", 1), _row("••••", 3)),
    "move-property":            (_row("×○××", 1), _row("•○○○", 2)),
    "pull-up-property":         (_row("×○××", 1), _row("•○••", 2)),
    "change-property-type":     (_row("•○××", 1), _row("•○○○", 2)),
}


def _check_one(name: str, phase: str, expected: Expectation,
               report: BlameReport) -> list[str]:
    problems = []
    actual = report.verdicts
    for model, cell in expected.as_dict().items():
        if actual[model] != cell:
            problems.append(f"{name}/{phase}: {model} expected {cell}, "
                            f"got {actual[model]}")
    if report.level != expected.level:
        problems.append(f"{name}/{phase}: level expected {expected.level}, "
                        f"got {report.level}")
    return problems


def assert_matrix(name: str, before: BlameReport, after: BlameReport) -> None:
    """Raise AssertionError listing every cell that deviates."""
    expected_before, expected_after = EXPECTED[name]
    problems = _check_one(name, "before", expected_before, before)
    problems += _check_one(name, "after", expected_after, after)
    if problems:
        raise AssertionError("; ".join(problems))
