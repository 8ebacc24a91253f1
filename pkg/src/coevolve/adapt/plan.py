"""Pipeline over the three adapters.

The order is a contract: generator config first, then tooling, then mapping,
because the replicated node mapping references the tool title the tooling
adapter has just created.  The graph model passes through untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..model import EditorModelSet
from ..model import io as model_io
from ..diff import model as dm
from ..diff.model import apply_diff
from .emfgen import adapt_emfgen
from .mapping import adapt_mapping_traced
from .strategy import check_strategy
from .tooling import adapt_tooling_traced

RULE_SYNC_EMFGEN = "SyncEmfGenModel"

FiredRule = tuple[str, tuple[tuple[str, str], ...]]


@dataclass(frozen=True)
class AdaptationPlan:
    strategy: str
    firedRules: tuple[FiredRule, ...]
    outputs: EditorModelSet
    skipped: tuple[str, ...] = ()

    def report_doc(self) -> dict:
        return {
            "formatVersion": model_io.FORMAT_VERSION,
            "kind": "adaptation-plan",
            "strategy": self.strategy,
            "firedRules": [{"rule": name, "bindings": dict(bindings)}
                           for name, bindings in self.firedRules],
            "skipped": list(self.skipped),
        }

    def report_bytes(self) -> bytes:
        return model_io.dump_document(self.report_doc())


def adapt_all(diff: dm.DiffModel, mset: EditorModelSet, strategy: str) -> AdaptationPlan:
    """Never aborts: rules that cannot fire are recorded as skips."""
    check_strategy(strategy)
    fired: list[FiredRule] = []
    skipped: list[str] = []

    new_domain = apply_diff(mset.domain, diff)

    emfgen = adapt_emfgen(diff, mset.emfgen)
    if emfgen != mset.emfgen:
        fired.append((RULE_SYNC_EMFGEN, ()))

    tooling, tool_fired, tool_skips = adapt_tooling_traced(
        diff, mset.mapping, mset.tooling, strategy, mset.domain)
    fired.extend(tool_fired)
    skipped.extend(tool_skips)

    mapping, map_fired, map_skips = adapt_mapping_traced(
        diff, mset.mapping, tooling, strategy, mset.domain)
    fired.extend(map_fired)
    skipped.extend(map_skips)

    outputs = EditorModelSet(domain=new_domain, graph=mset.graph,
                             tooling=tooling, mapping=mapping, emfgen=emfgen)
    return AdaptationPlan(strategy=strategy, firedRules=tuple(fired),
                          outputs=outputs, skipped=tuple(skipped))
