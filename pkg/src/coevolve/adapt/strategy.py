"""Adaptation strategy names.

``minimalistic`` applies every breakage-fixing rule (sync, rewrite, remove);
``best-effort`` additionally replicates management of analogous elements to
restore capabilities.
"""

MINIMALISTIC = "minimalistic"
BEST_EFFORT = "best-effort"

STRATEGIES = (MINIMALISTIC, BEST_EFFORT)


def check_strategy(strategy: str) -> str:
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy '{strategy}' (expected one of {STRATEGIES})")
    return strategy
