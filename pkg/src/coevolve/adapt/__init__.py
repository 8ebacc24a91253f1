from .strategy import MINIMALISTIC, BEST_EFFORT, STRATEGIES, check_strategy
from .emfgen import adapt_emfgen
from .tooling import adapt_tooling, adapt_tooling_traced, tool_bindings
from .mapping import adapt_mapping, adapt_mapping_traced
from .plan import AdaptationPlan, adapt_all
from .helpers import (class_in_new_metamodel, new_container, is_moved,
                      is_moved_to_added_class, is_renamed)

__all__ = [
    "MINIMALISTIC", "BEST_EFFORT", "STRATEGIES", "check_strategy",
    "adapt_emfgen", "adapt_tooling", "adapt_tooling_traced", "tool_bindings",
    "adapt_mapping", "adapt_mapping_traced",
    "AdaptationPlan", "adapt_all",
    "class_in_new_metamodel", "new_container", "is_moved",
    "is_moved_to_added_class", "is_renamed",
]
