"""Braided Higman-Thompson groups BV_{n,r}(H) with labels in a subgroup H of B_n."""

from .braids import BraidWord
from .elements import Element, SubgroupSpec, braid_spec, compose, equal, identity_spec, inverse, reduce
from .generators import GeneratorTable, GeneratorWord, decompose, evaluate
from .grammar import format_element, parse_element
from .trees import Forest, Tree

__all__ = [
    "BraidWord", "Element", "Forest", "GeneratorTable", "GeneratorWord", "SubgroupSpec", "Tree",
    "braid_spec", "compose", "decompose", "equal", "evaluate", "format_element", "identity_spec",
    "inverse", "parse_element", "reduce",
]
