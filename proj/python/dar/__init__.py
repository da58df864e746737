"""Degree anti-Ramsey toolkit: constructions, exhaustive rainbow forcing, embeddings."""

import json
from fractions import Fraction

from ._core import (
    Graph,
    InvalidInput,
    InvariantViolation,
    ParseError,
    avoid_rainbow_c4,
    chromatic_index,
    class2_regular,
    complete_graph,
    cycle_graph,
    find_rainbow_copy,
    forces,
    forest_host,
    free_of_rainbow_c4,
    gadget,
    girth,
    greedy_rainbow_embed,
    is_proper,
    named_graph,
    parse_graph,
    path_graph,
    petersen,
    rainbow_tree_embed,
    random_bridgeless_cubic,
    run_cli,
    smallest_forcing_multiplicity,
)
from . import _core


def _family_json(sets, groups=None):
    family = {"sets": [[str(x) for x in s] for s in sets]}
    if groups is not None:
        family["groups"] = [list(g) for g in groups]
    return json.dumps(family)


def fractional_width(sets):
    """Exact fractional width of a family, with optimal set weights.

    Elements are "v3" / "c5" strings or plain integers (vertices).
    """
    value, weights = _core._fractional_width(_family_json(sets))
    return Fraction(value), [Fraction(w) for w in weights]


def disjoint_representatives(sets, groups):
    """Indices of pairwise disjoint sets, one per group, or None."""
    return _core._disjoint_representatives(_family_json(sets, groups))


__all__ = [name for name in dir() if not name.startswith("_") and name not in ("json", "Fraction")]
