"""Suite IsSet: duplicate detection declared deterministic.

The raw operation yields False once per duplicate index pair (or a single
True when no pair exists), so it is multi-valued operationally but has at
most one distinct value per input; the registry checks exactly that claim.
"""

from __future__ import annotations

from ..contracts import ContractEntry
from ..gen import BaseType, builtin, list_of
from ..registry import contract
from ..searchtree import SearchTree, one_of, value

MODULE = "IsSet"


def is_set(xs: list) -> SearchTree:
    """False per duplicate index pair; True only when no rule matches."""
    dup_hits = [
        False
        for i in range(len(xs))
        for j in range(i + 1, len(xs))
        if xs[i] == xs[j]
    ]
    return one_of(dup_hits) if dup_hits else value(True)


contract(
    ContractEntry(
        name="isSet",
        impl=is_set,
        input_gen=list_of(builtin(BaseType.ORDERING)),
        det=True,
        module=MODULE,
        line=5,
    )
)
