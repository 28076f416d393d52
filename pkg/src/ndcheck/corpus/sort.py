"""Suite Sort: a quicksort whose strict filters drop repeated elements,
checked against a brute-force specification and a length postcondition.

The bug: partitioning keeps only elements strictly smaller or strictly
greater than the pivot, so duplicates of the pivot vanish.
"""

from __future__ import annotations

import itertools

from ..contracts import ContractEntry
from ..gen import BaseType, builtin, list_of
from ..prop import same_set
from ..registry import contract, param_test
from ..searchtree import SearchTree, one_of

MODULE = "Sort"


def quicksort(xs: list) -> list:
    if not xs:
        return []
    pivot, rest = xs[0], xs[1:]
    return (
        quicksort([y for y in rest if y < pivot])
        + [pivot]
        + quicksort([y for y in rest if y > pivot])
    )


def sort_spec(xs: list) -> SearchTree:
    """Sorted rearrangements of the input, found by brute-force search over
    all permutations."""
    ordered = sorted(
        {tuple(p) for p in itertools.permutations(xs)}
    )
    hits = [list(p) for p in ordered if all(a <= b for a, b in zip(p, p[1:]))]
    return one_of(hits)


def sort_post(xs: list, ys: list) -> bool:
    return len(xs) == len(ys)


contract(
    ContractEntry(
        name="sort",
        impl=quicksort,
        input_gen=list_of(builtin(BaseType.INT)),
        spec=sort_spec,
        post=sort_post,
        module=MODULE,
        line=7,
    )
)

param_test(
    MODULE,
    "sortlength",
    list_of(builtin(BaseType.INT)),
    body=lambda xs: same_set(len(quicksort(xs)), len(xs)),
    line=16,
)
