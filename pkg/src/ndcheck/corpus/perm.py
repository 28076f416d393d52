"""Suite Perm: non-deterministic permutations and their counting laws."""

from __future__ import annotations

import math

from ..gen import BaseType, builtin, list_of
from ..prop import eventually, implies, same_set, value_count
from ..registry import param_test, poly_test
from ..searchtree import SearchTree, balanced, bind, defer, value
from ..values import canonical

MODULE = "Perm"


def perm(xs: list) -> SearchTree:
    """All permutations: pick each element as the head, permute the rest.

    Equal elements picked at different positions would lead to identical
    leaves, so only the first occurrence of each candidate head branches;
    the value set is unchanged and repeat-heavy inputs stay tractable.
    """
    items = list(xs)
    if not items:
        return value([])
    alts = []
    seen_heads = set()
    for i, x in enumerate(items):
        key = canonical(x)
        if key in seen_heads:
            continue
        seen_heads.add(key)
        rest = items[:i] + items[i + 1:]
        alts.append(
            bind(defer(lambda r=rest: perm(r)), lambda p, x=x: value([x] + p))
        )
    return balanced(alts)


def sorted_ascending(xs: list) -> bool:
    return all(a <= b for a, b in zip(xs, xs[1:]))


def all_different(xs: list) -> bool:
    return all(xs[i] != xs[j] for i in range(len(xs)) for j in range(i + 1, len(xs)))


poly_test(
    MODULE,
    "permLength",
    gen_for=lambda bt: list_of(builtin(bt)),
    body=lambda xs: same_set(bind(perm(xs), lambda p: value(len(p))), len(xs)),
    line=8,
)

param_test(
    MODULE,
    "permCount",
    list_of(builtin(BaseType.INT)),
    body=lambda xs: implies(
        all_different(xs),
        lambda: value_count(perm(xs), math.factorial(len(xs))),
    ),
    line=12,
)

param_test(
    MODULE,
    "permIsEventuallySorted",
    list_of(builtin(BaseType.INT)),
    body=lambda xs: eventually(bind(perm(xs), lambda p: value(sorted_ascending(p)))),
    line=16,
)
