"""Suite ConcDup: list concatenation laws and duplicate finding.

some_dup is a multi-valued operation: it returns every element occurring at
least twice, once per witnessing index pair.
"""

from __future__ import annotations

from ..gen import BaseType, builtin, list_of, tuple_of
from ..prop import is_equal, reduces_to, same_set
from ..registry import param_test, poly_test, unit_test
from ..searchtree import SearchTree, choice, fail, one_of, value

MODULE = "ConcDup"


def some_dup(xs: list) -> SearchTree:
    """Each element with at least two occurrences, chosen per index pair."""
    hits = [
        xs[i]
        for i in range(len(xs))
        for j in range(i + 1, len(xs))
        if xs[i] == xs[j]
    ]
    return one_of(hits) if hits else fail()


unit_test(MODULE, "concNull12", is_equal([] + [1, 2], [1, 2]), line=5)
unit_test(MODULE, "concCurry", is_equal("Cu" + "rry", "Curry"), line=6)

poly_test(
    MODULE,
    "concIsAssociative",
    gen_for=lambda bt: tuple_of(*(list_of(builtin(bt)) for _ in range(3))),
    body=lambda xs, ys, zs: is_equal((xs + ys) + zs, xs + (ys + zs)),
    line=18,
    arity=3,
)

_int_list_pair = tuple_of(list_of(builtin(BaseType.INT)), list_of(builtin(BaseType.INT)))

param_test(
    MODULE,
    "concIsCommutative",
    _int_list_pair,
    body=lambda xs, ys: is_equal(xs + ys, ys + xs),
    line=20,
    arity=2,
)

param_test(
    MODULE,
    "concAddLengths",
    _int_list_pair,
    body=lambda xs, ys: is_equal(len(xs) + len(ys), len(xs + ys)),
    line=23,
    arity=2,
)

param_test(
    MODULE,
    "concLength",
    _int_list_pair,
    body=lambda xs, ys: is_equal(len(xs + ys), len(xs) + len(ys)),
    line=25,
    arity=2,
)

unit_test(MODULE, "someDup1", reduces_to(some_dup([1, 2, 1, 2]), 1), line=28)
unit_test(
    MODULE,
    "someDup12",
    same_set(some_dup([1, 2, 1, 2, 1]), choice(value(1), value(2))),
    line=29,
)
