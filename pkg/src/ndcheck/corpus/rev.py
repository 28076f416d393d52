"""Suite Rev: list reversal, including a conditional property whose guard is
so restrictive that test data runs out."""

from __future__ import annotations

from ..gen import BaseType, builtin, list_of
from ..prop import implies, is_equal
from ..registry import param_test, poly_test

MODULE = "Rev"


def rev(xs: list) -> list:
    if not xs:
        return []
    return rev(xs[1:]) + [xs[0]]


poly_test(
    MODULE,
    "revLength",
    gen_for=lambda bt: list_of(builtin(bt)),
    body=lambda xs: is_equal(len(rev(xs)), len(xs)),
    line=9,
)

poly_test(
    MODULE,
    "revRevIsId",
    gen_for=lambda bt: list_of(builtin(bt)),
    body=lambda xs: is_equal(rev(rev(xs)), xs),
    line=10,
)

param_test(
    MODULE,
    "revRevIsIdLong",
    list_of(builtin(BaseType.INT)),
    body=lambda xs: implies(len(xs) > 100, lambda: is_equal(rev(rev(xs)), xs)),
    line=13,
)
