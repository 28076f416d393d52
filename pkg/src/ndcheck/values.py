"""Ground-value helpers: structural equality keys and report rendering.

Test data and results are ordinary Python values (ints, bools, strings,
lists, frozen dataclasses, ...).  De-duplication needs a hashable key whose
equality mirrors ``==`` on fully evaluated values, and failure reports need
a stable textual form.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Any

_SCALARS = (bool, int, float, str, bytes)


def canonical(v: Any) -> Any:
    """Hashable key such that canonical(a) == canonical(b) iff a == b.

    Scalars are tagged with their type so e.g. True and 1 stay distinct.
    Containers are frozen recursively; frozen dataclasses are keyed by type
    and field values (their fields may contain lists).
    """
    if v is None:
        return None
    t = type(v)
    if t in _SCALARS:
        return (t.__name__, v)
    if t is list or t is tuple:
        return (t.__name__, tuple(canonical(x) for x in v))
    if t is dict:
        return ("dict", frozenset((canonical(k), canonical(x)) for k, x in v.items()))
    if t is set or t is frozenset:
        return ("set", frozenset(canonical(x) for x in v))
    if dataclasses.is_dataclass(v) and not isinstance(v, type):
        return (t.__qualname__,) + tuple(
            canonical(getattr(v, f.name)) for f in dataclasses.fields(v)
        )
    try:
        hash(v)
        return v
    except TypeError:
        return ("repr", repr(v))


def render(v: Any) -> str:
    """Render a value the way it appears in reports: [1,2], "text", (a,b)."""
    if v is None:
        return "()"
    if v is True:
        return "True"
    if v is False:
        return "False"
    if isinstance(v, str):
        return '"%s"' % v
    if isinstance(v, list):
        return "[" + ",".join(render(x) for x in v) + "]"
    if isinstance(v, tuple):
        return "(" + ",".join(render(x) for x in v) + ")"
    if isinstance(v, enum.Enum):
        return v.name
    return str(v)


def render_args(args: Any, arity: int) -> str:
    """Space-separated rendering of a test input, one field per parameter."""
    if arity <= 1:
        return render(args)
    return " ".join(render(x) for x in args)
