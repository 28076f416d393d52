"""Search trees: the results of a computation with zero, one, or many values.

A computation that may branch is represented as a binary tree with three
node kinds: a value leaf, a failure leaf (no value), and a choice node with
two subtrees.  Subtrees may be given as thunks so that infinite trees (e.g.
"all lists of integers") are representable; a thunk is forced at most once.

Enumeration strategies linearize a tree into a lazy value sequence under a
node budget.  All strategies are complete: every value at finite depth
appears in the output if the budget permits reaching it.  Duplicate leaves
are preserved here; de-duplication is a concern of the property layer.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from heapq import heappop, heappush
from random import Random
from typing import Any, Callable, Generic, Iterator, TypeVar, Union

A = TypeVar("A")
B = TypeVar("B")

DEFAULT_NODE_BUDGET = 100_000


class SearchTree(Generic[A]):
    """Base class; concrete nodes are ValueNode, FailNode, OrNode, DeferredNode."""

    __slots__ = ()


class ValueNode(SearchTree[A]):
    __slots__ = ("payload",)

    def __init__(self, payload: A):
        self.payload = payload

    def __repr__(self) -> str:
        return f"ValueNode({self.payload!r})"


class FailNode(SearchTree[Any]):
    __slots__ = ()

    def __repr__(self) -> str:
        return "FailNode"


_FAIL = FailNode()

_Child = Union[SearchTree, Callable[[], SearchTree]]


class OrNode(SearchTree[A]):
    """Choice between two subtrees; children may be thunks, forced on access."""

    __slots__ = ("_left", "_right")

    def __init__(self, left: _Child, right: _Child):
        self._left = left
        self._right = right

    @property
    def left(self) -> SearchTree[A]:
        if callable(self._left):
            self._left = self._left()
        return self._left

    @property
    def right(self) -> SearchTree[A]:
        if callable(self._right):
            self._right = self._right()
        return self._right

    def __repr__(self) -> str:
        return "OrNode(..)"


class DeferredNode(SearchTree[A]):
    """Lazy tree built from a thunk; forced at most once (thunks must be pure)."""

    __slots__ = ("_thunk", "_forced")

    def __init__(self, thunk: Callable[[], SearchTree[A]]):
        self._thunk = thunk
        self._forced: SearchTree[A] | None = None

    @property
    def forced(self) -> SearchTree[A]:
        if self._forced is None:
            self._forced = self._thunk()
        return self._forced

    def __repr__(self) -> str:
        return "DeferredNode(..)"


class _Cont:
    """Linked list of pending leaf transformations for BindNode."""

    __slots__ = ("fn", "next")

    def __init__(self, fn: Callable[[Any], SearchTree], nxt: "_Cont | None"):
        self.fn = fn
        self.next = nxt


def _cont_concat(a: _Cont | None, b: _Cont | None) -> _Cont | None:
    if a is None:
        return b
    if b is None:
        return a
    return _Cont(a.fn, _cont_concat(a.next, b))


class BindNode(SearchTree[A]):
    """Tree under a stack of pending value-leaf substitutions.

    Normalization peels one constructor at a time: a choice node splits into
    two bind nodes sharing the continuation, a value leaf runs the next
    transformation.  Nested binds flatten into one continuation list, so
    walking a deeply composed tree costs O(1) per node instead of one Python
    frame per composition layer.
    """

    __slots__ = ("_tree", "_cont", "_norm")

    def __init__(self, tree: SearchTree, cont: _Cont | None):
        self._tree = tree
        self._cont = cont
        self._norm: SearchTree | None = None

    @property
    def normalized(self) -> SearchTree:
        """Equivalent ValueNode, FailNode, or OrNode; computed once."""
        if self._norm is not None:
            return self._norm
        t, k = self._tree, self._cont
        while True:
            if isinstance(t, DeferredNode):
                t = t.forced
            elif isinstance(t, BindNode):
                if t._norm is not None:
                    t = t._norm
                else:
                    t, k = t._tree, _cont_concat(t._cont, k)
            elif isinstance(t, ValueNode):
                if k is None:
                    break
                t, k = k.fn(t.payload), k.next
            elif isinstance(t, FailNode):
                break
            elif isinstance(t, OrNode):
                if k is not None:
                    t = OrNode(BindNode(t.left, k), BindNode(t.right, k))
                break
            else:
                raise TypeError(f"not a search tree: {t!r}")
        self._norm = t
        return t

    def __repr__(self) -> str:
        return "BindNode(..)"


def value(a: A) -> SearchTree[A]:
    """Tree with the single result a."""
    return ValueNode(a)


def fail() -> SearchTree[Any]:
    """Tree with no result."""
    return _FAIL


def choice(left: SearchTree[A], right: SearchTree[A]) -> SearchTree[A]:
    """Non-deterministic choice between two trees."""
    return OrNode(left, right)


def defer(thunk: Callable[[], SearchTree[A]]) -> SearchTree[A]:
    """Delay tree construction; required for recursively defined trees."""
    return DeferredNode(thunk)


def bind(t: SearchTree[A], f: Callable[[A], SearchTree[B]]) -> SearchTree[B]:
    """Replace every value leaf a by the tree f(a), keeping the choice structure.

    Lazy: the substitution is recorded and peeled off node by node during
    enumeration, so binding over an infinite tree is fine.
    """
    if isinstance(t, ValueNode):
        return f(t.payload)
    if isinstance(t, FailNode):
        return t
    return BindNode(t, _Cont(f, None))


def one_of(values: Any) -> SearchTree[Any]:
    """Balanced choice tree over the given values; empty input yields fail()."""
    return balanced([ValueNode(v) for v in values])


def balanced(trees: list[SearchTree[A]]) -> SearchTree[A]:
    """Balanced choice tree over a list of subtrees."""
    if not trees:
        return _FAIL
    if len(trees) == 1:
        return trees[0]
    mid = len(trees) // 2
    return OrNode(balanced(trees[:mid]), balanced(trees[mid:]))


# -- strategies ----------------------------------------------------------

BFS = "bfs"
LEVEL_DIAG = "level_diag"
RAND_LEVEL_DIAG = "rand_level_diag"

_KINDS = (BFS, LEVEL_DIAG, RAND_LEVEL_DIAG)


@dataclass(frozen=True)
class Strategy:
    """Enumeration policy: traversal kind, PRNG seed, and node budget.

    The seed only affects the randomized kind; a fixed seed makes it fully
    deterministic.  The budget caps tree-node visits per enumeration.
    """

    kind: str = RAND_LEVEL_DIAG
    seed: int = 0
    node_budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown strategy kind: {self.kind!r}")
        if self.node_budget < 1:
            raise ValueError("node budget must be positive")

    @staticmethod
    def bfs(node_budget: int = DEFAULT_NODE_BUDGET) -> "Strategy":
        return Strategy(BFS, 0, node_budget)

    @staticmethod
    def level_diag(node_budget: int = DEFAULT_NODE_BUDGET) -> "Strategy":
        return Strategy(LEVEL_DIAG, 0, node_budget)

    @staticmethod
    def rand_level_diag(seed: int = 0, node_budget: int = DEFAULT_NODE_BUDGET) -> "Strategy":
        return Strategy(RAND_LEVEL_DIAG, seed, node_budget)


class _BudgetStop(Exception):
    pass


class Enumeration(Generic[A]):
    """Single-consumer cursor over a tree's values under one strategy.

    Iterate to pull values lazily.  Once iteration stops on its own, exactly
    one of ``exhausted`` (whole tree expanded) or ``budget_exceeded`` is set;
    if the consumer stopped early, both stay False.  ``expansions`` counts
    visited tree nodes.
    """

    def __init__(self, tree: SearchTree[A], strategy: Strategy):
        self.strategy = strategy
        self.exhausted = False
        self.budget_exceeded = False
        self.expansions = 0
        if strategy.kind == BFS:
            self._iter: Iterator[A] = self._walk_bfs(tree)
        else:
            rng = Random(strategy.seed) if strategy.kind == RAND_LEVEL_DIAG else None
            self._iter = self._walk_level_diag(tree, rng)

    def __iter__(self) -> Iterator[A]:
        return self._iter

    def values(self) -> list[A]:
        """Drain the remaining values into a list."""
        return list(self._iter)

    # Budget accounting: one unit per node visited (value and fail leaves
    # included); a chain of deferred thunks collapses within a single visit.

    def _visit(self, node: SearchTree[A]) -> SearchTree[A]:
        if self.expansions >= self.strategy.node_budget:
            self.budget_exceeded = True
            raise _BudgetStop
        self.expansions += 1
        while True:
            if isinstance(node, DeferredNode):
                node = node.forced
            elif isinstance(node, BindNode):
                node = node.normalized
            else:
                return node

    def _walk_bfs(self, root: SearchTree[A]) -> Iterator[A]:
        queue: deque[SearchTree[A]] = deque([root])
        try:
            while queue:
                node = self._visit(queue.popleft())
                if isinstance(node, ValueNode):
                    yield node.payload
                elif isinstance(node, OrNode):
                    queue.append(node.left)
                    queue.append(node.right)
        except _BudgetStop:
            return
        self.exhausted = True

    def _walk_level_diag(self, root: SearchTree[A], rng: Random | None) -> Iterator[A]:
        try:
            walk = _LevelWalk(self, root, rng)
        except _BudgetStop:
            return
        # One cursor per level; a heap keyed by (level + position, level)
        # realizes the diagonal order while probing each position once.
        pending: list[tuple[int, int]] = [(0, 0)]
        try:
            while pending:
                diag, lev = heappop(pending)
                pos = diag - lev
                node = walk.node_at(lev, pos)
                if pos == 0 and node is not None:
                    heappush(pending, (lev + 1, lev + 1))
                if node is None:
                    continue
                heappush(pending, (diag + 1, lev))
                if isinstance(node, ValueNode):
                    yield node.payload
        except _BudgetStop:
            return
        self.exhausted = True


class _Level:
    """One tree level, materialized on demand from the level above."""

    __slots__ = ("nodes", "feed_pos", "done")

    def __init__(self):
        self.nodes: list[SearchTree] = []   # classified nodes, left to right
        self.feed_pos = 0                   # next parent node index to consume
        self.done = False                   # no further nodes can ever appear


class _LevelWalk:
    """Demand-driven level decomposition for the diagonalizing strategies.

    A node's level is its number of choice edges from the root.  Values are
    emitted by Cantor diagonalization over (level, position-in-level): the
    value leaf at position p of level l comes out at diagonal l+p.  Each
    level is materialized left to right only as far as probed, so expansion
    work stays proportional to the emitted prefix.  Levels of a binary tree
    are finite, hence every finite-depth value appears after finitely many
    diagonals.
    """

    def __init__(self, enum: Enumeration, root: SearchTree, rng: Random | None):
        self._enum = enum
        self._rng = rng
        lvl0 = _Level()
        lvl0.done = True
        self.levels = [lvl0]
        self._append(lvl0, root)

    def _append(self, level: _Level, node: SearchTree) -> None:
        node = self._enum._visit(node)
        level.nodes.append(node)

    def node_at(self, lev: int, pos: int) -> SearchTree | None:
        """Node at position pos of level lev, or None if the level is shorter."""
        levels = self.levels
        while lev >= len(levels):
            levels.append(_Level())
        level = levels[lev]
        while len(level.nodes) <= pos and not level.done:
            if not self._grow(lev):
                break
        return level.nodes[pos] if pos < len(level.nodes) else None

    def _grow(self, lev: int) -> bool:
        """Append nodes to level lev; False once the level is complete.

        Iterative so that deep, narrow trees cannot blow the interpreter
        recursion limit: when a level's feed is starved we step down to grow
        its parent, then climb back.
        """
        li = lev
        while True:
            level = self.levels[li]
            if level.done:
                if li == lev:
                    return False
                li += 1
                continue
            parent = self.levels[li - 1]
            if level.feed_pos < len(parent.nodes):
                node = parent.nodes[level.feed_pos]
                level.feed_pos += 1
                if isinstance(node, OrNode):
                    left, right = node.left, node.right
                    if self._rng is not None and self._rng.getrandbits(1):
                        left, right = right, left
                    self._append(level, left)
                    self._append(level, right)
                    if li == lev:
                        return True
                    li += 1
                continue
            if parent.done:
                level.done = True
                if li == lev:
                    return False
                li += 1
                continue
            li -= 1


def enumerate_tree(t: SearchTree[A], strategy: Strategy | None = None) -> Enumeration[A]:
    """Enumerate a tree's values (default strategy: seeded randomized level
    diagonalization with the default node budget)."""
    return Enumeration(t, strategy or Strategy())


def take_values(t: SearchTree[A], strategy: Strategy | None = None, n: int = 20) -> list[A]:
    """First min(n, available) values of the enumeration."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(itertools.islice(enumerate_tree(t, strategy), n))
