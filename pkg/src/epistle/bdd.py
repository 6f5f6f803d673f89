"""Reduced ordered binary decision diagrams with hash-consing.

Variables are proposition indices and the diagram order follows them
(smaller index nearer the root).  Node construction goes through a single
unique table, so structurally equal diagrams are the same object and logical
equivalence is pointer equality.  All boolean operations route through a
memoized if-then-else.

A store and every diagram built from it belong to one execution context;
diagrams from different stores must never be mixed.
"""

from __future__ import annotations

import os

from .errors import StoreCapacity

__all__ = ["DdNode", "DdStore", "DEFAULT_NODE_CAPACITY", "NODE_LIMIT_ENV"]

DEFAULT_NODE_CAPACITY = 1 << 22
NODE_LIMIT_ENV = "EPISTLE_NODE_LIMIT"

# Terminals sit below every variable in the order.
_TERMINAL_LEVEL = float("inf")


class DdNode:
    """One diagram node; ``low`` is the branch where ``var`` is false.

    Terminals carry ``var = None``.  Nodes hash by identity, which is sound
    because the owning store never creates structural duplicates.
    """

    __slots__ = ("var", "low", "high")

    def __init__(self, var, low, high):
        self.var = var
        self.low = low
        self.high = high

    @property
    def is_terminal(self) -> bool:
        return self.var is None

    def __repr__(self):
        if self.is_terminal:
            return f"<DdNode terminal {id(self):#x}>"
        return f"<DdNode var={self.var} {id(self):#x}>"


def _level(node: DdNode):
    return _TERMINAL_LEVEL if node.var is None else node.var


def default_node_capacity() -> int:
    """Configured store capacity, overridable via ``EPISTLE_NODE_LIMIT``."""
    raw = os.environ.get(NODE_LIMIT_ENV)
    if raw is None:
        return DEFAULT_NODE_CAPACITY
    value = int(raw)
    if value < 2:
        raise ValueError(f"{NODE_LIMIT_ENV} must be at least 2, got {value}")
    return value


class DdStore:
    """Owns the unique table, the operation caches, and the two terminals."""

    def __init__(self, capacity: int | None = None):
        self.capacity = default_node_capacity() if capacity is None else capacity
        self.true = DdNode(None, None, None)
        self.false = DdNode(None, None, None)
        self._unique: dict[tuple, DdNode] = {}
        self._ite_cache: dict[tuple, DdNode] = {}
        self._forall_cache: dict[tuple, DdNode] = {}
        self._count = 2  # the terminals

    def __len__(self) -> int:
        return self._count

    def _node(self, var: int, low: DdNode, high: DdNode) -> DdNode:
        if low is high:
            return low
        assert var < _level(low) and var < _level(high), "variable order violated"
        key = (var, low, high)
        node = self._unique.get(key)
        if node is None:
            if self._count >= self.capacity:
                raise StoreCapacity(f"node store exceeded {self.capacity} nodes")
            node = DdNode(var, low, high)
            self._unique[key] = node
            self._count += 1
        return node

    # -- constructors ------------------------------------------------------

    def const(self, value: bool) -> DdNode:
        return self.true if value else self.false

    def var(self, index: int) -> DdNode:
        if index < 0:
            raise ValueError(f"variable index must be nonnegative, got {index}")
        return self._node(index, self.false, self.true)

    # -- boolean operations ------------------------------------------------

    def ite(self, c: DdNode, t: DdNode, e: DdNode) -> DdNode:
        if c is self.true:
            return t
        if c is self.false:
            return e
        if t is e:
            return t
        if t is self.true and e is self.false:
            return c
        key = (c, t, e)
        cached = self._ite_cache.get(key)
        if cached is not None:
            return cached
        top = min(_level(c), _level(t), _level(e))
        c0, c1 = _cofactors(c, top)
        t0, t1 = _cofactors(t, top)
        e0, e1 = _cofactors(e, top)
        result = self._node(top, self.ite(c0, t0, e0), self.ite(c1, t1, e1))
        self._ite_cache[key] = result
        return result

    def not_(self, x: DdNode) -> DdNode:
        return self.ite(x, self.false, self.true)

    def and_(self, x: DdNode, y: DdNode) -> DdNode:
        return self.ite(x, y, self.false)

    def or_(self, x: DdNode, y: DdNode) -> DdNode:
        return self.ite(x, self.true, y)

    def implies(self, x: DdNode, y: DdNode) -> DdNode:
        return self.ite(x, y, self.true)

    def all_of(self, items) -> DdNode:
        out = self.true
        for x in items:
            out = self.and_(out, x)
        return out

    def any_of(self, items) -> DdNode:
        out = self.false
        for x in items:
            out = self.or_(out, x)
        return out

    def forall(self, variables, x: DdNode) -> DdNode:
        """Universal quantification of ``x`` over ``variables``."""
        vs = tuple(sorted(set(variables)))
        return self._forall(vs, x)

    def _forall(self, vs: tuple[int, ...], x: DdNode) -> DdNode:
        if not vs or x.is_terminal:
            return x
        # quantified variables above the root cannot occur in x
        while vs and vs[0] < x.var:
            vs = vs[1:]
        if not vs:
            return x
        key = (vs, x)
        cached = self._forall_cache.get(key)
        if cached is not None:
            return cached
        if x.var == vs[0]:
            result = self.and_(self._forall(vs, x.low), self._forall(vs, x.high))
        else:
            result = self._node(x.var, self._forall(vs, x.low), self._forall(vs, x.high))
        self._forall_cache[key] = result
        return result

    # -- inspection ---------------------------------------------------------

    def eval(self, x: DdNode, assignment: int) -> bool:
        """Truth of ``x`` under the assignment encoded as a bitmask."""
        while not x.is_terminal:
            x = x.high if (assignment >> x.var) & 1 else x.low
        return x is self.true

    def count_sat(self, x: DdNode, n_vars: int) -> int:
        """Number of satisfying assignments over variables ``0..n_vars-1``."""
        memo: dict[tuple[DdNode, int], int] = {}

        def walk(node: DdNode, level: int) -> int:
            if node is self.false:
                return 0
            if node is self.true:
                return 1 << (n_vars - level)
            key = (node, level)
            got = memo.get(key)
            if got is None:
                below = walk(node.low, node.var + 1) + walk(node.high, node.var + 1)
                got = below << (node.var - level)
                memo[key] = got
            return got

        return walk(x, 0)

    def sat_worlds(self, x: DdNode, n_vars: int) -> frozenset[int]:
        """All satisfying assignments, as world bitmasks.  Test-scale only."""
        out: list[int] = []

        def walk(node: DdNode, level: int, acc: int) -> None:
            if node is self.false:
                return
            if level == n_vars:
                assert node is self.true
                out.append(acc)
                return
            if node.is_terminal or node.var > level:
                walk(node, level + 1, acc)
                walk(node, level + 1, acc | (1 << level))
            else:
                walk(node.low, level + 1, acc)
                walk(node.high, level + 1, acc | (1 << level))

        walk(x, 0, 0)
        return frozenset(out)

    def check_reduced(self) -> None:
        """Assert the store invariant: no node has identical branches."""
        for (var, low, high), node in self._unique.items():
            assert low is not high, f"unreduced node for var {var}"
            assert node.var == var


def _cofactors(node: DdNode, var: int) -> tuple[DdNode, DdNode]:
    if node.var == var:
        return node.low, node.high
    return node, node
