"""Subdigons as plane trees.

A subdigon is either the null subdigon (a bare roof edge, written ``|``) or
``Node(k, children)``: a central ``(k+1)``-gon on the roof with one subdigon
glued to each of its ``k`` other sides, in order.  Text form::

    SUBDIGON := "|" | "(" ARITY ";" SUBDIGON ("," SUBDIGON)* ")"
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence, Union

from .hypercatalan import TruncationSpec, TypeVector, enumerate_types

__all__ = [
    "Subdigon", "Null", "Node", "NULL", "ArityError", "NullDecompositionError",
    "SubdigonParseError", "nabla", "decompose", "type_of", "leaf_count",
    "enumerate_subdigons", "enumerate_by_level", "parse", "serialize",
    "to_json", "from_json",
]


class ArityError(ValueError):
    pass


class NullDecompositionError(ValueError):
    pass


class SubdigonParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class Subdigon:
    """Base class of :class:`Null` and :class:`Node`."""

    __slots__ = ()

    @property
    def is_null(self) -> bool:
        return isinstance(self, Null)

    def __str__(self) -> str:
        return serialize(self)


@dataclass(frozen=True, repr=False)
class Null(Subdigon):
    def __repr__(self) -> str:
        return "NULL"


@dataclass(frozen=True, repr=False)
class Node(Subdigon):
    k: int
    children: tuple

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))
        if self.k < 2:
            raise ArityError(f"central polygon needs k >= 2 non-roof sides, got k={self.k}")
        if len(self.children) != self.k:
            raise ArityError(f"nabla_{self.k} takes {self.k} subdigons, got {len(self.children)}")
        for c in self.children:
            if not isinstance(c, Subdigon):
                raise TypeError(f"child {c!r} is not a subdigon")

    def __repr__(self) -> str:
        return f"Node({self.k}, {list(self.children)!r})"


NULL = Null()


def nabla(k: int, children: Sequence[Subdigon]) -> Node:
    """Glue ``k`` subdigons onto the non-roof sides of a ``(k+1)``-gon."""
    return Node(k, tuple(children))


def decompose(s: Subdigon) -> tuple[int, tuple]:
    """Inverse of :func:`nabla`: the central polygon's arity and the children."""
    if s.is_null:
        raise NullDecompositionError("the null subdigon has no central polygon")
    return s.k, s.children


@lru_cache(maxsize=None)
def type_of(s: Subdigon) -> TypeVector:
    if s.is_null:
        return TypeVector()
    total = TypeVector({s.k: 1})
    for c in s.children:
        total = total + type_of(c)
    return total


def leaf_count(s: Subdigon) -> int:
    """Number of null leaves, i.e. non-roof boundary sides (``V - 1``)."""
    if s.is_null:
        return 1
    return sum(leaf_count(c) for c in s.children)


# --------------------------------------------------------------- enumeration

def _sub_budgets(budget: TypeVector):
    ks = [k for k, _ in budget.items()]
    ranges = [range(n + 1) for _, n in budget.items()]
    out = [TypeVector(dict(zip(ks, counts))) for counts in itertools.product(*ranges)]
    out.sort(key=lambda m: (sum(n for _, n in m.items()), [-n for n in (m[k] for k in ks)]))
    return out


@lru_cache(maxsize=None)
def _trees(budget: TypeVector) -> tuple:
    if budget.is_null():
        return (NULL,)
    out = []
    for k, _ in budget.items():
        rest = budget - TypeVector({k: 1})
        for kids in _forests(k, rest):
            out.append(Node(k, kids))
    return tuple(out)


@lru_cache(maxsize=None)
def _forests(n: int, budget: TypeVector) -> tuple:
    # ordered n-tuples of subdigons whose types sum to budget
    if n == 0:
        return ((),) if budget.is_null() else ()
    if n == 1:
        return tuple((t,) for t in _trees(budget))
    out = []
    for first in _sub_budgets(budget):
        tails = _forests(n - 1, budget - first)
        if not tails:
            continue
        for head in _trees(first):
            for tail in tails:
                out.append((head,) + tail)
    return tuple(out)


def enumerate_subdigons(m: TypeVector) -> list[Subdigon]:
    """Every subdigon of type exactly ``m``, once each, in a fixed order."""
    return list(_trees(m))


def enumerate_by_level(trunc: TruncationSpec) -> list[Subdigon]:
    return [s for m in enumerate_types(trunc) for s in enumerate_subdigons(m)]


# ------------------------------------------------------------- serialization

def serialize(s: Subdigon) -> str:
    if s.is_null:
        return "|"
    return f"({s.k};" + ",".join(serialize(c) for c in s.children) + ")"


def parse(text: str) -> Subdigon:
    """Parse the text form; whitespace between tokens is ignored."""
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def expect(ch):
        nonlocal pos
        skip()
        if pos >= n or text[pos] != ch:
            found = repr(text[pos]) if pos < n else "end of input"
            raise SubdigonParseError(f"expected {ch!r}, found {found}", pos)
        pos += 1

    def node() -> Subdigon:
        nonlocal pos
        skip()
        if pos < n and text[pos] == "|":
            pos += 1
            return NULL
        expect("(")
        skip()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise SubdigonParseError("expected arity", start)
        k = int(text[start:pos])
        if k < 2:
            raise SubdigonParseError(f"arity must be >= 2, got {k}", start)
        expect(";")
        kids = [node()]
        skip()
        while pos < n and text[pos] == ",":
            pos += 1
            kids.append(node())
            skip()
        if len(kids) != k:
            raise SubdigonParseError(f"arity {k} but {len(kids)} children", pos)
        expect(")")
        return Node(k, tuple(kids))

    s = node()
    skip()
    if pos != n:
        raise SubdigonParseError(f"trailing input {text[pos:]!r}", pos)
    return s


def to_json(s: Subdigon) -> Union[None, dict[str, Any]]:
    if s.is_null:
        return None
    return {"k": s.k, "children": [to_json(c) for c in s.children]}


def from_json(data) -> Subdigon:
    if data is None:
        return NULL
    return nabla(int(data["k"]), [from_json(c) for c in data["children"]])
