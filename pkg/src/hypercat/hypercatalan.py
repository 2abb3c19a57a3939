"""Hyper-Catalan numbers, type statistics and type enumeration."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Mapping, NamedTuple, Optional

from .multipoly import E, F, MultiPoly, V, Variable, truncate

__all__ = [
    "TypeVector", "VEF", "TruncationSpec", "LEVEL_KINDS",
    "hyper_catalan", "vef", "level_of", "enumerate_types", "count_types",
    "catalan_row",
]

LEVEL_KINDS = ("vertex", "edge", "face")


class TypeVector:
    """The multi-index ``m = [m2, m3, ...]``: how many triangles,
    quadrilaterals, ... a subdigon has.

    Missing entries read as 0.  ``TypeVector()`` is the null type ``[]``.
    """

    __slots__ = ("_counts",)

    def __init__(self, counts: Mapping[int, int] | None = None, **named: int):
        merged: dict[int, int] = {}
        for k, n in (counts or {}).items():
            merged[int(k)] = merged.get(int(k), 0) + n
        for key, n in named.items():
            m = re.fullmatch(r"m(\d+)", key)
            if m is None:
                raise TypeError(f"unexpected keyword {key!r}; use m2=..., m3=...")
            k = int(m.group(1))
            merged[k] = merged.get(k, 0) + n
        for k, n in merged.items():
            if k < 2:
                raise ValueError(f"polygon index must be >= 2, got m{k}")
            if n < 0:
                raise ValueError(f"m{k} must be nonnegative, got {n}")
        self._counts = tuple(sorted((k, n) for k, n in merged.items() if n))

    @classmethod
    def single(cls, k: int, n: int = 1) -> "TypeVector":
        return cls({k: n})

    def __getitem__(self, k: int) -> int:
        for kk, n in self._counts:
            if kk == k:
                return n
        return 0

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._counts

    def as_dict(self) -> dict[int, int]:
        return dict(self._counts)

    @property
    def max_k(self) -> int:
        return self._counts[-1][0] if self._counts else 0

    def is_null(self) -> bool:
        return not self._counts

    def __add__(self, other: "TypeVector") -> "TypeVector":
        d = dict(self._counts)
        for k, n in other._counts:
            d[k] = d.get(k, 0) + n
        return TypeVector(d)

    def __sub__(self, other: "TypeVector") -> "TypeVector":
        d = dict(self._counts)
        for k, n in other._counts:
            d[k] = d.get(k, 0) - n
        return TypeVector(d)

    def __le__(self, other: "TypeVector") -> bool:
        """Componentwise comparison."""
        return all(n <= other[k] for k, n in self._counts)

    def __eq__(self, other) -> bool:
        return isinstance(other, TypeVector) and self._counts == other._counts

    def __hash__(self) -> int:
        return hash(self._counts)

    def __str__(self) -> str:
        return "[" + ",".join(f"m{k}={n}" for k, n in self._counts) + "]"

    def __repr__(self) -> str:
        return f"TypeVector({self})"

    @classmethod
    def parse(cls, text: str) -> "TypeVector":
        """Parse ``"[m2=3,m3=1]"``; ``"[]"`` is the null type."""
        s = text.strip()
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"type vector must look like [m2=a,m3=b,...], got {text!r}")
        body = s[1:-1].strip()
        counts: dict[int, int] = {}
        if body:
            for part in body.split(","):
                m = re.fullmatch(r"\s*m(\d+)\s*=\s*(\d+)\s*", part)
                if m is None:
                    raise ValueError(f"malformed type vector entry {part.strip()!r} in {text!r}")
                k, n = int(m.group(1)), int(m.group(2))
                if k in counts:
                    raise ValueError(f"m{k} given twice in {text!r}")
                counts[k] = n
        return cls(counts)

    def to_json(self) -> dict[str, int]:
        return {f"m{k}": n for k, n in self._counts}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "TypeVector":
        return cls(**{key: int(n) for key, n in data.items()})


class VEF(NamedTuple):
    V: int
    E: int
    F: int


def hyper_catalan(m: TypeVector) -> int:
    """Number of subdigons of type ``m``.

    ``(sum k*m_k)! / ((1 + sum (k-1)*m_k)! * prod m_k!)``
    """
    top = sum(k * n for k, n in m.items())
    bottom = factorial(1 + sum((k - 1) * n for k, n in m.items()))
    bottom *= prod(factorial(n) for _, n in m.items())
    q, r = divmod(factorial(top), bottom)
    if r:
        raise ArithmeticError(f"inexact hyper-Catalan division for {m}")
    return q


def vef(m: TypeVector) -> VEF:
    """Vertex, edge and face counts of any subdigon of type ``m``."""
    faces = sum(n for _, n in m.items())
    return VEF(
        V=2 + sum((k - 1) * n for k, n in m.items()),
        E=1 + sum(k * n for k, n in m.items()),
        F=faces,
    )


# weight a (k+1)-gon contributes to each level kind
_WEIGHT = {
    "vertex": lambda k: k - 1,
    "edge": lambda k: k,
    "face": lambda k: 1,
}

_LEVEL_VARIABLE = {"vertex": V, "edge": E, "face": F}


def level_of(m: TypeVector, kind: str) -> int:
    """``V_m - 2``, ``E_m - 1`` or ``F_m`` depending on ``kind``."""
    w = _WEIGHT[kind]
    return sum(w(k) * n for k, n in m.items())


@dataclass(frozen=True)
class TruncationSpec:
    """Which layering variable is bounded, its level ``d`` and the polygon
    bound ``q`` (largest allowed polygon is a ``(q+1)``-gon).

    Face levels need ``q``; vertex and edge levels derive one when unset.
    """

    level_kind: str
    d: int
    q: Optional[int] = None

    def __post_init__(self):
        if self.level_kind not in LEVEL_KINDS:
            raise ValueError(f"level kind must be one of {', '.join(LEVEL_KINDS)}; got {self.level_kind!r}")
        if not isinstance(self.d, int) or self.d < 0:
            raise ValueError(f"level d must be a nonnegative integer, got {self.d!r}")
        if self.q is not None and self.q < 2:
            raise ValueError(f"polygon bound q must be >= 2, got {self.q}")
        if self.level_kind == "face" and self.q is None:
            raise ValueError("face levels need a polygon bound q (the face layer is infinite otherwise)")

    @property
    def variable(self) -> Variable:
        return _LEVEL_VARIABLE[self.level_kind]

    @property
    def q_eff(self) -> int:
        """Largest polygon index k that can occur; may be < 2 (null type only)."""
        if self.level_kind == "face":
            return self.q
        # a (k+1)-gon adds k-1 vertices / k edges
        bound = self.d + 1 if self.level_kind == "vertex" else self.d
        return bound if self.q is None else min(self.q, bound)

    def level(self, m: TypeVector) -> int:
        return level_of(m, self.level_kind)

    def reduce(self, p: MultiPoly) -> MultiPoly:
        return truncate(p, self.variable, self.d)

    def __str__(self) -> str:
        q = "" if self.q is None else f", q={self.q}"
        return f"{self.level_kind} level d={self.d}{q}"


def _bounded_vectors(ks: tuple[int, ...], weights: tuple[int, ...], budget: int) -> Iterator[tuple[int, ...]]:
    if not ks:
        yield ()
        return
    w = weights[0]
    for n in range(budget // w + 1):
        for rest in _bounded_vectors(ks[1:], weights[1:], budget - n * w):
            yield (n,) + rest


def enumerate_types(trunc: TruncationSpec) -> list[TypeVector]:
    """All types with polygons up to ``(q_eff+1)``-gons at level ``<= d``.

    Ordered by level, then with more of the smaller polygons first.
    """
    ks = tuple(range(2, trunc.q_eff + 1))
    w = _WEIGHT[trunc.level_kind]
    weights = tuple(w(k) for k in ks)
    rows = []
    for counts in _bounded_vectors(ks, weights, trunc.d):
        level = sum(c * wk for c, wk in zip(counts, weights))
        rows.append(((level, tuple(-c for c in counts)), TypeVector(dict(zip(ks, counts)))))
    rows.sort(key=lambda r: r[0])
    return [m for _, m in rows]


def count_types(trunc: TruncationSpec) -> int:
    """``len(enumerate_types(trunc))`` without building the list."""
    ks = range(2, trunc.q_eff + 1)
    w = _WEIGHT[trunc.level_kind]
    # ways[b] = number of vectors with weighted sum exactly b
    ways = [1] + [0] * trunc.d
    for k in ks:
        wk = w(k)
        for b in range(wk, trunc.d + 1):
            ways[b] += ways[b - wk]
    return sum(ways)


@lru_cache(maxsize=None)
def _catalan(n: int) -> int:
    return hyper_catalan(TypeVector({2: n}))


def catalan_row(n: int) -> list[int]:
    """``[C[m2=0], ..., C[m2=n]]``: the classical Catalan numbers."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return [_catalan(i) for i in range(n + 1)]
