"""Root approximation for geometric polynomials ``1 - x + a2 x^2 + ... + aq x^q``
by summing the truncated hyper-Catalan series at ``t_k = a_k``."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional

from .hypercatalan import TruncationSpec, enumerate_types, hyper_catalan, level_of
from .multipoly import T, eval_numeric
from .series import build_S

__all__ = [
    "GeometricPoly", "ApproxResult", "ConvergenceRow", "ZeroDerivativeError",
    "approx_root", "newton_root", "convergence_table", "to_decimal",
]


@dataclass(frozen=True)
class GeometricPoly:
    """``1 - x + sum a_k x^k`` with exact rational ``a_k`` for ``k >= 2``."""

    coeffs: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, a in dict(self.coeffs).items():
            k = int(k)
            if k < 2:
                raise ValueError(f"coefficient index must be >= 2 (constant and linear are fixed), got {k}")
            clean[k] = Fraction(a)
        object.__setattr__(self, "coeffs", dict(sorted(clean.items())))

    @classmethod
    def from_pairs(cls, pairs: Iterable[str]) -> "GeometricPoly":
        """Build from ``"k=p/q"`` strings, e.g. ``["2=1/5", "3=-1/40"]``."""
        coeffs: dict[int, Fraction] = {}
        for pair in pairs:
            m = re.fullmatch(r"\s*(\d+)\s*=\s*(-?\d+(?:/\d+)?)\s*", pair)
            if m is None:
                raise ValueError(f"coefficient must look like k=p/q, got {pair!r}")
            k = int(m.group(1))
            if k in coeffs:
                raise ValueError(f"coefficient a_{k} given twice")
            coeffs[k] = Fraction(m.group(2))
        return cls(coeffs)

    @property
    def degree(self) -> int:
        """Largest ``k`` carrying a coefficient entry (at least 2)."""
        return max(self.coeffs, default=2)

    def __call__(self, x: Fraction) -> Fraction:
        return 1 - x + sum(a * x ** k for k, a in self.coeffs.items())

    def derivative(self, x: Fraction) -> Fraction:
        return -1 + sum(k * a * x ** (k - 1) for k, a in self.coeffs.items())

    def assignment(self, q: int) -> dict:
        return {T(k): self.coeffs.get(k, Fraction(0)) for k in range(2, q + 1)}

    def __str__(self) -> str:
        parts = ["1", "-x"]
        for k, a in self.coeffs.items():
            if a:
                parts.append(f"{a}*x^{k}")
        return " + ".join(parts)


class ApproxResult(NamedTuple):
    x: Fraction
    residual: Fraction
    level_kind: str
    d: int
    q: Optional[int]

    def to_json(self, digits: int = 12) -> dict:
        return {
            "x": str(self.x),
            "residual": str(self.residual),
            "x_decimal": to_decimal(self.x, digits),
            "residual_decimal": to_decimal(self.residual, digits),
            "level_kind": self.level_kind,
            "d": self.d,
            "q": self.q,
        }


class ConvergenceRow(NamedTuple):
    d: int
    x: Fraction
    abs_residual: Fraction


class ZeroDerivativeError(ZeroDivisionError):
    pass


def to_decimal(x: Fraction, digits: int = 12) -> str:
    """Render ``x`` with ``digits`` places after the point."""
    with localcontext() as ctx:
        ctx.prec = digits + max(len(str(abs(x.numerator))), len(str(x.denominator))) + 5
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits)))


def _check_bound(p: GeometricPoly, trunc: TruncationSpec) -> None:
    if trunc.q is not None and any(a for k, a in p.coeffs.items() if k > trunc.q):
        raise ValueError(f"polynomial has degree {p.degree} but the truncation only allows q={trunc.q}")


def approx_root(p: GeometricPoly, trunc: TruncationSpec) -> ApproxResult:
    """Value of the truncated series at ``t_k = a_k`` and the exact residual."""
    _check_bound(p, trunc)
    series = build_S(trunc).poly
    x = eval_numeric(series, p.assignment(max(trunc.q_eff, 2)))
    return ApproxResult(x, p(x), trunc.level_kind, trunc.d, trunc.q)


def newton_root(p: GeometricPoly, x0, iters: int) -> Fraction:
    """Plain Newton iteration in exact arithmetic; returns the last iterate."""
    x = Fraction(x0)
    for _ in range(iters):
        slope = p.derivative(x)
        if slope == 0:
            raise ZeroDerivativeError(f"derivative vanishes at x={x}")
        step = p(x) / slope
        if step == 0:
            break
        x -= step
    return x


def convergence_table(p: GeometricPoly, kind: str, d_max: int, q: Optional[int] = None) -> list[ConvergenceRow]:
    """Rows ``(d, x_d, |p(x_d)|)`` for ``d = 0..d_max``.

    Face levels use ``q = p.degree`` unless given.  Types are enumerated
    once at ``d_max`` and accumulated level by level.
    """
    if d_max < 0:
        raise ValueError(f"d_max must be >= 0, got {d_max}")
    if kind == "face" and q is None:
        q = p.degree
    trunc = TruncationSpec(kind, d_max, q)
    _check_bound(p, trunc)
    by_level = [Fraction(0)] * (d_max + 1)
    for m in enumerate_types(trunc):
        term = Fraction(hyper_catalan(m))
        for k, n in m.items():
            term *= p.coeffs.get(k, Fraction(0)) ** n
        by_level[level_of(m, kind)] += term
    rows = []
    x = Fraction(0)
    for d in range(d_max + 1):
        x += by_level[d]
        rows.append(ConvergenceRow(d, x, abs(p(x))))
    return rows
