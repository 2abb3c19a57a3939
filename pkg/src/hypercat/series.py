"""Truncated hyper-Catalan series, the layered series S_L, and exact checks of
the truncated zero identities."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import NamedTuple

from .hypercatalan import (
    TruncationSpec, TypeVector, enumerate_types, hyper_catalan, vef,
)
from .multipoly import E, F, MultiPoly, T, V, eval_poly_at_series, substitute

__all__ = [
    "LayeredSeries", "CoefficientRow", "type_monomial", "layer_factor",
    "build_S", "build_S_layered", "layered_h_coeffs", "h_coeffs",
    "verify_layer_zero", "grammar_residual", "coefficient_report", "report_csv",
    "CeilingError", "check_ceilings", "DEFAULT_MAX_D", "DEFAULT_MAX_Q",
]

DEFAULT_MAX_D = 16
DEFAULT_MAX_Q = 8


@dataclass(frozen=True)
class LayeredSeries:
    poly: MultiPoly
    trunc: TruncationSpec
    layered: bool


class CoefficientRow(NamedTuple):
    type: TypeVector
    C: int
    V: int
    E: int
    F: int
    monomial: MultiPoly


def type_monomial(m: TypeVector, coeff: int = 1) -> MultiPoly:
    """``coeff * t^m``."""
    return MultiPoly.monomial({T(k): n for k, n in m.items()}, coeff)


def layer_factor(k: int) -> MultiPoly:
    """``t_k v^(k-1) e^k f``: one ``(k+1)``-gon with its layer markers."""
    return MultiPoly.monomial({T(k): 1, V: k - 1, E: k, F: 1})


def build_S(trunc: TruncationSpec) -> LayeredSeries:
    """``sum C_m t^m`` over every type at the given level."""
    terms = {}
    for m in enumerate_types(trunc):
        terms.update(type_monomial(m, hyper_catalan(m)).terms)
    return LayeredSeries(MultiPoly(terms), trunc, layered=False)


def build_S_layered(trunc: TruncationSpec) -> LayeredSeries:
    poly = build_S(trunc).poly
    for k in range(2, trunc.q_eff + 1):
        poly = substitute(poly, T(k), layer_factor(k))
    return LayeredSeries(trunc.reduce(poly), trunc, layered=True)


def h_coeffs(q: int, layered: bool = True) -> list[tuple[int, MultiPoly]]:
    """Coefficients of ``1 - x + sum_{k=2..q} c_k x^k`` as ``(k, c_k)`` pairs.

    ``q < 2`` yields just ``1 - x``.
    """
    out = [(0, MultiPoly.const(1)), (1, MultiPoly.const(-1))]
    for k in range(2, q + 1):
        out.append((k, layer_factor(k) if layered else MultiPoly.var(T(k))))
    return out


def layered_h_coeffs(q: int) -> list[tuple[int, MultiPoly]]:
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    return h_coeffs(q, layered=True)


def verify_layer_zero(trunc: TruncationSpec) -> MultiPoly:
    """Residual of ``h_q(S_L)`` reduced mod ``z^(d+1)``; zero when the
    truncated identity holds."""
    series = build_S_layered(trunc)
    value = eval_poly_at_series(h_coeffs(trunc.q_eff), series.poly, trunc)
    return trunc.reduce(value)


@dataclass(frozen=True)
class _TotalDegree:
    """Reduction modulo total degree ``d+1`` in the given variables."""

    variables: frozenset
    d: int

    def reduce(self, p: MultiPoly) -> MultiPoly:
        keep = {
            mono: c for mono, c in p.terms.items()
            if sum(x for var, x in mono if var in self.variables) <= self.d
        }
        return MultiPoly(keep)


def grammar_residual(d: int, q: int) -> MultiPoly:
    """``S - (1 + sum_{k=2..q} t_k S^k)`` modulo total t-degree ``d+1``
    for the unlayered series at face level ``d``."""
    trunc = TruncationSpec("face", d, q)
    s = build_S(trunc).poly
    modulus = _TotalDegree(frozenset(T(k) for k in range(2, q + 1)), d)
    rhs = MultiPoly.const(1)
    for k in range(2, q + 1):
        rhs = rhs + modulus.reduce(MultiPoly.var(T(k)) * eval_poly_at_series([(k, 1)], s, modulus))
    return modulus.reduce(s - rhs)


def coefficient_report(trunc: TruncationSpec) -> list[CoefficientRow]:
    rows = []
    for m in enumerate_types(trunc):
        c = hyper_catalan(m)
        stats = vef(m)
        rows.append(CoefficientRow(m, c, stats.V, stats.E, stats.F, type_monomial(m)))
    return rows


def report_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["type", "C", "V", "E", "F", "monomial"])
    for r in rows:
        w.writerow([str(r.type), r.C, r.V, r.E, r.F, str(r.monomial)])
    return buf.getvalue()


class CeilingError(ValueError):
    pass


def check_ceilings(trunc: TruncationSpec, max_d: int = DEFAULT_MAX_D, max_q: int = DEFAULT_MAX_Q) -> None:
    if trunc.d > max_d:
        raise CeilingError(f"level d={trunc.d} exceeds the ceiling {max_d}")
    if trunc.q is not None and trunc.q > max_q:
        raise CeilingError(f"polygon bound q={trunc.q} exceeds the ceiling {max_q}")
