from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypercat.hypercatalan import TruncationSpec
from hypercat.multipoly import MultiPoly, T, truncate
from hypercat.series import build_S
from hypercat.solver import (
    GeometricPoly, ZeroDerivativeError, approx_root, convergence_table, newton_root, to_decimal,
)

from oracles import quadratic_root, quadratic_root_precise, to_exact_decimal

FIFTH = GeometricPoly({2: Fraction(1, 5)})


def face(d, q=2):
    return TruncationSpec("face", d, q)


def test_zero_coefficients_give_root_one():
    r = approx_root(GeometricPoly({2: 0, 3: 0}), face(5, 3))
    assert (r.x, r.residual) == (1, 0)


def test_quadratic_level_two_by_hand():
    r = approx_root(FIFTH, face(2))
    assert r.x == 1 + Fraction(1, 5) + Fraction(2, 25) == Fraction(32, 25)
    # 1 - 32/25 + (1/5)(32/25)^2 = (-875 + 1024)/3125
    assert r.residual == Fraction(149, 3125)
    assert r.residual == FIFTH(r.x)


def test_quadratic_converges_toward_formula_root():
    root = quadratic_root(Fraction(1, 5))
    errors = [abs(float(approx_root(FIFTH, face(d)).x) - root) for d in (4, 8, 16, 32)]
    assert errors == sorted(errors, reverse=True)
    assert errors[-1] < 1e-5


def test_residual_is_exact():
    p = GeometricPoly({2: Fraction(1, 7), 3: Fraction(-1, 30)})
    r = approx_root(p, face(6, 3))
    assert r.residual == 1 - r.x + Fraction(1, 7) * r.x ** 2 - Fraction(1, 30) * r.x ** 3


def test_vertex_and_edge_levels():
    p = GeometricPoly({2: Fraction(1, 9), 3: Fraction(1, 81)})
    root = newton_root(p, 1, 8)
    for kind in ("vertex", "edge"):
        res = [abs(approx_root(p, TruncationSpec(kind, d)).residual) for d in (4, 8, 14)]
        assert res == sorted(res, reverse=True)
        assert abs(approx_root(p, TruncationSpec(kind, 14)).x - root) < Fraction(1, 1000)


def test_rejects_degree_above_q():
    with pytest.raises(ValueError):
        approx_root(GeometricPoly({3: Fraction(1, 9)}), face(3, 2))


def test_newton_examples():
    assert newton_root(GeometricPoly({}), 0, 1) == 1
    x = newton_root(FIFTH, 1, 6)
    assert abs(float(x) - quadratic_root(Fraction(1, 5))) < 1e-10
    # double root at 2: Newton reduces to x -> 1 + x/2 here
    quarter = GeometricPoly({2: Fraction(1, 4)})
    x = newton_root(quarter, 1, 30)
    assert x == 2 - Fraction(1, 2 ** 30)


def test_newton_zero_derivative():
    # derivative -1 + x/2 vanishes at x = 2
    with pytest.raises(ZeroDerivativeError):
        newton_root(GeometricPoly({2: Fraction(1, 4)}), 2, 3)


def test_newton_stops_on_exact_root():
    assert newton_root(GeometricPoly({}), 1, 50) == 1


def test_convergence_table_examples():
    p = GeometricPoly({2: Fraction(1, 5), 3: Fraction(1, 20)})
    assert convergence_table(p, "face", 3)[0] == (0, 1, Fraction(1, 4))
    rows = convergence_table(FIFTH, "face", 4)
    res = [r.abs_residual for r in rows]
    assert all(a > b for a, b in zip(res, res[1:]))
    diverge = convergence_table(GeometricPoly({2: 1}), "face", 6)
    assert len(diverge) == 7


@pytest.mark.parametrize("kind", ["face", "vertex", "edge"])
def test_convergence_table_agrees_with_approx_root(kind):
    p = GeometricPoly({2: Fraction(1, 8), 3: Fraction(1, 64)})
    q = 3 if kind == "face" else None
    for row in convergence_table(p, kind, 6):
        r = approx_root(p, TruncationSpec(kind, row.d, q))
        assert r.x == row.x and abs(r.residual) == row.abs_residual


@pytest.mark.parametrize("d", range(0, 9))
def test_residual_vanishes_through_degree_d(d):
    # 1 - S_d(t) + t*S_d(t)^2 has no terms of degree <= d
    t = MultiPoly.var(T(2))
    s = build_S(face(d)).poly
    assert truncate(1 - s + t * s * s, T(2), d).is_zero()


@given(st.fractions(min_value=Fraction(1, 1000), max_value=Fraction(249, 1000), max_denominator=1000))
@settings(max_examples=20, deadline=None)
def test_deeper_truncation_is_closer(a2):
    p = GeometricPoly({2: a2})
    root = quadratic_root_precise(a2)
    far = abs(to_exact_decimal(approx_root(p, face(6)).x) - root)
    near = abs(to_exact_decimal(approx_root(p, face(12)).x) - root)
    assert near < far


@pytest.mark.parametrize("a2", [Fraction(1, 10), Fraction(1, 8), Fraction(1, 6)], ids=str)
def test_newton_and_series_agree_to_six_digits(a2):
    # "6 decimal digits" pinned as |diff| < 1e-6; at a2 = 1/6 the d = 20
    # series tail is ~3e-6, so that case fails as stated
    p = GeometricPoly({2: a2})
    series_x = approx_root(p, face(20)).x
    newton_x = newton_root(p, 1, 10)
    assert abs(float(series_x - newton_x)) < 1e-6


def test_from_pairs_and_decimal():
    p = GeometricPoly.from_pairs(["2=1/5", "4=-3"])
    assert p.coeffs == {2: Fraction(1, 5), 4: Fraction(-3)}
    assert p.degree == 4
    for bad in (["1=2"], ["2=x"], ["2=1", "2=3"]):
        with pytest.raises(ValueError):
            GeometricPoly.from_pairs(bad)
    assert to_decimal(Fraction(1, 3), 5) == "0.33333"
    assert to_decimal(Fraction(-2, 3), 3) == "-0.667"


def test_result_json():
    data = approx_root(FIFTH, face(2)).to_json(6)
    assert data["x"] == "32/25" and data["residual"] == "149/3125"
    assert data["x_decimal"] == "1.280000"
