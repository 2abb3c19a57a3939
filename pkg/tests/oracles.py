"""Independent oracles used by the tests.

Nothing here imports the code paths it checks: the dissection counter works
on explicit diagonal sets of a convex polygon, and the polynomial checks go
through sympy.
"""
from collections import Counter
from decimal import Decimal, localcontext
import math

import sympy


def _crosses(a, b):
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def dissections(n):
    """Every set of pairwise non-crossing diagonals of a convex n-gon."""
    diags = [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]
    out = []

    def rec(idx, chosen):
        if idx == len(diags):
            out.append(tuple(chosen))
            return
        rec(idx + 1, chosen)
        d = diags[idx]
        if all(not _crosses(d, c) for c in chosen):
            chosen.append(d)
            rec(idx + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def face_sizes(n, diags):
    """Sizes of the faces cut out by ``diags`` in the convex n-gon 0..n-1.

    Each face is recovered from its widest chord (i, j) by walking from i
    to the farthest neighbour not beyond j.
    """
    nbrs = {v: {(v - 1) % n, (v + 1) % n} for v in range(n)}
    for i, j in diags:
        nbrs[i].add(j)
        nbrs[j].add(i)
    sizes = []
    for i, j in list(diags) + [(0, n - 1)]:
        cur = max(w for w in nbrs[i] if i < w < j)
        count = 2
        while cur != j:
            cur = max(w for w in nbrs[cur] if cur < w <= j)
            count += 1
        sizes.append(count)
    return sizes


def dissection_type_counts(n):
    """Counter mapping sorted ((k, m_k), ...) -> number of dissections of the n-gon."""
    tally = Counter()
    for ds in dissections(n):
        kinds = Counter(size - 1 for size in face_sizes(n, ds))
        tally[tuple(sorted(kinds.items()))] += 1
    return tally


def quadratic_root(a2):
    """Smaller root of 1 - x + a2 x^2 (the series branch)."""
    a2 = float(a2)
    return (1 - math.sqrt(1 - 4 * a2)) / (2 * a2)


def quadratic_root_precise(a2, digits=100):
    """Same root as a 100-digit Decimal."""
    with localcontext() as ctx:
        ctx.prec = digits
        a = Decimal(a2.numerator) / Decimal(a2.denominator)
        return (1 - (1 - 4 * a).sqrt()) / (2 * a)


def to_exact_decimal(x, digits=100):
    with localcontext() as ctx:
        ctx.prec = digits
        return Decimal(x.numerator) / Decimal(x.denominator)


_SYMBOLS = {}


def to_sympy(poly):
    expr = sympy.Integer(0)
    for mono, c in poly.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for var, x in mono:
            sym = _SYMBOLS.setdefault(var.name, sympy.Symbol(var.name))
            term *= sym ** x
        expr += term
    return sympy.expand(expr)


def sympy_symbol(name):
    return _SYMBOLS.setdefault(name, sympy.Symbol(name))
