"""Sparse multivariate polynomials with exact rational coefficients.

Variables are the polygon markers ``t2, t3, ...`` and the layering markers
``v, e, f``.  A polynomial is an immutable map from exponent vectors to
:class:`fractions.Fraction` coefficients; zero coefficients are never stored.

Exponent vectors are tuples of ``(Variable, exponent)`` pairs sorted by
variable with every exponent positive, so equal monomials hash equally.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

__all__ = [
    "Variable", "T", "V", "E", "F", "MultiPoly", "Modulus",
    "add", "mul", "truncate", "substitute", "eval_poly_at_series",
    "eval_numeric", "parse_poly", "PolyParseError", "MissingVariableError",
]

_V_RANK, _E_RANK, _F_RANK, _T_RANK = range(4)


class Variable(NamedTuple):
    """A polynomial variable.

    Ordered ``v < e < f < t2 < t3 < ...`` by tuple comparison of
    ``(rank, k)``.  Build with :func:`T` or use the constants ``V, E, F``.
    """

    rank: int
    k: int = 0

    @property
    def kind(self) -> str:
        return "VEFT"[self.rank]

    @property
    def name(self) -> str:
        if self.rank == _T_RANK:
            return f"t{self.k}"
        return "vef"[self.rank]

    def __str__(self) -> str:
        return self.name

    def __repr__(self) -> str:
        return f"Variable({self.name})"

    @classmethod
    def from_name(cls, name: str) -> "Variable":
        if name in ("v", "e", "f"):
            return cls("vef".index(name))
        m = re.fullmatch(r"t(\d+)", name)
        if m is None:
            raise ValueError(f"unknown variable name {name!r}")
        return T(int(m.group(1)))


def T(k: int) -> Variable:
    """The polygon marker ``t_k`` (one ``(k+1)``-gon)."""
    if k < 2:
        raise ValueError(f"t_k requires k >= 2, got {k}")
    return Variable(_T_RANK, k)


V = Variable(_V_RANK)
E = Variable(_E_RANK)
F = Variable(_F_RANK)

ExponentVector = tuple  # tuple[tuple[Variable, int], ...], sorted, exps > 0
Coefficient = Union[int, Fraction]


def _mono(entries: Mapping[Variable, int] | Iterable[tuple[Variable, int]]) -> ExponentVector:
    items = entries.items() if isinstance(entries, Mapping) else entries
    out: dict[Variable, int] = {}
    for var, exp in items:
        if exp < 0:
            raise ValueError(f"negative exponent {exp} on {var.name}")
        out[var] = out.get(var, 0) + exp
    return tuple(sorted((v, x) for v, x in out.items() if x))


def _mono_mul(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for var, exp in b:
        d[var] = d.get(var, 0) + exp
    return tuple(sorted(d.items()))


def _mono_degree(a: ExponentVector, z: Variable) -> int:
    for var, exp in a:
        if var == z:
            return exp
    return 0


def _order_key(item):
    mono = item[0]
    return (sum(x for _, x in mono), mono)


class MultiPoly:
    """Immutable sparse polynomial over ``Fraction``.

    >>> t2 = MultiPoly.var(T(2))
    >>> str((1 + t2) ** 2)
    '1 + 2*t2 + t2^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[ExponentVector, Coefficient] | None = None):
        clean: dict[ExponentVector, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[mono] = clean.get(mono, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "MultiPoly":
        # caller guarantees canonical monomials and no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coefficient) -> "MultiPoly":
        return cls({(): c})

    @classmethod
    def var(cls, z: Variable, exp: int = 1) -> "MultiPoly":
        return cls({_mono({z: exp}): 1})

    @classmethod
    def monomial(cls, exps: Mapping[Variable, int], coeff: Coefficient = 1) -> "MultiPoly":
        return cls({_mono(exps): coeff})

    @property
    def terms(self) -> Mapping[ExponentVector, Fraction]:
        return MappingProxyType(self._terms)

    def items(self):
        """Terms in canonical order (graded, then by variable and exponent)."""
        return sorted(self._terms.items(), key=_order_key)

    def coeff(self, exps: Mapping[Variable, int] | ExponentVector) -> Fraction:
        key = _mono(exps) if isinstance(exps, Mapping) else exps
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set[Variable]:
        return {var for mono in self._terms for var, _ in mono}

    def degree(self, z: Variable) -> int:
        return max((_mono_degree(m, z) for m in self._terms), default=0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"

    def __str__(self) -> str:
        return self.to_text()

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "MultiPoly":
        if isinstance(x, MultiPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return MultiPoly.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # conversions --------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = [_term_text(m, c) for m, c in self.items()]
        return " + ".join(parts)

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "exps": {var.name: x for var, x in _text_order(m)}}
            for m, c in self.items()
        ]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "MultiPoly":
        terms: dict[ExponentVector, Fraction] = {}
        for entry in data:
            mono = _mono({Variable.from_name(n): int(x) for n, x in entry["exps"].items()})
            terms[mono] = terms.get(mono, 0) + Fraction(entry["coeff"])
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> "MultiPoly":
        return parse_poly(text)

    # per-op conveniences
    def truncate(self, z: Variable, d: int) -> "MultiPoly":
        return truncate(self, z, d)

    def substitute(self, z: Variable, r: "MultiPoly") -> "MultiPoly":
        return substitute(self, z, r)

    def eval_numeric(self, assign: Mapping[Variable, Coefficient]) -> Fraction:
        return eval_numeric(self, assign)


def _text_order(mono: ExponentVector):
    # t's first, then v, e, f, as in "3*t2^2*t3*v^4*e^7*f^3"
    return sorted(mono, key=lambda ve: (ve[0].rank != _T_RANK, ve[0]))


def _term_text(mono: ExponentVector, c: Fraction) -> str:
    factors = [var.name if x == 1 else f"{var.name}^{x}" for var, x in _text_order(mono)]
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    if c == -1:
        return "-" + "*".join(factors)
    return "*".join([str(c)] + factors)


# ---------------------------------------------------------------- operations

def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Coefficientwise sum."""
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for m, c in q._terms.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return MultiPoly._raw(out)


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Distributive product; exponent vectors add componentwise."""
    out: dict[ExponentVector, Fraction] = {}
    for m1, c1 in p._terms.items():
        for m2, c2 in q._terms.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return MultiPoly._raw({m: c for m, c in out.items() if c})


def truncate(p: MultiPoly, z: Variable, d: int) -> MultiPoly:
    """Return ``p mod z^(d+1)``: drop every term whose ``z``-degree exceeds ``d``."""
    if d < 0:
        raise ValueError(f"truncation level must be >= 0, got {d}")
    return MultiPoly._raw({m: c for m, c in p._terms.items() if _mono_degree(m, z) <= d})


def substitute(p: MultiPoly, z: Variable, r: MultiPoly) -> MultiPoly:
    """Replace every ``z^a`` in ``p`` by ``r^a``."""
    powers = {0: MultiPoly.const(1)}
    out = MultiPoly()
    for mono, c in p._terms.items():
        a = _mono_degree(mono, z)
        if a not in powers:
            powers[a] = r ** a
        rest = MultiPoly._raw({tuple(ve for ve in mono if ve[0] != z): c})
        out = out + rest * powers[a]
    return out


@dataclass(frozen=True)
class Modulus:
    """Reduction modulo ``z^(d+1)``."""

    variable: Variable
    d: int

    def reduce(self, p: MultiPoly) -> MultiPoly:
        return truncate(p, self.variable, self.d)


def eval_poly_at_series(coeffs, arg: MultiPoly, trunc=None) -> MultiPoly:
    """Evaluate ``sum(c_k * arg**k)`` for a univariate polynomial given as
    ``[(k, c_k), ...]`` with polynomial coefficients.

    ``trunc`` is anything with a ``reduce(poly)`` method (a :class:`Modulus`
    or a ``TruncationSpec``); when given, every intermediate product is
    reduced, which is sound because reduction commutes with ring operations.
    """
    table: dict[int, MultiPoly] = {}
    for k, c in coeffs:
        if k < 0:
            raise ValueError(f"negative degree {k}")
        if k in table:
            raise ValueError(f"degree {k} listed more than once")
        table[k] = MultiPoly._coerce(c)
    reduce = trunc.reduce if trunc is not None else (lambda x: x)
    if not table:
        return MultiPoly()
    # Horner: acc = (...(c_n*arg + c_{n-1})*arg + ...) + c_0
    n = max(table)
    acc = reduce(table[n])
    for k in range(n - 1, -1, -1):
        acc = reduce(acc * arg)
        if k in table:
            acc = acc + reduce(table[k])
    return acc


class MissingVariableError(KeyError):
    def __init__(self, var: Variable):
        super().__init__(var)
        self.variable = var

    def __str__(self) -> str:
        return f"no value assigned to variable {self.variable.name}"


def eval_numeric(p: MultiPoly, assign: Mapping[Variable, Coefficient]) -> Fraction:
    """Exact value of ``p`` with every variable replaced by a rational."""
    total = Fraction(0)
    for mono, c in p._terms.items():
        term = c
        for var, x in mono:
            try:
                val = assign[var]
            except KeyError:
                raise MissingVariableError(var) from None
            term *= Fraction(val) ** x
        total += term
    return total


# ------------------------------------------------------------------- parsing

class PolyParseError(ValueError):
    def __init__(self, msg: str, pos: int):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<var>[a-z]\w*)|(?P<op>[-+*^]))")


def parse_poly(text: str) -> MultiPoly:
    """Parse the canonical text form, e.g. ``"1 + 2*t2 + t2^2*v^2*e^4*f^2"``.

    Also accepts binary ``-`` between terms and a leading sign.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolyParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", pos)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    i = 0

    def peek():
        return tokens[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = tokens[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            raise PolyParseError(f"expected {want!r}, found {tok[1] or 'end of input'!r}", tok[2])
        i += 1
        return tok

    def factor():
        tok = peek()
        if tok[0] == "num":
            take()
            return Fraction(tok[1]), None
        if tok[0] == "var":
            take()
            try:
                var = Variable.from_name(tok[1])
            except ValueError as exc:
                raise PolyParseError(str(exc), tok[2]) from None
            exp = 1
            if peek()[1] == "^":
                take()
                exp = int(take("num")[1])
            return None, (var, exp)
        raise PolyParseError(f"expected number or variable, found {tok[1] or 'end of input'!r}", tok[2])

    def term(sign):
        coeff = Fraction(sign)
        exps = []
        while True:
            c, ve = factor()
            if c is not None:
                coeff *= c
            else:
                exps.append(ve)
            if peek()[1] == "*":
                take()
                continue
            return _mono(exps), coeff

    out: dict[ExponentVector, Fraction] = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    while True:
        mono, c = term(sign)
        out[mono] = out.get(mono, 0) + c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[1] not in ("+", "-"):
            raise PolyParseError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        take()
        sign = -1 if tok[1] == "-" else 1
        if peek()[1] == "-":  # "a + -3*t2"
            take()
            sign = -sign
    return MultiPoly(out)
