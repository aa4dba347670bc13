"""Sparse multivariate polynomials over the rationals.

A :class:`Polynomial` maps exponent tuples to coefficients. Coefficients are
:class:`fractions.Fraction` values, or :class:`TPoly` values (univariate
polynomials in a single deformation parameter) when the polynomial was parsed
with a parameter name.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class PolySyntaxError(ValueError):
    """Raised when polynomial text cannot be parsed."""

    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class TPoly:
    """Univariate rational polynomial in the deformation parameter.

    Stored densely, lowest degree first, with no trailing zeros.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, c=1) -> TPoly:
        return cls([0] * degree + [c])

    @staticmethod
    def _lift(other) -> TPoly:
        if isinstance(other, TPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TPoly([other])
        return NotImplemented

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        return acc

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return TPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return TPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __repr__(self):
        return f"TPoly({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class HyperplaneSpec:
    """The hyperplane ``z_index = sum_j coeffs[j] * z_j`` (j != index).

    An empty ``coeffs`` mapping gives the coordinate hyperplane ``z_index = 0``.
    """

    index: int
    coeffs: Mapping[int, Fraction] = field(default_factory=dict)


def grlex_key(e: Exponent):
    return (sum(e), e)


class Polynomial:
    """Immutable sparse polynomial in named variables.

    ``terms`` never holds a zero coefficient. When ``param`` is set the
    coefficients are :class:`TPoly` instances in that parameter.
    """

    __slots__ = ("vars", "param", "_terms")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] | None = None,
                 param: str | None = None):
        self.vars = tuple(vars)
        self.param = param
        n = len(self.vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = _coerce(c, param)
            if c:
                clean[e] = c
        self._terms = clean

    @property
    def terms(self) -> Mapping[Exponent, object]:
        return dict(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    @property
    def is_parametric(self) -> bool:
        return self.param is not None

    def items(self):
        return self._terms.items()

    def coeff(self, e: Exponent):
        return self._terms.get(tuple(e), 0)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def _check(self, other: Polynomial):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
        return self.param or other.param

    def _like(self, terms, param=None) -> Polynomial:
        return Polynomial(self.vars, terms, param if param is not None else self.param)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._like({(0,) * self.nvars: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        param = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._like(out, param)

    __radd__ = __add__

    def __neg__(self):
        return self._like({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, TPoly)):
            return self._like({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        param = self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return self._like(out, param)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = self._like({(0,) * self.nvars: 1})
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self):
        return hash((self.vars, frozenset(self._terms.items())))

    def __str__(self):
        return to_text(self)

    def __repr__(self):
        return f"Polynomial({to_text(self)!r}, vars={self.vars}, param={self.param})"


def _coerce(c, param):
    if param is None:
        if isinstance(c, TPoly):
            raise TypeError("parametric coefficient in a non-parametric polynomial")
        return Fraction(c)
    return c if isinstance(c, TPoly) else TPoly([c])


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[start]!r}", start)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse_poly(text: str, vars: Sequence[str], param: str | None = None) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` over the declared variables.

    Grammar: signed terms ``[coeff "*"] factor {"*" factor}`` where a factor is
    a variable or the parameter with an optional ``^uint``, and ``coeff`` is an
    integer or ``p/q``. A bare coefficient is accepted as a constant term.
    Equal monomials are merged.

    >>> str(parse_poly("x^2 + 2*x*y + y^2", ["x", "y"]))
    'x^2 + 2*x*y + y^2'
    """
    vars = tuple(vars)
    if len(set(vars)) != len(vars) or (param is not None and param in vars):
        raise PolySyntaxError("identifiers must be distinct")
    index = {v: i for i, v in enumerate(vars)}
    tokens = _tokenize(text)
    i = 0

    def peek():
        return tokens[i]

    def take(kind=None, value=None):
        nonlocal i
        tok = tokens[i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolySyntaxError(f"expected {want}, got {got!r}", tok[2])
        i += 1
        return tok

    def exponent():
        if peek()[1] != "^":
            return 1
        take("op", "^")
        if peek()[1] == "-":
            raise PolySyntaxError("negative exponent", peek()[2])
        return int(take("num")[1])

    def factor(exps, tdeg):
        kind, val, pos = take("id")
        k = exponent()
        if val in index:
            exps[index[val]] += k
        elif val == param:
            tdeg += k
        else:
            raise PolySyntaxError(f"unknown identifier {val!r}", pos)
        return tdeg

    terms: dict = {}
    sign = 1
    if peek()[1] in "+-" and peek()[0] == "op":
        sign = -1 if take()[1] == "-" else 1
    if peek()[0] == "end":
        raise PolySyntaxError("empty polynomial", peek()[2])
    while True:
        exps = [0] * len(vars)
        tdeg = 0
        coeff = Fraction(1)
        if peek()[0] == "num":
            num = int(take()[1])
            if peek()[1] == "/":
                take()
                den = int(take("num")[1])
                if den == 0:
                    raise PolySyntaxError("zero denominator", tokens[i - 1][2])
                coeff = Fraction(num, den)
            else:
                coeff = Fraction(num)
            if peek()[1] == "*":
                take()
                tdeg = factor(exps, tdeg)
        else:
            tdeg = factor(exps, tdeg)
        while peek()[1] == "*":
            take()
            tdeg = factor(exps, tdeg)
        c = sign * coeff
        if param is not None:
            c = TPoly.monomial(tdeg, c)
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + c
        tok = peek()
        if tok[0] == "end":
            break
        if tok[1] not in "+-" or tok[0] != "op":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", tok[2])
        sign = -1 if take()[1] == "-" else 1
    return Polynomial(vars, terms, param)


def _monomial_text(e: Exponent, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def to_text(p: Polynomial) -> str:
    """Canonical text in descending graded-lex order; parses back to ``p``."""
    pieces: list[tuple[Fraction, str]] = []
    for e in sorted(p._terms, key=grlex_key, reverse=True):
        c = p._terms[e]
        mono = _monomial_text(e, p.vars)
        if isinstance(c, TPoly):
            for d in range(c.degree, -1, -1):
                if c.coeffs[d]:
                    tm = _monomial_text((d,), (p.param,))
                    pieces.append((c.coeffs[d], "*".join(s for s in (tm, mono) if s)))
        else:
            pieces.append((c, mono))
    if not pieces:
        return "0"
    out = []
    for k, (c, mono) in enumerate(pieces):
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}*{mono}" if mono else f"{mag}")
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# -- germ operations --------------------------------------------------------

def support(p: Polynomial) -> frozenset[Exponent]:
    return frozenset(p._terms)


def differentiate(p: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative in the ``i``-th variable; the parameter is a constant."""
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p._terms.items():
        if e[i]:
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
    return p._like(out)


def specialize(p: Polynomial, t0) -> Polynomial:
    """Evaluate every parametric coefficient at ``t0``; identity on plain input."""
    if p.param is None:
        return p
    t0 = Fraction(t0)
    return Polynomial(p.vars, {e: c(t0) for e, c in p._terms.items()})


def restrict_to_axes(p: Polynomial, axes: Iterable[int]) -> Polynomial:
    """Keep terms supported on the coordinate subspace spanned by ``axes``."""
    keep = sorted(set(axes))
    drop = [j for j in range(p.nvars) if j not in keep]
    out = {}
    for e, c in p._terms.items():
        if all(e[j] == 0 for j in drop):
            out[tuple(e[j] for j in keep)] = c
    return Polynomial([p.vars[j] for j in keep], out, p.param)


def substitute_hyperplane(p: Polynomial, h: HyperplaneSpec) -> Polynomial:
    """Replace ``z_i`` by the linear form of ``h``; the result drops variable ``i``."""
    n = p.nvars
    i = h.index
    if not 0 <= i < n:
        raise IndexError(f"hyperplane index {i} out of range")
    if p.is_parametric:
        raise ValueError("specialize the parameter before taking a section")
    rest = [j for j in range(n) if j != i]
    names = [p.vars[j] for j in rest]
    linear = {}
    for j, a in h.coeffs.items():
        if j == i or not 0 <= j < n:
            raise IndexError(f"bad hyperplane coefficient index {j}")
        if a:
            e = [0] * (n - 1)
            e[rest.index(j)] = 1
            linear[tuple(e)] = Fraction(a)
    form = Polynomial(names, linear)
    powers = {0: Polynomial(names, {(0,) * (n - 1): 1})}
    result = Polynomial(names)
    for e, c in p._terms.items():
        k = e[i]
        if k not in powers:
            powers[k] = form ** k
        mono = Polynomial(names, {tuple(e[j] for j in rest): c})
        result = result + mono * powers[k]
    return result


def multiplicity(p: Polynomial, t0=None) -> int:
    """Lowest total degree in the support (after specializing at ``t0`` if given)."""
    if t0 is not None:
        p = specialize(p, t0)
    if not p:
        raise ValueError("multiplicity of the zero polynomial is undefined")
    return min(sum(e) for e in p._terms)
