"""A small exact commutative algebra kernel.

Buchberger's algorithm in degree reverse lexicographic order, torus emptiness
via the Rabinowitsch trick, and local quotient dimensions ``dim O_n / (J + m^N)``
from truncated Macaulay matrices.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import lcm
from typing import Sequence

from .linalg import SparseEchelon
from .poly import Exponent, Polynomial

# Internal polynomials are plain dicts {exponent: Fraction}.


def degrevlex_key(e: Exponent):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lead(p: dict) -> Exponent:
    return max(p, key=degrevlex_key)


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_scaled(p: dict, q: dict, c: Fraction, shift: Exponent) -> dict:
    """p - c * x^shift * q."""
    out = dict(p)
    for e, v in q.items():
        k = tuple(x + y for x, y in zip(e, shift))
        nv = out.get(k, 0) - c * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def _monic(p: dict) -> dict:
    lc = p[_lead(p)]
    return {e: v / lc for e, v in p.items()}


def _reduce(p: dict, basis: list[tuple[Exponent, dict]]) -> dict:
    """Full normal form of ``p`` modulo ``basis`` (pairs of lead, monic poly)."""
    rem: dict = {}
    p = dict(p)
    while p:
        lt = _lead(p)
        for le, g in basis:
            if _divides(le, lt):
                shift = tuple(x - y for x, y in zip(lt, le))
                p = _sub_scaled(p, g, p[lt], shift)
                break
        else:
            rem[lt] = p.pop(lt)
    return rem


def _spoly(f: dict, lf: Exponent, g: dict, lg: Exponent) -> dict:
    m = _lcm(lf, lg)
    sf = tuple(x - y for x, y in zip(m, lf))
    sg = tuple(x - y for x, y in zip(m, lg))
    out = {tuple(x + y for x, y in zip(e, sf)): v for e, v in f.items()}
    return _sub_scaled(out, g, Fraction(1), sg)


def _to_dict(p: Polynomial) -> dict:
    if p.is_parametric:
        raise ValueError("Groebner computations need a non-parametric polynomial")
    return {e: Fraction(c) for e, c in p.items()}


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with monic generators, sorted by leading term."""

    vars: tuple[str, ...]
    generators: tuple[Polynomial, ...]

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0] == Polynomial(
            self.vars, {(0,) * len(self.vars): 1})

    def normal_form(self, p: Polynomial) -> Polynomial:
        basis = [(_lead(d), d) for d in (_to_dict(g) for g in self.generators)]
        return Polynomial(self.vars, _reduce(_to_dict(p), basis))


def _groebner_dicts(gens: list[dict], n: int) -> list[dict]:
    basis: list[tuple[Exponent, dict]] = []
    pairs: list = []
    counter = 0

    def add(g: dict):
        nonlocal counter
        g = _monic(g)
        lg = _lead(g)
        idx = len(basis)
        basis.append((lg, g))
        for j in range(idx):
            lj = basis[j][0]
            m = _lcm(lg, lj)
            # Buchberger's product criterion: coprime leads reduce to zero.
            if all(a == 0 or b == 0 for a, b in zip(lg, lj)):
                continue
            heapq.heappush(pairs, (degrevlex_key(m), counter, j, idx))
            counter += 1

    for g in gens:
        g = _reduce(g, basis)
        if g:
            add(g)
            if sum(basis[-1][0]) == 0:
                return [basis[-1][1]]
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        (li, fi), (lj, fj) = basis[i], basis[j]
        s = _spoly(fi, li, fj, lj)
        h = _reduce(s, basis)
        if h:
            add(h)
            if sum(basis[-1][0]) == 0:
                return [basis[-1][1]]
    live = list(basis)
    # Interreduce into the reduced basis.
    live.sort(key=lambda b: degrevlex_key(b[0]))
    reduced: list[tuple[Exponent, dict]] = []
    for le, g in live:
        if any(_divides(l2, le) for l2, _ in reduced):
            continue
        reduced.append((le, g))
    out = []
    for k, (le, g) in enumerate(reduced):
        others = reduced[:k] + reduced[k + 1:]
        out.append(_monic(_reduce(g, others) if others else g))
    out.sort(key=lambda d: degrevlex_key(_lead(d)))
    return out


def groebner(gens: Sequence[Polynomial]) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens`` (degrevlex)."""
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    vars = gens[0].vars
    if any(g.vars != vars for g in gens):
        raise ValueError("generators use different variables")
    dicts = _groebner_dicts([_to_dict(g) for g in gens], len(vars))
    return GroebnerBasis(vars, tuple(Polynomial(vars, d) for d in dicts))


def contains_one(gens: Sequence[Polynomial]) -> bool:
    gens = [g for g in gens if g]
    if not gens:
        return False
    return groebner(gens).is_unit


def _strip_monomial_content(g: dict) -> dict:
    m = tuple(min(col) for col in zip(*g))
    if not any(m):
        return g
    return {tuple(a - b for a, b in zip(e, m)): v for e, v in g.items()}


def empty_on_torus(gens: Sequence[Polynomial], n: int | None = None) -> bool:
    """True iff the generators have no common zero with every coordinate nonzero.

    Adjoins ``u * x_1 * ... * x_n - 1`` and asks whether 1 is in the ideal.
    Monomial factors are divided out first; they never vanish on the torus.
    """
    gens = [g for g in gens if g]
    if n is None:
        n = gens[0].nvars if gens else 0
    if not gens:
        return n == 0
    dicts = [_strip_monomial_content(_to_dict(g)) for g in gens]
    if any(len(d) == 1 for d in dicts):
        return True
    lifted = [{e + (0,): v for e, v in d.items()} for d in dicts]
    lifted.append({(1,) * (n + 1): Fraction(1), (0,) * (n + 1): Fraction(-1)})
    basis = _groebner_dicts(lifted, n + 1)
    return len(basis) == 1 and sum(_lead(basis[0])) == 0


# -- local quotient dimension ----------------------------------------------

def monomials_below(n: int, degree: int) -> list[Exponent]:
    """All exponents of total degree < ``degree``, ordered by degree, then lex."""
    out = []
    for d in range(degree):
        block = []
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            block.append(tuple(e))
        out.extend(sorted(block, reverse=True))
    return out


@dataclass(frozen=True)
class MacaulayFrame:
    degree: int
    ncols: int
    nrows: int
    rank: int
    dimension: int
    certificate: bool


def local_quotient_dim(gens: Sequence[Polynomial], degree: int) -> MacaulayFrame:
    """``dim C[x]/(J + m^degree)`` for J generated by ``gens``.

    Rows are the truncations below ``degree`` of ``x^b * g``. The certificate
    holds iff every monomial of degree ``degree - 1`` lies in ``J + m^degree``;
    by Nakayama the dimension then equals ``dim O_n / J``.
    """
    if degree < 2:
        raise ValueError("truncation degree must be at least 2")
    gens = [g for g in gens if g]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    n = gens[0].nvars
    cols = monomials_below(n, degree)
    index = {e: i for i, e in enumerate(cols)}
    top_start = len(cols) - sum(1 for e in cols if sum(e) == degree - 1)

    ech = SparseEchelon()
    rows = []
    for g in gens:
        d = _to_dict(g)
        den = lcm(*(v.denominator for v in d.values()))
        ig = {e: int(v * den) for e, v in d.items()}
        mg = min(sum(e) for e in ig)
        for shift in cols:
            if sum(shift) + mg >= degree:
                break
            row = {}
            for e, v in ig.items():
                k = tuple(a + b for a, b in zip(e, shift))
                col = index.get(k)
                if col is not None:
                    row[col] = v
            if row:
                rows.append(row)
    rows.sort(key=min)
    for row in rows:
        ech.insert(row)
    top_pivots = sum(1 for c in ech.pivots if c >= top_start)
    return MacaulayFrame(
        degree=degree,
        ncols=len(cols),
        nrows=len(rows),
        rank=ech.rank,
        dimension=len(cols) - ech.rank,
        certificate=top_pivots == len(cols) - top_start,
    )
