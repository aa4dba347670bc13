"""Exact feasibility of linear inequality systems by Fourier-Motzkin elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Constraint = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs, rhs) -> Constraint:
    lead = next((abs(c) for c in coeffs if c), None)
    if lead is None:
        return tuple(coeffs), rhs
    return tuple(c / lead for c in coeffs), rhs / lead


def _prune(system: list[Constraint]) -> list[Constraint]:
    # Same direction: only the tightest right-hand side matters.
    best: dict = {}
    for coeffs, rhs in system:
        if coeffs not in best or rhs > best[coeffs]:
            best[coeffs] = rhs
    return list(best.items())


def solve(a: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return some ``y`` with ``a @ y >= b`` componentwise, or None if infeasible."""
    nvars = len(a[0]) if a else 0
    system = _prune([_normalize([Fraction(x) for x in row], Fraction(r)) for row, r in zip(a, b)])
    stages = []
    for k in range(nvars - 1, -1, -1):
        stages.append(system)
        lower, upper, rest = [], [], []
        for coeffs, rhs in system:
            if coeffs[k] > 0:
                lower.append((coeffs, rhs))
            elif coeffs[k] < 0:
                upper.append((coeffs, rhs))
            else:
                rest.append((coeffs, rhs))
        combined = list(rest)
        for lc, lr in lower:
            for uc, ur in upper:
                # lc[k] > 0 and uc[k] < 0; positive combination cancels y_k.
                s, t = -uc[k], lc[k]
                coeffs = [s * x + t * y for x, y in zip(lc, uc)]
                coeffs[k] = Fraction(0)
                combined.append(_normalize(coeffs, s * lr + t * ur))
        system = _prune(combined)
    if any(rhs > 0 for _, rhs in system):
        return None
    y = [Fraction(0)] * nvars
    for k, stage in zip(range(nvars), reversed(stages)):
        lo, hi = None, None
        for coeffs, rhs in stage:
            ck = coeffs[k]
            if not ck:
                continue
            bound = (rhs - sum(c * v for j, (c, v) in enumerate(zip(coeffs, y)) if j < k)) / ck
            if ck > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None:
            y[k] = lo
        elif hi is not None:
            y[k] = hi
    return y
