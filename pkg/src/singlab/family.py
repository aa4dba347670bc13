"""One-parameter deformation families: sampled invariants and the verdict on
topological triviality and equimultiplicity."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .invariants import DEFAULT_CAP, InvariantReport, analyze
from .newton import newton_complex, vertices as newton_vertices
from .poly import Polynomial, specialize


class Tri(str, Enum):
    YES = "yes"
    NO = "no"
    INCONCLUSIVE = "inconclusive"


class Verdict(str, Enum):
    TRIVIAL = "topologically-trivial-and-equimultiple"
    DEGENERATE = "not-applicable-degenerate"
    MU_NOT_CONSTANT = "mu-not-constant"
    INCONCLUSIVE = "inconclusive"


class SemicontinuityError(AssertionError):
    """A sample has a larger Milnor number than the undeformed germ."""


@dataclass(frozen=True)
class DeformationFamily:
    F: Polynomial

    def __post_init__(self):
        if not self.F.is_parametric:
            raise ValueError("a deformation family needs a declared parameter")
        f = self.base
        if not f:
            raise ValueError("the family vanishes identically at t=0")
        if f.coeff((0,) * f.nvars):
            raise ValueError("the undeformed germ does not vanish at the origin")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.F.vars

    @property
    def param(self) -> str:
        return self.F.param

    @property
    def base(self) -> Polynomial:
        return specialize(self.F, 0)

    def at(self, t0) -> Polynomial:
        return specialize(self.F, t0)


@dataclass(frozen=True)
class SampleRecord:
    t0: Fraction
    report: InvariantReport


@dataclass(frozen=True)
class FamilyReport:
    base: SampleRecord
    samples: tuple[SampleRecord, ...]
    mu_constant: Tri
    equimultiple: Tri
    family_nondegenerate: Tri
    verdict: Verdict
    control_function: str
    control_vertices: tuple[tuple[int, ...], ...]
    newton_boundary_constant: bool
    notes: tuple[str, ...] = field(default=())


DEFAULT_PARAMS = (Fraction(1), Fraction(1, 2), Fraction(1, 3))


def sample_params(k: int, seed: int = 0, height: int = 9) -> list[Fraction]:
    """``k`` distinct nonzero small-height rationals: 1, 1/2, 1/3, then seeded extras."""
    if k < 1:
        raise ValueError("need at least one sample")
    out = list(DEFAULT_PARAMS[:k])
    rng = random.Random(seed)
    while len(out) < k:
        q = Fraction(rng.choice([-1, 1]) * rng.randint(1, height), rng.randint(1, height))
        if q not in out:
            out.append(q)
    return out


def decide_verdict(mu_constant: Tri, family_nondegenerate: Tri) -> Verdict:
    """Triviality needs a constant Milnor number and a non-degenerate family."""
    if mu_constant is Tri.NO:
        return Verdict.MU_NOT_CONSTANT
    if family_nondegenerate is Tri.NO:
        return Verdict.DEGENERATE
    if mu_constant is Tri.YES and family_nondegenerate is Tri.YES:
        return Verdict.TRIVIAL
    return Verdict.INCONCLUSIVE


def _monomial(alpha, names, conj=False):
    parts = []
    for name, k in zip(names, alpha):
        if k:
            base = f"conj({name})" if conj else name
            parts.append(base if k == 1 else f"{base}^{k}")
    return "*".join(parts)


def control_function(fam: DeformationFamily, t0) -> tuple[str, tuple[tuple[int, ...], ...]]:
    """rho(z) = sum over Newton vertices a of z^a * conj(z)^a, for F at ``t0``."""
    ft = fam.at(t0)
    if not ft:
        raise ValueError(f"family vanishes identically at t={t0}")
    verts = tuple(sorted(newton_vertices(ft), reverse=True))
    terms = [f"{_monomial(a, ft.vars)}*{_monomial(a, ft.vars, conj=True)}" for a in verts]
    return " + ".join(terms), verts


def check_newton_boundary_constant(fam: DeformationFamily, samples: Sequence) -> bool:
    """Whether the compact faces, as point sets, agree at t=0 and at every sample."""
    def faces(t0):
        return frozenset(face.points for face in newton_complex(fam.at(t0)).faces)

    ref = faces(0)
    return all(faces(t0) == ref for t0 in samples)


def _tri_all(flags) -> Tri:
    return Tri.YES if all(flags) else Tri.NO


def analyze_family(fam: DeformationFamily, k: int = 3, seed: int = 0, verify: bool = False,
                   cap: int = DEFAULT_CAP, params: Sequence | None = None) -> FamilyReport:
    """Sample the parameter, compute invariants at t=0 and every sample, and
    decide mu-constancy, equimultiplicity, non-degeneracy and the verdict."""
    ts = [Fraction(t) for t in params] if params is not None else sample_params(k, seed)
    if any(t == 0 for t in ts):
        raise ValueError("t=0 is always analyzed as the base; samples must be nonzero")
    rho_at = ts[0]
    ts = sorted(set(ts))
    base = SampleRecord(Fraction(0), analyze(fam.base, verify=verify, cap=cap))
    records = []
    for t0 in ts:
        ft = fam.at(t0)
        if not ft or ft.coeff((0,) * ft.nvars):
            raise ValueError(f"F at t={t0} is not a germ vanishing at the origin")
        rep = analyze(ft, verify=verify, cap=cap)
        if rep.mu > base.report.mu:
            raise SemicontinuityError(
                f"mu(t={t0})={rep.mu} exceeds mu(0)={base.report.mu}")
        records.append(SampleRecord(t0, rep))

    notes = []
    mus = [r.report.mu for r in records]
    if not all(r.report.mu_certified for r in [base, *records]):
        mu_constant = Tri.INCONCLUSIVE
    elif all(m == base.report.mu for m in mus):
        mu_constant = Tri.YES
        notes.append(f"mu-constancy certified at {len(records)} sampled parameter values only")
    elif len(set(mus)) == 1:
        mu_constant = Tri.NO
    else:
        mu_constant = Tri.INCONCLUSIVE
        notes.append("sampled Milnor numbers disagree among nonzero parameter values")

    equimultiple = _tri_all(r.report.mult == base.report.mult for r in records)
    nondeg = _tri_all(r.report.nondeg.nondegenerate for r in [base, *records])
    verdict = decide_verdict(mu_constant, nondeg)
    if verdict is Verdict.TRIVIAL and equimultiple is not Tri.YES:
        notes.append("multiplicity varies although mu is constant and the family is "
                     "non-degenerate at the samples")
    rho, verts = control_function(fam, rho_at)
    return FamilyReport(
        base=base,
        samples=tuple(records),
        mu_constant=mu_constant,
        equimultiple=equimultiple,
        family_nondegenerate=nondeg,
        verdict=verdict,
        control_function=rho,
        control_vertices=verts,
        newton_boundary_constant=check_newton_boundary_constant(fam, ts),
        notes=tuple(notes),
    )
