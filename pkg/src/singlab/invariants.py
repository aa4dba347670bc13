"""Per-germ invariants: non-degeneracy, Milnor number by two routes, multiplicity,
and Milnor numbers of hyperplane sections."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .ideal import empty_on_torus, local_quotient_dim
from .newton import Face, newton_complex, face_polynomial, newton_number, newton_number_stabilized
from .poly import HyperplaneSpec, Polynomial, differentiate, multiplicity, substitute_hyperplane

log = logging.getLogger(__name__)

DEFAULT_CAP = 64


class NotIsolated(ValueError):
    """The germ does not have an isolated singularity (or the degree cap is too small)."""


class KouchnirenkoMismatch(AssertionError):
    """Both Milnor routes ran on a convenient non-degenerate germ and disagree."""


@dataclass(frozen=True)
class NondegeneracyVerdict:
    nondegenerate: bool
    witness: Face | None
    faces_checked: int


@dataclass(frozen=True)
class InvariantReport:
    mu: int
    mu_route: str  # "newton" or "macaulay"
    mu_certified: bool
    nu: int
    nu_stabilized: bool
    mult: int
    convenient: bool
    nondeg: NondegeneracyVerdict
    mu_newton: int | None = None
    mu_oracle: int | None = None
    # "equal", "not-run", "inapplicable-degenerate" or "inapplicable-non-convenient"
    kouchnirenko: str = "not-run"
    oracle_degree: int | None = None
    notes: tuple[str, ...] = field(default=())


def _check_germ(f: Polynomial):
    if f.is_parametric:
        raise ValueError("specialize the deformation parameter first")
    if not f:
        raise ValueError("zero polynomial")
    if f.coeff((0,) * f.nvars):
        raise ValueError("germ must vanish at the origin")


def check_nondegenerate(f: Polynomial, skip_vertices: bool = True) -> NondegeneracyVerdict:
    """Kouchnirenko non-degeneracy: for every compact face, the partials of the
    face polynomial have no common zero on the torus.

    A vertex gives a single monomial, whose partials cannot all vanish on the
    torus, so vertices are skipped unless ``skip_vertices`` is false.
    """
    _check_germ(f)
    cx = newton_complex(f)
    checked = 0
    for face in sorted(cx.faces, key=lambda g: (g.dim, sorted(g.points))):
        if face.dim == 0 and skip_vertices:
            continue
        fg = face_polynomial(f, face)
        partials = [differentiate(fg, i) for i in range(f.nvars)]
        checked += 1
        if not empty_on_torus(partials, f.nvars):
            return NondegeneracyVerdict(False, face, checked)
    return NondegeneracyVerdict(True, None, checked)


def milnor_newton(f: Polynomial, verdict: NondegeneracyVerdict | None = None) -> int:
    """Milnor number as the Newton number; valid for convenient non-degenerate germs."""
    _check_germ(f)
    cx = newton_complex(f)
    if not cx.convenient:
        raise ValueError("Newton route needs a convenient germ")
    verdict = verdict or check_nondegenerate(f)
    if not verdict.nondegenerate:
        raise ValueError("Newton route needs a non-degenerate germ")
    return newton_number(cx.support)


def milnor_frame(f: Polynomial, cap: int = DEFAULT_CAP):
    """Run the Macaulay schedule N = 2m, 2m+2, ... until the certificate holds."""
    _check_germ(f)
    gens = [differentiate(f, i) for i in range(f.nvars)]
    if sum(1 for g in gens if g) < f.nvars:
        raise NotIsolated("a partial derivative vanishes identically")
    degree = max(2, 2 * multiplicity(f))
    while degree <= cap:
        frame = local_quotient_dim(gens, degree)
        log.debug("macaulay N=%d dim=%d cert=%s", degree, frame.dimension, frame.certificate)
        if frame.certificate:
            return frame
        degree += 2
    raise NotIsolated(f"no Macaulay certificate up to degree {cap}")


def milnor_oracle(f: Polynomial, cap: int = DEFAULT_CAP) -> int:
    """Milnor number ``dim O_n / J(f)`` from certified Macaulay truncations."""
    return milnor_frame(f, cap).dimension


def section_milnor(f: Polynomial, h: HyperplaneSpec, cap: int = DEFAULT_CAP) -> int:
    """Milnor number of the restriction of ``f`` to the hyperplane ``h``."""
    return milnor_oracle(substitute_hyperplane(f, h), cap)


def random_hyperplanes(n: int, index: int, k: int, seed: int = 0, height: int = 5):
    rng = random.Random(seed)
    out = []
    for _ in range(k):
        coeffs = {}
        for j in range(n):
            if j != index:
                num = rng.randint(-height, height)
                coeffs[j] = Fraction(num, rng.randint(1, height))
        out.append(HyperplaneSpec(index, coeffs))
    return out


def min_section_milnor(f: Polynomial, index: int, k: int, seed: int = 0,
                       cap: int = DEFAULT_CAP) -> tuple[int, HyperplaneSpec]:
    """Smallest section Milnor number over ``k`` seeded random hyperplanes
    through the origin solving for variable ``index``.

    Generic sections minimize the section Milnor number, so this is a
    sampling estimate of the generic value.
    """
    best = None
    for h in random_hyperplanes(f.nvars, index, k, seed):
        try:
            m = section_milnor(f, h, cap)
        except NotIsolated:
            continue
        if best is None or m < best[0]:
            best = (m, h)
    if best is None:
        raise NotIsolated("no sampled section has an isolated singularity")
    return best


def analyze(f: Polynomial, verify: bool = False, cap: int = DEFAULT_CAP) -> InvariantReport:
    """Bundle the invariants of one germ.

    The Newton route is used when the germ is convenient and non-degenerate,
    otherwise the Macaulay oracle. ``verify`` runs both routes where possible
    and checks them against each other.
    """
    _check_germ(f)
    cx = newton_complex(f)
    verdict = check_nondegenerate(f)
    mult = multiplicity(f)
    eligible = cx.convenient and verdict.nondegenerate
    notes = []

    mu_oracle = None
    degree = None
    # The oracle runs first so a non-isolated germ is reported as such rather
    # than as a stabilization failure.
    if verify or not eligible:
        frame = milnor_frame(f, cap)
        mu_oracle, degree = frame.dimension, frame.degree
    stab = newton_number_stabilized(cx.support)
    nu = stab.nu
    mu_newton = nu if eligible else None

    if mu_oracle is not None and mu_oracle < nu:
        raise KouchnirenkoMismatch(f"Milnor number {mu_oracle} below Newton number {nu}")
    if not eligible:
        status = "inapplicable-degenerate" if not verdict.nondegenerate else "inapplicable-non-convenient"
        if not cx.convenient:
            notes.append("Newton number computed after adding high axis powers")
        if mu_oracle is not None and mu_oracle != nu:
            notes.append(f"mu={mu_oracle} differs from nu={nu}; equality not expected here")
    elif mu_oracle is not None:
        if mu_oracle != mu_newton:
            raise KouchnirenkoMismatch(
                f"non-degenerate convenient germ with mu={mu_oracle} but nu={mu_newton}")
        status = "equal"
    else:
        status = "not-run"

    mu, route = (mu_newton, "newton") if eligible else (mu_oracle, "macaulay")
    return InvariantReport(
        mu=mu,
        mu_route=route,
        mu_certified=True,
        nu=nu,
        nu_stabilized=stab.degree is not None,
        mult=mult,
        convenient=cx.convenient,
        nondeg=verdict,
        mu_newton=mu_newton,
        mu_oracle=mu_oracle,
        kouchnirenko=status,
        oracle_degree=degree,
        notes=tuple(notes),
    )
