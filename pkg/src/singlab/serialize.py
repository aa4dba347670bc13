"""JSON-ready dicts for reports, and their inverses.

Integers stay integers; rationals become ``"p/q"`` strings; exponent vectors
become lists. ``from_dict(to_dict(x)) == x`` for every report type here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .family import FamilyReport, SampleRecord, Tri, Verdict
from .invariants import InvariantReport, NondegeneracyVerdict
from .newton import (Face, NewtonComplex, gamma_minus_volumes, newton_number_from_volumes,
                     newton_number_stabilized, stabilize_support)

SCHEMA = "singlab/1"


def q(x: Fraction) -> str:
    return str(Fraction(x))


def face_to_dict(face: Face | None):
    if face is None:
        return None
    return {
        "dim": face.dim,
        "points": sorted(list(p) for p in face.points),
        "vertices": sorted(list(p) for p in face.vertices),
        "weight": list(face.weight),
    }


def face_from_dict(d) -> Face | None:
    if d is None:
        return None
    return Face(
        dim=d["dim"],
        points=frozenset(tuple(p) for p in d["points"]),
        vertices=frozenset(tuple(p) for p in d["vertices"]),
        weight=tuple(d["weight"]),
    )


def invariants_to_dict(r: InvariantReport) -> dict:
    return {
        "mu": r.mu,
        "mu_route": r.mu_route,
        "mu_certified": r.mu_certified,
        "mu_newton": r.mu_newton,
        "mu_oracle": r.mu_oracle,
        "oracle_degree": r.oracle_degree,
        "kouchnirenko": r.kouchnirenko,
        "nu": r.nu,
        "nu_stabilized": r.nu_stabilized,
        "mult": r.mult,
        "convenient": r.convenient,
        "nondegenerate": r.nondeg.nondegenerate,
        "nondegeneracy_witness": face_to_dict(r.nondeg.witness),
        "faces_checked": r.nondeg.faces_checked,
        "notes": list(r.notes),
    }


def invariants_from_dict(d: dict) -> InvariantReport:
    return InvariantReport(
        mu=d["mu"],
        mu_route=d["mu_route"],
        mu_certified=d["mu_certified"],
        nu=d["nu"],
        nu_stabilized=d["nu_stabilized"],
        mult=d["mult"],
        convenient=d["convenient"],
        nondeg=NondegeneracyVerdict(
            d["nondegenerate"], face_from_dict(d["nondegeneracy_witness"]), d["faces_checked"]),
        mu_newton=d["mu_newton"],
        mu_oracle=d["mu_oracle"],
        kouchnirenko=d["kouchnirenko"],
        oracle_degree=d["oracle_degree"],
        notes=tuple(d["notes"]),
    )


def _sample_to_dict(s: SampleRecord) -> dict:
    return {"t": q(s.t0), "invariants": invariants_to_dict(s.report)}


def _sample_from_dict(d: dict) -> SampleRecord:
    return SampleRecord(Fraction(d["t"]), invariants_from_dict(d["invariants"]))


def family_to_dict(r: FamilyReport) -> dict:
    return {
        "base": _sample_to_dict(r.base),
        "samples": [_sample_to_dict(s) for s in r.samples],
        "mu_constant": r.mu_constant.value,
        "equimultiple": r.equimultiple.value,
        "family_nondegenerate": r.family_nondegenerate.value,
        "verdict": r.verdict.value,
        "control_function": r.control_function,
        "control_vertices": [list(v) for v in r.control_vertices],
        "newton_boundary_constant": r.newton_boundary_constant,
        "notes": list(r.notes),
    }


def family_from_dict(d: dict) -> FamilyReport:
    return FamilyReport(
        base=_sample_from_dict(d["base"]),
        samples=tuple(_sample_from_dict(s) for s in d["samples"]),
        mu_constant=Tri(d["mu_constant"]),
        equimultiple=Tri(d["equimultiple"]),
        family_nondegenerate=Tri(d["family_nondegenerate"]),
        verdict=Verdict(d["verdict"]),
        control_function=d["control_function"],
        control_vertices=tuple(tuple(v) for v in d["control_vertices"]),
        newton_boundary_constant=d["newton_boundary_constant"],
        notes=tuple(d["notes"]),
    )


@dataclass(frozen=True)
class NewtonSummary:
    vertices: tuple[tuple[int, ...], ...]
    face_counts: tuple[int, ...]
    convenient: bool
    volumes: tuple[Fraction, ...]
    nu: int
    stabilization_degree: int | None


def newton_summary(cx: NewtonComplex, stabilize: bool = False) -> NewtonSummary:
    """Vertices, face counts by dimension, volumes and Newton number.

    For a non-convenient complex with ``stabilize`` the volumes are those of
    the stabilized support.
    """
    counts = cx.face_counts()
    degree = None
    supp = cx.support
    if not cx.convenient and stabilize:
        stab = newton_number_stabilized(supp)
        degree = stab.degree
        supp = stabilize_support(supp, degree)
    vv = gamma_minus_volumes(supp)
    return NewtonSummary(
        vertices=tuple(sorted(cx.vertices, reverse=True)),
        face_counts=tuple(counts.get(d, 0) for d in range(cx.nvars)),
        convenient=cx.convenient,
        volumes=vv.volumes,
        nu=newton_number_from_volumes(vv),
        stabilization_degree=degree,
    )


def newton_to_dict(s: NewtonSummary) -> dict:
    return {
        "vertices": [list(v) for v in s.vertices],
        "face_counts": list(s.face_counts),
        "convenient": s.convenient,
        "volumes": [q(v) for v in s.volumes],
        "nu": s.nu,
        "stabilization_degree": s.stabilization_degree,
    }


def newton_from_dict(d: dict) -> NewtonSummary:
    return NewtonSummary(
        vertices=tuple(tuple(v) for v in d["vertices"]),
        face_counts=tuple(d["face_counts"]),
        convenient=d["convenient"],
        volumes=tuple(Fraction(v) for v in d["volumes"]),
        nu=d["nu"],
        stabilization_degree=d["stabilization_degree"],
    )
