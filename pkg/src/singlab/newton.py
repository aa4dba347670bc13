"""Newton polyhedra: compact faces, convenience, cone volumes and the Newton number.

Everything is exact. Compact faces of the Newton polyhedron are exactly the
faces of the support selected by a strictly positive weight vector, which is
decided by a small linear feasibility problem per candidate face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd, lcm
from typing import Iterable

from . import fm
from .linalg import bareiss_det, nullspace, rank
from .poly import Exponent, Polynomial, support as poly_support


class NewtonError(ValueError):
    pass


class NonConvenientError(NewtonError):
    """The support misses a coordinate axis and no stabilization was requested."""


class StabilizationError(NewtonError):
    """Newton numbers did not settle while pushing the added axis powers out."""


@dataclass(frozen=True)
class Face:
    dim: int
    points: frozenset[Exponent]
    vertices: frozenset[Exponent]
    weight: tuple[int, ...]

    @property
    def level(self) -> int:
        p = next(iter(self.points))
        return sum(w * x for w, x in zip(self.weight, p))


@dataclass(frozen=True)
class NewtonComplex:
    nvars: int
    support: frozenset[Exponent]
    faces: tuple[Face, ...]
    convenient: bool

    @property
    def vertices(self) -> frozenset[Exponent]:
        return frozenset(v for f in self.faces if f.dim == 0 for v in f.points)

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self.faces if f.dim == d]

    def face_counts(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for f in self.faces:
            counts[f.dim] = counts.get(f.dim, 0) + 1
        return counts

    def subfaces(self, face: Face) -> list[Face]:
        return [g for g in self.faces if g.dim == face.dim - 1 and g.points <= face.points]


@dataclass(frozen=True)
class VolumeVector:
    """``volumes[k-1]`` is V_k; see :func:`gamma_minus_volumes`."""

    volumes: tuple[Fraction, ...] = field(default=())

    def __getitem__(self, k: int) -> Fraction:
        return self.volumes[k - 1]


def _as_support(obj) -> frozenset[Exponent]:
    if isinstance(obj, Polynomial):
        return poly_support(obj)
    return frozenset(tuple(int(x) for x in p) for p in obj)


def _dot(w, p):
    return sum(a * b for a, b in zip(w, p))


def _primitive(v: Iterable[Fraction]) -> tuple[int, ...]:
    v = [Fraction(x) for x in v]
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints) or 1
    return tuple(x // g for x in ints)


def _face_weight(points: frozenset, others: list, n: int) -> tuple[int, ...] | None:
    """A strictly positive weight whose minimum over the support is attained
    exactly on ``points``; None if there is none.

    Homogeneity lets the strict inequalities be scaled to ``>= 1``.
    """
    pts = sorted(points)
    p0 = pts[0]
    eqs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    basis = nullspace(eqs, n) if any(any(r) for r in eqs) else nullspace([], n)
    if not basis:
        return None
    # w = sum_k y_k basis[k]; each strict condition is a row in y.
    rows, rhs = [], []
    for i in range(n):
        rows.append([b[i] for b in basis])
        rhs.append(1)
    for q in others:
        d = [a - b for a, b in zip(q, p0)]
        rows.append([_dot(b, d) for b in basis])
        rhs.append(1)
    y = fm.solve(rows, rhs)
    if y is None:
        return None
    w = [sum(yk * b[i] for yk, b in zip(y, basis)) for i in range(n)]
    return _primitive(w)


def _undominated(points: frozenset) -> list[Exponent]:
    pts = sorted(points)
    keep = []
    for p in pts:
        if not any(q != p and all(a <= b for a, b in zip(q, p)) for q in pts):
            keep.append(p)
    return keep


def _affine_dim(points) -> int:
    pts = list(points)
    if len(pts) <= 1:
        return 0
    p0 = pts[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in pts[1:]])


def is_convenient(supp, n: int | None = None) -> bool:
    """True iff every coordinate axis carries a point of the support."""
    supp = _as_support(supp)
    if n is None:
        if not supp:
            return False
        n = len(next(iter(supp)))
    return all(
        any(p[i] > 0 and all(x == 0 for j, x in enumerate(p) if j != i) for p in supp)
        for i in range(n)
    )


def newton_complex(supp) -> NewtonComplex:
    """All compact faces of the Newton polyhedron of ``supp``.

    Candidates are affine spans of vertex subsets; a candidate is kept iff a
    strictly positive weight selects exactly the support points on that span.
    """
    supp = _as_support(supp)
    if not supp:
        raise NewtonError("empty support")
    n = len(next(iter(supp)))
    if any(len(p) != n for p in supp):
        raise NewtonError("support points of mixed length")
    if (0,) * n in supp:
        raise NewtonError("support contains the origin; not a germ vanishing at 0")
    cand = _undominated(supp)
    allpts = sorted(supp)

    faces: list[Face] = []
    verts = []
    for p in cand:
        w = _face_weight(frozenset([p]), [q for q in allpts if q != p], n)
        if w is not None:
            verts.append(p)
            faces.append(Face(0, frozenset([p]), frozenset([p]), w))
    vset = frozenset(verts)
    seen = set()
    for d in range(1, n):
        for combo in combinations(verts, d + 1):
            if _affine_dim(combo) != d:
                continue
            p0 = combo[0]
            diffs = [[a - b for a, b in zip(p, p0)] for p in combo[1:]]
            on_span = frozenset(
                q for q in cand
                if rank(diffs + [[a - b for a, b in zip(q, p0)]]) == d
            )
            if on_span in seen:
                continue
            seen.add(on_span)
            others = [q for q in allpts if q not in on_span]
            w = _face_weight(on_span, others, n)
            if w is not None:
                faces.append(Face(d, on_span, on_span & vset, w))
    return NewtonComplex(n, supp, tuple(faces), is_convenient(supp, n))


def vertices(supp) -> frozenset[Exponent]:
    return newton_complex(supp).vertices


def face_polynomial(f: Polynomial, face: Face) -> Polynomial:
    """The terms of ``f`` whose exponents lie on ``face``."""
    supp = poly_support(f)
    if not face.points <= supp:
        raise NewtonError("face does not belong to this polynomial's Newton complex")
    level = face.level
    if any(_dot(face.weight, p) < level for p in supp):
        raise NewtonError("face does not belong to this polynomial's Newton complex")
    return Polynomial(f.vars, {e: c for e, c in f.items() if e in face.points}, f.param)


def _simplices(cx: NewtonComplex, face: Face, cache: dict) -> list[tuple[Exponent, ...]]:
    """Pulling triangulation of a compact face from its smallest vertex."""
    if face.points in cache:
        return cache[face.points]
    if face.dim == 0:
        out = [tuple(face.points)]
    else:
        v = min(face.vertices)
        out = []
        for sub in cx.subfaces(face):
            if v in sub.points:
                continue
            out.extend((v,) + s for s in _simplices(cx, sub, cache))
    cache[face.points] = out
    return out


def cone_volume(cx: NewtonComplex) -> Fraction:
    """Volume of the cone from the origin over the compact faces of dimension n-1."""
    n = cx.nvars
    cache: dict = {}
    total = Fraction(0)
    for face in cx.faces_of_dim(n - 1):
        for simplex in _simplices(cx, face, cache):
            total += abs(bareiss_det([list(v) for v in simplex]))
    return total / factorial(n)


def _restricted(supp: frozenset, axes: tuple[int, ...]) -> frozenset:
    drop = [j for j in range(len(next(iter(supp)))) if j not in axes]
    return frozenset(
        tuple(p[j] for j in axes) for p in supp if all(p[j] == 0 for j in drop)
    )


def gamma_minus_volumes(supp) -> VolumeVector:
    """V_k = sum over k-element coordinate subsets I of vol_k(Gamma_-(f|_I))."""
    supp = _as_support(supp)
    cx = newton_complex(supp)
    if not cx.convenient:
        raise NonConvenientError("support is not convenient; stabilize first")
    n = cx.nvars
    vols = []
    for k in range(1, n):
        vk = Fraction(0)
        for axes in combinations(range(n), k):
            vk += cone_volume(newton_complex(_restricted(supp, axes)))
        vols.append(vk)
    vols.append(cone_volume(cx))
    return VolumeVector(tuple(vols))


def newton_number_from_volumes(vv: VolumeVector) -> int:
    n = len(vv.volumes)
    total = Fraction((-1) ** n)
    for k in range(1, n + 1):
        total += (-1) ** (n - k) * factorial(k) * vv[k]
    if total.denominator != 1:
        raise NewtonError(f"Newton number {total} is not an integer")
    return int(total)


def newton_number(supp) -> int:
    """n! V_n - (n-1)! V_{n-1} + ... + (-1)^{n-1} V_1 + (-1)^n for a convenient support."""
    return newton_number_from_volumes(gamma_minus_volumes(supp))


def stabilize_support(supp, degree: int) -> frozenset[Exponent]:
    """Add ``degree * e_i`` for every axis the support misses."""
    supp = _as_support(supp)
    n = len(next(iter(supp)))
    extra = set()
    for i in range(n):
        if not any(p[i] > 0 and sum(p) == p[i] for p in supp):
            e = [0] * n
            e[i] = degree
            extra.add(tuple(e))
    return supp | extra


@dataclass(frozen=True)
class Stabilized:
    nu: int
    degree: int | None
    history: tuple[tuple[int, int], ...]


def newton_number_stabilized(supp, max_doublings: int = 10) -> Stabilized:
    """Newton number with missing axis powers ``N e_i`` added, N doubling from
    ``1 + max degree`` until two consecutive values agree.

    Convenient input returns :func:`newton_number` directly.
    """
    supp = _as_support(supp)
    if not supp:
        raise NewtonError("empty support")
    if is_convenient(supp):
        return Stabilized(newton_number(supp), None, ())
    degree = 1 + max(sum(p) for p in supp)
    history = []
    prev = None
    for _ in range(max_doublings + 1):
        nu = newton_number(stabilize_support(supp, degree))
        history.append((degree, nu))
        if prev is not None and nu == prev:
            return Stabilized(nu, degree // 2, tuple(history))
        prev = nu
        degree *= 2
    raise StabilizationError(
        f"Newton number did not stabilize: {history[-3:]} (non-isolated singularity on an axis?)"
    )
