"""Polarization and the simplicial complexes attached to an artinian ideal.

A polarized variable ``x_{i,j}`` is the pair ``(i, j)`` with both indices
1-based; a face is a ``frozenset`` of such pairs. ``Theta(I)`` is not a type
of its own: its facets are exactly :func:`polarize`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .core import ArtinianContext, Monomial, MonomialIdeal
from .errors import ScaleError, WhiskerError

PolarVar = tuple[int, int]
Face = frozenset

MAX_FACES = 2**20


def var_name(v: PolarVar) -> str:
    return f"x{v[0]}_{v[1]}"


def format_face(face: Iterable[PolarVar]) -> str:
    return "{" + ",".join(var_name(v) for v in sorted(face)) + "}"


def sorted_faces(faces: Iterable[Iterable[PolarVar]]) -> list[list[PolarVar]]:
    return sorted(sorted(f) for f in faces)


def maximal_faces(faces: Iterable[frozenset]) -> frozenset:
    faces = set(faces)
    return frozenset(f for f in faces if not any(f < g for g in faces))


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: frozenset
    facets: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        facets = frozenset(frozenset(f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        if not facets:
            raise WhiskerError("a simplicial complex needs at least one facet (possibly empty)")
        for f in facets:
            if not f <= self.vertices:
                raise WhiskerError(f"facet {format_face(f)} is not inside the vertex set")
            if any(f < g for g in facets):
                raise WhiskerError(f"facet {format_face(f)} is not maximal")

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable], vertices: Iterable | None = None) -> "SimplicialComplex":
        faces = [frozenset(f) for f in faces]
        if vertices is None:
            vertices = frozenset().union(*faces)
        return cls(frozenset(vertices), maximal_faces(faces))

    def contains(self, face: Iterable) -> bool:
        face = frozenset(face)
        return any(face <= f for f in self.facets)

    def is_simplex(self) -> bool:
        return len(self.facets) == 1

    def facet_list(self) -> list[list[PolarVar]]:
        return sorted_faces(self.facets)


def polar_vertices(ctx: ArtinianContext) -> frozenset:
    """The variable set of the polarized ring."""
    return frozenset((i + 1, j) for i, bi in enumerate(ctx.b) for j in range(1, bi + 1))


def polarize_monomial(u: Monomial) -> frozenset:
    return frozenset((i + 1, j) for i, a in enumerate(u) for j in range(1, a + 1))


def polarize(ideal: MonomialIdeal) -> frozenset:
    return frozenset(polarize_monomial(g) for g in ideal.generators)


def phi(ctx: ArtinianContext, u: Monomial) -> frozenset:
    u = tuple(u)
    if not ctx.is_standard(u):
        raise WhiskerError(f"not a standard monomial: {u}")
    return frozenset((i + 1, a + 1) for i, a in enumerate(u))


def minimal_primes(ctx: ArtinianContext) -> frozenset:
    return frozenset(phi(ctx, u) for u in ctx.standard)


def delta_facets(ctx: ArtinianContext) -> SimplicialComplex:
    """Delta(I): facets are the complements of the minimal primes."""
    verts = polar_vertices(ctx)
    return SimplicialComplex(verts, frozenset(verts - phi(ctx, u) for u in ctx.standard))


def link(cplx: SimplicialComplex, v: PolarVar) -> SimplicialComplex:
    faces = [f - {v} for f in cplx.facets if v in f]
    if not faces:
        raise WhiskerError(f"{var_name(v)} is not a vertex of any facet")
    return SimplicialComplex(cplx.vertices - {v}, maximal_faces(faces))


def deletion(cplx: SimplicialComplex, v: PolarVar) -> SimplicialComplex:
    return SimplicialComplex(cplx.vertices - {v}, maximal_faces(f - {v} for f in cplx.facets))


def combinators(cplx: SimplicialComplex, v: PolarVar) -> tuple[SimplicialComplex, SimplicialComplex]:
    """``(link, deletion)`` of ``v``."""
    return link(cplx, v), deletion(cplx, v)


def cone(v: PolarVar, cplx: SimplicialComplex) -> SimplicialComplex:
    if v in cplx.vertices:
        raise WhiskerError(f"cone vertex {var_name(v)} already belongs to the complex")
    return SimplicialComplex(cplx.vertices | {v}, frozenset(f | {v} for f in cplx.facets))


def all_faces(cplx: SimplicialComplex) -> set[frozenset]:
    """Downward closure of the facets, including the empty face."""
    total = sum(2 ** len(f) for f in cplx.facets)
    if total > MAX_FACES:
        raise ScaleError(f"face enumeration of up to {total} faces exceeds limit {MAX_FACES}")
    faces: set[frozenset] = set()
    for f in cplx.facets:
        members = sorted(f)
        for r in range(len(members) + 1):
            faces.update(frozenset(c) for c in itertools.combinations(members, r))
    return faces


def f_vector(cplx: SimplicialComplex) -> tuple[int, ...]:
    """Face counts by size, starting with the empty face."""
    faces = all_faces(cplx)
    top = max(len(f) for f in faces)
    f = [0] * (top + 1)
    for face in faces:
        f[len(face)] += 1
    return tuple(f)


def reduced_euler_characteristic(cplx: SimplicialComplex) -> int:
    # a face with s vertices has dimension s - 1
    return sum(count if size % 2 else -count for size, count in enumerate(f_vector(cplx)))


def alexander_dual_generators(cplx: SimplicialComplex) -> frozenset:
    return frozenset(cplx.vertices - f for f in cplx.facets)
