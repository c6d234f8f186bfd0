"""The ideal L(I): linear-quotient order, colon sets, decomposition function,
Betti numbers and the induced shelling of Delta(I)."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .core import ArtinianContext, Monomial, h_vector
from .errors import WhiskerError
from .oracle import explicit_colon
from .polar import PolarVar, phi, polar_vertices


@dataclass(frozen=True)
class LGenerator:
    source: Monomial
    face: frozenset
    rank: int

    @property
    def levels(self) -> tuple[int, ...]:
        return tuple(a + 1 for a in self.source)


def admissible_order(ctx: ArtinianContext) -> list[LGenerator]:
    """Generators of L(I) sorted lexicographically by level vector.

    This is a linear extension of the componentwise order on exponents.
    """
    ordered = sorted(ctx.standard)
    return [LGenerator(u, phi(ctx, u), r) for r, u in enumerate(ordered, start=1)]


def set_of(source: Monomial) -> frozenset:
    """``{x_{i,j} : 1 <= j <= a_i}`` for exponent vector ``a``."""
    return frozenset((i + 1, j) for i, a in enumerate(source) for j in range(1, a + 1))


def colon_set(ctx: ArtinianContext, g: LGenerator) -> frozenset:
    return set_of(g.source)


def prefix_colon(ctx: ArtinianContext, g: LGenerator, order: list[LGenerator] | None = None) -> list[frozenset]:
    """Minimal generators of ``(earlier faces) : face(g)`` computed explicitly,
    each returned as a set of variables (all should be singletons)."""
    if order is None:
        order = admissible_order(ctx)
    earlier = [h.face for h in order[: g.rank - 1]]
    return [frozenset(v for v, _ in q) for q in explicit_colon(earlier, g.face)]


def decomposition_function(ctx: ArtinianContext, m, order: list[LGenerator] | None = None) -> LGenerator:
    """Earliest generator in admissible order whose face divides ``m``."""
    m = frozenset(m)
    if order is None:
        order = admissible_order(ctx)
    for g in order:
        if g.face <= m:
            return g
    raise WhiskerError("monomial is not a multiple of any generator of L(I)")


def decomposition_formula(g: LGenerator, var: PolarVar) -> Monomial:
    """Source of ``b(x_{i,j} g)``: replace exponent ``a_i`` by ``j - 1``."""
    i, j = var
    src = list(g.source)
    src[i - 1] = j - 1
    return tuple(src)


@dataclass(frozen=True)
class Witness:
    rank: int
    var: PolarVar
    image_rank: int
    image_set: frozenset
    generator_set: frozenset

    @property
    def contained(self) -> bool:
        return self.image_set <= self.generator_set


@dataclass(frozen=True)
class RegularityReport:
    regular: bool
    witnesses: tuple[Witness, ...]


def check_regular(ctx: ArtinianContext) -> RegularityReport:
    order = admissible_order(ctx)
    witnesses = []
    for g in order:
        gset = colon_set(ctx, g)
        for var in sorted(gset):
            image = decomposition_function(ctx, g.face | {var}, order)
            witnesses.append(Witness(g.rank, var, image.rank, colon_set(ctx, image), gset))
    return RegularityReport(all(w.contained for w in witnesses), tuple(witnesses))


@dataclass(frozen=True)
class BettiResult:
    betti: tuple[int, ...]
    projdim: int
    depth: int


def betti_formula(ctx: ArtinianContext) -> BettiResult:
    """Betti numbers of ``S^p / L(I)`` from the h-vector of ``S/I``."""
    h = h_vector(ctx)
    top = len(h)  # beta_i vanishes once i - 1 exceeds the top degree
    betti = [1] + [sum(hj * comb(j, i - 1) for j, hj in enumerate(h)) for i in range(1, top + 1)]
    while betti[-1] == 0:
        betti.pop()
    projdim = max(sum(u) for u in ctx.standard) + 1
    return BettiResult(tuple(betti), projdim, ctx.num_polarized - projdim)


def shelling_order(ctx: ArtinianContext) -> list[frozenset]:
    verts = polar_vertices(ctx)
    return [verts - g.face for g in admissible_order(ctx)]
