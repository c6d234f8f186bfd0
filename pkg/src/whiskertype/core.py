"""Monomials, monomial ideals and artinian contexts.

A monomial in ``K[x_1, ..., x_n]`` is stored as a tuple of ``n`` exponents.
Variables are numbered from 1 in everything user facing (``x1``, ``x2``, ...)
but exponent tuples are ordinary 0-based Python sequences.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotZeroDimensional, ParseError, ScaleError, WhiskerError

Monomial = tuple[int, ...]

MAX_EXPONENT = 64
MAX_POLARIZED_VARS = 64
MAX_BOX = 10**6


def monomial_key(u: Monomial) -> tuple:
    """Canonical order: total degree first, then lexicographic."""
    return (sum(u), u)


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def pure_power(n: int, i: int, e: int) -> Monomial:
    """``x_{i+1}^e`` as an exponent tuple (``i`` is 0-based)."""
    return tuple(e if t == i else 0 for t in range(n))


def format_monomial(u: Monomial) -> str:
    parts = []
    for i, a in enumerate(u, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise WhiskerError("n must be positive")
        for g in self.generators:
            if len(g) != self.n:
                raise WhiskerError(f"generator {g} does not have length {self.n}")

    def contains(self, u: Monomial) -> bool:
        return any(divides(g, u) for g in self.generators)

    def __str__(self):
        return "(" + ", ".join(format_monomial(g) for g in self.generators) + ")"


def minimalize(raw: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Return the ideal generated by ``raw`` with its minimal generating set."""
    gens = sorted({tuple(int(a) for a in g) for g in raw}, key=monomial_key)
    if not gens:
        raise WhiskerError("empty ideal")
    for g in gens:
        if len(g) != n:
            raise WhiskerError(f"generator {g} does not have length {n}")
        if any(a < 0 for a in g):
            raise WhiskerError(f"negative exponent in {g}")
        if not any(g):
            raise WhiskerError("unit ideal")
    minimal: list[Monomial] = []
    # sorted by degree, so a divisor of g is always seen before g
    for g in gens:
        if not any(divides(m, g) for m in minimal):
            minimal.append(g)
    return MonomialIdeal(n, tuple(minimal))


@dataclass(frozen=True)
class ArtinianContext:
    """A zero-dimensional monomial ideal with its pure-power bounds and
    the standard monomials ``Mon(S \\ I)`` in canonical order."""

    ideal: MonomialIdeal
    b: tuple[int, ...]
    standard: tuple[Monomial, ...]

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def length(self) -> int:
        return len(self.standard)

    @property
    def num_polarized(self) -> int:
        return sum(self.b)

    def is_standard(self, u: Monomial) -> bool:
        return len(u) == self.n and all(0 <= a < bi for a, bi in zip(u, self.b)) and not self.ideal.contains(u)


def build_context(ideal: MonomialIdeal) -> ArtinianContext:
    n = ideal.n
    b = []
    for i in range(n):
        powers = [g[i] for g in ideal.generators if all(g[t] == 0 for t in range(n) if t != i)]
        if not powers:
            raise NotZeroDimensional(i + 1)
        b.append(min(powers))
    if max(b) > MAX_EXPONENT:
        raise ScaleError(f"pure-power exponent {max(b)} exceeds limit {MAX_EXPONENT}")
    if sum(b) > MAX_POLARIZED_VARS:
        raise ScaleError(f"{sum(b)} polarized variables exceed limit {MAX_POLARIZED_VARS}")
    if math.prod(b) > MAX_BOX:
        raise ScaleError(f"exponent box of size {math.prod(b)} exceeds limit {MAX_BOX}")
    box = itertools.product(*(range(bi) for bi in b))
    standard = sorted((u for u in box if not ideal.contains(u)), key=monomial_key)
    return ArtinianContext(ideal, tuple(b), tuple(standard))


def context_from(gens: Iterable[Sequence[int]], n: int | None = None) -> ArtinianContext:
    """Shorthand: minimalize and build the context in one step."""
    gens = [tuple(g) for g in gens]
    if n is None:
        n = len(gens[0])
    return build_context(minimalize(gens, n))


def h_vector(ctx: ArtinianContext) -> tuple[int, ...]:
    top = max(sum(u) for u in ctx.standard)
    h = [0] * (top + 1)
    for u in ctx.standard:
        h[sum(u)] += 1
    return tuple(h)


def whisker_from_complex(squarefree_gens: Iterable[Sequence[int]], n: int) -> MonomialIdeal:
    """Append the squares ``x_i^2`` to a squarefree ideal (the whisker construction)."""
    gens = [tuple(g) for g in squarefree_gens]
    for g in gens:
        if any(a not in (0, 1) for a in g):
            raise WhiskerError(f"generator {format_monomial(g)} is not squarefree")
    return minimalize(gens + [pure_power(n, i, 2) for i in range(n)], n)


def ideal_from_standard(standard: Iterable[Monomial], n: int) -> MonomialIdeal:
    """Recover the artinian ideal whose standard monomials are ``standard``.

    ``standard`` must be a non-empty order ideal. Minimal generators are the
    minimal non-standard points of the box one step past the largest exponents.
    """
    std = set(standard)
    if not std:
        raise WhiskerError("empty standard set gives the unit ideal")
    c = [max(u[i] for u in std) + 1 for i in range(n)]
    outside = [u for u in itertools.product(*(range(ci + 1) for ci in c)) if u not in std]
    return minimalize(outside, n)


def random_artinian(n: int, bmax: int, extra: int, seed: int) -> MonomialIdeal:
    """Random zero-dimensional ideal; ``extra`` is an upper bound on the
    number of non-pure-power generators."""
    if n < 1 or bmax < 1 or extra < 0:
        raise WhiskerError("need n >= 1, bmax >= 1, extra >= 0")
    rng = random.Random(seed)
    b = [rng.randint(1, bmax) for _ in range(n)]
    gens = [pure_power(n, i, bi) for i, bi in enumerate(b)]
    for _ in range(extra):
        u = tuple(rng.randrange(bi) for bi in b)
        if any(u):
            gens.append(u)
    return minimalize(gens, n)


def format_ideal(ideal: MonomialIdeal) -> str:
    lines = [f"n {ideal.n}"]
    lines += ["gen " + " ".join(map(str, g)) for g in sorted(ideal.generators, key=monomial_key)]
    return "\n".join(lines) + "\n"


def parse_ideal(text: str) -> MonomialIdeal:
    n = None
    gens = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        try:
            values = [int(t) for t in rest]
        except ValueError:
            raise ParseError(lineno, f"non-integer token in {line!r}") from None
        if key == "n":
            if n is not None:
                raise ParseError(lineno, "duplicate n line")
            if len(values) != 1 or values[0] < 1:
                raise ParseError(lineno, "expected 'n <positive int>'")
            n = values[0]
        elif key == "gen":
            if n is None:
                raise ParseError(lineno, "gen before n")
            if len(values) != n:
                raise ParseError(lineno, f"expected {n} exponents, got {len(values)}")
            if any(v < 0 for v in values):
                raise ParseError(lineno, "negative exponent")
            gens.append(tuple(values))
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}")
    if n is None:
        raise ParseError(0, "missing n line")
    return minimalize(gens, n)


def random_suite(count: int, max_n: int = 3, max_polarized: int = 9, bmax: int = 4) -> list[ArtinianContext]:
    """``count`` distinct seeded instances with ``n <= max_n`` and ``sum(b) <= max_polarized``.

    Seeds run 0, 1, 2, ...; ``n`` cycles through ``1..max_n`` and ``extra``
    through ``1..4``, so the list is the same on every call.
    """
    found: dict[MonomialIdeal, ArtinianContext] = {}
    for seed in itertools.count():
        ideal = random_artinian(1 + seed % max_n, bmax, 1 + seed % 4, seed)
        if ideal in found:
            continue
        ctx = build_context(ideal)
        if ctx.num_polarized <= max_polarized:
            found[ideal] = ctx
            if len(found) == count:
                return list(found.values())
