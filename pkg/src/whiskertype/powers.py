"""Powers of L(I): generators in block order, colon sets, the q-invariant
and the depth function ``k -> depth S^p / L(I)^k``."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb

from .core import ArtinianContext, divides
from .errors import ScaleError, WhiskerError

MAX_POWER_GENERATORS = 10**5
# products enumerated before deduplication; keeps q_invariant's colon route cheap
MAX_PRODUCTS = 2 * 10**5
COLON_ROUTE_LIMIT = 5000


@dataclass(frozen=True)
class PowerGenerator:
    """A generator of ``L(I)^k`` as ``n`` ascending blocks of levels."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return len(self.blocks[0])

    @property
    def multiplicities(self) -> dict[tuple[int, int], int]:
        return {(i + 1, j): c for i, block in enumerate(self.blocks) for j, c in Counter(block).items()}

    @property
    def degree(self) -> int:
        return sum(len(block) for block in self.blocks)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(itertools.chain.from_iterable(self.blocks))


def product_blocks(sources) -> tuple[tuple[int, ...], ...]:
    """Blocks of the product of the faces phi(u) for ``u`` in ``sources``."""
    n = len(sources[0])
    return tuple(tuple(sorted(u[i] + 1 for u in sources)) for i in range(n))


def is_realizable(ctx: ArtinianContext, blocks) -> bool:
    """Whether the blocks factor as a product of k generators of L(I).

    A product of faces pairs the s-th factor's level in block i with some
    position; we search over assignments of block entries to factors.
    """
    n, k = len(blocks), len(blocks[0])
    std = set(ctx.standard)

    def search(i, factors):
        if i == n:
            return all(tuple(f) in std for f in factors)
        seen = set()
        for perm in itertools.permutations(blocks[i]):
            if perm in seen:
                continue
            seen.add(perm)
            nxt = [f + [lvl - 1] for f, lvl in zip(factors, perm)]
            # standard monomials form an order ideal, so zero-padded prefixes must be standard
            if all(tuple(f) + (0,) * (n - i - 1) in std for f in nxt):
                if search(i + 1, nxt):
                    return True
        return False

    return search(0, [[] for _ in range(k)])


def power_generators(ctx: ArtinianContext, k: int) -> list[PowerGenerator]:
    if k < 1:
        raise WhiskerError("power exponent k must be at least 1")
    products = comb(ctx.length + k - 1, k)
    if products > MAX_PRODUCTS:
        raise ScaleError(f"scale: {products} products of {k} generators exceed limit {MAX_PRODUCTS}")
    gens = {product_blocks(c) for c in itertools.combinations_with_replacement(ctx.standard, k)}
    if len(gens) > MAX_POWER_GENERATORS:
        raise ScaleError(f"scale: {len(gens)} power generators exceed limit {MAX_POWER_GENERATORS}")
    return sorted((PowerGenerator(b) for b in gens), key=PowerGenerator.sort_key)


def power_colon_set(ctx: ArtinianContext, g: PowerGenerator) -> frozenset:
    return frozenset((i + 1, j) for i, block in enumerate(g.blocks) for j in range(1, block[-1]))


def max_lcm_degree(ctx: ArtinianContext, k: int) -> int:
    """Largest degree of an lcm of ``k`` standard monomials."""
    if k < 1:
        raise WhiskerError("k must be at least 1")
    ceiling = sum(bi - 1 for bi in ctx.b)
    if k >= ctx.n:
        return ceiling
    # only divisibility-maximal standard monomials can be lcm champions
    std = ctx.standard
    maximal = [u for u in std if not any(u != v and divides(u, v) for v in std)]
    maximal.sort(key=sum, reverse=True)
    best = 0

    def search(start, chosen, picks_left):
        nonlocal best
        current = sum(chosen)
        best = max(best, current)
        if best == ceiling or picks_left == 0:
            return
        for t in range(start, len(maximal)):
            u = maximal[t]
            # later picks come no larger than u, so this bounds every extension
            if current + picks_left * sum(u) <= best:
                break
            search(t + 1, tuple(max(a, c) for a, c in zip(u, chosen)), picks_left - 1)

    search(0, (0,) * ctx.n, min(k, len(maximal)))
    return best


def q_invariant(ctx: ArtinianContext, k: int) -> int:
    """Max colon size along the block order; cross-checked against
    :func:`max_lcm_degree` whenever the generators are enumerated."""
    by_lcm = max_lcm_degree(ctx, k)
    if comb(ctx.length + k - 1, k) > COLON_ROUTE_LIMIT:
        return by_lcm
    by_colon = max(len(power_colon_set(ctx, g)) for g in power_generators(ctx, k))
    if by_colon != by_lcm:
        raise AssertionError(f"q mismatch at k={k}: colon sets give {by_colon}, lcm search gives {by_lcm}")
    return by_colon


@dataclass(frozen=True)
class DepthProfile:
    n: int
    q: dict[int, int] = field(default_factory=dict)
    depth: dict[int, int] = field(default_factory=dict)
    stabilization_k: int = 1

    def rows(self):
        return [(k, self.q[k], self.depth[k], self.depth[k] == self.n - 1) for k in sorted(self.depth)]


def depth_profile(ctx: ArtinianContext, kmax: int) -> DepthProfile:
    if kmax < 1:
        raise WhiskerError("kmax must be at least 1")
    n, total = ctx.n, ctx.num_polarized
    q, depth = {}, {}
    for k in range(1, kmax + 1):
        q[k] = q_invariant(ctx, k)
        depth[k] = total - q[k] - 1
    stable = next(k for k in itertools.count(1) if total - max_lcm_degree(ctx, k) - 1 == n - 1)
    for k in range(1, kmax):
        if depth[k] > n - 1 and not depth[k] > depth[k + 1]:
            raise AssertionError(f"depth does not drop from k={k} to k={k + 1}")
    return DepthProfile(n, q, depth, stable)
