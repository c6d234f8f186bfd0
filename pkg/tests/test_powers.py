import itertools
from collections import Counter

import pytest
from hypothesis import given, settings

from helpers import F, contexts

from whiskertype import oracle
from whiskertype.battery import polar_exponents
from whiskertype.errors import WhiskerError
from whiskertype.polar import phi, polar_vertices
from whiskertype.powers import (
    PowerGenerator,
    depth_profile,
    is_realizable,
    max_lcm_degree,
    power_colon_set,
    power_generators,
    q_invariant,
)
from whiskertype.resolution import admissible_order, betti_formula


def brute_products(ctx, k):
    """Distinct products of k generators of L(I) as multiplicity maps."""
    faces = [phi(ctx, u) for u in ctx.standard]
    return {frozenset(Counter(v for f in c for v in f).items()) for c in itertools.combinations_with_replacement(faces, k)}


def brute_max_lcm(ctx, k):
    best = 0
    for c in itertools.product(ctx.standard, repeat=k):
        best = max(best, sum(max(col) for col in zip(*c)))
    return best


def test_power_generator_counts(square, maximal, cubic):
    assert len(power_generators(square, 2)) == 9
    assert [g.blocks for g in power_generators(maximal, 3)] == [((1, 1, 1), (1, 1, 1))]
    assert len(power_generators(cubic, 2)) == len(brute_products(cubic, 2)) == 15


def test_power_generators_match_brute_products(cubic):
    for k in (1, 2, 3):
        gens = power_generators(cubic, k)
        assert {frozenset(g.multiplicities.items()) for g in gens} == brute_products(cubic, k)
        assert all(g.degree == cubic.n * k for g in gens)
        assert all(list(b) == sorted(b) for g in gens for b in g.blocks)


def test_deduplication_is_needed(square):
    # phi(1) * phi(xy) == phi(x) * phi(y)
    a = Counter(phi(square, (0, 0))) + Counter(phi(square, (1, 1)))
    b = Counter(phi(square, (1, 0))) + Counter(phi(square, (0, 1)))
    assert a == b
    assert len(power_generators(square, 2)) < 10


def test_k_zero_rejected(square):
    with pytest.raises(WhiskerError):
        power_generators(square, 0)


def test_power_order_degenerates_to_admissible_order(cubic):
    k1 = [g.blocks for g in power_generators(cubic, 1)]
    assert k1 == [tuple((a + 1,) for a in g.source) for g in admissible_order(cubic)]


def test_power_colon_set_examples(square, cubic):
    assert power_colon_set(square, PowerGenerator(((1, 2), (2, 2)))) == F("1_1", "2_1")
    assert power_colon_set(square, power_generators(square, 2)[0]) == frozenset()
    assert power_colon_set(cubic, PowerGenerator(((1, 3), (1, 1)))) == F("1_1", "1_2")


def test_realizability(square, cubic):
    assert all(is_realizable(cubic, g.blocks) for g in power_generators(cubic, 2))
    # x1_2 * x1_2 * x2_2 * x2_2 needs xy twice, which is not standard in the cubic ideal
    assert not is_realizable(cubic, ((2, 2), (2, 2)))
    assert is_realizable(square, ((2, 2), (2, 2)))


def test_max_lcm_degree_examples(square, cubic, maximal):
    assert max_lcm_degree(square, 1) == 2
    assert max_lcm_degree(cubic, 2) == 4
    assert max_lcm_degree(cubic, 5) == 4
    assert max_lcm_degree(maximal, 1) == 0


def test_q_invariant_examples(square, cubic, maximal):
    assert q_invariant(square, 1) == 2
    assert [q_invariant(maximal, k) for k in (1, 2, 3)] == [0, 0, 0]
    assert q_invariant(cubic, 3) == 4


@pytest.mark.parametrize(
    "fixture, kmax, depths, stable",
    [("square", 3, [1, 1, 1], 1), ("cubic", 3, [3, 1, 1], 2), ("maximal", 2, [1, 1], 1)],
)
def test_depth_profile_examples(request, fixture, kmax, depths, stable):
    profile = depth_profile(request.getfixturevalue(fixture), kmax)
    assert [profile.depth[k] for k in range(1, kmax + 1)] == depths
    assert profile.stabilization_k == stable


def test_cubic_q_values(cubic):
    assert depth_profile(cubic, 3).q == {1: 2, 2: 4, 3: 4}


def test_depth_oracle_on_cubic_square(cubic):
    verts = sorted(polar_vertices(cubic))
    mults = [g.multiplicities for g in power_generators(cubic, 2)]
    assert oracle.depth_bruteforce(polar_exponents(mults, verts), len(verts)) == 1 == depth_profile(cubic, 2).depth[2]


@settings(max_examples=40, deadline=None)
@given(contexts())
def test_lcm_search_matches_brute_force(ctx):
    for k in (1, 2, 3):
        if len(ctx.standard) ** k <= 20000:
            assert max_lcm_degree(ctx, k) == brute_max_lcm(ctx, k)


@settings(max_examples=40, deadline=None)
@given(contexts().filter(lambda c: c.length <= 6))
def test_power_linear_quotients(ctx):
    for k in (1, 2, 3):
        gens = power_generators(ctx, k)
        if len(gens) > 200:
            continue
        mults = [g.multiplicities for g in gens]
        for r, g in enumerate(gens):
            explicit = oracle.explicit_colon(mults[:r], mults[r])
            assert all(sum(e for _, e in q) == 1 for q in explicit)
            assert frozenset(v for q in explicit for v, _ in q) == power_colon_set(ctx, g)
        assert q_invariant(ctx, k) == max_lcm_degree(ctx, k)


@settings(max_examples=60, deadline=None)
@given(contexts())
def test_depth_profile_shape(ctx):
    n = ctx.n
    profile = depth_profile(ctx, n + 2)
    depths = [profile.depth[k] for k in range(1, n + 3)]
    assert all(a >= b for a, b in zip(depths, depths[1:]))
    for a, b in zip(depths, depths[1:]):
        if a > n - 1:
            assert a > b
    s = profile.stabilization_k
    assert s <= n
    assert all(d == n - 1 for d in depths[s - 1:])
    assert all(profile.depth[k] == ctx.num_polarized - profile.q[k] - 1 for k in profile.depth)
    assert profile.depth[1] == betti_formula(ctx).depth


@settings(max_examples=15, deadline=None)
@given(contexts(max_n=2).filter(lambda c: c.length <= 4))
def test_auslander_buchsbaum_on_powers(ctx):
    verts = sorted(polar_vertices(ctx))
    profile = depth_profile(ctx, 2)
    for k in (1, 2):
        mults = [g.multiplicities for g in power_generators(ctx, k)]
        assert oracle.depth_bruteforce(polar_exponents(mults, verts), len(verts)) == profile.depth[k]
