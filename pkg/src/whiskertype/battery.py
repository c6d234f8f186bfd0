"""The cross-check battery behind ``whisker verify``.

Every check pairs a closed-form result with an oracle computation and
reports PASS, FAIL or SKIP (when an oracle scale limit is hit).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import oracle
from .core import ArtinianContext
from .errors import ScaleError
from .polar import alexander_dual_generators, delta_facets, minimal_primes, polarize, reduced_euler_characteristic
from .powers import depth_profile, max_lcm_degree, power_colon_set, power_generators, q_invariant
from .resolution import admissible_order, betti_formula, check_regular, colon_set, prefix_colon, shelling_order
from .vd import vd_certificate, verify_certificate

POWER_KMAX = 3
POWER_ORACLE_LIMIT = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""


def polar_exponents(faces, vertices) -> list[tuple[int, ...]]:
    """Faces (or multiplicity maps) as exponent vectors over sorted ``vertices``."""
    order = sorted(vertices)
    out = []
    for f in faces:
        mult = f if isinstance(f, dict) else dict.fromkeys(f, 1)
        out.append(tuple(mult.get(v, 0) for v in order))
    return out


def _status(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def _facets(ctx):
    delta = delta_facets(ctx)
    brute = oracle.facets_bruteforce(polarize(ctx.ideal), delta.vertices)
    ok = len(delta.facets) == ctx.length and delta.facets == brute
    return ok, f"{len(delta.facets)} facets, length {ctx.length}"


def _dual(ctx):
    return alexander_dual_generators(delta_facets(ctx)) == minimal_primes(ctx), ""


def _euler(ctx):
    chi = reduced_euler_characteristic(delta_facets(ctx))
    pure = all(sum(1 for a in g if a) == 1 for g in ctx.ideal.generators)
    expected = (-1) ** ((ctx.num_polarized - ctx.n - 1) % 2) if pure else 0
    return chi == expected, f"chi={chi} expected={expected}"


def _betti(ctx):
    delta = delta_facets(ctx)
    gens = polar_exponents([g.face for g in admissible_order(ctx)], delta.vertices)
    table = oracle.betti_bruteforce(gens, len(delta.vertices))
    res = betti_formula(ctx)
    linear = all(d == ctx.n + i for (i, d) in table)
    ok = oracle.quotient_betti(table) == res.betti and res.betti[1] == ctx.length and linear
    return ok, f"formula {res.betti} oracle {oracle.quotient_betti(table)} linear={linear}"


def _quotients(ctx):
    order = admissible_order(ctx)
    ok = oracle.verify_linear_quotients([g.face for g in order])
    for g in order:
        explicit = prefix_colon(ctx, g, order)
        ok = ok and all(len(q) == 1 for q in explicit) and frozenset().union(*explicit) == colon_set(ctx, g)
    return ok, f"{len(order)} generators"


def _shelling(ctx):
    return oracle.is_shelling(shelling_order(ctx)), ""


def _regular(ctx):
    report = check_regular(ctx)
    return report.regular, f"{len(report.witnesses)} witnesses"


def _vd(ctx):
    delta = delta_facets(ctx)
    res = verify_certificate(delta, vd_certificate(ctx))
    ok = bool(res)
    detail = repr(res)
    try:
        ok = ok and oracle.is_vertex_decomposable_bruteforce(delta)
    except ScaleError as exc:
        detail += f"; brute force skipped ({exc})"
    return ok, detail


def _powers(ctx):
    verts = sorted((i + 1, j) for i, bi in enumerate(ctx.b) for j in range(1, bi + 1))
    profile = depth_profile(ctx, POWER_KMAX)
    ok = True
    notes = []
    for k in range(1, POWER_KMAX + 1):
        ok = ok and q_invariant(ctx, k) == max_lcm_degree(ctx, k)
        gens = power_generators(ctx, k)
        if len(gens) > POWER_ORACLE_LIMIT:
            notes.append(f"k={k} oracle skipped")
            continue
        mults = [g.multiplicities for g in gens]
        ok = ok and oracle.verify_linear_quotients(mults)
        for r, g in enumerate(gens):
            explicit = oracle.explicit_colon(mults[:r], mults[r])
            ok = ok and frozenset(v for q in explicit for v, _ in q) == power_colon_set(ctx, g)
        try:
            ok = ok and oracle.depth_bruteforce(polar_exponents(mults, verts), len(verts)) == profile.depth[k]
        except ScaleError:
            notes.append(f"k={k} depth oracle skipped")
    return ok, "; ".join(notes)


def _stabilization(ctx):
    n = ctx.n
    profile = depth_profile(ctx, n + 2)
    ok = all(profile.depth[k] == n - 1 for k in range(n, n + 3)) and profile.stabilization_k <= n
    return ok, f"stabilizes at k={profile.stabilization_k}"


CHECKS = [
    ("facets", _facets),
    ("alexander-dual", _dual),
    ("euler", _euler),
    ("betti", _betti),
    ("linear-quotients", _quotients),
    ("shelling", _shelling),
    ("regular", _regular),
    ("vertex-decomposable", _vd),
    ("powers", _powers),
    ("stabilization", _stabilization),
]


def run_battery(ctx: ArtinianContext) -> list[CheckResult]:
    results = []
    for name, check in CHECKS:
        try:
            ok, detail = check(ctx)
        except ScaleError as exc:
            results.append(CheckResult(name, "SKIP", str(exc)))
            continue
        except AssertionError as exc:
            results.append(CheckResult(name, "FAIL", str(exc)))
            continue
        results.append(CheckResult(name, _status(ok), detail))
    return results
