"""Brute-force cross-checks.

Nothing here uses the closed formulas from the other modules; each function
recomputes its answer from definitions so the formula modules can be tested
against it. All scale limits are module constants and appear in the
``ScaleError`` messages.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import ScaleError

MAX_FACET_VERTICES = 24
MAX_BETTI_GENERATORS = 64
MAX_BETTI_VARIABLES = 16
MAX_VD_VERTICES = 12

BIG_PRIME = 2147483647  # 2^31 - 1
DEFAULT_FIELDS = (2, BIG_PRIME)


class OracleError(RuntimeError):
    pass


# -- facets ---------------------------------------------------------------


def facets_bruteforce(polarized_gens: Iterable[Iterable], vertices: Iterable) -> set[frozenset]:
    """Maximal subsets of ``vertices`` that contain none of ``polarized_gens``."""
    verts = sorted(vertices)
    if len(verts) > MAX_FACET_VERTICES:
        raise ScaleError(f"facets_bruteforce: {len(verts)} vertices exceed limit {MAX_FACET_VERTICES}")
    index = {v: k for k, v in enumerate(verts)}
    gen_masks = [sum(1 << index[v] for v in g) for g in polarized_gens]

    def independent(mask):
        return not any(mask & g == g for g in gen_masks)

    full = (1 << len(verts)) - 1
    out = set()
    for mask in range(full + 1):
        if not independent(mask):
            continue
        if all(not independent(mask | (1 << k)) for k in range(len(verts)) if not mask >> k & 1):
            out.add(frozenset(verts[k] for k in range(len(verts)) if mask >> k & 1))
    return out


# -- generic monomials ----------------------------------------------------
# A monomial over arbitrary hashable variables is normalized to a sorted
# tuple of (variable, exponent) pairs with positive exponents.


def as_monomial(m) -> tuple:
    if isinstance(m, Mapping):
        items = m.items()
    else:
        items = ((v, 1) for v in m)
    return tuple(sorted((v, e) for v, e in items if e > 0))


def _divides(a: tuple, b: tuple) -> bool:
    bd = dict(b)
    return all(bd.get(v, 0) >= e for v, e in a)


def _quotient_by_gcd(f: tuple, g: tuple) -> tuple:
    gd = dict(g)
    return tuple((v, e - gd.get(v, 0)) for v, e in f if e > gd.get(v, 0))


def _minimal(monos: Iterable[tuple]) -> list[tuple]:
    monos = sorted(set(monos), key=lambda m: (sum(e for _, e in m), m))
    out: list[tuple] = []
    for m in monos:
        if not any(_divides(p, m) for p in out):
            out.append(m)
    return out


def _colon(earlier: Sequence[tuple], g: tuple) -> list[tuple]:
    return _minimal(_quotient_by_gcd(f, g) for f in earlier)


def explicit_colon(earlier: Sequence, g) -> list[tuple]:
    """Minimal generators of ``(earlier) : g`` as normalized monomials."""
    return _colon([as_monomial(f) for f in earlier], as_monomial(g))


def first_linear_quotient_failure(ordered_gens: Sequence) -> int | None:
    """Index (0-based) of the first generator whose colon is not generated
    by variables, or ``None`` when the order has linear quotients."""
    gens = [as_monomial(g) for g in ordered_gens]
    for j in range(1, len(gens)):
        if any(sum(e for _, e in q) != 1 for q in _colon(gens[:j], gens[j])):
            return j
    return None


def verify_linear_quotients(ordered_gens: Sequence) -> bool:
    return first_linear_quotient_failure(ordered_gens) is None


# -- shelling and vertex decomposability ----------------------------------


def is_shelling(ordered_facets: Sequence[Iterable]) -> bool:
    facets = [frozenset(f) for f in ordered_facets]
    for j in range(1, len(facets)):
        fj = facets[j]
        for i in range(j):
            meet = fj & facets[i]
            if not any(len(fj - facets[l]) == 1 and meet <= fj & facets[l] for l in range(j)):
                return False
    return True


def _maximal(faces) -> frozenset:
    faces = set(faces)
    return frozenset(f for f in faces if not any(f < g for g in faces))


@lru_cache(maxsize=None)
def _vd(facets: frozenset) -> bool:
    if len(facets) == 1:
        return True
    for v in sorted(frozenset().union(*facets)):
        dele = _maximal(f - {v} for f in facets)
        if not dele <= facets:
            continue
        lk = _maximal(f - {v} for f in facets if v in f)
        if _vd(dele) and _vd(lk):
            return True
    return False


def is_vertex_decomposable_bruteforce(facets: Iterable[Iterable]) -> bool:
    """Exhaustive recursive check; accepts a facet list or anything with ``.facets``."""
    facets = getattr(facets, "facets", facets)
    facets = _maximal(frozenset(f) for f in facets)
    nverts = len(frozenset().union(*facets))
    if nverts > MAX_VD_VERTICES:
        raise ScaleError(f"is_vertex_decomposable_bruteforce: {nverts} vertices exceed limit {MAX_VD_VERTICES}")
    return _vd(facets)


# -- Betti numbers via upper Koszul simplicial complexes -------------------


def _rank_gf2(rows: list[int]) -> int:
    basis: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top in basis:
                r ^= basis[top]
            else:
                basis[top] = r
                break
    return len(basis)


def _rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = max(row)
            if c not in pivots:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            piv = pivots[c]
            factor = row[c]
            for k, v in piv.items():
                nv = (row.get(k, 0) - factor * v) % p
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _rank_rational(rows: list[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = max(row)
            if c not in pivots:
                lead = row[c]
                pivots[c] = {k: v / lead for k, v in row.items()}
                break
            piv = pivots[c]
            factor = row[c]
            for k, v in piv.items():
                nv = row.get(k, 0) - factor * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
    return len(pivots)


def _boundary_rows(faces_hi: list[int], index_lo: dict[int, int]) -> list[dict[int, int]]:
    rows = []
    for face in faces_hi:
        row = {}
        sign = 1
        bit = 0
        rest = face
        while rest:
            if rest & 1:
                row[index_lo[face & ~(1 << bit)]] = sign
                sign = -sign
            rest >>= 1
            bit += 1
        rows.append(row)
    return rows


def _reduced_homology(faces: list[int], field) -> dict[int, int]:
    """Reduced homology ranks keyed by face size ``s`` (homological degree ``s-1``)."""
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_size)
    ranks = {0: 0}
    for s in range(1, top + 1):
        hi = by_size.get(s, [])
        lo = by_size.get(s - 1, [])
        index = {f: k for k, f in enumerate(lo)}
        rows = _boundary_rows(hi, index)
        if field == 2:
            ranks[s] = _rank_gf2([sum(1 << c for c in r) for r in rows])
        elif field == 0:
            ranks[s] = _rank_rational(rows)
        else:
            ranks[s] = _rank_mod_p(rows, field)
    ranks[top + 1] = 0
    out = {}
    for s in range(top + 1):
        h = len(by_size.get(s, [])) - ranks[s] - ranks[s + 1]
        if h:
            out[s] = h
    return out


def lcm_closure(gens: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    gens = {tuple(g) for g in gens}
    closure = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                m = tuple(max(x, y) for x, y in zip(a, g))
                if m not in closure:
                    new.add(m)
        closure |= new
        frontier = new
    return closure


def betti_bruteforce(gens: Iterable[Sequence[int]], numvars: int, fields: Sequence[int] = DEFAULT_FIELDS,
                     rational: bool = False) -> dict[tuple[int, int], int]:
    """Graded Betti numbers ``beta_{i,d}`` of the ideal generated by ``gens``.

    ``gens`` are exponent vectors of length ``numvars`` (multiplicities allowed).
    ``beta_{i,alpha} = dim H~_{i-1}(K^alpha)`` where ``K^alpha`` is the upper
    Koszul simplicial complex, evaluated over every field in ``fields``
    (and over the rationals if ``rational``); any disagreement raises.
    """
    gens = sorted({tuple(g) for g in gens})
    if len(gens) > MAX_BETTI_GENERATORS:
        raise ScaleError(f"betti_bruteforce: {len(gens)} generators exceed limit {MAX_BETTI_GENERATORS}")
    if numvars > MAX_BETTI_VARIABLES:
        raise ScaleError(f"betti_bruteforce: {numvars} variables exceed limit {MAX_BETTI_VARIABLES}")
    for g in gens:
        if len(g) != numvars:
            raise ValueError(f"generator {g} does not have {numvars} entries")
    fields = list(fields) + ([0] if rational else [])

    def in_ideal(m):
        return any(all(a <= b for a, b in zip(g, m)) for g in gens)

    table: dict[tuple[int, int], int] = {}
    for alpha in sorted(lcm_closure(gens)):
        support = [k for k, a in enumerate(alpha) if a]
        faces = []
        for r in range(len(support) + 1):
            for tau in itertools.combinations(range(len(support)), r):
                m = list(alpha)
                for t in tau:
                    m[support[t]] -= 1
                if in_ideal(m):
                    faces.append(sum(1 << t for t in tau))
        if not faces:
            continue
        results = [_reduced_homology(faces, fld) for fld in fields]
        if any(r != results[0] for r in results[1:]):
            raise OracleError(f"homology differs across fields at multidegree {alpha}: {results}")
        d = sum(alpha)
        for s, h in results[0].items():
            table[(s, d)] = table.get((s, d), 0) + h
    return table


def quotient_betti(table: Mapping[tuple[int, int], int]) -> tuple[int, ...]:
    """Total Betti numbers of ``S/J`` from the graded table of ``J``."""
    if not table:
        return (1,)
    top = max(i for i, _ in table)
    beta = [1] + [0] * (top + 1)
    for (i, _), v in table.items():
        beta[i + 1] += v
    return tuple(beta)


def depth_bruteforce(gens: Iterable[Sequence[int]], numvars: int) -> int:
    beta = quotient_betti(betti_bruteforce(gens, numvars))
    projdim = max(i for i, v in enumerate(beta) if v)
    return numvars - projdim
