"""Vertex-decomposition certificates for Delta(I).

The certificate follows the inductive construction: shed ``x_{i,1}`` for the
largest ``i`` with ``b_i > 1``; the deletion is an iterated cone over
``Delta(J1)`` and the link, after shifting the levels of variable ``i`` down
by one, is ``Delta(J2)`` coned over the vertices that ``J2`` no longer uses.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ArtinianContext, MonomialIdeal, build_context, format_monomial, ideal_from_standard, minimalize, \
    pure_power
from .errors import WhiskerError
from .polar import PolarVar, SimplicialComplex, cone, deletion, delta_facets, format_face, link, polar_vertices, \
    var_name

LEAF_TRIVIAL = "leaf-trivial"
LEAF_SIMPLEX = "leaf-simplex"
SHED = "shed"


def derived_ideals(ctx: ArtinianContext, i: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    """``(J1, J2)`` for the 1-based variable ``i``."""
    n = ctx.n
    if not 1 <= i <= n:
        raise WhiskerError(f"variable index {i} out of range")
    t = i - 1
    if ctx.b[t] == 1:
        raise WhiskerError(f"variable exhausted: x{i}")
    j1 = minimalize([g for g in ctx.ideal.generators if g[t] == 0] + [pure_power(n, t, 1)], n)
    shifted = [u[:t] + (u[t] - 1,) + u[t + 1:] for u in ctx.standard if u[t] > 0]
    return j1, ideal_from_standard(shifted, n)


@dataclass(frozen=True)
class VDCertificate:
    kind: str
    ideal: MonomialIdeal
    vertex: PolarVar | None = None
    cone_chain: tuple[PolarVar, ...] = ()
    link_cone: tuple[PolarVar, ...] = ()
    del_child: "VDCertificate | None" = None
    link_child: "VDCertificate | None" = None

    @property
    def relabel(self) -> str | None:
        if self.vertex is None:
            return None
        return f"x{self.vertex[0]}_j -> x{self.vertex[0]}_(j-1)"

    def depth(self) -> int:
        if self.kind != SHED:
            return 1
        return 1 + max(self.del_child.depth(), self.link_child.depth())

    def to_dict(self) -> dict:
        out = {"node": self.kind, "ideal": [list(g) for g in self.ideal.generators]}
        if self.kind == SHED:
            out.update(
                vertex=list(self.vertex),
                cone_chain=[list(v) for v in self.cone_chain],
                link_cone=[list(v) for v in self.link_cone],
                relabel=self.relabel,
                children={"deletion": self.del_child.to_dict(), "link": self.link_child.to_dict()},
            )
        return out

    def format(self, indent: int = 0) -> str:
        pad = "  " * indent
        ideal = "(" + ", ".join(format_monomial(g) for g in self.ideal.generators) + ")"
        if self.kind != SHED:
            return f"{pad}{self.kind} {ideal}\n"
        chain = " ".join(var_name(v) for v in self.cone_chain) or "-"
        lcone = " ".join(var_name(v) for v in self.link_cone) or "-"
        return (
            f"{pad}shed {var_name(self.vertex)} {ideal}\n"
            f"{pad}  cone_chain {chain}\n"
            f"{pad}  deletion:\n{self.del_child.format(indent + 2)}"
            f"{pad}  link [{self.relabel}; cone {lcone}]:\n{self.link_child.format(indent + 2)}"
        )


def vd_certificate(ctx: ArtinianContext) -> VDCertificate:
    if all(bi == 1 for bi in ctx.b):
        return VDCertificate(LEAF_TRIVIAL, ctx.ideal)
    i = max(t + 1 for t, bi in enumerate(ctx.b) if bi > 1)
    j1, j2 = derived_ideals(ctx, i)
    ctx2 = build_context(j2)
    ghosts = tuple(sorted(polar_vertices(ctx) - polar_vertices(ctx2) - {(i, ctx.b[i - 1])}))
    return VDCertificate(
        SHED,
        ctx.ideal,
        vertex=(i, 1),
        cone_chain=tuple((i, j) for j in range(ctx.b[i - 1], 1, -1)),
        link_cone=ghosts,
        del_child=vd_certificate(build_context(j1)),
        link_child=vd_certificate(ctx2),
    )


class VerificationResult:
    """Truthy verdict plus the certificate path at which it failed."""

    def __init__(self, ok: bool, path: tuple[str, ...] = (), reason: str = ""):
        self.ok = ok
        self.path = path
        self.reason = reason

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "VerificationResult(ok)"
        return f"VerificationResult(failed at {'/'.join(self.path) or 'root'}: {self.reason})"


def _relabel_down(face, i):
    return frozenset((a, j - 1) if a == i else (a, j) for a, j in face)


def verify_certificate(cplx: SimplicialComplex, cert: VDCertificate, path: tuple[str, ...] = ()) -> VerificationResult:
    if cert.kind in (LEAF_TRIVIAL, LEAF_SIMPLEX):
        if cplx.is_simplex():
            return VerificationResult(True)
        return VerificationResult(False, path, f"leaf but complex has {len(cplx.facets)} facets")

    v, i = cert.vertex, cert.vertex[0]
    if not any(v in f for f in cplx.facets):
        return VerificationResult(False, path, f"{var_name(v)} lies in no facet")
    dele = deletion(cplx, v)
    stray = dele.facets - cplx.facets
    if stray:
        return VerificationResult(False, path, f"not shedding: {format_face(min(stray, key=sorted))} is a facet of the deletion only")

    child1 = delta_facets(build_context(cert.del_child.ideal))
    expected = child1
    for w in reversed(cert.cone_chain):
        if w in expected.vertices:
            return VerificationResult(False, path, f"cone vertex {var_name(w)} already present")
        expected = cone(w, expected)
    if expected.facets != dele.facets:
        return VerificationResult(False, path, "deletion is not the claimed iterated cone")

    child2 = delta_facets(build_context(cert.link_child.ideal))
    relabeled = frozenset(_relabel_down(f, i) for f in link(cplx, v).facets)
    ghosts = frozenset(cert.link_cone)
    if any(w[1] < 1 for f in relabeled for w in f):
        return VerificationResult(False, path, "relabeled link uses level 0")
    if frozenset(f | ghosts for f in child2.facets) != relabeled:
        return VerificationResult(False, path, "relabeled link is not Delta(J2) coned over its unused vertices")

    if v[1] != 1:
        return VerificationResult(False, path, f"shed vertex {var_name(v)} is not at level 1")

    res = verify_certificate(child1, cert.del_child, path + ("deletion",))
    if not res:
        return res
    return verify_certificate(child2, cert.link_child, path + ("link",))
