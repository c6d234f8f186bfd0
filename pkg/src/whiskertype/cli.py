"""Command-line interface: ``whisker <command> [file] [flags]``.

Exit status is 0 on success, 1 on validation failure and 2 when an input
exceeds a scale limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import oracle
from .battery import polar_exponents, run_battery
from .core import build_context, format_ideal, format_monomial, h_vector, parse_ideal, random_artinian
from .errors import ScaleError, WhiskerError
from .polar import delta_facets, format_face
from .powers import depth_profile
from .resolution import admissible_order, betti_formula, colon_set, shelling_order
from .vd import vd_certificate, verify_certificate

SCHEMA_VERSION = 1


def _pairs(face):
    return [list(v) for v in sorted(face)]


def _load(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    return build_context(parse_ideal(text))


def cmd_info(ctx, args):
    h = h_vector(ctx)
    data = {"n": ctx.n, "b": list(ctx.b), "length": ctx.length, "h_vector": list(h)}
    text = [f"n\t{ctx.n}", "b\t" + " ".join(map(str, ctx.b)), f"length\t{ctx.length}", "h\t" + " ".join(map(str, h))]
    return data, text


def cmd_facets(ctx, args):
    facets = delta_facets(ctx).facet_list()
    return {"facets": [_pairs(f) for f in facets]}, [format_face(f) for f in facets]


def cmd_lgens(ctx, args):
    rows, text = [], []
    for g in admissible_order(ctx):
        cs = colon_set(ctx, g)
        rows.append({"rank": g.rank, "source": list(g.source), "face": _pairs(g.face), "set": _pairs(cs)})
        text.append(f"{g.rank}\t{format_monomial(g.source)}\t{format_face(g.face)}\t{format_face(cs)}")
    return {"generators": rows}, text


def cmd_betti(ctx, args):
    res = betti_formula(ctx)
    data = {"betti": list(res.betti), "projdim": res.projdim, "depth": res.depth}
    if not args.oracle:
        text = ["i\tbeta_i"] + [f"{i}\t{b}" for i, b in enumerate(res.betti)]
    else:
        faces = [g.face for g in admissible_order(ctx)]
        verts = delta_facets(ctx).vertices
        table = oracle.betti_bruteforce(polar_exponents(faces, verts), len(verts))
        brute = oracle.quotient_betti(table)
        width = max(len(brute), len(res.betti))
        formula = list(res.betti) + [0] * (width - len(res.betti))
        brute = list(brute) + [0] * (width - len(brute))
        data["oracle"] = brute
        data["graded_oracle"] = [[i, d, v] for (i, d), v in sorted(table.items())]
        data["match"] = formula == brute
        text = ["i\tbeta_i\toracle\tmatch"]
        text += [f"{i}\t{a}\t{b}\t{'Y' if a == b else 'N'}" for i, (a, b) in enumerate(zip(formula, brute))]
    text += [f"projdim\t{res.projdim}", f"depth\t{res.depth}"]
    return data, text


def cmd_depth(ctx, args):
    profile = depth_profile(ctx, args.kmax)
    rows = profile.rows()
    data = {
        "n": profile.n,
        "profile": [{"k": k, "q": q, "depth": d, "stabilized": s} for k, q, d, s in rows],
        "stabilization_k": profile.stabilization_k,
    }
    text = ["k\tq\tdepth\tstabilized"] + [f"{k}\t{q}\t{d}\t{'Y' if s else 'N'}" for k, q, d, s in rows]
    return data, text


def cmd_vd(ctx, args):
    cert = vd_certificate(ctx)
    res = verify_certificate(delta_facets(ctx), cert)
    data = {"certificate": cert.to_dict(), "verified": bool(res)}
    return data, cert.format().rstrip("\n").split("\n") + [f"verified\t{'Y' if res else 'N'}"]


def cmd_shelling(ctx, args):
    order = shelling_order(ctx)
    ok = oracle.is_shelling(order)
    data = {"order": [_pairs(f) for f in order], "is_shelling": ok}
    return data, [format_face(f) for f in order] + [f"is_shelling\t{'Y' if ok else 'N'}"]


def cmd_verify(ctx, args):
    results = run_battery(ctx)
    data = {"checks": [{"name": r.name, "status": r.status, "detail": r.detail} for r in results]}
    text = [f"{r.name}\t{r.status}\t{r.detail}".rstrip("\t") for r in results]
    data["ok"] = all(r.status != "FAIL" for r in results)
    return data, text


COMMANDS = {
    "info": cmd_info,
    "facets": cmd_facets,
    "lgens": cmd_lgens,
    "betti": cmd_betti,
    "depth": cmd_depth,
    "vd": cmd_vd,
    "shelling": cmd_shelling,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="whisker", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="ideal file, or - for stdin")
        p.add_argument("--json", action="store_true")
        if name == "betti":
            p.add_argument("--oracle", action="store_true", help="append brute-force Betti numbers")
        if name == "depth":
            p.add_argument("--kmax", type=int, default=3)
    p = sub.add_parser("random")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--bmax", type=int, default=3)
    p.add_argument("--extra", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    return parser


def _emit(command, data, text, as_json):
    if as_json:
        payload = {"schema_version": SCHEMA_VERSION, "command": command, **data}
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(text))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "random":
            ideal = random_artinian(args.n, args.bmax, args.extra, args.seed)
            if args.json:
                _emit("random", {"n": ideal.n, "generators": [list(g) for g in ideal.generators]}, [], True)
            else:
                sys.stdout.write(format_ideal(ideal))
            return 0
        ctx = _load(args.input)
        data, text = COMMANDS[args.command](ctx, args)
    except ScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (WhiskerError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args.command, data, text, args.json)
    if args.command == "verify" and not data["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
