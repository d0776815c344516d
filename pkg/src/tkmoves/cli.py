"""Command-line front end: invariants, moves, obstructions, homology, signatures, colorings, verify."""

from __future__ import annotations

import argparse
import cmath
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from . import obstruction
from .diagram import DiagramError, LinkDiagram, MoveKind, MoveSite, apply_move, braid_closure, find_sites
from .diagram import named, parse_braid, parse_pd
from .laurent import LaurentError, to_json
from .matrices import MatrixError, branched_cover_homology, signature, tristram_levine
from .obstruction import (CongruenceMode, ObstructionError, bar_t2k_obstruction, fox_colorings,
                          jones_tk_factor, mod_k_congruence, tk_obstruction)
from .skein import (MAX_CROSSINGS_HOMFLY, MAX_CROSSINGS_KAUFFMAN, SkeinBudgetError, SkeinInternalError,
                    alexander, homfly, jones, kauffman_f, kauffman_lambda)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _int_list(text):
    return [int(x) for x in text.split(",") if x.strip()]


def _float_list(text):
    return [float(x) for x in text.split(",") if x.strip()]


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    max_homfly: int = MAX_CROSSINGS_HOMFLY
    max_kauffman: int = MAX_CROSSINGS_KAUFFMAN
    tol: float = obstruction.TOL
    seed: int = obstruction.DEFAULT_SEED
    as_json: bool = False

    def __post_init__(self):
        if self.tol <= 0:
            raise UsageError("tolerance must be positive")
        if self.max_homfly < 1 or self.max_kauffman < 1:
            raise UsageError("crossing caps must be at least 1")


def parse_link(spec: str) -> LinkDiagram:
    """'name:<id>', 'braid:n=<k>:<letters>' or 'pd:<code or file>', optionally ';reverse=i,j'."""
    spec = spec.strip()
    body, _, opts = spec.partition(";")
    kind, sep, rest = body.partition(":")
    if not sep:
        raise DiagramError(f"link spec {spec!r} must start with name:, braid: or pd:")
    if kind == "name":
        d = named(rest.strip())
    elif kind == "braid":
        d = braid_closure(parse_braid(rest))
    elif kind == "pd":
        text = rest.strip()
        path = Path(text)
        if text and "[" not in text and path.is_file():
            text = path.read_text()
        d = parse_pd(text)
    else:
        raise DiagramError(f"unknown link source {kind!r} (use name:, braid: or pd:)")
    if opts:
        key, _, vals = opts.partition("=")
        if key.strip() != "reverse":
            raise DiagramError(f"unknown link option {key!r}")
        for tok in vals.split(","):
            try:
                i = int(tok)
            except ValueError:
                raise DiagramError(f"bad component index {tok!r}")
            d = d.reverse_component(i)
    return d


def _cjson(v):
    v = complex(v)
    return [repr(v.real), repr(v.imag)]


def _emit(cfg: RunConfig, text: str, data):
    if cfg.as_json:
        print(json.dumps(data, indent=2, default=str))
    else:
        print(text)


# commands

POLYS = ("homfly", "kauffman", "kauffman-f", "jones", "alexander")


def cmd_invariant(args, cfg):
    d = parse_link(args.link)
    want = POLYS if args.poly == "all" else (args.poly,)
    vals = {}
    for name in want:
        if name == "homfly":
            vals[name] = homfly(d, cfg.max_homfly)
        elif name == "kauffman":
            vals[name] = kauffman_lambda(d, cfg.max_kauffman)
        elif name == "kauffman-f":
            vals[name] = kauffman_f(d, cfg.max_kauffman)
        elif name == "jones":
            vals[name] = jones(d, homfly(d, cfg.max_homfly))
        else:
            vals[name] = alexander(d, homfly(d, cfg.max_homfly))
    if len(want) == 1:
        text = str(vals[want[0]])
    else:
        text = "\n".join(f"{k}: {v}" for k, v in vals.items())
    data = {"link": args.link, "invariants": {k: {"variables": list(v.variables), "terms": to_json(v)}
                                              for k, v in vals.items()}}
    _emit(cfg, text, data)
    return EXIT_OK


def _site_from_args(d, args) -> MoveSite:
    if args.site is not None:
        found = find_sites(d, args.kind)
        if not 0 <= args.site < len(found):
            raise UsageError(f"site index {args.site} out of range (0..{len(found) - 1})")
        s = found[args.site]
        return MoveSite(s.kind, s.anchors, args.twists, s.face_side, args.odd_keep)
    if not args.anchors:
        raise UsageError("give --anchors or --site")
    return MoveSite(MoveKind(args.kind), tuple(args.anchors), args.twists, args.face_side, args.odd_keep)


def cmd_move(args, cfg):
    d = parse_link(args.link)
    if args.list_sites:
        found = find_sites(d, args.kind)
        lines = [f"{n}: anchors {s.anchors} face {s.face_side}" for n, s in enumerate(found)]
        _emit(cfg, "\n".join(lines) or "no sites",
              {"sites": [{"anchors": list(s.anchors), "face_side": s.face_side} for s in found]})
        return EXIT_OK
    site = _site_from_args(d, args)
    out = apply_move(d, site, args.k)
    text = (f"{out.to_pd()}\ncrossings {len(out.crossings)}  components {out.components()}"
            f"  writhe {out.writhe()}")
    _emit(cfg, text, {"diagram": out.to_json(), "pd": out.to_pd()})
    return EXIT_OK


def cmd_obstruct(args, cfg):
    d1, d2 = parse_link(args.link1), parse_link(args.link2)
    chosen = [x for x in (args.tk, args.bar_t2k, args.jones, args.congruence) if x is not None]
    if len(chosen) != 1:
        raise UsageError("choose exactly one of --tk, --bar-t2k, --jones, --congruence")
    if args.tk is not None:
        rep = tk_obstruction(homfly(d1, cfg.max_homfly), homfly(d2, cfg.max_homfly), args.tk, args.m,
                             args.nmax, cfg.seed)
    elif args.bar_t2k is not None:
        rep = bar_t2k_obstruction(homfly(d1, cfg.max_homfly), homfly(d2, cfg.max_homfly), args.bar_t2k, cfg.seed)
    elif args.jones is not None:
        rep = jones_tk_factor(jones(d1), jones(d2), args.jones, args.m)
    else:
        mode = CongruenceMode[args.mode]
        ok = mod_k_congruence(homfly(d1, cfg.max_homfly), homfly(d2, cfg.max_homfly), args.congruence, mode,
                              args.n)
        _emit(cfg, f"congruent: {ok}", {"congruent": ok, "k": args.congruence, "mode": mode.value})
        return EXIT_OK
    text = f"{rep.verdict.value}" + (f" (level distance {rep.n})" if rep.n is not None else "")
    text += f"\nmethod: {rep.method}"
    _emit(cfg, text, rep.to_json())
    return EXIT_OK


def cmd_homology(args, cfg):
    d = parse_link(args.link)
    res = branched_cover_homology(d, args.s)
    lines = [f"H1(M^({args.s})) = {res}", f"minimal generators: {res.generators}"]
    mods = {}
    for k in args.mod:
        red = res.reduce_mod(k)
        mods[str(k)] = [str(x) for x in red]
        lines.append(f"tensor Z/{k}: " + (" + ".join(f"Z/{x}" for x in red) or "0"))
    data = {"s": args.s, "homology": res.to_json(), "generators": res.generators, "mod": mods}
    _emit(cfg, "\n".join(lines), data)
    return EXIT_OK


def cmd_signature(args, cfg):
    d = parse_link(args.link)
    sv = signature(d)
    lines = [f"signature {sv.signature}  nullity {sv.nullity}"]
    data = {"signature": sv.to_json(), "tristram_levine": []}
    for ang in args.omega:
        xi = 1 - cmath.exp(1j * math.pi * ang)
        tl = tristram_levine(d, xi)
        lines.append(f"xi = 1 - e^(i pi {ang}): signature {tl.signature}  nullity {tl.nullity}")
        data["tristram_levine"].append({"omega": ang, "xi": _cjson(xi), **tl.to_json()})
    _emit(cfg, "\n".join(lines), data)
    return EXIT_OK


def cmd_colorings(args, cfg):
    d = parse_link(args.link)
    counts = {p: fox_colorings(d, p) for p in args.p}
    lines = [f"p={p}: {c} colorings" + ("  (colourable)" if c > p else "") for p, c in counts.items()]
    _emit(cfg, "\n".join(lines), {"colorings": {str(p): str(c) for p, c in counts.items()}})
    return EXIT_OK


def cmd_verify(args, cfg):
    from .suite import run_suite
    results = run_suite(cfg.seed)
    lines = [f"{'PASS' if r.ok else 'FAIL'}  {r.id:<18} {r.checks:4d} checks  {r.title}" for r in results]
    for r in results:
        for f in r.failures[:10]:
            lines.append(f"  {r.id}: failed {f}")
    if args.report:
        from .report import write_report
        paths = write_report(results, Path(args.report))
        lines.append("report: " + ", ".join(str(p) for p in paths))
    _emit(cfg, "\n".join(lines), {"seed": cfg.seed, "items": [r.to_json() for r in results]})
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--max-crossings-homfly", type=int, default=MAX_CROSSINGS_HOMFLY)
    common.add_argument("--max-crossings-kauffman", type=int, default=MAX_CROSSINGS_KAUFFMAN)
    common.add_argument("--tol", type=float, default=obstruction.TOL, help="evaluation tolerance")
    common.add_argument("--seed", type=int, default=obstruction.DEFAULT_SEED)

    p = argparse.ArgumentParser(prog="tkmoves", description="link invariants and twist-move obstructions")
    sub = p.add_subparsers(dest="cmd", required=True)

    q = sub.add_parser("invariant", parents=[common], help="polynomial invariants")
    q.add_argument("--poly", choices=POLYS + ("all",), default="homfly")
    q.add_argument("link")
    q.set_defaults(fn=cmd_invariant)

    q = sub.add_parser("move", parents=[common], help="apply a twist move")
    q.add_argument("--kind", choices=[k.value for k in MoveKind], default="TK")
    q.add_argument("--anchors", type=_int_list, help="comma list of edge labels")
    q.add_argument("--site", type=int, help="index into the listed sites")
    q.add_argument("--list-sites", action="store_true")
    q.add_argument("--k", type=int, default=1, help="half twists (full twists for FULLTWIST)")
    q.add_argument("--twists", type=int, default=1)
    q.add_argument("--face-side", choices=("left", "right"))
    q.add_argument("--odd-keep", type=int, choices=(1, 2))
    q.add_argument("link")
    q.set_defaults(fn=cmd_move)

    q = sub.add_parser("obstruct", parents=[common], help="test twist-move equivalence")
    q.add_argument("--tk", type=int)
    q.add_argument("--bar-t2k", type=int)
    q.add_argument("--jones", type=int)
    q.add_argument("--congruence", type=int)
    q.add_argument("--mode", choices=[m.name for m in CongruenceMode], default="T_K_AT_PM2")
    q.add_argument("--m", type=int, default=1)
    q.add_argument("--n", type=int, default=1, help="level distance for --congruence")
    q.add_argument("--nmax", type=int, default=obstruction.NMAX)
    q.add_argument("link1")
    q.add_argument("link2")
    q.set_defaults(fn=cmd_obstruct)

    q = sub.add_parser("homology", parents=[common], help="homology of cyclic branched covers")
    q.add_argument("--s", type=int, default=2)
    q.add_argument("--mod", type=_int_list, default=[], help="comma list of k for H1 tensor Z/k")
    q.add_argument("link")
    q.set_defaults(fn=cmd_homology)

    q = sub.add_parser("signature", parents=[common], help="classical and Tristram-Levine signatures")
    q.add_argument("--omega", type=_float_list, default=[], help="comma list; xi = 1 - exp(i pi omega)")
    q.add_argument("link")
    q.set_defaults(fn=cmd_signature)

    q = sub.add_parser("colorings", parents=[common], help="Fox p-coloring counts")
    q.add_argument("--p", type=_int_list, default=[3], help="comma list of primes")
    q.add_argument("link")
    q.set_defaults(fn=cmd_colorings)

    q = sub.add_parser("verify", parents=[common], help="replay the identity and example suite")
    q.add_argument("--report", help="directory for figures and a JSON summary")
    q.set_defaults(fn=cmd_verify)
    return p


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(args.max_crossings_homfly, args.max_crossings_kauffman, args.tol, args.seed, args.json)
        obstruction.TOL = cfg.tol
        return args.fn(args, cfg)
    except (UsageError, DiagramError, LaurentError, SkeinBudgetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SkeinInternalError, MatrixError, ObstructionError) as exc:
        print(f"failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
