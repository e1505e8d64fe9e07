"""Command-line front end.

Exit status: 0 on success, 1 on usage or domain errors, 2 when a
verification check fails.
"""
from __future__ import annotations

import argparse
import configparser
import json
import sys
from typing import Optional, Sequence, TextIO

from . import classify, network, seiferter
from .homology import Slope
from .knots import TREFOIL, SurgeryVertex, torus_knot
from .torus import moser_classify

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2
# options whose values may start with '-' (negative fractions, ranges)
_VALUE_OPTIONS = ("--slope", "--grid", "--seeds")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


def _slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _range(text: str) -> range:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    a, b = _int(lo), _int(hi)
    if a > b:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _grid(text: str) -> tuple[range, range]:
    ms, sep, ns = text.partition(",")
    if not sep:
        raise argparse.ArgumentTypeError("expected mlo:mhi,nlo:nhi")
    return _range(ms), _range(ns)


def _glue_values(argv: Sequence[str]) -> list[str]:
    out, it = [], iter(argv)
    for a in it:
        if a in _VALUE_OPTIONS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="seifnet", description="Seifert surgeries on T(-3,2) and their network.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("surgery", help="Seifert invariants of a torus-knot surgery")
    s.add_argument("p", type=_int)
    s.add_argument("q", type=_int)
    s.add_argument("--slope", type=_slope, required=True, help="r or r/s")
    s.add_argument("--json", action="store_true")

    k = sub.add_parser("knm", help="K_n^m: slopes, orbifolds, hyperbolicity")
    k.add_argument("m", type=_int, nargs="?")
    k.add_argument("n", type=_int, nargs="?")
    k.add_argument("--grid", type=_grid, help="mlo:mhi,nlo:nhi")
    k.add_argument("--bound", type=_int, default=classify.DEFAULT_BOUND)
    k.add_argument("--json", action="store_true")

    t = sub.add_parser("twist", help="twist (T(-3,2), m) along a seiferter")
    t.add_argument("seiferter", help="c_mu, s_-3, s_2, c, or c^M")
    t.add_argument("n", type=_int)
    t.add_argument("--slope", type=_slope, required=True)
    t.add_argument("--json", action="store_true")

    a = sub.add_parser("pairs", help="annular pairs of seiferters at (T(-3,2), m)")
    a.add_argument("m", type=_int)
    a.add_argument("--json", action="store_true")

    kp = sub.add_parser("kp", help="the genus-one family K_p")
    kp.add_argument("p", type=_int)
    kp.add_argument("--json", action="store_true")

    nw = sub.add_parser("network", help="build and export a finite subnetwork")
    nw.add_argument("--preset", choices=sorted(network.PRESETS))
    nw.add_argument("--m", type=_int, help="base slope for the cm-triple preset")
    nw.add_argument("--seeds", help="comma-separated trefoil slopes")
    nw.add_argument("--seiferters", help="comma-separated seiferter names")
    nw.add_argument("--radius", type=_int)
    nw.add_argument("--config", help="key = value file under a [network] section")
    fmt = nw.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="recheck the recorded numerical claims")
    v.add_argument("--filter", dest="tag")
    return p


# -- commands ----------------------------------------------------------------------

def _emit(out: TextIO, args, payload: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        out.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_surgery(args, out) -> int:
    k = torus_knot(args.p, args.q)
    triple, cls = moser_classify(k, args.slope)
    _emit(out, args, {"knot": str(k), "slope": str(args.slope),
                      "orbifold": list(triple.indices), "class": str(cls)},
          [f"knot      {k}", f"slope     {args.slope}",
           f"orbifold  {triple}", f"class     {cls}"])
    return EXIT_OK


def _knm_payload(m: int, n: int, bound: int) -> tuple[dict, list[str]]:
    r = classify.knm_report(m, n)
    witness = classify.knm_torus_exclusion(m, n, bound) if r.hyperbolic else None
    payload = {
        "m": m, "n": n, "knot": str(r.vertex_knot),
        "name": None if r.name is None else str(r.name),
        "surgeries": [{"slope": s, "orbifold": list(t.indices), "class": str(c)}
                      for s, t, c in zip(r.slopes, r.triples, r.classes)],
        "hyperbolic": r.hyperbolic,
        "non_satellite": classify.non_satellite_certificate(r),
        "torus_witness": None if witness is None else list(witness),
        "bound": bound,
    }
    lines = [f"K_{n}^{m} = {r.vertex_knot}" + (f" = {r.name}" if r.name else "")]
    lines += [f"  slope {s:>8}  {t}  {c}" for s, t, c in zip(r.slopes, r.triples, r.classes)]
    lines.append(f"  hyperbolic: {'yes' if r.hyperbolic else 'no'}")
    lines.append(f"  non-satellite certificate: {'yes' if payload['non_satellite'] else 'no'}")
    if r.hyperbolic:
        lines.append(f"  torus knots with |p| <= {bound} sharing these surgeries: "
                     + ("none" if witness is None else f"T({witness[0]},{witness[1]})"))
    return payload, lines


def cmd_knm(args, out) -> int:
    if args.grid is not None:
        if args.m is not None or args.n is not None:
            raise UsageError("give either M N or --grid, not both")
        ms, ns = args.grid
        rows = [{"m": m, "n": n, "orbifolds": [list(t) for t in trip], "hyperbolic": hyp}
                for m, n, trip, hyp in classify.knm_grid_rows(ms, ns)]
        lines = [f"{'m':>6} {'n':>6}  orbifolds"]
        lines += [f"{r['m']:>6} {r['n']:>6}  "
                  + " ".join("S2(" + ",".join(map(str, t)) + ")" for t in r["orbifolds"])
                  + ("  hyperbolic" if r["hyperbolic"] else "") for r in rows]
        _emit(out, args, {"rows": rows}, lines)
        return EXIT_OK
    if args.m is None or args.n is None:
        raise UsageError("knm needs M and N, or --grid")
    payload, lines = _knm_payload(args.m, args.n, args.bound)
    _emit(out, args, payload, lines)
    return EXIT_OK


def cmd_twist(args, out) -> int:
    if not args.slope.is_integral:
        raise UsageError("network vertices have integral slopes")
    s = network.seiferter_by_name(args.seiferter)
    start = SurgeryVertex(TREFOIL, args.slope)
    if seiferter.applicable_role(start, s) is None:
        raise UsageError(f"{s.name} is not a seiferter for {start}")
    end = seiferter.twist(start, s, args.n)
    triple = seiferter.indices_after_twist(s, args.n, args.slope.num)
    name = classify.resolve_name(end)
    payload = {"from": str(start), "seiferter": s.name, "n": args.n, "to": str(end),
               "name": None if name is None else str(name), "orbifold": sorted(triple)}
    lines = [f"{start} -> {end}  ({args.n:+d} along {s.name})",
             f"  name      {name if name is not None else 'unknown'}",
             f"  orbifold  S2({','.join(map(str, sorted(triple)))})"]
    _emit(out, args, payload, lines)
    return EXIT_OK


def cmd_pairs(args, out) -> int:
    m = args.m
    same = [str(p) for p in seiferter.same_lk_filter(m)]
    irrelevant = [str(p) for p in seiferter.irrelevant_pairs(m)]
    annular = [p.label() for p in seiferter.annular_pairs(m)]
    candidates = [str(p) for p in seiferter.basic_annular_candidates(m)]
    found = seiferter.basic_annular_pairs_found(m)
    payload = {"m": m, "same_lk": same, "irrelevant": irrelevant, "annular": annular,
               "basic_candidates": candidates, "basic": found}
    lines = [f"(T(-3,2), {m}): {moser_classify(TREFOIL, m)[1]}",
             "  equal linking:   " + (", ".join(same) or "none"),
             "  irrelevant:      " + (", ".join(irrelevant) or "none"),
             "  annular:         " + ", ".join(annular),
             "  basic candidates: " + (", ".join(candidates) or "none"),
             "  basic annular:   " + (", ".join(found) or "none")]
    _emit(out, args, payload, lines)
    return EXIT_OK


def cmd_kp(args, out) -> int:
    r = classify.kp_report(args.p)
    excluded = classify.ps_construction_excluded(args.p)
    payload = {"p": args.p, "knot": str(r.vertex.knot),
               "name": None if r.name is None else str(r.name),
               "slope": -1, "orbifold": list(r.triple.indices), "hyperbolic": r.hyperbolic,
               "genus_one": r.genus_one, "ps_excluded": excluded}
    lines = [f"K_{args.p} = {r.vertex.knot}" + (f" = {r.name}" if r.name else ""),
             f"  K_p(-1) over {r.triple}",
             f"  hyperbolic: {'yes' if r.hyperbolic else 'no'}",
             f"  twist-knot orbifold test: {'excluded' if excluded else 'not excluded'}"]
    _emit(out, args, payload, lines)
    return EXIT_OK


def _read_config(path: str) -> dict:
    cp = configparser.ConfigParser()
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise UsageError(f"cannot read config: {e}") from None
    if not text.lstrip().startswith("["):
        text = "[network]\n" + text
    try:
        cp.read_string(text)
    except configparser.Error as e:
        raise UsageError(f"bad config: {e}") from None
    if not cp.has_section("network"):
        raise UsageError("config needs a [network] section")
    known = {"preset", "m", "seeds", "seiferters", "radius"}
    extra = set(cp["network"]) - known
    if extra:
        raise UsageError(f"unknown config keys: {', '.join(sorted(extra))}")
    return {k: v.strip().strip('"') for k, v in cp["network"].items()}


def _names(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def cmd_network(args, out) -> int:
    opts = _read_config(args.config) if args.config else {}
    for key in ("preset", "m", "seeds", "seiferters", "radius"):
        val = getattr(args, key)
        if val is not None:
            opts[key] = str(val)
    radius = _int(opts["radius"]) if "radius" in opts else 2
    preset = opts.get("preset")
    if preset:
        if "seeds" in opts or "seiferters" in opts:
            raise UsageError("a preset fixes seeds and seiferters")
        if preset == "cm-triple":
            if "m" not in opts:
                raise UsageError("preset cm-triple needs --m")
            g = network.cm_triple_preset(_int(opts["m"]), radius)
        else:
            g = network.twist_family_preset(radius)
    else:
        if "seeds" not in opts or "seiferters" not in opts:
            raise UsageError("give --preset, or both --seeds and --seiferters")
        seeds = [SurgeryVertex(TREFOIL, Slope(_int(x))) for x in _names(opts["seeds"])]
        g = network.build(seeds, [network.seiferter_by_name(x) for x in _names(opts["seiferters"])],
                          radius)
    for w in g.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.dot:
        out.write(network.export_dot(g))
    elif args.json:
        out.write(network.export_json(g))
    else:
        for v in g.sorted_vertices():
            mark = " *" if v.frontier else ""
            out.write(f"{v.key:<36} {v.orbifold if v.orbifold else '?'}{mark}\n")
        out.write(f"{len(g.vertices)} vertices, {len(g.edges)} edges (* frontier)\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    from .claims import run_claims
    try:
        results = run_claims(args.tag)
    except KeyError:
        raise UsageError(f"unknown claim filter {args.tag!r}") from None
    for r in results:
        out.write(r.line() + "\n")
    failed = [r.id for r in results if not r.passed]
    if failed:
        out.write(f"{len(failed)} of {len(results)} claims fail: {', '.join(failed)}\n")
        return EXIT_VERIFY
    out.write(f"all claims pass ({len(results)})\n")
    return EXIT_OK


COMMANDS = {"surgery": cmd_surgery, "knm": cmd_knm, "twist": cmd_twist, "pairs": cmd_pairs,
            "kp": cmd_kp, "network": cmd_network, "verify": cmd_verify}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None) -> int:
    out = out if out is not None else sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_glue_values(argv))
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"seifnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ArithmeticError, KeyError) as e:
        print(f"seifnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
