"""Finite pieces of the Seifert Surgery Network around (T(-3,2), m).

Vertices are surgeries (knot, integral slope); an edge joins two vertices
related by a single twist along a registered seiferter.  The network is
infinite, so :func:`build` truncates it at a given number of twists from
the seeds and marks the outermost vertices as frontier.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .classify import resolve_name
from .homology import Slope
from .knots import (TREFOIL, KnotDesc, Named, SeiferterDesc, SurgeryVertex,
                    TorusKnot, Twisted)
from .seiferter import (C_MU, S_2, S_M3, annular_pairs, applicable_role,
                        basic_annular_candidates, c_from_double_move, cm_family,
                        indices_after_twist, origin, twist)
from .sfs import Kind, OrbifoldTriple, SfsClass, classify_triple
from .torus import moser_classify


@dataclass(frozen=True)
class VertexInfo:
    key: str
    identity: KnotDesc
    slope: Slope
    forms: tuple[SurgeryVertex, ...]
    orbifold: Optional[OrbifoldTriple]
    sfs: Optional[SfsClass]
    frontier: bool
    identity_unknown: bool
    annular_pairs: tuple[str, ...] = ()

    @property
    def provenance(self) -> tuple[str, ...]:
        return tuple(sorted(str(f) for f in self.forms))


@dataclass(frozen=True, order=True)
class Edge:
    source: str
    target: str
    seiferter: str
    sign: int = 1


@dataclass
class NetworkGraph:
    vertices: dict[str, VertexInfo] = field(default_factory=dict)
    edges: set[Edge] = field(default_factory=set)
    warnings: list[str] = field(default_factory=list)

    def sorted_vertices(self) -> list[VertexInfo]:
        return sorted(self.vertices.values(),
                      key=lambda v: (Fraction(v.slope.num, v.slope.den), v.key))

    def sorted_edges(self) -> list[Edge]:
        order = {v.key: i for i, v in enumerate(self.sorted_vertices())}
        return sorted(self.edges, key=lambda e: (order[e.source], order[e.target], e.seiferter))

    def find(self, knot: KnotDesc, slope: int | Slope) -> Optional[VertexInfo]:
        return self.vertices.get(vertex_key(knot, slope if isinstance(slope, Slope) else Slope(slope)))


def vertex_key(knot: KnotDesc, slope: Slope) -> str:
    return f"{knot}({slope})"


def identity_of(v: SurgeryVertex) -> KnotDesc:
    name = resolve_name(v)
    return name if name is not None else v.knot


def _annotate(form: SurgeryVertex, registry: dict[str, SeiferterDesc]):
    knot = form.knot
    if isinstance(knot, TorusKnot):
        if knot.is_trivial:
            return None, None
        triple, cls = moser_classify(knot, form.slope)
        return triple, cls
    if isinstance(knot, Twisted) and knot.seiferter in registry:
        s = registry[knot.seiferter]
        o = origin(form, s)
        if isinstance(o.knot, TorusKnot) and applicable_role(form, s) is not None:
            triple = OrbifoldTriple(indices_after_twist(s, knot.n, o.slope.num))
            return triple, classify_triple(triple)
    return None, None


def _pair_metadata(knot: KnotDesc, slope: Slope) -> tuple[str, ...]:
    if knot != TREFOIL or not slope.is_integral:
        return ()
    m = slope.num
    labels = ["{s_-3, s_2} (basic)", "{s_-3, c_mu} (basic)", "{s_2, c_mu} (basic)"]
    labels += [p.label() for p in annular_pairs(m)]
    labels += [f"{p.label()} basic" for p in basic_annular_candidates(m) if p.rejected is None]
    return tuple(labels)


def build(seeds: Iterable[SurgeryVertex], seiferters: Iterable[SeiferterDesc],
          radius: int) -> NetworkGraph:
    """Breadth-first closure of ``seeds`` under single +-1 twists, up to
    ``radius`` twists away."""
    if radius < 1:
        raise ValueError("radius must be positive")
    seiferters = list(seiferters)
    registry = {s.name: s for s in seiferters}
    if len(registry) != len(seiferters):
        raise ValueError("seiferter names must be distinct")

    depth: dict[str, int] = {}
    forms: dict[str, dict[SurgeryVertex, None]] = {}
    idents: dict[str, KnotDesc] = {}
    edges: set[Edge] = set()
    used: set[str] = set()
    queue: deque[tuple[SurgeryVertex, int]] = deque()

    def add(form: SurgeryVertex, d: int) -> str:
        ident = identity_of(form)
        key = vertex_key(ident, form.slope)
        if key not in forms:
            forms[key], idents[key], depth[key] = {}, ident, d
        depth[key] = min(depth[key], d)
        if form not in forms[key]:
            forms[key][form] = None
            queue.append((form, d))
        return key

    for seed in seeds:
        add(seed, 0)
    while queue:
        form, d = queue.popleft()
        if d >= radius:
            continue
        src = vertex_key(identity_of(form), form.slope)
        for s in seiferters:
            if applicable_role(form, s) is None:
                continue
            used.add(s.name)
            for sign in (1, -1):
                dst = add(twist(form, s, sign), d + 1)
                edges.add(Edge(src, dst, s.name) if sign == 1 else Edge(dst, src, s.name))

    g = NetworkGraph(edges=edges)
    g.warnings = [f"seiferter {s.name} is not a seiferter at any reached vertex; skipped"
                  for s in seiferters if s.name not in used]
    for key, fs in forms.items():
        ordered = tuple(sorted(fs, key=str))
        triple, cls = _annotate(ordered[0], registry)
        ident = idents[key]
        g.vertices[key] = VertexInfo(
            key=key, identity=ident, slope=ordered[0].slope, forms=ordered,
            orbifold=triple, sfs=cls, frontier=depth[key] >= radius,
            identity_unknown=isinstance(ident, Twisted),
            annular_pairs=_pair_metadata(ident, ordered[0].slope),
        )
    return g


# -- presets ---------------------------------------------------------------------

def seiferter_by_name(name: str) -> SeiferterDesc:
    fixed = {"c_mu": C_MU, "s_-3": S_M3, "s_2": S_2, "c": c_from_double_move()}
    if name in fixed:
        return fixed[name]
    if name.startswith("c^"):
        try:
            return cm_family(int(name[2:]))
        except ValueError:
            pass
    raise ValueError(f"unknown seiferter {name!r} (use c_mu, s_-3, s_2, c, or c^M)")


def twist_family_preset(radius: int = 2) -> NetworkGraph:
    """Neighborhood of (T,-1) and (T,-6) under c_mu, c^-1, c^-6 and c."""
    seeds = [SurgeryVertex(TREFOIL, Slope(-1)), SurgeryVertex(TREFOIL, Slope(-6))]
    return build(seeds, [C_MU, cm_family(-1), cm_family(-6), c_from_double_move()], radius)


def cm_triple_preset(m: int, radius: int = 2) -> NetworkGraph:
    """Subnetwork around (T, m) generated by c^m, c^{m+1}, c^{m+2} and c_mu."""
    seeds = [SurgeryVertex(TREFOIL, Slope(m))]
    return build(seeds, [C_MU, cm_family(m), cm_family(m + 1), cm_family(m + 2)], radius)


PRESETS = {"twist-family": twist_family_preset, "cm-triple": cm_triple_preset}


# -- export ----------------------------------------------------------------------

def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: NetworkGraph) -> str:
    lines = ["digraph seifert_network {"]
    for v in g.sorted_vertices():
        attrs = [f"label={_dot_quote(v.key)}"]
        if v.frontier:
            attrs.append("style=dashed")
        lines.append(f"  {_dot_quote(v.key)} [{', '.join(attrs)}];")
    for e in g.sorted_edges():
        label = f"{e.seiferter},{e.sign:+d}"
        lines.append(f"  {_dot_quote(e.source)} -> {_dot_quote(e.target)} [label={_dot_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def slope_to_json(s: Slope):
    return s.num if s.den == 1 else {"num": s.num, "den": s.den}


def slope_from_json(x) -> Slope:
    return Slope(x) if isinstance(x, int) else Slope(x["num"], x["den"])


def knot_to_json(k: KnotDesc) -> dict:
    if isinstance(k, TorusKnot):
        return {"type": "torus", "p": k.p, "q": k.q}
    if isinstance(k, Twisted):
        return {"type": "twisted", "base": knot_to_json(k.base),
                "seiferter": k.seiferter, "n": k.n}
    return {"type": "named", "kind": k.kind, "params": list(k.params)}


def knot_from_json(d: dict) -> KnotDesc:
    t = d["type"]
    if t == "torus":
        return TorusKnot(d["p"], d["q"])
    if t == "twisted":
        return Twisted(knot_from_json(d["base"]), d["seiferter"], d["n"])
    if t == "named":
        return Named(d["kind"], tuple(d["params"]))
    raise ValueError(f"unknown knot type {t!r}")


def sfs_to_json(c: Optional[SfsClass]):
    if c is None:
        return None
    return {"kind": c.kind.value, "p": c.p, "q": c.q, "flag": c.flag,
            "triple": None if c.triple is None else list(c.triple.indices)}


def sfs_from_json(d) -> Optional[SfsClass]:
    if d is None:
        return None
    triple = None if d["triple"] is None else OrbifoldTriple(tuple(d["triple"]))
    return SfsClass(Kind(d["kind"]), d["p"], d["q"], triple, d["flag"])


def to_dict(g: NetworkGraph) -> dict:
    return {
        "vertices": [{
            "id": v.key,
            "knot": knot_to_json(v.identity),
            "slope": slope_to_json(v.slope),
            "class": sfs_to_json(v.sfs),
            "orbifold": None if v.orbifold is None else list(v.orbifold.indices),
            "frontier": v.frontier,
            "identity_unknown": v.identity_unknown,
            "annular_pairs": list(v.annular_pairs),
            "forms": [{"knot": knot_to_json(f.knot), "slope": slope_to_json(f.slope)}
                      for f in v.forms],
        } for v in g.sorted_vertices()],
        "edges": [{"from": e.source, "to": e.target, "seiferter": e.seiferter,
                   "sign": e.sign} for e in g.sorted_edges()],
        "warnings": list(g.warnings),
    }


def export_json(g: NetworkGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True, indent=1) + "\n"


def load_json(text: str) -> NetworkGraph:
    d = json.loads(text)
    g = NetworkGraph(warnings=list(d.get("warnings", [])))
    for v in d["vertices"]:
        g.vertices[v["id"]] = VertexInfo(
            key=v["id"], identity=knot_from_json(v["knot"]),
            slope=slope_from_json(v["slope"]),
            forms=tuple(SurgeryVertex(knot_from_json(f["knot"]), slope_from_json(f["slope"]))
                        for f in v["forms"]),
            orbifold=None if v["orbifold"] is None else OrbifoldTriple(tuple(v["orbifold"])),
            sfs=sfs_from_json(v["class"]), frontier=v["frontier"],
            identity_unknown=v["identity_unknown"],
            annular_pairs=tuple(v["annular_pairs"]),
        )
    g.edges = {Edge(e["from"], e["to"], e["seiferter"], e["sign"]) for e in d["edges"]}
    return g
