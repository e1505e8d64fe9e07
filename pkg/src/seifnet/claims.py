"""Regression registry of the published numerical claims.

Each claim recomputes a value through the library and compares it with the
expected value recorded here.  ``run_claims`` drives the CLI ``verify``
command.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from . import classify, network, seiferter, sfs
from .homology import Slope
from .knots import (FIGURE_EIGHT, PRETZEL_237, PRETZEL_333, TREFOIL, TRIVIAL,
                    SurgeryVertex, twist_knot)
from .torus import moser_classify


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    check: Callable[[], tuple[object, object]]


@dataclass(frozen=True)
class ClaimResult:
    id: str
    statement: str
    computed: object
    expected: object

    @property
    def passed(self) -> bool:
        return self.computed == self.expected

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.id}: {self.statement} | computed={self.computed}"
                f" expected={self.expected}")


def _grid_row(row: int):
    r = np.arange(-50, 51)
    g = classify._kernels.knm_index_grid(r, r)
    return int((g[row] != g[row + 3]).sum()), 0


def _pretzel():
    rep = classify.knm_report(-6, 1)
    got = (rep.slopes, tuple(t.indices for t in rep.triples), str(rep.name))
    return got, ((19, 18, 17), ((1, 2, 3), (1, 2, 8), (2, 3, 5)), str(PRETZEL_237))


def _twist_line():
    bad = []
    for n in range(-20, 21):
        v = seiferter.twist(SurgeryVertex(TREFOIL, Slope(-1)), seiferter.cm_family(-1), n)
        if classify.resolve_name(v) != twist_knot(n + 1) or v.slope != Slope(-1):
            bad.append(n)
    return bad, []


def _twist_orbifold():
    bad = [n0 for n0 in range(-20, 21) if n0 != 0 and
           moser_classify(TREFOIL, Slope(-1, n0))[0] != sfs.OrbifoldTriple.of(2, 3, abs(6 * n0 - 1))]
    return bad, []


def _kp_triples():
    bad = [p for p in range(-50, 51)
           if classify.kp_report(p).triple != sfs.OrbifoldTriple.of(2, abs(10 * p + 3), 5)]
    return bad, []


def _ps_obstruction():
    allowed = [p for p in range(-100, 101) if not classify.ps_construction_excluded(p)]
    return allowed, [0]


def _cm_table():
    got = {m: str(seiferter.seiferter_status(m)) for m in range(-7, 2)}
    exp = {m: "hyperbolic" for m in range(-7, 2)}
    exp.update({-5: "cable(s_p,-1/2)", -4: "basic(s_q)", -3: "basic(s_p)", -2: "basic(c_mu)"})
    return got, exp


def _knm_predicate():
    bad = []
    for m in range(-30, 31):
        for n in range(-30, 31):
            link_hyp = seiferter.seiferter_status(m).kind.name == "HYPERBOLIC"
            expect = link_hyp and n != 0 and (m, n) != (-1, -1)
            if classify.knm_hyperbolic(m, n) != expect:
                bad.append((m, n))
    return bad, []


def _torus_exclusion():
    hits = [(m, n) for m in range(-15, 16) for n in range(-15, 16)
            if classify.knm_hyperbolic(m, n) and classify.knm_torus_exclusion(m, n, 100) is not None]
    return hits, []


def _annular_basic():
    got = sorted((m, str(p)) for m in range(-30, 31)
                 for p in seiferter.basic_annular_candidates(m))
    exp = sorted([
        (-3, "{c_1^-3, c_2^-3}"), (-4, "{c_1^-4, c_2^-4}"), (-4, "{c_2^-4, c_3^-4}"),
        (-4, "{c_1^-4, c_3^-4}"), (-5, "{c_2^-5, c_3^-5}"), (-6, "{s_-3, c_3^-6}"),
        (0, "{s_-3, c_3^0} (rejected: hyperbolic member)"),
    ])
    return got, exp


def _same_lk():
    got = sorted((p.a, p.b, m) for m in range(-30, 31) for p in seiferter.same_lk_filter(m))
    exp = sorted([("c_mu", "c_2", m) for m in (-3, -1)] + [("c_mu", "c_3", m) for m in (-4, -2)]
                 + [("s_-3", "c_1", m) for m in (-3, 1)] + [("s_-3", "c_3", m) for m in (-5, -1)]
                 + [("s_2", "c_1", m) for m in (-4, 2)] + [("s_2", "c_2", m) for m in (-5, 1)])
    return got, exp


def _two_bridge():
    got = {fam: [p for p in range(-50, 51)
                 if sfs.two_bridge_is_torus_link(seiferter.lens_pair_link(fam, p))]
           for fam in ("s_-3,c_2", "s_2,c_3")}
    return got, {"s_-3,c_2": [-1, 0], "s_2,c_3": [-2, -1]}


def _montesinos_covers():
    m1 = seiferter.cm_montesinos(1)
    m3 = seiferter.cm_montesinos(-3)
    got = (sfs.double_branched_cover(m1)[0].indices, sfs.double_branched_cover(m3)[0].indices,
           m1.euler, sfs.TOROIDAL_MONTESINOS.euler)
    return got, ((2, 3, 6), (2, 2, 3), Fraction(1, 3), Fraction(0))


def _montesinos_status():
    toroidal = [m for m in range(-30, 31) if m not in (-4, -3, -2)
                and seiferter.cm_link_status(m) is sfs.LinkStatus.EXCEPTIONAL_TOROIDAL]
    return toroidal, [-5]


def _network():
    g = network.twist_family_preset()
    wanted = [(TRIVIAL, -1), (FIGURE_EIGHT, -1), (PRETZEL_237, 19), (PRETZEL_333, -1)]
    missing = [f"{k}({s})" for k, s in wanted if g.find(k, s) is None]
    # consecutive trefoil vertices are joined by c_mu unless both are frontier
    line = []
    for m in range(-10, 3):
        a, b = g.find(TREFOIL, m - 1), g.find(TREFOIL, m)
        if a and b and not (a.frontier and b.frontier) and \
                network.Edge(a.key, b.key, "c_mu") not in g.edges:
            line.append(m)
    text = network.export_json(g)
    return (missing, line, network.export_json(network.load_json(text)) == text), ([], [], True)


CLAIMS: tuple[Claim, ...] = (
    Claim("base-orbifold-a", "homology path matches |n(m+2)(m+6)+m+n+6| on [-50,50]^2",
          lambda: _grid_row(0)),
    Claim("base-orbifold-b", "homology path matches |3n(m+3)-2n+3| on [-50,50]^2",
          lambda: _grid_row(1)),
    Claim("base-orbifold-c", "homology path matches |2n(m+4)-3n+2| on [-50,50]^2",
          lambda: _grid_row(2)),
    Claim("pretzel-milestone", "one twist along c^-6 gives P(-2,3,7) with slope 19", _pretzel),
    Claim("twist-knot-line", "n twists along c^-1 at slope -1 give Tw(n+1), n in [-20,20]",
          _twist_line),
    Claim("twist-knot-orbifold", "T(-3,2)(-1/n0) is over S2(2,3,|6n0-1|)", _twist_orbifold),
    Claim("kp-triple", "K_p(-1) is over S2(2,|10p+3|,5) for |p| <= 50", _kp_triples),
    Claim("ps-obstruction", "only p = 0 passes the twist-knot orbifold test, |p| <= 100",
          _ps_obstruction),
    Claim("cm-status-table", "status of c^m for m in [-7,1]", _cm_table),
    Claim("knm-hyperbolic", "hyperbolicity predicate for K_n^m on [-30,30]^2", _knm_predicate),
    Claim("knm-torus-exclusion", "no torus knot (|p| <= 100) shares three surgeries with "
          "a hyperbolic K_n^m, [-15,15]^2", _torus_exclusion),
    Claim("annular-basic", "basic annular pair candidates over m in [-30,30]", _annular_basic),
    Claim("annular-same-lk", "equal-linking single-band pairs over m in [-30,30]", _same_lk),
    Claim("two-bridge-torus", "values of p where the lens-case 2-bridge pairs are torus links", _two_bridge),
    Claim("montesinos-cover", "double branched covers for m = 1, -3; Euler numbers of T + c^1 and the toroidal reference",
          _montesinos_covers),
    Claim("montesinos-toroidal", "toroidal T + c^m outside m in {-4,-3,-2}", _montesinos_status),
    Claim("network-preset", "named vertices, c_mu line and JSON round trip", _network),
)


def select(filter_tag: Optional[str]) -> list[Claim]:
    if not filter_tag:
        return list(CLAIMS)
    chosen = [c for c in CLAIMS if c.id == filter_tag or c.id.startswith(filter_tag + "-")]
    if not chosen:
        raise KeyError(filter_tag)
    return chosen


def run_claims(filter_tag: Optional[str] = None) -> list[ClaimResult]:
    out = []
    for c in select(filter_tag):
        computed, expected = c.check()
        out.append(ClaimResult(c.id, c.statement, computed, expected))
    return out
