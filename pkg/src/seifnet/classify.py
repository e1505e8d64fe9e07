"""Decision procedures for the knots K_n^m (n twists of T(-3,2) along c^m)
and K_p (p twists along the seiferter c of (T(-3,2), -1)).

Hyperbolicity and the non-satellite certificates are rule tables transcribed
from known theorems; nothing here computes a hyperbolic structure.  Each rule
carries an id so callers can report which one fired.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from . import _kernels
from .homology import Slope
from .knots import (PRETZEL_237, PRETZEL_333, TREFOIL, KnotDesc, Named,
                    SurgeryVertex, TorusKnot, Twisted, twist_knot)
from .seiferter import c_from_double_move, cm_family, cm_name, indices_after_twist, twist
from .sfs import Kind, OrbifoldTriple, SfsClass, classify_triple
from .torus import moser_classify

DEFAULT_BOUND = 100

HYPERBOLICITY_RULES = {
    "knm": "K_n^m hyperbolic iff m not in {-5,-4,-3,-2}, n != 0, (m,n) != (-1,-1)",
    "kp": "K_p hyperbolic of genus one for p != 0",
    "cm": "T(-3,2) + c^m hyperbolic iff m not in {-5,-4,-3,-2}",
}


class InvariantViolation(AssertionError):
    """Two independent computations of the same quantity disagree."""


def closed_form_indices(m: int, n: int) -> tuple[tuple[int, int, int], ...]:
    a = abs(n * (m + 2) * (m + 6) + m + n + 6)
    b = abs(3 * n * (m + 3) - 2 * n + 3)
    c = abs(2 * n * (m + 4) - 3 * n + 2)
    return (2, 3, a), (2, abs(m + 5), b), (3, abs(m + 4), c)


def knm_slopes(m: int, n: int) -> tuple[int, int, int]:
    return tuple(m + 1 - i + n * (m + 1) ** 2 for i in (1, 2, 3))


@dataclass(frozen=True)
class KnmReport:
    m: int
    n: int
    slopes: tuple[int, int, int]
    triples: tuple[OrbifoldTriple, OrbifoldTriple, OrbifoldTriple]
    classes: tuple[SfsClass, SfsClass, SfsClass]
    hyperbolic: bool
    name: Optional[KnotDesc]

    @property
    def vertex_knot(self) -> KnotDesc:
        return twist(SurgeryVertex(TREFOIL, Slope(self.m)), cm_family(self.m), self.n).knot


def knm_hyperbolic(m: int, n: int) -> bool:
    return m not in (-5, -4, -3, -2) and n != 0 and (m, n) != (-1, -1)


def small_sfs_triple_check(m: int, n: int) -> bool:
    (_, _, a), (_, e, b), (_, f, c) = closed_form_indices(m, n)
    return all(v >= 2 for v in (a, b, c, e, f))


def knm_report(m: int, n: int) -> KnmReport:
    s = cm_family(m)
    slopes = knm_slopes(m, n)
    triples = []
    for i, closed in enumerate(closed_form_indices(m, n), start=1):
        generic = OrbifoldTriple(indices_after_twist(s, n, m + 1 - i))
        if generic != OrbifoldTriple(closed):
            raise InvariantViolation(
                f"(m, n) = ({m}, {n}), i = {i}: closed form {closed} != homology {generic}")
        triples.append(generic)
    knot = twist(SurgeryVertex(TREFOIL, Slope(m)), s, n).knot
    return KnmReport(
        m=m, n=n, slopes=slopes, triples=tuple(triples),
        classes=tuple(classify_triple(t) for t in triples),
        hyperbolic=knm_hyperbolic(m, n), name=resolve_name(knot),
    )


def knm_grid(ms, ns, use_numba: bool | None = None) -> np.ndarray:
    """Third indices (a, b, c) over a grid, checked against the homology path."""
    g = _kernels.knm_index_grid(ms, ns, use_numba)
    if not np.array_equal(g[:3], g[3:]):
        bad = np.argwhere((g[:3] != g[3:]).any(axis=0))[0]
        raise InvariantViolation(f"grid disagreement at index {tuple(bad)}")
    return g[:3]


def knm_grid_rows(ms, ns, use_numba: bool | None = None):
    """Rows ``(m, n, triples, hyperbolic)`` over a grid, in row-major order."""
    ms, ns = list(ms), list(ns)
    g = knm_grid(ms, ns, use_numba)
    rows = []
    for i, m in enumerate(ms):
        for j, n in enumerate(ns):
            a, b, c = (int(v) for v in g[:, i, j])
            rows.append((m, n, ((2, 3, a), (2, abs(m + 5), b), (3, abs(m + 4), c)),
                         knm_hyperbolic(m, n)))
    return rows


def torus_knot_exclusion(triples, d: int, bound: int = DEFAULT_BOUND,
                         use_numba: bool | None = None) -> Optional[tuple[int, int]]:
    """Search for a torus knot ``T_{p,q}`` whose surgeries at slopes d-1, d-2,
    d-3 have the given index triples (``2 <= q < |p| <= bound``).

    ``None`` certifies that no torus knot within the bound matches.
    """
    if bound < 2:
        raise ValueError("bound must be at least 2")
    targets = [tuple(t) for t in triples]
    if len(targets) != 3 or any(len(t) != 3 for t in targets):
        raise ValueError("need three index triples")
    return _kernels.torus_witness(targets, [d - 1, d - 2, d - 3], bound, use_numba)


def knm_torus_exclusion(m: int, n: int, bound: int = DEFAULT_BOUND,
                        use_numba: bool | None = None) -> Optional[tuple[int, int]]:
    d = m + 1 + n * (m + 1) ** 2
    return torus_knot_exclusion(closed_form_indices(m, n), d, bound, use_numba)


def resolve_name(v: Union[SurgeryVertex, KnotDesc]) -> Optional[KnotDesc]:
    """Identify a twisted trefoil as a known knot, when a rule applies."""
    knot = v.knot if isinstance(v, SurgeryVertex) else v
    if isinstance(knot, (TorusKnot, Named)):
        return knot
    if not isinstance(knot, Twisted) or knot.base != TREFOIL:
        return None
    if knot.seiferter == cm_name(-1):
        return twist_knot(knot.n + 1)
    if knot.seiferter == cm_name(-6) and knot.n == 1:
        return PRETZEL_237
    if knot.seiferter == "c" and knot.n == -1:
        return PRETZEL_333
    return None


def three_successive_check(report: KnmReport) -> bool:
    return all(c.kind is Kind.SMALL_SFS for c in report.classes)


def nonzero_index_check(report: KnmReport) -> bool:
    return all(0 not in t.indices for t in report.triples)


def non_satellite_certificate(report: KnmReport) -> bool:
    """Three successive Seifert fibered surgeries rule out satellites; for
    m = -6 the surgeries are Seifert fibered but one is a lens space, so only
    nonzero indices are required there."""
    if report.m == -6:
        return report.n != 0 and nonzero_index_check(report)
    return three_successive_check(report)


@dataclass(frozen=True)
class KpReport:
    p: int
    vertex: SurgeryVertex
    name: Optional[KnotDesc]
    triple: OrbifoldTriple
    hyperbolic: bool
    genus_one: bool


def kp_closed_form(p: int) -> tuple[int, int, int]:
    return 2, abs(10 * p + 3), 5


def kp_report(p: int) -> KpReport:
    c = c_from_double_move()
    vertex = twist(SurgeryVertex(TREFOIL, Slope(-1)), c, p)
    triple = OrbifoldTriple(indices_after_twist(c, p, -1))
    if triple != OrbifoldTriple(kp_closed_form(p)):
        raise InvariantViolation(f"K_{p}(-1): {triple} != {kp_closed_form(p)}")
    return KpReport(p, vertex, resolve_name(vertex), triple,
                    hyperbolic=p != 0, genus_one=True)


def twist_knot_minus_one_triple(n0: int) -> OrbifoldTriple:
    """Orbifold of (-1)-surgery on Tw(n0), via T(-3,2)(-1/n0)."""
    if n0 == 0:
        # T(-3,2)(1/0) is S^3; the index formula degenerates to (2, 3, 1)
        return OrbifoldTriple.of(2, 3, 1)
    return moser_classify(TREFOIL, Slope(-1, n0))[0]


def ps_construction_excluded(p: int) -> bool:
    """True when no twist knot Tw(n0) has (-1)-surgery over the same orbifold
    as K_p(-1); such K_p cannot come from the primitive/Seifert construction."""
    target = kp_report(p).triple
    # |6 n0 - 1| must be one of the target indices, so |n0| is bounded
    limit = max(target.indices) // 6 + 2
    return not any(twist_knot_minus_one_triple(n0) == target
                   for n0 in range(-limit, limit + 1))
