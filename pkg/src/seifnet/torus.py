"""Surgery on torus knots and their basic seiferters."""
from __future__ import annotations

from .homology import CurveClass, Slope
from .knots import (BasicKind, ExceptionalFiber, Meridian, Role, SeiferterDesc,
                    Status, StatusKind, TorusKnot)
from .sfs import OrbifoldTriple, SfsClass, classify_triple


def moser_indices(k: TorusKnot, slope: Slope) -> tuple[int, int, int]:
    """Ordered fiber indices ``(|p|, q, |pqs - r|)`` of ``T_{p,q}(r/s)``: the
    fibers s_p, s_q and the core of the filling (the meridian c_mu)."""
    if slope.den < 1:
        raise ValueError("surgery slope must be finite")
    return abs(k.p), k.q, abs(k.p * k.q * slope.den - slope.num)


def moser_classify(k: TorusKnot, slope: Slope | int) -> tuple[OrbifoldTriple, SfsClass]:
    if not isinstance(slope, Slope):
        slope = Slope(slope)
    if k.is_trivial:
        raise ValueError("Moser classification needs a nontrivial torus knot")
    triple = OrbifoldTriple(moser_indices(k, slope))
    return triple, classify_triple(triple)


def knot_fiber_class(k: TorusKnot) -> CurveClass:
    """Regular fiber on the boundary of a neighborhood of ``T_{p,q}``."""
    return CurveClass(1, k.p * k.q)


def seiferter_name(k: TorusKnot, which: BasicKind) -> str:
    if which is BasicKind.S_P:
        return f"s_{k.p}"
    if which is BasicKind.S_Q:
        return f"s_{k.q}"
    return "c_mu"


def basic_seiferter_data(k: TorusKnot, which: BasicKind) -> SeiferterDesc:
    """Descriptor of s_p, s_q or c_mu; each is a seiferter at every integral
    slope."""
    if which is BasicKind.S_P:
        lk = k.q
        identity = ExceptionalFiber(abs(k.p), CurveClass(k.p, k.q))
    elif which is BasicKind.S_Q:
        lk = abs(k.p)
        identity = ExceptionalFiber(k.q, CurveClass(k.q, k.p))
    else:
        lk = 1
        identity = Meridian()
    return SeiferterDesc(
        name=seiferter_name(k, which),
        lk_with_knot=lk,
        roles=(Role(k, None, identity),),
        status=Status(StatusKind.BASIC, which),
        preserves_knot=which is BasicKind.C_MU,
    )


def basic_fiber_index(k: TorusKnot, m: int, which: BasicKind) -> int:
    return moser_indices(k, Slope(m))[("s_p", "s_q", "c_mu").index(which.value)]


def basic_annular_pairs(k: TorusKnot) -> list[tuple[tuple[BasicKind, BasicKind], tuple[int, int, int]]]:
    """The three basic annular pairs with their linking triples
    ``(|lk(K, a)|, |lk(K, b)|, |lk(a, b)|)``."""
    lk = {BasicKind.S_P: k.q, BasicKind.S_Q: abs(k.p), BasicKind.C_MU: 1}
    mutual = {frozenset((BasicKind.S_P, BasicKind.S_Q)): 1}
    pairs = [(BasicKind.S_P, BasicKind.S_Q), (BasicKind.S_P, BasicKind.C_MU),
             (BasicKind.S_Q, BasicKind.C_MU)]
    return [((a, b), (lk[a], lk[b], mutual.get(frozenset((a, b)), 0)))
            for a, b in pairs]
