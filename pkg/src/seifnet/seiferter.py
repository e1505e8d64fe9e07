"""Seiferters for surgeries on the trefoil T(-3,2): the c^m family obtained by
m-moves from the basic seiferters, the seiferter c obtained by two (-1)-moves
from s_-3, twisting, and the annular-pair filters.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Optional

from .homology import (CurveClass, Slope, framing_after_m_move, intersection,
                       meridian_slope_image, slope_image_fiber_case)
from .knots import (HYPERBOLIC, TREFOIL, BasicKind, ExceptionalFiber, Meridian,
                    Role, SeiferterDesc, Status, StatusKind, SurgeryVertex,
                    TorusKnot, Twisted, twisted)
from .sfs import (LinkStatus, Montesinos, OrbifoldTriple, TwoBridge,
                  montesinos_status, two_bridge_is_torus_link)
from .torus import (basic_seiferter_data, knot_fiber_class, moser_classify,
                    moser_indices)


class ExcludedPairError(KeyError):
    """Lookup of a pair that does not occur in the linking table."""


# -- twisting -----------------------------------------------------------------

def twist(v: SurgeryVertex, s: SeiferterDesc, n: int) -> SurgeryVertex:
    """``n`` twists along ``s``: the slope moves by ``n * lk^2``."""
    if not v.slope.is_integral:
        raise ValueError(f"twisting needs an integral slope, got {v.slope}")
    if n == 0:
        return v
    slope = Slope(v.slope.num + n * s.lk_with_knot ** 2)
    knot = v.knot if s.preserves_knot else twisted(v.knot, s.name, n)
    return SurgeryVertex(knot, slope)


def origin(v: SurgeryVertex, s: SeiferterDesc) -> SurgeryVertex:
    """Undo all twists along ``s`` recorded in ``v``'s knot descriptor."""
    if isinstance(v.knot, Twisted) and v.knot.seiferter == s.name:
        return SurgeryVertex(v.knot.base,
                             Slope(v.slope.num - v.knot.n * s.lk_with_knot ** 2))
    return v


def applicable_role(v: SurgeryVertex, s: SeiferterDesc) -> Optional[Role]:
    """The role of ``s`` that makes it a seiferter for ``v``, if any."""
    if not v.slope.is_integral:
        return None
    o = origin(v, s)
    return s.role_at(o.knot, o.slope)


def m_move_chain_shift(chain: list[tuple[int, int]], start: int = 0) -> int:
    """Fold :func:`framing_after_m_move` over ``(lk, m)`` steps."""
    return reduce(lambda n, step: framing_after_m_move(n, *step), chain, start)


# -- the c^m family -------------------------------------------------------------

S_M3 = basic_seiferter_data(TREFOIL, BasicKind.S_P)
S_2 = basic_seiferter_data(TREFOIL, BasicKind.S_Q)
C_MU = basic_seiferter_data(TREFOIL, BasicKind.C_MU)

_LK_T = {"c_mu": 1, "s_-3": 2, "s_2": 3}
_BASIC_BY_NAME = {"s_-3": BasicKind.S_P, "s_2": BasicKind.S_Q, "c_mu": BasicKind.C_MU}


def cm_name(m: int) -> str:
    return f"c^{m}"


def seiferter_status(m: int) -> Status:
    """Status of c^m as a seiferter for T(-3,2)."""
    if m == -5:
        return Status(StatusKind.CABLE, BasicKind.S_P, Slope(-1, 2))
    basic = {-4: BasicKind.S_Q, -3: BasicKind.S_P, -2: BasicKind.C_MU}.get(m)
    if basic is not None:
        return Status(StatusKind.BASIC, basic)
    return HYPERBOLIC


def cm_montesinos(m: int) -> Montesinos:
    """``T(-3,2) + c^m`` as the Montesinos link M(-1/2, 2/3, 1/(2m+4))."""
    if m == -2:
        raise ValueError("c^-2 is a meridian; the link is not Montesinos with three tangles")
    return Montesinos.of(Fraction(-1, 2), Fraction(2, 3), Fraction(1, 2 * m + 4))


def cm_link_status(m: int) -> LinkStatus:
    """Geometric type of ``T(-3,2) + c^m`` decided through its Montesinos form."""
    if m == -2:
        return LinkStatus.EXCEPTIONAL_TOROIDAL
    if m in (-3, -4):
        return LinkStatus.SEIFERT_LINK
    return montesinos_status(cm_montesinos(m))


def cm_family(m: int) -> SeiferterDesc:
    """c^m, a seiferter for (T, m), (T, m-1) and (T, m-2): there it is
    c_1^m (meridian-like), c_2^{m-1} (moved s_-3) and c_3^{m-2} (moved s_2)."""
    roles = (
        Role(TREFOIL, m, Meridian(framing_after_m_move(0, 1, m))),
        Role(TREFOIL, m - 1, ExceptionalFiber(
            3, CurveClass(-3, 2), framing_after_m_move(0, 2, m - 1))),
        Role(TREFOIL, m - 2, ExceptionalFiber(
            2, CurveClass(2, -3), framing_after_m_move(0, 3, m - 2))),
    )
    return SeiferterDesc(cm_name(m), abs(m + 1), roles, seiferter_status(m))


def c_from_double_move() -> SeiferterDesc:
    """The seiferter c for (T(-3,2), -1) obtained from s_-3 by two (-1)-moves
    (lk 2 then lk 1); it stays isotopic to s_-3 with framing shift 4."""
    shift = m_move_chain_shift([(2, -1), (1, -1)])
    role = Role(TREFOIL, -1, ExceptionalFiber(3, CurveClass(-3, 2), shift))
    return SeiferterDesc("c", 0, (role,), HYPERBOLIC)


def has_hyperbolic_seiferter(m: int) -> Optional[bool]:
    """Whether (T(-3,2), m) has a hyperbolic seiferter; ``None`` if unknown."""
    if any(seiferter_status(k).kind is StatusKind.HYPERBOLIC for k in (m, m + 1, m + 2)):
        return True
    if m == -5:
        # settled elsewhere by an explicit hyperbolic seiferter for this lens surgery
        return True
    return None


# -- indices after twisting -----------------------------------------------------

def _role(s: SeiferterDesc, ambient_slope: Optional[int]) -> Role:
    if ambient_slope is None:
        return s.roles[0]
    for role in s.roles:
        if role.slope is None or role.slope == ambient_slope:
            return role
    raise ValueError(f"{s.name} is not a seiferter at slope {ambient_slope}")


def index_after_twist(s: SeiferterDesc, n: int,
                      ambient_slope: Optional[int] = None) -> int:
    """Index of the fiber ``s`` after ``-1/n`` surgery on it."""
    role = _role(s, ambient_slope)
    ident = role.identity
    if isinstance(ident, ExceptionalFiber):
        image = slope_image_fiber_case(ident.framing_shift, n)
        return abs(intersection(image, ident.fiber_class))
    m = role.slope if role.slope is not None else ambient_slope
    if m is None:
        raise ValueError(f"{s.name} needs an ambient slope")
    image = meridian_slope_image(m, n, ident.framing_shift)
    return abs(intersection(image, knot_fiber_class(role.knot)))


def _position(k: TorusKnot, ident) -> int:
    if isinstance(ident, Meridian):
        return 2
    if ident.fiber_class == CurveClass(k.p, k.q):
        return 0
    if ident.fiber_class == CurveClass(k.q, k.p):
        return 1
    raise ValueError(f"{ident} is not isotopic to a basic fiber of {k}")


def indices_after_twist(s: SeiferterDesc, n: int,
                        ambient_slope: Optional[int] = None) -> tuple[int, int, int]:
    """Ordered indices of the twisted surgery: the torus-knot indices at the
    ambient slope with the seiferter's fiber replaced."""
    role = _role(s, ambient_slope)
    m = role.slope if role.slope is not None else ambient_slope
    idx = list(moser_indices(role.knot, Slope(m)))
    idx[_position(role.knot, role.identity)] = index_after_twist(s, n, m)
    return tuple(idx)


# -- linking numbers and annular pairs ------------------------------------------

# entries of the linking table, keyed by unordered pairs; c_i is c_i^m
_TABLE_EXCLUDED = {frozenset(p) for p in
                   (("c_3", "s_2"), ("c_2", "s_-3"), ("c_1", "c_mu"))}


def pair_lk_table(m: int) -> dict[frozenset, int]:
    t = {
        ("T", "c_1"): m + 1, ("T", "c_2"): m + 2, ("T", "c_3"): m + 3,
        ("c_3", "c_mu"): 1, ("c_3", "s_-3"): 1, ("c_3", "c_1"): m + 4,
        ("c_3", "c_2"): m + 4,
        ("c_2", "c_mu"): 1, ("c_2", "s_2"): 2, ("c_2", "c_1"): m + 3,
        ("c_1", "s_-3"): 2, ("c_1", "s_2"): 3,
        ("T", "c_mu"): 1, ("T", "s_-3"): 2, ("T", "s_2"): 3,
    }
    return {frozenset(k): v for k, v in t.items()}


def pair_lk(m: int, a: str, b: str) -> int:
    key = frozenset((a, b))
    if key in _TABLE_EXCLUDED:
        raise ExcludedPairError(f"{{{a}, {b}}} is not a pair in the table")
    table = pair_lk_table(m)
    if key not in table:
        raise KeyError(f"no linking number recorded for {{{a}, {b}}}")
    return table[key]


# single-band families first, then the three c_i/c_j families
PAIR_FAMILIES: tuple[tuple[str, str], ...] = (
    ("c_mu", "c_2"), ("c_mu", "c_3"), ("s_-3", "c_1"), ("s_-3", "c_3"),
    ("s_2", "c_1"), ("s_2", "c_2"), ("c_1", "c_2"), ("c_1", "c_3"), ("c_2", "c_3"),
)


@dataclass(frozen=True)
class PairRef:
    a: str
    b: str
    m: int
    # set when the pair appears in a filter but is discarded
    rejected: Optional[str] = None

    def label(self) -> str:
        def one(x):
            return f"{x}^{self.m}" if x.startswith("c_") and x != "c_mu" else x
        return "{" + f"{one(self.a)}, {one(self.b)}" + "}"

    def __str__(self) -> str:
        return self.label() + (f" (rejected: {self.rejected})" if self.rejected else "")


def lk_with_knot(m: int, name: str) -> int:
    return pair_lk(m, "T", name)


def member_status(m: int, name: str) -> Status:
    """Status of a member seiferter for (T, m); c_i^m is c^{m+i-1}."""
    if name in _BASIC_BY_NAME:
        return Status(StatusKind.BASIC, _BASIC_BY_NAME[name])
    return seiferter_status(m + int(name[2:]) - 1)


def same_lk_filter(m: int) -> list[PairRef]:
    """Single-band pairs whose members link T equally (up to sign)."""
    return [PairRef(a, b, m) for a, b in PAIR_FAMILIES[:6]
            if abs(lk_with_knot(m, a)) == abs(lk_with_knot(m, b))]


def irrelevant_pairs(m: int) -> list[PairRef]:
    """Equal-linking pairs that survive only when T(m) is a lens space; these
    cobound annuli missing T and are not counted as annular pairs."""
    if not moser_classify(TREFOIL, m)[1].is_lens:
        return []
    return [PairRef(p.a, p.b, m, rejected="irrelevant") for p in same_lk_filter(m)]


def annular_pairs(m: int) -> list[PairRef]:
    """The nine families, minus the irrelevant ones, at (T, m)."""
    bad = {(p.a, p.b) for p in irrelevant_pairs(m)}
    return [PairRef(a, b, m) for a, b in PAIR_FAMILIES if (a, b) not in bad]


BASIC_TRIPLES = {
    (1, 2, 0): frozenset((BasicKind.C_MU, BasicKind.S_P)),
    (1, 3, 0): frozenset((BasicKind.C_MU, BasicKind.S_Q)),
    (2, 3, 1): frozenset((BasicKind.S_P, BasicKind.S_Q)),
}


def lk_triple(m: int, a: str, b: str) -> tuple[int, int, int]:
    x, y = sorted((abs(lk_with_knot(m, a)), abs(lk_with_knot(m, b))))
    return x, y, abs(pair_lk(m, a, b))


def basic_annular_candidates(m: int) -> list[PairRef]:
    """Pairs among the nine families whose linking triple is that of a basic
    annular pair; candidates with a non-basic member are flagged rejected."""
    out = []
    for a, b in PAIR_FAMILIES:
        kinds = BASIC_TRIPLES.get(lk_triple(m, a, b))
        if kinds is None:
            continue
        sa, sb = member_status(m, a), member_status(m, b)
        reason = None
        if StatusKind.HYPERBOLIC in (sa.kind, sb.kind):
            reason = "hyperbolic member"
        elif sa.kind is not StatusKind.BASIC or sb.kind is not StatusKind.BASIC:
            reason = "non-basic member"
        elif frozenset((sa.basic, sb.basic)) != kinds:
            reason = "basic kinds do not match the linking triple"
        out.append(PairRef(a, b, m, reason))
    return out


# -- the lens cases m = -5, -7 ---------------------------------------------------

def lens_pair_link(family: str, p: int) -> TwoBridge:
    """2-bridge link formed by the pair, for cable parameter ``p``."""
    if family == "s_-3,c_2":
        return TwoBridge.from_fraction(6 * p + 4, 2 * p + 1)
    if family == "s_2,c_3":
        return TwoBridge.from_fraction(6 * p + 10, 2 * p + 3)
    raise KeyError(family)


@dataclass(frozen=True)
class LensPairVerdict:
    pair: PairRef
    p: Optional[int]
    annular: bool
    basic: bool


def lens_case_pairs(m: int, p_range: range = range(-50, 51)) -> list[LensPairVerdict]:
    """Pairs of seiferters that exist because T(m) is a lens space (m = -5, -7).

    {c_mu, c_1^m} forms the (2,-4) torus link at m = -5 and the Whitehead
    link at m = -7.  The other two families are 2-bridge links indexed by
    ``p``; annular iff a torus link, and basic iff moreover both members are
    basic and the link is a Hopf link (as {s_-3, s_2} is).
    """
    if m not in (-5, -7):
        return []
    out = [LensPairVerdict(PairRef("c_mu", "c_1", m), None, m == -5, False)]
    for family, (a, b) in (("s_-3,c_2", ("s_-3", "c_2")), ("s_2,c_3", ("s_2", "c_3"))):
        both_basic = all(member_status(m, x).kind is StatusKind.BASIC for x in (a, b))
        for p in p_range:
            link = lens_pair_link(family, p)
            annular = two_bridge_is_torus_link(link)
            basic = annular and both_basic and link == TwoBridge(2, 1)
            out.append(LensPairVerdict(PairRef(a, b, m), p, annular, basic))
    return out


def basic_annular_pairs_found(m: int) -> list[str]:
    """All pairs at (T, m) that are basic annular pairs, as labels."""
    labels = [p.label() for p in basic_annular_candidates(m) if p.rejected is None]
    labels += [f"{v.pair.label()} (p={v.p})" for v in lens_case_pairs(m) if v.basic]
    return labels
