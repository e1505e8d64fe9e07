"""Value types shared by the surgery, seiferter and network layers."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Optional, Union

from .homology import CurveClass, Slope


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if not (abs(self.p) > self.q >= 1) or gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"T({self.p},{self.q}) needs |p| > q >= 1, gcd = 1")

    @property
    def is_trivial(self) -> bool:
        return self.q == 1

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"


TREFOIL = TorusKnot(-3, 2)


def torus_knot(p: int, q: int, allow_trivial: bool = False) -> TorusKnot:
    k = TorusKnot(p, q)
    if k.is_trivial and not allow_trivial:
        raise ValueError(f"{k} is a trivial knot")
    return k


@dataclass(frozen=True)
class Named:
    """A knot identified by name; ``params`` carries e.g. the twist-knot index."""

    kind: str   # trivial | twist | pretzel | figure_eight
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "trivial":
            return "Trivial"
        if self.kind == "figure_eight":
            return "FigureEight"
        if self.kind == "twist":
            return f"Tw({self.params[0]})"
        if self.kind == "pretzel":
            return "P(" + ",".join(map(str, self.params)) + ")"
        return f"{self.kind}{self.params}"


TRIVIAL = Named("trivial")
FIGURE_EIGHT = Named("figure_eight")
PRETZEL_237 = Named("pretzel", (-2, 3, 7))
PRETZEL_333 = Named("pretzel", (3, -3, -3))


def twist_knot(n: int) -> Union[TorusKnot, Named]:
    """Tw(n) under the convention Tw(1) = T(-3,2), Tw(0) trivial,
    Tw(-1) the figure-eight knot."""
    if n == 1:
        return TREFOIL
    if n == 0:
        return TRIVIAL
    if n == -1:
        return FIGURE_EIGHT
    return Named("twist", (n,))


@dataclass(frozen=True)
class Twisted:
    base: "KnotDesc"
    seiferter: str
    n: int

    def __str__(self) -> str:
        return f"{self.base}[{self.seiferter}:{self.n:+d}]"


KnotDesc = Union[TorusKnot, Twisted, Named]


def twisted(base: KnotDesc, seiferter: str, n: int) -> KnotDesc:
    """Canonical form: a zero twist is the base, and repeated twists along the
    same seiferter add up."""
    if isinstance(base, Twisted) and base.seiferter == seiferter:
        base, n = base.base, base.n + n
    if n == 0:
        return base
    return Twisted(base, seiferter, n)


@dataclass(frozen=True)
class SurgeryVertex:
    knot: KnotDesc
    slope: Slope

    def __post_init__(self):
        if not isinstance(self.slope, Slope):
            object.__setattr__(self, "slope", Slope(int(self.slope)))

    def __str__(self) -> str:
        return f"{self.knot}({self.slope})"


class BasicKind(enum.Enum):
    S_P = "s_p"
    S_Q = "s_q"
    C_MU = "c_mu"


@dataclass(frozen=True)
class Meridian:
    """Seiferter isotopic to the core of the filled solid torus; ``framing_shift``
    is the framing its 0-framing acquires (0 for the meridian itself)."""

    framing_shift: int = 0


@dataclass(frozen=True)
class ExceptionalFiber:
    index: int
    fiber_class: CurveClass
    framing_shift: int = 0

    def __post_init__(self):
        if self.index < 1:
            raise ValueError("exceptional fiber index must be positive")
        if not self.fiber_class.is_curve():
            raise ValueError(f"{self.fiber_class} is not a curve class")


FiberIdentity = Union[Meridian, ExceptionalFiber]


class StatusKind(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    BASIC = "basic"
    CABLE = "cable"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Status:
    kind: StatusKind
    basic: Optional[BasicKind] = None
    cable_slope: Optional[Slope] = None

    def __str__(self) -> str:
        if self.kind is StatusKind.BASIC:
            return f"basic({self.basic.value})"
        if self.kind is StatusKind.CABLE:
            return f"cable({self.basic.value},{self.cable_slope})"
        return self.kind.value


HYPERBOLIC = Status(StatusKind.HYPERBOLIC)
UNKNOWN = Status(StatusKind.UNKNOWN)


@dataclass(frozen=True)
class Role:
    """Where a seiferter is a fiber: the ambient Seifert surgery and the fiber
    it is isotopic to there.  ``slope=None`` means every integral slope."""

    knot: TorusKnot
    slope: Optional[int]
    identity: FiberIdentity

    def valid_at(self, knot: KnotDesc, slope: Slope) -> bool:
        return (knot == self.knot and slope.is_integral
                and (self.slope is None or self.slope == slope.num))


@dataclass(frozen=True)
class SeiferterDesc:
    name: str
    lk_with_knot: int
    roles: tuple[Role, ...]
    status: Status = UNKNOWN
    # a knot-preserving seiferter (the meridian) only moves the slope
    preserves_knot: bool = False

    @property
    def fiber_identity(self) -> FiberIdentity:
        return self.roles[0].identity

    def role_at(self, knot: KnotDesc, slope: Slope) -> Optional[Role]:
        for role in self.roles:
            if role.valid_at(knot, slope):
                return role
        return None

    def __str__(self) -> str:
        return self.name
