"""Seifert fibered spaces over S^2 with at most three marked points, lens
spaces, and the rational-tangle arithmetic of 2-bridge and Montesinos links.

Index conventions for base orbifolds: ``0`` marks a degenerate fiber, ``1``
a removable (regular) one.
"""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, floor
from typing import Iterable, Optional


class MalformedTripleError(ValueError):
    pass


class IncomparableLensError(ValueError):
    """Raised when a lens descriptor only knows its shape, not ``q``."""


class NotThreeTanglesError(ValueError):
    pass


@dataclass(frozen=True)
class OrbifoldTriple:
    """Unordered multiset of exceptional-fiber indices (stored sorted)."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.indices))
        if any(i < 0 for i in idx):
            raise MalformedTripleError(f"negative fiber index in {idx}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def of(cls, *indices: int) -> OrbifoldTriple:
        return cls(tuple(indices))

    def normalized(self) -> tuple[int, ...]:
        return tuple(i for i in self.indices if i != 1)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def __str__(self) -> str:
        return "S2(" + ",".join(map(str, self.indices)) + ")"


class Kind(enum.Enum):
    SPHERE = "sphere"
    S1XS2 = "s1xs2"
    LENS = "lens"
    CONN_SUM_LENS = "connsum_lens"
    SMALL_SFS = "small_sfs"
    SFS_OVER_DISK = "sfs_over_disk"


@dataclass(frozen=True)
class SfsClass:
    kind: Kind
    p: Optional[int] = None
    q: Optional[int] = None
    triple: Optional[OrbifoldTriple] = None
    # "lens-by-shape" or "indeterminate" when the triple alone underdetermines
    flag: Optional[str] = None

    @classmethod
    def lens(cls, p: Optional[int], q: Optional[int] = None,
             flag: Optional[str] = None) -> SfsClass:
        if p is not None:
            p = abs(p)
            if p == 0:
                return cls(Kind.S1XS2, flag=flag)
            if p == 1:
                return cls(Kind.SPHERE, flag=flag)
            if q is not None:
                q %= p
        return cls(Kind.LENS, p=p, q=q, flag=flag)

    @property
    def is_lens(self) -> bool:
        return self.kind in (Kind.LENS, Kind.SPHERE, Kind.S1XS2)

    def __str__(self) -> str:
        if self.kind is Kind.LENS:
            if self.p is None:
                s = "lens space"
            else:
                s = f"L({self.p},{self.q if self.q is not None else '?'})"
        elif self.kind is Kind.SMALL_SFS:
            s = f"SFS over {self.triple}"
        elif self.kind is Kind.CONN_SUM_LENS:
            s = "L#L" if self.triple is None else f"L#L over {self.triple}"
        else:
            s = self.kind.value
        return s + (f" [{self.flag}]" if self.flag else "")


def classify_triple(t: OrbifoldTriple | Iterable[int]) -> SfsClass:
    if not isinstance(t, OrbifoldTriple):
        t = OrbifoldTriple(tuple(t))
    if len(t) > 3:
        raise MalformedTripleError(f"{t} has more than three marked points")
    idx = list(t.indices)
    if 0 in idx:
        rest = list(idx)
        rest.remove(0)
        if len(rest) == 2 and all(i >= 2 for i in rest):
            return SfsClass(Kind.CONN_SUM_LENS, triple=t)
        if 0 in rest:
            return SfsClass.lens(None, flag="indeterminate")
        surviving = max(rest, default=1)
        return SfsClass.lens(surviving)
    core = t.normalized()
    if len(core) == 3:
        return SfsClass(Kind.SMALL_SFS, triple=OrbifoldTriple(core))
    if len(core) == 2:
        return SfsClass.lens(None, flag="lens-by-shape")
    return SfsClass(Kind.SPHERE, flag="indeterminate")


def lens_equivalent(a: SfsClass, b: SfsClass, oriented: bool = True) -> bool:
    """Lens-space homeomorphism test: ``q' = q^{+-1} (mod p)``; without
    orientation also ``q' = -q^{+-1}``."""
    for lens in (a, b):
        if lens.kind is Kind.LENS and (lens.p is None or lens.q is None):
            raise IncomparableLensError(f"{lens} has no known q")
    if a.kind is not Kind.LENS or b.kind is not Kind.LENS:
        return a.kind == b.kind and a.is_lens
    if a.p != b.p:
        return False
    p, q, q2 = a.p, a.q % a.p, b.q % b.p
    if gcd(q, p) != 1 or gcd(q2, p) != 1:
        raise ValueError("lens parameters must be coprime")
    allowed = {q, pow(q, -1, p)}
    if not oriented:
        allowed |= {(-x) % p for x in allowed}
    return q2 in allowed


def euler_number(fractions: Iterable[Fraction]) -> Fraction:
    return sum((Fraction(f) for f in fractions), Fraction(0))


def continued_fraction(f: Fraction) -> list[int]:
    f = Fraction(f)
    terms = []
    while True:
        a = floor(f)
        terms.append(a)
        f -= a
        if f == 0:
            return terms
        f = 1 / f


def from_continued_fraction(terms: list[int]) -> Fraction:
    value = Fraction(terms[-1])
    for a in reversed(terms[:-1]):
        value = a + 1 / value
    return value


@dataclass(frozen=True)
class TwoBridge:
    """2-bridge link b(p, q), stored with ``p > 0`` and ``0 <= q < p``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0:
            raise ValueError("b(0, q) is not a 2-bridge link")
        if p < 0:
            p, q = -p, -q
        if gcd(p, q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q % p)

    @classmethod
    def from_fraction(cls, num: int, den: int) -> TwoBridge:
        g = gcd(num, den) or 1
        return cls(num // g, den // g)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.p, self.q) if self.q else Fraction(self.p)


def two_bridge_is_torus_link(t: TwoBridge) -> bool:
    return t.p == 1 or t.q % t.p in (1, t.p - 1)


def _split_tangle(r: Fraction) -> tuple[Fraction, int]:
    """Fractional part in (-1/2, 1/2] and the integer part removed from it."""
    k = floor(r + Fraction(1, 2))
    frac = r - k
    if frac == Fraction(-1, 2):
        frac, k = Fraction(1, 2), k - 1
    return frac, k


@dataclass(frozen=True)
class Montesinos:
    tangles: tuple[Fraction, ...]
    normalized: tuple[Fraction, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        ts = tuple(Fraction(t) for t in self.tangles)
        object.__setattr__(self, "tangles", ts)
        object.__setattr__(self, "normalized", tuple(_split_tangle(t)[0] for t in ts))

    @classmethod
    def of(cls, *tangles) -> Montesinos:
        return cls(tuple(Fraction(t) for t in tangles))

    def mirror(self) -> Montesinos:
        return Montesinos(tuple(-t for t in self.tangles))

    @property
    def euler(self) -> Fraction:
        return euler_number(self.tangles)

    def denominators(self) -> Counter:
        return Counter(t.denominator for t in self.normalized)

    def __str__(self) -> str:
        return "M(" + ", ".join(str(t) for t in self.tangles) + ")"


def montesinos_equivalent(m1: Montesinos, m2: Montesinos,
                          allow_mirror: bool = False) -> bool:
    """Compare via the double branched cover: tangle denominators and Euler
    number (up to global sign when mirrors are allowed)."""
    if m1.denominators() != m2.denominators():
        return False
    if m1.euler == m2.euler:
        return True
    return allow_mirror and m1.euler == -m2.euler


class LinkStatus(enum.Enum):
    SEIFERT_LINK = "seifert_link"
    EXCEPTIONAL_TOROIDAL = "exceptional_toroidal"
    HYPERBOLIC = "hyperbolic"


# the single non-hyperbolic, non-Seifert Montesinos link with three tangles
TOROIDAL_MONTESINOS = Montesinos.of(Fraction(1, 2), Fraction(-1, 3), Fraction(-1, 6))


def montesinos_status(m: Montesinos) -> LinkStatus:
    if len(m.tangles) != 3:
        raise NotThreeTanglesError(f"{m} does not have three tangles")
    if any(t.denominator < 2 for t in m.normalized):
        raise NotThreeTanglesError(f"{m} has fewer than three rational tangles")
    if montesinos_equivalent(m, TOROIDAL_MONTESINOS, allow_mirror=True):
        return LinkStatus.EXCEPTIONAL_TOROIDAL
    return LinkStatus.HYPERBOLIC


def double_branched_cover(m: Montesinos) -> tuple[OrbifoldTriple, Fraction]:
    if len(m.tangles) != 3:
        raise NotThreeTanglesError(f"{m} does not have three tangles")
    return OrbifoldTriple(tuple(t.denominator for t in m.tangles)), m.euler
