"""Integer homology of torus boundaries.

Classes are written ``a*[lambda] + b*[mu]`` in a fixed meridian/longitude
basis of one boundary torus.  The algebraic intersection pairing is
normalised so that ``[mu] . [lambda] = 1`` on every torus.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class CurveClass:
    lambda_coeff: int
    mu_coeff: int

    def __add__(self, other: CurveClass) -> CurveClass:
        return CurveClass(self.lambda_coeff + other.lambda_coeff,
                          self.mu_coeff + other.mu_coeff)

    def __sub__(self, other: CurveClass) -> CurveClass:
        return self + (-other)

    def __neg__(self) -> CurveClass:
        return CurveClass(-self.lambda_coeff, -self.mu_coeff)

    def __mul__(self, k: int) -> CurveClass:
        return CurveClass(k * self.lambda_coeff, k * self.mu_coeff)

    __rmul__ = __mul__

    def is_curve(self) -> bool:
        """True for the zero class or a primitive class (a simple closed curve)."""
        return gcd(self.lambda_coeff, self.mu_coeff) in (0, 1)

    def __str__(self) -> str:
        return f"{self.lambda_coeff}[l]{self.mu_coeff:+d}[m]"


LONGITUDE = CurveClass(1, 0)
MERIDIAN = CurveClass(0, 1)


def _curve(lam: int, mu: int) -> CurveClass:
    c = CurveClass(lam, mu)
    if not c.is_curve():
        raise ArithmeticError(f"{c} is not a simple closed curve class")
    return c


def intersection(x: CurveClass, y: CurveClass) -> int:
    """Algebraic intersection number ``x . y``; antisymmetric and bilinear."""
    return x.mu_coeff * y.lambda_coeff - x.lambda_coeff * y.mu_coeff


def framing_after_m_move(n: int, lk: int, m: int) -> int:
    """Framing carried by the moved curve when an ``n``-framed curve with
    linking number ``lk`` undergoes an ``m``-move."""
    return n + 2 * lk + m


def lk_after_m_move(lk: int, m: int) -> tuple[int, int]:
    """The two possible linking numbers after one ``m``-move (sorted)."""
    return tuple(sorted((lk + m, lk - m)))


def band_sum_boundary_slope(p: int, m: int, lk: int) -> int:
    return m + p + 2 * lk


def slope_image_fiber_case(k: int, n: int) -> CurveClass:
    """Image of the ``-1/n`` slope of a moved seiferter on the boundary of the
    exceptional fiber it is isotopic to.

    ``k`` is the framing shift: the isotopy sends the seiferter's meridian to
    ``[mu]`` and its longitude to ``[lambda] - k[mu]``.
    """
    return _curve(-n, n * k + 1)


def meridian_slope_image(m: int, n: int, shift: int) -> CurveClass:
    """Image of the ``-1/n`` slope of a meridional seiferter on the boundary
    of the knot, when the seiferter is isotopic to the core of the ``m``-filled
    solid torus and carries framing shift ``shift``.

    The meridian goes to ``[lambda'] + m[mu']`` and the longitude to
    ``-[mu'] - shift([lambda'] + m[mu'])``.
    """
    meridian = CurveClass(1, m)
    longitude = CurveClass(0, -1) - shift * meridian
    image = meridian - n * longitude
    return _curve(image.lambda_coeff, image.mu_coeff)


def slope_image_meridian_case(m: int, n: int) -> CurveClass:
    """Same as :func:`meridian_slope_image` for the seiferter obtained from the
    meridian by one ``m``-move (framing shift ``m + 2``)."""
    return meridian_slope_image(m, n, framing_after_m_move(0, 1, m))


@dataclass(frozen=True, order=False)
class Slope:
    """Reduced slope ``num/den`` with ``den >= 0``; ``1/0`` is the infinity slope."""

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if isinstance(num, bool) or isinstance(den, bool) \
                or not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("slope entries must be integers")
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(num, den)
        if den < 0 or (den == 0 and num < 0):
            g = -g
        object.__setattr__(self, "num", num // g)
        object.__setattr__(self, "den", den // g)

    @classmethod
    def parse(cls, text: str) -> Slope:
        """Parse ``"r"`` or ``"r/s"``; floats and garbage raise ValueError."""
        parts = text.strip().split("/")
        if len(parts) > 2:
            raise ValueError(f"malformed fraction {text!r}")
        try:
            vals = [int(p) for p in parts]
        except ValueError:
            raise ValueError(f"malformed fraction {text!r}") from None
        return cls(*vals)

    @property
    def is_integral(self) -> bool:
        return self.den == 1

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def __int__(self) -> int:
        if self.den != 1:
            raise ValueError(f"{self} is not an integral slope")
        return self.num

    def __str__(self) -> str:
        return str(self.num) if self.den == 1 else f"{self.num}/{self.den}"
