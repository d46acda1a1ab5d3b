"""Moebius geometry on the upper half-plane and its unit tangent bundle.

Model: H = {x+iy : y > 0} with metric ds = |dz|/y.  A unit tangent vector
is a pair (z, theta) with theta measured from the vertical, reduced to
[0, 2*pi).  A determinant-one real 2x2 matrix g = (a,b;c,d), taken modulo
sign, acts by

    (z, theta)  |->  (gz, theta - 2*arg(cz+d)),      gz = (az+b)/(cz+d).

All values are immutable and all operations are pure functions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import NearParabolicError

TWO_PI = 2.0 * math.pi

#: determinant / associativity contract after renormalization
DET_TOL = 1e-12

#: |cz+d| below this signals near-parabolic blowup; inputs are rejected
UNDERFLOW_FLOOR = 1e-300


def reduce_angle(theta):
    """Reduce an angle to [0, 2*pi).  Idempotent, also on float edge cases
    where ``theta % TWO_PI`` rounds up to exactly 2*pi."""
    t = theta % TWO_PI
    if t >= TWO_PI:
        t -= TWO_PI
    return t


@dataclass(frozen=True)
class UpperHalfPoint:
    """Point x + iy of the upper half-plane (y > 0, both finite)."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("coordinates must be finite")
        if not self.y > 0.0:
            raise ValueError("upper half-plane requires y > 0")

    @classmethod
    def from_complex(cls, z):
        return cls(z.real, z.imag)

    @property
    def z(self):
        return complex(self.x, self.y)


@dataclass(frozen=True)
class UnitTangent:
    """Unit tangent vector (z, theta); theta is stored reduced to [0, 2*pi)."""

    point: UpperHalfPoint
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", reduce_angle(self.theta))

    @property
    def z(self):
        return self.point.z


@dataclass(frozen=True)
class MoebiusMap:
    """Real 2x2 matrix of determinant one, modulo overall sign.

    Construction renormalizes the determinant to 1 and fixes the sign so
    the first nonzero of (c, a) is positive; projective equality is then a
    plain field comparison.
    """

    a: float
    b: float
    c: float
    d: float

    def __post_init__(self):
        a, b, c, d = self.a, self.b, self.c, self.d
        det = a * d - b * c
        if not math.isfinite(det) or det <= 0.0:
            raise ValueError(f"need finite positive determinant, got {det}")
        s = math.sqrt(det)
        a, b, c, d = a / s, b / s, c / s, d / s
        if (c < 0.0) or (c == 0.0 and a < 0.0):
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0, 0.0, 1.0)

    @classmethod
    def translation(cls, t):
        return cls(1.0, float(t), 0.0, 1.0)

    @classmethod
    def inversion(cls):
        """z -> -1/z."""
        return cls(0.0, -1.0, 1.0, 0.0)

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    def compose(self, other):
        """self after other (matrix product self @ other)."""
        return MoebiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    __matmul__ = compose

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def approx_eq(self, other, tol=DET_TOL):
        return all(
            abs(p - q) <= tol for p, q in zip(self.entries(), other.entries())
        )

    def apply_complex(self, z):
        """Image of a complex point; raises on parabolic underflow."""
        w = self.c * z + self.d
        if abs(w) < UNDERFLOW_FLOOR:
            raise NearParabolicError(f"|cz+d| underflow at z={z}")
        return (self.a * z + self.b) / w

    def apply_point(self, p: UpperHalfPoint) -> UpperHalfPoint:
        return UpperHalfPoint.from_complex(self.apply_complex(p.z))


def apply(g: MoebiusMap, p: UnitTangent) -> UnitTangent:
    """Action on the unit tangent bundle: (z, theta) -> (gz, theta - 2 arg(cz+d))."""
    z = p.z
    w = g.c * z + g.d
    if abs(w) < UNDERFLOW_FLOOR:
        raise NearParabolicError(f"|cz+d| underflow at z={z}")
    beta = cmath.phase(w)
    gz = (g.a * z + g.b) / w
    return UnitTangent(UpperHalfPoint(gz.real, gz.imag), p.theta - 2.0 * beta)


def point_pair_invariant(z: UpperHalfPoint, w: UpperHalfPoint) -> float:
    """u(z,w) = |z-w|^2 / (4 Im z Im w); nonnegative, symmetric, u(z,z)=0."""
    dx = z.x - w.x
    dy = z.y - w.y
    return (dx * dx + dy * dy) / (4.0 * z.y * w.y)


def hyperbolic_distance(z: UpperHalfPoint, w: UpperHalfPoint) -> float:
    """Distance delta(z,w), computed through u via cosh(delta) = 1 + 2u.

    The identity is pinned against the vertical-geodesic case
    delta(i*y1, i*y2) = |log(y1/y2)| in the test suite.  Written with
    log1p so delta(z,z) is exactly 0.
    """
    t = 2.0 * point_pair_invariant(z, w)
    # arccosh(1+t) = log(1 + t + sqrt(t*(t+2)))
    return math.log1p(t + math.sqrt(t * (t + 2.0)))


def reflect(p: UnitTangent) -> UnitTangent:
    """Orientation-reversing involution V(z, theta) = (-conj(z), -theta)."""
    return UnitTangent(UpperHalfPoint(-p.point.x, p.point.y), -p.theta)
