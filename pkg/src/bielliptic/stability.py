"""Exact central charges for geometric stability conditions.

Z_{omega,beta}(v) = <exp(beta + i*omega), v> computed over Q(i) with exact
rationals; same-ray tests are sign tests on cross products, never phases.
Wall loci are restricted to the slice beta = x*H0, omega = y*H0 (y > 0),
where the vanishing of Im(Z(w) * conj(Z(v))) / y is the circle/line

    alpha * (x^2 + y^2) + beta * x + gamma = 0.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from bielliptic.errors import DegenerateChargeError, PreconditionError
from bielliptic.lattice import (
    DivisorClass,
    MukaiVector,
    QDivisor,
    QMukaiVector,
)
from bielliptic.surfaces import surface_invariants


@dataclass(frozen=True)
class GeometricStability:
    """A pair (beta, omega) of rational divisor classes with omega ample."""

    beta: QDivisor
    omega: QDivisor

    def __post_init__(self):
        if not self.omega.is_ample():
            raise PreconditionError(f"omega must be ample, got {self.omega}")

    @classmethod
    def of(cls, beta_a, beta_b, omega_a, omega_b) -> "GeometricStability":
        return cls(QDivisor.of(beta_a, beta_b), QDivisor.of(omega_a, omega_b))


@dataclass(frozen=True)
class ComplexRational:
    re: Fraction
    im: Fraction

    def conj(self) -> "ComplexRational":
        return ComplexRational(self.re, -self.im)

    def __mul__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __add__(self, other: "ComplexRational") -> "ComplexRational":
        return ComplexRational(self.re + other.re, self.im + other.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im


def central_charge(t: int, v: MukaiVector, sigma: GeometricStability) -> ComplexRational:
    """Z = [beta.c1 - s - r(beta^2 - omega^2)/2] + i[omega.c1 - r beta.omega]."""
    surface_invariants(t)
    beta, omega = sigma.beta, sigma.omega
    c1 = QDivisor.of(v.a, v.b)
    re = beta.dot(c1) - v.s - Fraction(v.r) * (beta.self_int() - omega.self_int()) / 2
    im = omega.dot(c1) - v.r * beta.dot(omega)
    return ComplexRational(Fraction(re), Fraction(im))


def same_ray(t: int, v: MukaiVector, w: MukaiVector, sigma: GeometricStability) -> bool:
    """Exact test that Z(w) lies on the open ray through Z(v)."""
    zv = central_charge(t, v, sigma)
    if zv.is_zero():
        raise DegenerateChargeError(f"Z({v.text()}) = 0")
    zw = central_charge(t, w, sigma)
    cross = zw * zv.conj()
    return cross.im == 0 and cross.re > 0


# ---------------------------------------------------------------------------
# wall loci in the (x, y) slice


@dataclass(frozen=True)
class QuadraticLocus:
    """alpha*(x^2 + y^2) + beta*x + gamma = 0, content 1, alpha >= 0."""

    alpha: int
    beta: int
    gamma: int

    def value_at(self, x: Fraction, y: Fraction) -> Fraction:
        return self.alpha * (x * x + y * y) + self.beta * x + self.gamma


class _Everywhere:
    def __repr__(self):
        return "Everywhere"


class _Nowhere:
    def __repr__(self):
        return "Nowhere"


EVERYWHERE = _Everywhere()
NOWHERE = _Nowhere()

WallLocus = QuadraticLocus | _Everywhere | _Nowhere


def _are_collinear(v: MukaiVector, w: MukaiVector) -> bool:
    vt, wt = v.as_tuple(), w.as_tuple()
    for i in range(4):
        for j in range(i + 1, 4):
            if vt[i] * wt[j] != vt[j] * wt[i]:
                return False
    return True


def slice_charge(
    t: int, v: MukaiVector, H0: DivisorClass, x: Fraction, y: Fraction
) -> ComplexRational:
    """Z at beta = x*H0, omega = y*H0 (requires y > 0 for a genuine sigma)."""
    sigma = GeometricStability(
        QDivisor.of(x * H0.a, x * H0.b), QDivisor.of(y * H0.a, y * H0.b)
    )
    return central_charge(t, v, sigma)


def wall_in_slice(t: int, v: MukaiVector, w: MukaiVector, H0: DivisorClass) -> WallLocus:
    """Exact vanishing locus of Im(Z(w) conj(Z(v))) / y in the H0-slice.

    With P = H0^2 and d_v = H0.c1(v) the polynomial is
        P*(r_v d_w - r_w d_v) * (x^2+y^2)
      + 2P*(r_w s_v - r_v s_w) * x + 2*(d_v s_w - d_w s_v)
    up to normalization.
    """
    surface_invariants(t)
    if not (H0.a > 0 and H0.b > 0):
        raise PreconditionError(f"H0 must be ample, got ({H0.a},{H0.b})")
    if _are_collinear(v, w):
        raise PreconditionError("v and w are collinear; the wall locus is degenerate")
    P = H0.self_int()
    dv, dw = H0.dot(v.c1), H0.dot(w.c1)
    alpha = P * (v.r * dw - w.r * dv)
    beta = 2 * P * (w.r * v.s - v.r * w.s)
    gamma = 2 * (dv * w.s - dw * v.s)
    if alpha == 0 and beta == 0 and gamma == 0:
        return EVERYWHERE
    if alpha == 0 and beta == 0:
        return NOWHERE
    g = gcd(gcd(abs(alpha), abs(beta)), abs(gamma))
    alpha, beta, gamma = alpha // g, beta // g, gamma // g
    lead = alpha if alpha != 0 else beta
    if lead < 0:
        alpha, beta, gamma = -alpha, -beta, -gamma
    return QuadraticLocus(alpha, beta, gamma)


def _rational_sqrt(q: Fraction) -> Fraction | None:
    if q < 0:
        return None
    pn, pd = q.numerator, q.denominator
    rn, rd = isqrt(pn), isqrt(pd)
    if rn * rn == pn and rd * rd == pd:
        return Fraction(rn, rd)
    return None


def locus_samples(locus: WallLocus, count: int) -> list[tuple[Fraction, Fraction]]:
    """Up to ``count`` exact rational points (x, y), y > 0, on the locus.

    Lines (alpha = 0) always yield points; circles are scanned over small-
    denominator x and kept where y^2 is a rational square.  May return
    fewer than requested (a rational circle need not have rational points).
    """
    if isinstance(locus, (_Everywhere, _Nowhere)):
        pts = []
        if isinstance(locus, _Everywhere):
            pts = [(Fraction(k), Fraction(1)) for k in range(count)]
        return pts[:count]
    out: list[tuple[Fraction, Fraction]] = []
    if locus.alpha == 0:
        x = Fraction(-locus.gamma, locus.beta)
        return [(x, Fraction(k)) for k in range(1, count + 1)]
    for den in range(1, 13):
        for num in range(-12 * den, 12 * den + 1):
            x = Fraction(num, den)
            y2 = -Fraction(locus.alpha * x * x + locus.beta * x + locus.gamma, locus.alpha)
            if y2 <= 0:
                continue
            y = _rational_sqrt(y2)
            if y is None:
                continue
            if (x, y) not in out:
                out.append((x, y))
                if len(out) >= count:
                    return out
    return out


# ---------------------------------------------------------------------------
# the numerical divisor class attached to a stability condition


def charge_vector(sigma: GeometricStability) -> tuple[QMukaiVector, QMukaiVector]:
    """Real and imaginary parts of exp(beta + i*omega) as rational vectors."""
    beta, omega = sigma.beta, sigma.omega
    re = QMukaiVector(
        Fraction(1), beta, (beta.self_int() - omega.self_int()) / 2
    )
    im = QMukaiVector(Fraction(0), omega, beta.dot(omega))
    return re, im


def bayer_macri_class(t: int, v: MukaiVector, sigma: GeometricStability) -> QMukaiVector:
    """Im of exp(beta + i*omega) / Z(v), componentwise; pairs to zero with v."""
    z = central_charge(t, v, sigma)
    if z.is_zero():
        raise DegenerateChargeError(f"Z({v.text()}) = 0")
    re_u, im_u = charge_vector(sigma)
    n = z.norm2()
    # Im(U / z) = (Im(U) * Re(z) - Re(U) * Im(z)) / |z|^2
    def comp(re_c: Fraction, im_c: Fraction) -> Fraction:
        return (im_c * z.re - re_c * z.im) / n

    return QMukaiVector(
        comp(re_u.r, im_u.r),
        QDivisor(comp(re_u.c1.a, im_u.c1.a), comp(re_u.c1.b, im_u.c1.b)),
        comp(re_u.s, im_u.s),
    )
