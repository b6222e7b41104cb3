"""The algebraic Mukai lattice of a bielliptic surface and its canonical cover.

Num(S) = Z[A0] + Z[B0] with A0.B0 = 1 and A0^2 = B0^2 = 0, so a divisor
class is a pair of integers and a Mukai vector is (r, a*A0 + b*B0, s) with
pairing <v, w> = (a*b' + a'*b) - r*s' - r'*s.  All arithmetic is exact:
Python integers and fractions.Fraction, never floats.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from bielliptic.errors import PreconditionError
from bielliptic.surfaces import surface_invariants, surface_type_for


@dataclass(frozen=True)
class DivisorClass:
    """Integral divisor class a*A0 + b*B0 in Num(S)."""

    a: int
    b: int

    def dot(self, other: "DivisorClass") -> int:
        return self.a * other.b + other.a * self.b

    def self_int(self) -> int:
        """D^2 = 2ab, always even."""
        return 2 * self.a * self.b

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(-self.a, -self.b)

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(n * self.a, n * self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0


ZERO_DIVISOR = DivisorClass(0, 0)
A0 = DivisorClass(1, 0)
B0 = DivisorClass(0, 1)


@dataclass(frozen=True)
class MukaiVector:
    """Integral Mukai vector (r, c1, s) = (rank, first Chern class, ch2)."""

    r: int
    c1: DivisorClass
    s: int

    @classmethod
    def of(cls, r: int, a: int, b: int, s: int) -> "MukaiVector":
        return cls(r, DivisorClass(a, b), s)

    @property
    def a(self) -> int:
        return self.c1.a

    @property
    def b(self) -> int:
        return self.c1.b

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.r, self.c1.a, self.c1.b, self.s)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r + other.r, self.c1 + other.c1, self.s + other.s)

    def __sub__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(self.r - other.r, self.c1 - other.c1, self.s - other.s)

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.c1, -self.s)

    def __rmul__(self, n: int) -> "MukaiVector":
        return MukaiVector(n * self.r, n * self.c1, n * self.s)

    def content(self) -> int:
        """gcd of the four coordinates (0 for the zero vector)."""
        return gcd(gcd(self.r, self.c1.a), gcd(self.c1.b, self.s))

    def is_primitive(self) -> bool:
        return self.content() == 1

    def primitive_part(self) -> tuple[int, "MukaiVector"]:
        """Write v = n * v_p with v_p primitive; returns (n, v_p)."""
        n = self.content()
        if n == 0:
            raise PreconditionError("zero vector has no primitive part")
        return n, MukaiVector.of(self.r // n, self.a // n, self.b // n, self.s // n)

    def is_zero(self) -> bool:
        return self.r == 0 and self.c1.is_zero() and self.s == 0

    def text(self) -> str:
        """Wire format: four comma-separated integers r,a,b,s."""
        return f"{self.r},{self.a},{self.b},{self.s}"

    @classmethod
    def parse(cls, text: str) -> "MukaiVector":
        parts = text.split(",")
        if len(parts) != 4:
            raise ValueError(f"expected r,a,b,s with four entries, got {text!r}")
        r, a, b, s = (int(p.strip()) for p in parts)
        return cls.of(r, a, b, s)


def mukai_pairing(v: MukaiVector, w: MukaiVector) -> int:
    """<v, w> = c1(v).c1(w) - r(v) s(w) - r(w) s(v)."""
    return v.c1.dot(w.c1) - v.r * w.s - w.r * v.s


def square(v: MukaiVector) -> int:
    return mukai_pairing(v, v)


# ---------------------------------------------------------------------------
# rational variants (carry omega, beta, xi_sigma)


@dataclass(frozen=True)
class QDivisor:
    """Divisor class with exact rational coefficients."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, a, b) -> "QDivisor":
        return cls(Fraction(a), Fraction(b))

    def dot(self, other) -> Fraction:
        return self.a * other.b + other.a * self.b

    def self_int(self) -> Fraction:
        return 2 * self.a * self.b

    def __add__(self, other: "QDivisor") -> "QDivisor":
        return QDivisor(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "QDivisor":
        return QDivisor(-self.a, -self.b)

    def __rmul__(self, c) -> "QDivisor":
        c = Fraction(c)
        return QDivisor(c * self.a, c * self.b)

    def is_ample(self) -> bool:
        return self.a > 0 and self.b > 0


@dataclass(frozen=True)
class QMukaiVector:
    """Mukai vector with exact rational entries."""

    r: Fraction
    c1: QDivisor
    s: Fraction

    @classmethod
    def of(cls, r, a, b, s) -> "QMukaiVector":
        return cls(Fraction(r), QDivisor.of(a, b), Fraction(s))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.r, self.c1.a, self.c1.b, self.s)


def q_pairing(v: QMukaiVector, w: QMukaiVector) -> Fraction:
    return v.c1.dot(w.c1) - v.r * w.s - w.r * v.s


def pairing_with_rational(v: QMukaiVector, w: MukaiVector) -> Fraction:
    return q_pairing(v, QMukaiVector.of(w.r, w.a, w.b, w.s))


# ---------------------------------------------------------------------------
# canonical cover and intermediate covers


@dataclass(frozen=True)
class CoverMukaiVector:
    """Mukai vector (r, alpha*A_X + beta*B_X, s) on the canonical cover X.

    The cover intersection form has A_X.B_X = lam, so
    <u, u'> = lam*(alpha*beta' + alpha'*beta) - r*s' - r'*s.
    """

    r: int
    alpha: int
    beta: int
    s: int
    lam: int

    def pairing(self, other: "CoverMukaiVector") -> int:
        if self.lam != other.lam:
            raise PreconditionError("cover vectors live on different covers")
        return (
            self.lam * (self.alpha * other.beta + other.alpha * self.beta)
            - self.r * other.s
            - other.r * self.s
        )

    def square(self) -> int:
        return self.pairing(self)

    def content(self) -> int:
        return gcd(gcd(self.r, self.alpha), gcd(self.beta, self.s))


def l_invariant(t: int, v: MukaiVector) -> int:
    """gcd of the coordinates of the pullback of a primitive v to the cover.

    Divides ord(K); the pullback divided by it is primitive.
    """
    if not v.is_primitive():
        raise PreconditionError(f"l-invariant is defined for primitive vectors, got {v.text()}")
    return l_invariant_any(t, v)


def l_invariant_any(t: int, v: MukaiVector) -> int:
    """Content of the pullback for an arbitrary nonzero vector."""
    d = surface_invariants(t)
    return gcd(
        gcd(v.r, v.a), gcd((d.ord_k // d.lam) * v.b, d.ord_k * v.s)
    )


def pullback_canonical(t: int, v: MukaiVector) -> CoverMukaiVector:
    """Pullback along the degree-ord(K) canonical cover X -> S.

    A0 pulls back to A_X, B0 to (ord/lam)*B_X, the point class scales by
    ord(K); the pairing scales by ord(K).
    """
    d = surface_invariants(t)
    return CoverMukaiVector(
        r=v.r,
        alpha=v.a,
        beta=(d.ord_k // d.lam) * v.b,
        s=d.ord_k * v.s,
        lam=d.lam,
    )


def pullback_intermediate(
    t: int, kind: str, v: MukaiVector, d: int | None = None
) -> tuple[MukaiVector, int]:
    """Pullback to an intermediate etale cover; returns (vector, its type).

    kind="order-divisor" with a proper divisor d of ord(K): the target has
    canonical order ord(K)/d and the same lambda, and B0 pulls back to
    d copies of the target's B0.  kind="lambda-cover" (lambda > 1 only):
    the target has lambda = 1 and the same canonical order, and A0 pulls
    back lambda-fold.
    """
    data = surface_invariants(t)
    if kind == "order-divisor":
        if d is None or d <= 1 or d >= data.ord_k or data.ord_k % d != 0:
            raise PreconditionError(
                f"need a proper divisor of ord_k={data.ord_k}, got d={d}"
            )
        target = surface_type_for(data.ord_k // d, data.lam)
        return MukaiVector.of(v.r, v.a, d * v.b, d * v.s), target
    if kind == "lambda-cover":
        if data.lam == 1:
            raise PreconditionError(f"type {t} has lambda = 1; no lambda-cover")
        target = surface_type_for(data.ord_k, 1)
        return MukaiVector.of(v.r, data.lam * v.a, v.b, data.lam * v.s), target
    raise PreconditionError(f"unknown cover kind {kind!r}")


# ---------------------------------------------------------------------------
# divisor numerics and slope


@dataclass(frozen=True)
class DivisorNumerics:
    chi: int
    ample: bool
    effective_cone_ok: bool
    d_pA: int
    d_pB: int


def divisor_numerics(t: int, D: DivisorClass) -> DivisorNumerics:
    """chi(O(D)) = D^2/2 = ab, ampleness, the effective-cone necessary
    condition, and the two fibre degrees c1.B = lam*a and c1.A = ord*b."""
    d = surface_invariants(t)
    return DivisorNumerics(
        chi=D.a * D.b,
        ample=D.a > 0 and D.b > 0,
        effective_cone_ok=D.a >= 0 and D.b >= 0,
        d_pA=d.lam * D.a,
        d_pB=d.ord_k * D.b,
    )


class _PositiveInfinity:
    """Slope of a rank-zero object; larger than every rational."""

    def __gt__(self, other):
        return not isinstance(other, _PositiveInfinity)

    def __lt__(self, other):
        return False

    def __ge__(self, other):
        return True

    def __le__(self, other):
        return isinstance(other, _PositiveInfinity)

    def __eq__(self, other):
        return isinstance(other, _PositiveInfinity)

    def __hash__(self):
        return hash("slope+inf")

    def __repr__(self):
        return "+inf"


SLOPE_INFINITY = _PositiveInfinity()


def slope(v: MukaiVector, omega: QDivisor, beta: QDivisor):
    """Twisted slope omega.(c1 - r*beta) / r, or +inf for rank zero."""
    if not omega.is_ample():
        raise PreconditionError(f"omega must be ample, got {omega}")
    if v.r == 0:
        return SLOPE_INFINITY
    c1 = QDivisor.of(v.a, v.b)
    shifted = QDivisor(c1.a - v.r * beta.a, c1.b - v.r * beta.b)
    return omega.dot(shifted) / Fraction(v.r)


def primitive_isotropic_in_series(r: int, D: DivisorClass) -> MukaiVector:
    """The unique primitive isotropic vector (n*r, n*D, s) in the series.

    Requires r >= 1 and gcd(r, a, b) = 1.  n is the least positive integer
    making s = n * D^2 / (2r) = n*a*b/r integral; minimality forces the
    result primitive.
    """
    if r < 1:
        raise PreconditionError(f"need r >= 1, got {r}")
    if gcd(gcd(r, D.a), D.b) != 1:
        raise PreconditionError(f"need gcd(r, a, b) = 1, got r={r}, D=({D.a},{D.b})")
    ab = D.a * D.b
    n0 = r // gcd(r, ab) if ab != 0 else 1
    s0 = n0 * ab // r
    return MukaiVector.of(n0 * r, n0 * D.a, n0 * D.b, s0)
