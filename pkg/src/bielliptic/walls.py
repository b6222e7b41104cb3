"""Rank-2 hyperbolic wall lattices and the wall-type classification.

A wall lattice is the saturation of the span of v (v^2 > 0) and a second
class w; it carries two, or zero, rational isotropic rays.  The classifier
evaluates the totally-semistable tests and each contraction clause against
the rays' pairing and divisibility invariants, enumerates the effective
two-sided decompositions of v inside the positive cone, and reports the
minimum of the filtration-stratum codimension bound over them.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from bielliptic.errors import NotHyperbolicError, PreconditionError
from bielliptic.lattice import (
    MukaiVector,
    l_invariant,
    l_invariant_any,
    mukai_pairing,
    square,
)
from bielliptic.linalg import saturation_basis
from bielliptic.surfaces import surface_invariants

# classification labels
HILBERT_CHOW = "HilbertChowDivisorial"
LGU = "LGUDivisorial"
LGU_ORD2 = "LGUOrd2Divisorial"
ORD2_EXCEPTIONAL = "Ord2ExceptionalDivisorial"
ORD3_EXCEPTIONAL = "Ord3ExceptionalDivisorial"
P1_FIBRATION = "P1Fibration"
FLOPPING = "Flopping"
FAKE_WALL = "FakeWall"
NO_WALL = "NoWall"
INDETERMINATE = "IndeterminateNonPrimitive"

ALL_LABELS = (
    HILBERT_CHOW,
    LGU,
    LGU_ORD2,
    ORD2_EXCEPTIONAL,
    ORD3_EXCEPTIONAL,
    P1_FIBRATION,
    FLOPPING,
    FAKE_WALL,
    NO_WALL,
    INDETERMINATE,
)

_CONTRACTION_LABELS = frozenset(
    {HILBERT_CHOW, LGU, LGU_ORD2, ORD2_EXCEPTIONAL, ORD3_EXCEPTIONAL, P1_FIBRATION}
)


@dataclass(frozen=True)
class HyperbolicPair:
    """Saturated rank-2 sublattice of signature (1,-1) containing v."""

    surface: int
    v: MukaiVector
    basis: tuple[MukaiVector, MukaiVector]
    gram: tuple[tuple[int, int], tuple[int, int]]

    def det(self) -> int:
        (g11, g12), (_, g22) = self.gram
        return g11 * g22 - g12 * g12

    def coords(self, p: MukaiVector) -> tuple[int, int] | None:
        """Integer coordinates of p in the basis, or None if p is outside."""
        e1, e2 = self.basis
        a, b = e1.as_tuple(), e2.as_tuple()
        pt = p.as_tuple()
        for i in range(4):
            for j in range(i + 1, 4):
                det = a[i] * b[j] - a[j] * b[i]
                if det == 0:
                    continue
                xn = pt[i] * b[j] - pt[j] * b[i]
                yn = a[i] * pt[j] - a[j] * pt[i]
                if xn % det or yn % det:
                    return None
                x, y = xn // det, yn // det
                if (x * e1 + y * e2) == p:
                    return (x, y)
                return None
        return None

    def from_coords(self, x: int, y: int) -> MukaiVector:
        e1, e2 = self.basis
        return x * e1 + y * e2

    def q(self, xy: tuple[int, int]) -> int:
        (g11, g12), (_, g22) = self.gram
        x, y = xy
        return g11 * x * x + 2 * g12 * x * y + g22 * y * y

    def pair(self, xy: tuple[int, int], uv: tuple[int, int]) -> int:
        (g11, g12), (_, g22) = self.gram
        x, y = xy
        u, w = uv
        return g11 * x * u + g12 * (x * w + y * u) + g22 * y * w


def _collinear(v: MukaiVector, w: MukaiVector) -> bool:
    vt, wt = v.as_tuple(), w.as_tuple()
    return all(
        vt[i] * wt[j] == vt[j] * wt[i] for i in range(4) for j in range(i + 1, 4)
    )


def saturate_lattice(t: int, v: MukaiVector, w: MukaiVector) -> HyperbolicPair:
    """Saturation of span{v, w} with its Gram matrix; must be hyperbolic."""
    surface_invariants(t)
    if _collinear(v, w):
        raise PreconditionError(f"{v.text()} and {w.text()} are collinear")
    if square(v) <= 0:
        raise PreconditionError(f"need v^2 > 0, got v^2 = {square(v)}")
    rows = saturation_basis([list(v.as_tuple()), list(w.as_tuple())])
    e1, e2 = (MukaiVector.of(*row) for row in rows)
    gram = (
        (square(e1), mukai_pairing(e1, e2)),
        (mukai_pairing(e1, e2), square(e2)),
    )
    pair = HyperbolicPair(surface=t, v=v, basis=(e1, e2), gram=gram)
    if pair.det() >= 0:
        raise NotHyperbolicError(
            f"span of {v.text()}, {w.text()} has Gram determinant {pair.det()} >= 0"
        )
    if pair.coords(v) is None:
        raise AssertionError("saturation lost v; this is a bug")
    return pair


def isotropic_rays(H: HyperbolicPair) -> list[MukaiVector]:
    """The 0 or 2 primitive isotropic classes u with <v, u> > 0.

    Empty exactly when the binary form has irrational isotropic directions,
    i.e. -det(gram) is not a perfect square.
    """
    (g11, g12), (_, g22) = H.gram
    disc = g12 * g12 - g11 * g22
    k = isqrt(disc)
    if k * k != disc:
        return []
    if g11 == 0:
        dirs = [(1, 0), (-g22, 2 * g12)]
    else:
        dirs = [(-g12 + k, g11), (-g12 - k, g11)]
    out = []
    vxy = H.coords(H.v)
    for x, y in dirs:
        g = gcd(x, y)
        x, y = x // g, y // g
        if H.pair(vxy, (x, y)) < 0:
            x, y = -x, -y
        u = H.from_coords(x, y)
        if u not in out:
            out.append(u)
    return sorted(out, key=MukaiVector.as_tuple)


def _positive_classes(H: HyperbolicPair, pairing_cap: int) -> list[tuple[int, int]]:
    """All lattice points p with q(p) >= 0 and 1 <= <v, p> <= pairing_cap."""
    vxy = H.coords(H.v)
    v2 = H.q(vxy)
    # rational orthogonal direction: w0 = v2 * e - <v, e> * v
    for e in ((1, 0), (0, 1)):
        w0 = (v2 * e[0] - H.pair(vxy, e) * vxy[0], v2 * e[1] - H.pair(vxy, e) * vxy[1])
        if w0 != (0, 0):
            break
    w02 = H.q(w0)
    assert w02 < 0
    found = []
    for k in range(1, pairing_cap + 1):
        # p = (k/v2) v + (m/w02) w0 with q(p) = k^2/v2 + m^2/w02 >= 0
        mbound = isqrt((k * k * (-w02)) // v2)
        for m in range(-mbound, mbound + 1):
            num_x = k * w02 * vxy[0] + m * v2 * w0[0]
            num_y = k * w02 * vxy[1] + m * v2 * w0[1]
            den = v2 * w02
            if num_x % den or num_y % den:
                continue
            p = (num_x // den, num_y // den)
            if H.q(p) >= 0 and H.pair(vxy, p) == k:
                found.append(p)
    return sorted(set(found))


def enumerate_decompositions(
    H: HyperbolicPair, max_parts: int = 4
) -> list[tuple[MukaiVector, ...]]:
    """All multisets of 2..max_parts positive-cone classes summing to v.

    Each part satisfies part^2 >= 0 and <v, part> > 0; the output order is
    deterministic (parts sorted inside a multiset, multisets sorted).
    """
    if max_parts < 2:
        raise PreconditionError(f"max_parts must be >= 2, got {max_parts}")
    vxy = H.coords(H.v)
    v2 = H.q(vxy)
    candidates = _positive_classes(H, v2 - 1)
    by_pairing: dict[tuple[int, int], int] = {
        p: H.pair(vxy, p) for p in candidates
    }
    results: set[tuple[tuple[int, int, int, int], ...]] = set()

    def extend(start: int, remaining: tuple[int, int], pairing_left: int, chosen: list):
        n = len(chosen)
        if n >= 2 and remaining == (0, 0):
            results.add(tuple(sorted(H.from_coords(*p).as_tuple() for p in chosen)))
        if n >= max_parts:
            return
        for idx in range(start, len(candidates)):
            p = candidates[idx]
            k = by_pairing[p]
            needed = max(0, 2 - (n + 1))
            if k > pairing_left - needed:
                continue
            extend(idx, (remaining[0] - p[0], remaining[1] - p[1]), pairing_left - k, chosen + [p])

    extend(0, vxy, v2, [])
    return [
        tuple(MukaiVector.of(*part) for part in multiset)
        for multiset in sorted(results)
    ]


def hn_codim_bound(t: int, parts: list[MukaiVector]) -> int:
    """Sum of (part^2 - stack dim) plus the pairwise pairings.

    Positive-square parts contribute stack dimension part^2; an isotropic
    part b*u (u primitive) contributes floor(b * l(u) / ord_k).
    """
    data = surface_invariants(t)
    total = 0
    for p in parts:
        sq = square(p)
        if sq < 0:
            raise PreconditionError(f"part {p.text()} has negative square {sq}")
        if sq > 0:
            dim = sq
        else:
            b, u = p.primitive_part()
            dim = (b * l_invariant(t, u)) // data.ord_k
        total += sq - dim
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total += mukai_pairing(parts[i], parts[j])
    return total


@dataclass(frozen=True)
class WallClassification:
    totally_semistable: bool
    tss_witness: MukaiVector | None
    labels: frozenset[str]
    witnesses: dict[str, tuple[MukaiVector, ...]]
    codim_bound: int | None  # None encodes +infinity (no decomposition)


def classify_wall(H: HyperbolicPair, max_parts: int = 4) -> WallClassification:
    """Evaluate every clause of the wall-type classification against H.

    Multiple labels may coexist (reducible moduli can have components with
    different behaviour); the flopping / fake / no-wall refinement applies
    to primitive v only and is replaced by IndeterminateNonPrimitive
    otherwise.
    """
    t = H.surface
    data = surface_invariants(t)
    ordk = data.ord_k
    v = H.v
    v2 = square(v)
    if v2 <= 0:
        raise PreconditionError(f"classification needs v^2 > 0, got {v2}")
    lv = l_invariant_any(t, v)
    rays = isotropic_rays(H)
    info = [(u, mukai_pairing(v, u), l_invariant(t, u)) for u in rays]

    tss1 = tuple(u for u, q, l in info if q == 1 and l == ordk)
    tss2 = tuple(
        u for u, q, l in info if v2 == 4 and q == 2 and l == ordk == 2 == lv
    )
    totally = bool(tss1 or tss2)
    tss_witness = (tss1 + tss2)[0] if totally else None

    labels: set[str] = set()
    witnesses: dict[str, tuple[MukaiVector, ...]] = {}

    def add(label: str, found: tuple[MukaiVector, ...]):
        if found:
            labels.add(label)
            witnesses[label] = found

    if v2 >= 4:
        add(HILBERT_CHOW, tss1)
    if v2 > 4 or (v2 == 4 and ordk in (4, 6)):
        add(LGU, tuple(u for u, q, l in info if q == 2 and l == ordk))
    if v2 == 4 and ordk == 2 and lv == 1:
        add(LGU_ORD2, tuple(u for u, q, l in info if q == 2 and l == 2))
    if v2 == 6 and ordk == 2:
        add(
            ORD2_EXCEPTIONAL,
            tuple(
                u
                for u, q, l in info
                if q == 3 and l == 2 and all(c % 3 == 0 for c in (v - u).as_tuple())
            ),
        )
    if v2 == 6 and ordk == 3:
        add(ORD3_EXCEPTIONAL, tuple(u for u, q, l in info if q == 3 and l == 3))
    add(P1_FIBRATION, tss2)

    decomps = enumerate_decompositions(H, max_parts)
    if v.is_primitive():
        if v2 >= 4 and decomps and not (labels & _CONTRACTION_LABELS):
            add(FLOPPING, decomps[0])
        if not labels:
            if decomps:
                labels.add(FAKE_WALL)
                witnesses[FAKE_WALL] = decomps[0]
            else:
                labels.add(NO_WALL)
                witnesses[NO_WALL] = ()
    elif not labels:
        labels.add(INDETERMINATE)
        witnesses[INDETERMINATE] = ()

    codim = min((hn_codim_bound(t, list(d)) for d in decomps), default=None)
    return WallClassification(
        totally_semistable=totally,
        tss_witness=tss_witness,
        labels=frozenset(labels),
        witnesses=witnesses,
        codim_bound=codim,
    )


# ---------------------------------------------------------------------------
# isotropic approximation with full divisibility


def _val(n: int, p: int) -> int:
    v = 0
    n = abs(n)
    while n and n % p == 0:
        n //= p
        v += 1
    return v


def _ray_generator(mu_a: Fraction, mu_b: Fraction) -> MukaiVector:
    """Primitive integral generator of the isotropic ray through exp(mu)."""
    comps = (Fraction(1), mu_a, mu_b, mu_a * mu_b)
    lcm = 1
    for c in comps:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in comps]
    g = gcd(gcd(ints[0], ints[1]), gcd(ints[2], ints[3]))
    return MukaiVector.of(*(c // g for c in ints))


def _full_l_candidate(t: int, r: int, Da: int, Db: int, index: int) -> MukaiVector | None:
    """One run of the two-stage congruence construction at the given index."""
    data = surface_invariants(t)
    ordk = data.ord_k
    # stage 1: slope approximant whose reduced rank is coprime to 6
    M = 6 // gcd(r, 6)
    na, nb = M * index * Da, M * index * Db
    den = M * index * r + 1
    g = gcd(gcd(na, nb), den)
    d1a, d1b, r1 = na // g, nb // g, den // g
    # perturb onto a direction with both coefficients nonzero
    if d1a * d1b == 0:
        ea, eb = (1, 1) if (d1a, d1b) == (0, 0) else ((1, 0) if d1a == 0 else (0, 1))
        N = 6 * index + 1
        d1a, d1b, r1 = N * d1a + ea, N * d1b + eb, N * r1
        g = gcd(gcd(d1a, d1b), r1)
        d1a, d1b, r1 = d1a // g, d1b // g, r1 // g
    # stage 2: congruence construction forcing content ord_k upstairs
    x, y = _val(ordk, 2), _val(ordk, 3)
    c = gcd(d1a, d1b)
    i, j = _val(c, 2), _val(c, 3)
    d0a, d0b = d1a // c, d1b // c
    ab = d0a * d0b
    k, l = _val(ab, 2), _val(ab, 3)
    mod = 2 ** (x + i + k) * 3 ** (y + j + l)
    if gcd(r1, mod) != 1:
        return None
    rtil = pow(r1, -1, mod) if mod > 1 else 0
    for bump in range(1, 65):
        ntil = mod * bump - rtil
        if ntil <= 0:
            continue
        denom = ntil * r1 + 1
        v0 = _ray_generator(Fraction(ntil * d1a, denom), Fraction(ntil * d1b, denom))
        if v0.r >= 1 and l_invariant(t, v0) == ordk:
            return v0
    return None


def approximate_isotropic_full_l(
    t: int, w: MukaiVector, n: int
) -> tuple[MukaiVector, Fraction]:
    """A primitive isotropic vector with content ord_k upstairs, on a ray
    close to the ray of w; the exact max-norm ray gap is nonincreasing in n.

    Candidates are produced by a slope approximant (denominator forced
    coprime to 6) followed by the 2^x 3^y congruence construction; the
    returned value is the best candidate over internal indices 1..n, which
    makes the gap monotone by construction.
    """
    if n < 1:
        raise PreconditionError(f"need n >= 1, got {n}")
    if w.r < 1:
        raise PreconditionError(f"need rank >= 1, got {w.r}")
    if not w.is_primitive() or square(w) != 0:
        raise PreconditionError(f"seed must be primitive isotropic, got {w.text()}")
    target_a, target_b = Fraction(w.a, w.r), Fraction(w.b, w.r)

    def gap_of(v0: MukaiVector) -> Fraction:
        return max(
            abs(target_a - Fraction(v0.a, v0.r)), abs(target_b - Fraction(v0.b, v0.r))
        )

    best: MukaiVector | None = None
    best_gap: Fraction | None = None
    for index in range(1, n + 1):
        cand = _full_l_candidate(t, w.r, w.a, w.b, index)
        if cand is None:
            continue
        g = gap_of(cand)
        if best_gap is None or g < best_gap:
            best, best_gap = cand, g
    if best is None:
        raise AssertionError(f"no candidate produced for {w.text()} (type {t})")
    return best, best_gap
