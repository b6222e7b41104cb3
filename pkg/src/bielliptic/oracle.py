"""Brute-force re-derivation of the equality-case enumerations and an
independent cross-check for the wall classifier's codimension bound.

Nothing here imports the classifier's enumeration or arithmetic helpers:
the oracle works on raw 4-tuples with its own pairing and its own search,
so agreement between the two paths is meaningful.
"""

from dataclasses import dataclass
from math import gcd, isqrt

from bielliptic.errors import PreconditionError
from bielliptic.surfaces import surface_invariants


@dataclass(frozen=True)
class EqualityCase:
    """One solution of the floor equation governing zero/one-codimension
    strata built from two isotropic rays u1, u2 (l1 <= l2 by convention).

        -floor(b1*l1/m) - floor(b2*l2/m) + b1*b2*q = target

    subject to the lattice consistency l1 | m, l2 | m and l1*l2 | m*q
    (the pullbacks satisfy m*q = l1*l2*<u1bar, u2bar> with an integral
    right-hand pairing).
    """

    m: int
    l1: int
    l2: int
    q: int
    b1: int
    b2: int
    target: int

    def floor_equation_holds(self) -> bool:
        return (
            -((self.b1 * self.l1) // self.m)
            - ((self.b2 * self.l2) // self.m)
            + self.b1 * self.b2 * self.q
            == self.target
        )

    def consistent(self) -> bool:
        return (
            self.m % self.l1 == 0
            and self.m % self.l2 == 0
            and (self.m * self.q) % (self.l1 * self.l2) == 0
        )

    def as_tuple(self) -> tuple[int, int, int, int, int, int, int]:
        return (self.m, self.target, self.l1, self.l2, self.q, self.b1, self.b2)


def enumerate_equality_cases(m: int, target: int, bound: int = 8) -> list[EqualityCase]:
    """Exhaustive scan of all consistent solutions with b1, b2, q <= bound.

    Canonical form: l1 < l2, or l1 == l2 and b1 <= b2 (the two rays play
    symmetric roles).  Deterministically ordered output.
    """
    if m not in (2, 3, 4, 6):
        raise PreconditionError(f"m must be one of 2, 3, 4, 6, got {m}")
    if target not in (0, 1):
        raise PreconditionError(f"target must be 0 or 1, got {target}")
    if bound < 1:
        raise PreconditionError(f"bound must be >= 1, got {bound}")
    divisors = [d for d in range(1, m + 1) if m % d == 0]
    out = []
    for l1 in divisors:
        for l2 in divisors:
            if l2 < l1:
                continue
            for q in range(1, bound + 1):
                if (m * q) % (l1 * l2) != 0:
                    continue
                for b1 in range(1, bound + 1):
                    for b2 in range(1, bound + 1):
                        if l1 == l2 and b2 < b1:
                            continue
                        case = EqualityCase(m, l1, l2, q, b1, b2, target)
                        if case.floor_equation_holds():
                            out.append(case)
    return sorted(out, key=EqualityCase.as_tuple)


# ---------------------------------------------------------------------------
# independent codimension oracle


def _pair4(p, w):
    return p[1] * w[2] + w[1] * p[2] - p[0] * w[3] - w[0] * p[3]


def _content4(p):
    return gcd(gcd(p[0], p[1]), gcd(p[2], p[3]))


def _l_of(t, p):
    d = surface_invariants(t)
    return gcd(gcd(p[0], p[1]), gcd((d.ord_k // d.lam) * p[2], d.ord_k * p[3]))


def _stack_dim(t, p):
    sq = _pair4(p, p)
    if sq > 0:
        return sq
    c = _content4(p)
    u = tuple(x // c for x in p)
    return (c * _l_of(t, u)) // surface_invariants(t).ord_k


def _codim_of(t, parts):
    total = 0
    for p in parts:
        total += _pair4(p, p) - _stack_dim(t, p)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            total += _pair4(parts[i], parts[j])
    return total


def min_codim_oracle(H, max_parts: int = 4) -> int | None:
    """Naive recomputation of the classifier's codimension bound.

    The positive-cone classes are enumerated per pairing value k: the line
    <v, p> = k meets the closed positive cone in a segment centred at the
    projection (k/v^2) v, whose half-width along the null direction n of
    the line is k / sqrt(v^2 * (-q(n))); integer points are scanned over
    that (slightly padded) range.  A depth-first search then assembles sum
    decompositions and minimizes the codimension formula recomputed from
    scratch.  Returns None when no decomposition exists.
    """
    t = H.surface
    e1 = H.basis[0].as_tuple()
    e2 = H.basis[1].as_tuple()
    v = H.v.as_tuple()
    g11, g12 = _pair4(e1, e1), _pair4(e1, e2)
    g22 = _pair4(e2, e2)
    det = g11 * g22 - g12 * g12
    rv1, rv2 = _pair4(e1, v), _pair4(e2, v)
    # coordinates of v from the Gram system, by Cramer
    vx = (rv1 * g22 - rv2 * g12) // det
    vy = (g11 * rv2 - g12 * rv1) // det
    v2 = _pair4(v, v)

    def vec(x, y):
        return tuple(x * a + y * b for a, b in zip(e1, e2))

    def form(x, y):
        return g11 * x * x + 2 * g12 * x * y + g22 * y * y

    # <v, (x, y)> = cA * x + cB * y
    cA = g11 * vx + g12 * vy
    cB = g12 * vx + g22 * vy
    # direction along the lines of constant pairing; negative square
    nx, ny = cB, -cA
    qn = form(nx, ny)
    assert qn < 0
    denom_root = isqrt(v2 * (-qn))
    candidates = []
    seen = set()
    for k in range(1, v2):
        # segment centre (k/v2) * (vx, vy), half width k/sqrt(v2 * -qn) in t,
        # displacement (t*nx, t*ny); pad the integer scan by one on each side
        tmax_num = k
        steps = tmax_num // denom_root + 2
        if cB != 0:
            x_lo = (k * vx) // v2 - abs(nx) * steps - 1
            x_hi = -((-k * vx) // v2) + abs(nx) * steps + 1
            for x in range(x_lo, x_hi + 1):
                num = k - cA * x
                if num % cB:
                    continue
                y = num // cB
                if form(x, y) >= 0 and (x, y) not in seen:
                    seen.add((x, y))
                    candidates.append(((x, y), k))
        else:
            if cA == 0 or k % cA:
                continue
            x = k // cA
            y_lo = (k * vy) // v2 - abs(ny) * steps - 1
            y_hi = -((-k * vy) // v2) + abs(ny) * steps + 1
            for y in range(y_lo, y_hi + 1):
                if form(x, y) >= 0 and (x, y) not in seen:
                    seen.add((x, y))
                    candidates.append(((x, y), k))
    candidates.sort()

    best: list[int | None] = [None]

    def search(start, rem_x, rem_y, rem_pairing, chosen):
        if len(chosen) >= 2 and rem_x == 0 and rem_y == 0:
            parts = [vec(x, y) for x, y in chosen]
            c = _codim_of(t, parts)
            if best[0] is None or c < best[0]:
                best[0] = c
        if len(chosen) >= max_parts:
            return
        for idx in range(start, len(candidates)):
            (x, y), k = candidates[idx]
            if k > rem_pairing:
                continue
            search(idx, rem_x - x, rem_y - y, rem_pairing - k, chosen + [(x, y)])

    search(0, vx, vy, v2, [])
    return best[0]
