"""Cohomological actions of the (anti-)autoequivalences and the reduction
of a primitive Mukai vector to one of the registered row patterns.

The two relative Fourier-Mukai transforms act by

    Phi    (r, a, b, s) -> (r + lam*a, a, b + lam*s, s)
    PhiInv (r, a, b, s) -> (r - lam*a, a, b - lam*s, s)
    Psi    (r, a, b, s) -> (r + ord*b, a + ord*s, b, s)
    PsiInv (r, a, b, s) -> (r - ord*b, a - ord*s, b, s)

together with twisting by a line bundle, the derived dual (negating c1),
and the shift (negating everything).  Three composite moves, one per hard
region, are exposed as single steps so that a replay log stays short:

    Type6AMove  (lambda = 3)  dual . shift . PhiInv . twist(A0) . dual
    Ord3BMove   (ord = 3)     dual . shift . PsiInv . twist(B0) . dual
    PsiDualMove (ord = 4, 6)  dual . shift . PsiInv

Every step preserves the Mukai pairing (the composites include a shift
exactly when they involve an odd number of anti-equivalences).
"""

from dataclasses import dataclass
from enum import Enum

from bielliptic.errors import PreconditionError
from bielliptic.lattice import DivisorClass, MukaiVector, square
from bielliptic.surfaces import surface_invariants


@dataclass(frozen=True)
class TwistBy:
    D: DivisorClass

    def describe(self) -> dict:
        return {"step": "twist", "params": {"a": self.D.a, "b": self.D.b}}


class _Atom(Enum):
    DUAL = "dual"
    SHIFT = "shift"
    PHI = "phi"
    PHI_INV = "phi_inv"
    PSI = "psi"
    PSI_INV = "psi_inv"
    TYPE6_A_MOVE = "type6_a_move"
    ORD3_B_MOVE = "ord3_b_move"
    PSI_DUAL_MOVE = "psi_dual_move"

    def describe(self) -> dict:
        return {"step": self.value, "params": None}


DUAL = _Atom.DUAL
SHIFT = _Atom.SHIFT
PHI = _Atom.PHI
PHI_INV = _Atom.PHI_INV
PSI = _Atom.PSI
PSI_INV = _Atom.PSI_INV
TYPE6_A_MOVE = _Atom.TYPE6_A_MOVE
ORD3_B_MOVE = _Atom.ORD3_B_MOVE
PSI_DUAL_MOVE = _Atom.PSI_DUAL_MOVE

TransformStep = TwistBy | _Atom

_STEP_NAMES = {a.value: a for a in _Atom}


def step_from_json(obj: dict) -> TransformStep:
    name = obj["step"]
    if name == "twist":
        return TwistBy(DivisorClass(int(obj["params"]["a"]), int(obj["params"]["b"])))
    try:
        return _STEP_NAMES[name]
    except KeyError:
        raise ValueError(f"unknown transform step {name!r}") from None


def apply_transform(t: int, step: TransformStep, v: MukaiVector) -> MukaiVector:
    """Apply one step's lattice action; validates the step against the type."""
    data = surface_invariants(t)
    lam, ordk = data.lam, data.ord_k
    r, a, b, s = v.as_tuple()

    if isinstance(step, TwistBy):
        x, y = step.D.a, step.D.b
        return MukaiVector.of(r, a + r * x, b + r * y, s + a * y + b * x + r * x * y)
    if step is DUAL:
        return MukaiVector.of(r, -a, -b, s)
    if step is SHIFT:
        return -v
    if step is PHI:
        return MukaiVector.of(r + lam * a, a, b + lam * s, s)
    if step is PHI_INV:
        return MukaiVector.of(r - lam * a, a, b - lam * s, s)
    if step is PSI:
        return MukaiVector.of(r + ordk * b, a + ordk * s, b, s)
    if step is PSI_INV:
        return MukaiVector.of(r - ordk * b, a - ordk * s, b, s)
    if step is TYPE6_A_MOVE:
        if lam != 3:
            raise PreconditionError(f"type6_a_move needs lambda = 3, type {t} has {lam}")
        T = s - b
        return MukaiVector.of(2 * r - 3 * a, r - a, -b - 3 * T, -T)
    if step is ORD3_B_MOVE:
        if ordk != 3:
            raise PreconditionError(f"ord3_b_move needs ord_k = 3, type {t} has {ordk}")
        T = s - a
        return MukaiVector.of(2 * r - 3 * b, -a - 3 * T, r - b, -T)
    if step is PSI_DUAL_MOVE:
        if ordk not in (4, 6):
            raise PreconditionError(f"psi_dual_move needs ord_k in (4, 6), type {t} has {ordk}")
        return MukaiVector.of(ordk * b - r, a - ordk * s, b, -s)
    raise PreconditionError(f"unknown transform step {step!r}")


@dataclass(frozen=True)
class TransformLog:
    """Replayable sequence of steps; replay(t, v) reproduces the output."""

    steps: tuple[TransformStep, ...] = ()

    def replay(self, t: int, v: MukaiVector) -> MukaiVector:
        for step in self.steps:
            v = apply_transform(t, step, v)
        return v

    def to_json(self) -> list[dict]:
        return [step.describe() for step in self.steps]

    @classmethod
    def from_json(cls, items: list[dict]) -> "TransformLog":
        return cls(tuple(step_from_json(item) for item in items))

    def __len__(self) -> int:
        return len(self.steps)


# ---------------------------------------------------------------------------
# reduced-form membership

# admissible values of a/r: {0} for lambda = 1, {0, 1/lambda} otherwise;
# admissible b/r: {0, 1/ord} plus {1/2} for ord 4 and [1/3, 1/2] for ord 6.


def _a_reduced(a: int, r: int, lam: int) -> bool:
    return a == 0 or (lam > 1 and lam * a == r)


def _b_reduced(b: int, r: int, ordk: int) -> bool:
    if b == 0 or ordk * b == r:
        return True
    if ordk == 4:
        return 2 * b == r
    if ordk == 6:
        return r <= 3 * b and 2 * b <= r
    return False


def matches_reduced_form(t: int, v: MukaiVector) -> bool:
    """True iff v twist-normalizes to one of the registered row patterns."""
    data = surface_invariants(t)
    if v.r < 1:
        return False
    a = v.a % v.r
    b = v.b % v.r
    return _a_reduced(a, v.r, data.lam) and _b_reduced(b, v.r, data.ord_k)


# ---------------------------------------------------------------------------
# the reduction loop


def _emit(steps: list[TransformStep], t: int, step: TransformStep, v: MukaiVector):
    steps.append(step)
    return apply_transform(t, step, v)


def _normalize_twist(steps, t, v):
    """Single twist putting a and b into [0, r)."""
    r = v.r
    x = -(v.a // r)
    y = -(v.b // r)
    if x or y:
        v = _emit(steps, t, TwistBy(DivisorClass(x, y)), v)
    return v


def _flip(steps, t, v):
    """Dual followed by one twist: a -> (r - a) mod r, b -> (r - b) mod r."""
    v = _emit(steps, t, DUAL, v)
    x = 1 if v.a < 0 else 0
    y = 1 if v.b < 0 else 0
    if x or y:
        v = _emit(steps, t, TwistBy(DivisorClass(x, y)), v)
    return v


def reduce_to_table(t: int, v: MukaiVector) -> tuple[MukaiVector, TransformLog]:
    """Drive a primitive positive-rank vector to a reduced row pattern.

    Rank-reducing steps strictly decrease the rank and keep it positive, so
    at most rank(v) of them occur; the square and primitivity are preserved
    throughout and the returned log replays the input to the output.

    One residue class on type 6 is genuinely irreducible under this move
    set: for 3 | r and (a, b) = +-(1, 2) mod 3 every step fixes the pair
    {(r, a, b), (r, -a, -b)} mod 3, while all row patterns avoid those
    residues.  Such vectors are returned in the canonical stuck form
    (3q, q*A0 + 2q*B0, s), which matches_reduced_form rejects.
    """
    if v.r < 1:
        raise PreconditionError(f"reduction needs rank >= 1, got {v.r}")
    if not v.is_primitive():
        raise PreconditionError(f"reduction needs a primitive vector, got {v.text()}")

    data = surface_invariants(t)
    lam, ordk = data.lam, data.ord_k
    steps: list[TransformStep] = []
    fuel = 20 * v.r + 100

    while True:
        fuel -= 1
        if fuel < 0:
            raise AssertionError(f"reduction failed to converge on {v.text()} (type {t})")
        v = _normalize_twist(steps, t, v)
        r, a, b, s = v.as_tuple()

        if not _a_reduced(a, r, lam):
            if 2 * a > r:
                v = _flip(steps, t, v)
                continue
            if lam * a < r:
                v = _emit(steps, t, PHI_INV, v)
                continue
            # lambda = 3 and r/3 < a <= r/2
            v = _emit(steps, t, TYPE6_A_MOVE, v)
            continue

        if _b_reduced(b, r, ordk):
            return v, TransformLog(tuple(steps))

        flip_safe = a == 0 or 2 * a == r
        if 2 * b > r and flip_safe:
            v = _flip(steps, t, v)
            continue
        if ordk * b < r:
            v = _emit(steps, t, PSI_INV, v)
            continue
        if ordk == 3:
            if 3 * b < 2 * r:
                v = _emit(steps, t, ORD3_B_MOVE, v)
                continue
            if 3 * b == 2 * r:
                # a = r/3 here; the escape below is rank-neutral and moves b
                # off the stuck residue unless r = 3 (k | s forces k = 1).
                k = r // 3
                if s % k == 0:
                    return v, TransformLog(tuple(steps))
                v = _emit(steps, t, TYPE6_A_MOVE, v)
                continue
            v = _emit(steps, t, TwistBy(DivisorClass(0, -1)), v)
            v = _emit(steps, t, PSI, v)
            continue
        # ord 4 or 6, r/ord < b < 2r/ord after the safe flip
        v = _emit(steps, t, PSI_DUAL_MOVE, v)


def count_rank_reducing(t: int, v: MukaiVector, log: TransformLog) -> int:
    """Number of log steps that strictly decreased the rank."""
    n = 0
    for step in log.steps:
        w = apply_transform(t, step, v)
        if w.r < v.r:
            n += 1
        v = w
    return n


# ---------------------------------------------------------------------------
# exceptional rank-two families


class ExceptionalKind(Enum):
    RANK2_TRIVIAL = "Rank2Trivial"
    RANK2_TYPE1_B0 = "Rank2Type1B0"


def detect_exceptional(t: int, v: MukaiVector) -> ExceptionalKind | None:
    """Twist-orbit test for the two exceptional rank-two vectors.

    (2, 0, -1) twisted by any line bundle: ord(K) = 2, rank 2, both c1
    coefficients even, square 4.  (2, B0, -1) twisted, on type 1 only:
    rank 2, a even, b odd, square 4.
    """
    data = surface_invariants(t)
    if v.r != 2 or square(v) != 4:
        return None
    if data.ord_k == 2 and v.a % 2 == 0 and v.b % 2 == 0:
        return ExceptionalKind.RANK2_TRIVIAL
    if t == 1 and v.a % 2 == 0 and v.b % 2 == 1:
        return ExceptionalKind.RANK2_TYPE1_B0
    return None
