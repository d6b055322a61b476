"""Weierstrass curves over Q with exact arithmetic: the chord-tangent group
law in long form, torsion certification, integral rescaling, naive point
search, and the specialization family

    E_t : Y^2 = X^3 - 25 t^4 X^2 - 2500 (c-f)^2 t^4

behind the shipped 100-row table of nontorsion points."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import numpy as np

from .exact import factor_trial, format_rational, parse_rational, rational_square_root


class SingularCurve(ArithmeticError):
    """Zero discriminant: no group law."""


class PointNotOnCurve(ValueError):
    pass


class DegenerateSpecialization(ValueError):
    """t = 0 or c = f collapses the specialization family."""


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    a1: Fraction
    a2: Fraction
    a3: Fraction
    a4: Fraction
    a6: Fraction

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    # standard b- and c-invariants
    @property
    def b2(self):
        return self.a1 * self.a1 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3 * self.a3 + 4 * self.a6

    @property
    def b8(self):
        return (
            self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4
        )

    @property
    def c4(self):
        return self.b2 * self.b2 - 24 * self.b4

    @property
    def discriminant(self) -> Fraction:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def is_singular(self) -> bool:
        return self.discriminant == 0

    def j_invariant(self) -> Fraction:
        d = self.discriminant
        if d == 0:
            raise SingularCurve("j-invariant of a singular curve")
        return self.c4**3 / d

    def rhs(self, x: Fraction) -> Fraction:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def __str__(self):
        return (
            f"y^2 + {self.a1}*xy + {self.a3}*y = "
            f"x^3 + {self.a2}*x^2 + {self.a4}*x + {self.a6}"
        )


@dataclass(frozen=True)
class CurvePoint:
    """Affine point or the identity (point at infinity)."""

    x: Fraction | None = None
    y: Fraction | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise ValueError("affine points need both coordinates")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_identity:
            return "O"
        return f"({format_rational(self.x)}, {format_rational(self.y)})"


IDENTITY = CurvePoint()


def on_curve(curve: WeierstrassCurve, point: CurvePoint) -> bool:
    if point.is_identity:
        return True
    x, y = point.x, point.y
    return y * y + curve.a1 * x * y + curve.a3 * y == curve.rhs(x)


def negate(curve: WeierstrassCurve, point: CurvePoint) -> CurvePoint:
    if point.is_identity:
        return point
    return CurvePoint(point.x, -point.y - curve.a1 * point.x - curve.a3)


def add(curve: WeierstrassCurve, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Chord-tangent addition in long Weierstrass form."""
    if curve.is_singular:
        raise SingularCurve(str(curve))
    for pt in (p, q):
        if not on_curve(curve, pt):
            raise PointNotOnCurve(str(pt))
    if p.is_identity:
        return q
    if q.is_identity:
        return p
    a1, a2, a3, a4, a6 = curve.a1, curve.a2, curve.a3, curve.a4, curve.a6
    x1, y1, x2, y2 = p.x, p.y, q.x, q.y
    if x1 == x2 and y2 == -y1 - a1 * x1 - a3:
        return IDENTITY
    if x1 != x2:
        lam = (y2 - y1) / (x2 - x1)
        nu = (y1 * x2 - y2 * x1) / (x2 - x1)
    else:
        denom = 2 * y1 + a1 * x1 + a3
        lam = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denom
        nu = (-(x1**3) + a4 * x1 + 2 * a6 - a3 * y1) / denom
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(x3, y3)


def mul(curve: WeierstrassCurve, n: int, point: CurvePoint) -> CurvePoint:
    if n < 0:
        return mul(curve, -n, negate(curve, point))
    result = IDENTITY
    base = point
    while n:
        if n & 1:
            result = add(curve, result, base)
        n >>= 1
        if n:
            base = add(curve, base, base)
    return result


def is_nontorsion(curve: WeierstrassCurve, point: CurvePoint) -> bool:
    """n*P != O for n <= 16.

    Rational torsion points have order at most 12, so surviving every
    multiple up to 16 certifies infinite order.
    """
    if not on_curve(curve, point):
        raise PointNotOnCurve(str(point))
    if point.is_identity:
        return False
    acc = point
    for _ in range(15):
        acc = add(curve, acc, point)
        if acc.is_identity:
            return False
    return True


# ---------------------------------------------------------------------------
# integral model and naive search

def _minimal_clearing_factor(denominators_with_weights) -> int:
    """Smallest positive u with u^w * (1/d) integral for every (d, w)."""
    u = 1
    needed: dict[int, int] = {}
    for d, w in denominators_with_weights:
        for p, e in factor_trial(d).items():
            k = -(-e // w)  # ceil
            if needed.get(p, 0) < k:
                needed[p] = k
    for p, k in needed.items():
        u *= p**k
    return u


@dataclass(frozen=True)
class IntegralModel:
    curve: WeierstrassCurve
    u: int

    def to_integral(self, point: CurvePoint) -> CurvePoint:
        if point.is_identity:
            return point
        return CurvePoint(self.u**2 * point.x, self.u**3 * point.y)

    def from_integral(self, point: CurvePoint) -> CurvePoint:
        if point.is_identity:
            return point
        u = Fraction(self.u)
        return CurvePoint(point.x / u**2, point.y / u**3)


def integral_model(curve: WeierstrassCurve) -> IntegralModel:
    """Rescale (x, y) -> (u^2 x, u^3 y) with the minimal positive integer u
    making every coefficient integral."""
    weights = zip(
        (curve.a1, curve.a2, curve.a3, curve.a4, curve.a6), (1, 2, 3, 4, 6)
    )
    u = _minimal_clearing_factor(
        (coeff.denominator, w) for coeff, w in weights if coeff.denominator > 1
    )
    scaled = WeierstrassCurve(
        curve.a1 * u,
        curve.a2 * u**2,
        curve.a3 * u**3,
        curve.a4 * u**4,
        curve.a6 * u**6,
    )
    return IntegralModel(curve=scaled, u=u)


@dataclass(frozen=True)
class SearchBounds:
    """X = m/e^2 enumeration window: |m| <= num_bound * e^2, 1 <= e <= den_bound."""

    num_bound: int
    den_bound: int = 1

    def __post_init__(self):
        if self.num_bound < 1 or self.den_bound < 1:
            raise ValueError("bounds must be positive")


_FILTER_PRIMES = (63901, 63907, 63913, 63929, 63949)


def _square_candidates(m_values, a2: int, a4: int, a6: int, e: int):
    """Vectorized quadratic-residue sieve for m^3 + a2 m^2 e^2 + a4 m e^4 +
    a6 e^6 being a perfect square; survivors still need exact verification."""
    keep = np.ones(len(m_values), dtype=bool)
    for p in _FILTER_PRIMES:
        m = m_values % p
        val = (
            m * m % p * m
            + (a2 % p) * (e * e % p) % p * (m * m % p)
            + (a4 % p) * (pow(e, 4, p)) % p * m
            + (a6 % p) * pow(e, 6, p)
        ) % p
        # quadratic residues mod p
        roots = np.arange((p + 1) // 2, dtype=np.int64)
        squares = np.zeros(p, dtype=bool)
        squares[(roots * roots) % p] = True
        keep &= squares[val]
        if not keep.any():
            break
    return m_values[keep]


def search_points(curve: WeierstrassCurve, bounds: SearchBounds) -> list[CurvePoint]:
    """Enumerate X = m/e^2 on the integral model (e ascending, m ascending),
    test the right side for a rational square, and map hits back.  Output
    order is deterministic."""
    if curve.is_singular:
        raise SingularCurve(str(curve))
    model = integral_model(curve)
    ic = model.curve
    found: list[CurvePoint] = []
    short = ic.a1 == 0 and ic.a3 == 0
    a2n, a4n, a6n = int(ic.a2), int(ic.a4), int(ic.a6)
    for e in range(1, bounds.den_bound + 1):
        limit = bounds.num_bound * e * e
        ms = np.arange(-limit, limit + 1, dtype=np.int64)
        if e > 1:
            ms = ms[np.gcd(ms, e) == 1]
        if short:
            candidates = _square_candidates(ms, a2n, a4n, a6n, e)
        else:
            candidates = ms
        for m in candidates:
            m = int(m)
            x = Fraction(m, e * e)
            # y^2 + (a1 x + a3) y - rhs(x) = 0
            lin = ic.a1 * x + ic.a3
            disc = lin * lin + 4 * ic.rhs(x)
            root = rational_square_root(disc)
            if root is None:
                continue
            for sign in (1, -1) if root else (1,):
                y = (-lin + sign * root) / 2
                found.append(model.from_integral(CurvePoint(x, y)))
    return found


# ---------------------------------------------------------------------------
# the specialization family and the shipped table

def specialization_curve(c: int, f: int, t: Fraction) -> WeierstrassCurve:
    """E_t : Y^2 = X^3 - 25 t^4 X^2 - 2500 (c-f)^2 t^4."""
    t = Fraction(t)
    if c == f or t == 0:
        raise DegenerateSpecialization("need c != f and t != 0")
    t4 = t**4
    return WeierstrassCurve(0, -25 * t4, 0, 0, -2500 * (c - f) ** 2 * t4)


@dataclass(frozen=True)
class TableRow:
    d: int
    t: Fraction
    x: Fraction
    y: Fraction

    def point(self) -> CurvePoint:
        return CurvePoint(self.x, self.y)

    def curve(self) -> WeierstrassCurve:
        return specialization_curve(self.d, 0, self.t)


def load_table() -> list[TableRow]:
    """The 100 rows (D = 1..100) of specialization data shipped with the
    package: for each D a rational t and a nontorsion point on E_t."""
    text = resources.files("quinticpoints.data").joinpath("table_d100.csv").read_text()
    rows = []
    for rec in csv.DictReader(text.splitlines()):
        rows.append(
            TableRow(
                d=int(rec["D"]),
                t=parse_rational(rec["t"]),
                x=parse_rational(rec["X"]),
                y=parse_rational(rec["Y"]),
            )
        )
    return rows


@dataclass(frozen=True)
class RowReport:
    d: int
    t: Fraction
    on_curve: bool
    nontorsion: bool

    @property
    def ok(self) -> bool:
        return self.on_curve and self.nontorsion

    def to_json(self) -> dict:
        return {
            "D": self.d,
            "t": format_rational(self.t),
            "on_curve": self.on_curve,
            "nontorsion": self.nontorsion,
            "status": "ok" if self.ok else "FAIL",
        }


def verify_row(row: TableRow) -> RowReport:
    curve = row.curve()
    point = row.point()
    member = on_curve(curve, point)
    nontor = member and is_nontorsion(curve, point)
    return RowReport(d=row.d, t=row.t, on_curve=member, nontorsion=nontor)


def table_verify(rows) -> list[RowReport]:
    return [verify_row(row) for row in rows]


# ---------------------------------------------------------------------------
# evidence search for the positive-rank conjecture

def rationals_by_height(max_height: int):
    """Positive rationals ordered by max(numerator, denominator), then
    denominator, then numerator.  E_t only sees t^4, so negative t are
    redundant and omitted."""
    for h in range(1, max_height + 1):
        pairs = [(h, den) for den in range(1, h + 1)] + [
            (num, h) for num in range(1, h)
        ]
        for num, den in sorted(pairs, key=lambda nd: (nd[1], nd[0])):
            if math.gcd(num, den) == 1:
                yield Fraction(num, den)


def conjecture2_search(
    c: int,
    f: int,
    t_candidates,
    bounds: SearchBounds,
):
    """First t in the given enumeration whose specialization E_t carries a
    nontorsion point within the search bounds.  Evidence for the conjecture,
    never proof; None when the enumeration is exhausted."""
    if c == f:
        raise DegenerateSpecialization("need c != f")
    for t in t_candidates:
        if t == 0:
            continue
        curve = specialization_curve(c, f, t)
        if curve.is_singular:
            continue
        for point in search_points(curve, bounds):
            if not point.is_identity and is_nontorsion(curve, point):
                return t, point
    return None
