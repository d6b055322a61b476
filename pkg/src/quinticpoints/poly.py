"""Sparse multivariate polynomials and rational functions over Q or Q(i).

Every displayed identity in this package is proved by exact expansion here:
polynomials are dicts keyed by exponent vectors, rational functions are
unreduced numerator/denominator pairs compared by cross-multiplication.
Polynomial GCD is deliberately out of scope; zero-testing and evaluation are
all the certificates need.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from .exact import GAUSSIAN_ZERO, GaussianRational

FIELD_Q = "Q"
FIELD_QI = "Qi"


class FieldMismatch(ValueError):
    """Operands live over different coefficient fields."""


class NotQuadratic(ValueError):
    """discriminant_quadratic needs degree exactly 2 in the chosen variable."""


class DivisionByZeroPoly(ZeroDivisionError):
    """A denominator polynomial is identically zero."""


class PoleAtPoint(ZeroDivisionError):
    """Evaluation hit a vanishing denominator."""


def _coerce(field: str, value):
    if field == FIELD_Q:
        if isinstance(value, GaussianRational):
            if not value.is_rational():
                raise FieldMismatch("Q(i) scalar in a Q context")
            return value.re
        return Fraction(value)
    return GaussianRational.of(
        value if not isinstance(value, float) else Fraction(value)
    )


def _zero(field: str):
    return Fraction(0) if field == FIELD_Q else GAUSSIAN_ZERO


class MultiPoly:
    """Sparse polynomial: a map from exponent vectors to nonzero coefficients.

    Variables are identified by (case-sensitive) name and unified
    alphabetically when two polynomials meet.  Terms print in graded
    lexicographic order, so equal polynomials print identically.
    """

    __slots__ = ("field", "vars", "terms")

    def __init__(self, field, vars, terms, _skip_clean=False):
        self.field = field
        self.vars = tuple(vars)
        if _skip_clean:
            self.terms = terms
        else:
            clean = {}
            for exps, coeff in terms.items():
                coeff = _coerce(field, coeff)
                if coeff:
                    if len(exps) != len(self.vars):
                        raise ValueError("exponent arity != variable arity")
                    clean[tuple(exps)] = coeff
            self.terms = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero(field=FIELD_Q) -> "MultiPoly":
        return MultiPoly(field, (), {})

    @staticmethod
    def constant(value, field=FIELD_Q) -> "MultiPoly":
        return MultiPoly(field, (), {(): value})

    @staticmethod
    def variable(name: str, field=FIELD_Q) -> "MultiPoly":
        return MultiPoly(field, (name,), {(1,): 1})

    @staticmethod
    def variables(names: str, field=FIELD_Q):
        """Convenience: ``x, y = MultiPoly.variables("x y")``."""
        return tuple(MultiPoly.variable(n, field) for n in names.split())

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        """Variables that actually occur with a positive exponent."""
        used = [False] * len(self.vars)
        for exps in self.terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def _projected(self) -> "MultiPoly":
        keep = self.support()
        if keep == self.vars:
            return self
        idx = [self.vars.index(v) for v in keep]
        terms = {tuple(e[i] for i in idx): c for e, c in self.terms.items()}
        return MultiPoly(self.field, keep, terms, _skip_clean=True)

    def on_vars(self, vars) -> "MultiPoly":
        """Re-express on a superset of the variables."""
        vars = tuple(vars)
        if vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(vars)}
        for v in self.support():
            if v not in pos:
                raise ValueError(f"variable {v} missing from target list")
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(vars)
            for v, e in zip(self.vars, exps):
                if e:
                    new[pos[v]] = e
            terms[tuple(new)] = coeff
        return MultiPoly(self.field, vars, terms, _skip_clean=True)

    def _unified(self, other: "MultiPoly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        return self.on_vars(vars), other.on_vars(vars), vars

    def to_field(self, field: str) -> "MultiPoly":
        if field == self.field:
            return self
        return MultiPoly(field, self.vars, dict(self.terms))

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.field)
        a, b, vars = self._unified(other)
        terms = dict(a.terms)
        zero = _zero(self.field)
        for exps, coeff in b.terms.items():
            s = terms.get(exps, zero) + coeff
            if s:
                terms[exps] = s
            else:
                terms.pop(exps, None)
        return MultiPoly(self.field, vars, terms, _skip_clean=True)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            self.field, self.vars, {e: -c for e, c in self.terms.items()},
            _skip_clean=True,
        )

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.field)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return NotImplemented
        if not isinstance(other, MultiPoly):
            other = MultiPoly.constant(other, self.field)
        a, b, vars = self._unified(other)
        terms: dict = {}
        zero = _zero(self.field)
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(key, zero) + c1 * c2
                if s:
                    terms[key] = s
                else:
                    terms.pop(key, None)
        return MultiPoly(self.field, vars, terms, _skip_clean=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return as_rational_function(self, self.field) / other

    def __rtruediv__(self, other):
        return other * RationalFunction(MultiPoly.constant(1, self.field), self)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.constant(1, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            if n > 1:
                base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = MultiPoly.constant(other, self.field)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        if self.field != other.field:
            return False
        a = self._projected()
        b = other._projected()
        return a.vars == b.vars and a.terms == b.terms

    def __hash__(self):
        a = self._projected()
        return hash((a.field, a.vars, frozenset(a.terms.items())))

    # -- queries ------------------------------------------------------------

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in one variable; zero polynomial -> -1."""
        if not self.terms:
            return -1
        if var is None:
            return max(sum(e) for e in self.terms)
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.terms)

    def coefficient_of(self, var: str, power: int) -> "MultiPoly":
        """The coefficient of var**power, a polynomial in the other variables."""
        if var not in self.vars:
            return self if power == 0 else MultiPoly.zero(self.field)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i] == power:
                terms[exps[:i] + exps[i + 1:]] = coeff
        return MultiPoly(self.field, rest, terms, _skip_clean=True)

    def constant_value(self):
        """The scalar value of a constant polynomial."""
        if self.degree() > 0:
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), _zero(self.field))

    def derivative(self, var: str) -> "MultiPoly":
        if var not in self.vars:
            return MultiPoly.zero(self.field)
        i = self.vars.index(var)
        terms = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                key = exps[:i] + (exps[i] - 1,) + exps[i + 1:]
                terms[key] = coeff * exps[i]
        return MultiPoly(self.field, self.vars, terms, _skip_clean=True)

    # -- substitution / evaluation ------------------------------------------

    def substitute(self, bindings: dict) -> "RationalFunction":
        """Compose with rational-function bindings, exactly.

        Unbound variables stay symbolic.  Values may be scalars, MultiPoly or
        RationalFunction.  The result's denominator is the product of binding
        denominators raised to the needed powers (reduced by content only).
        """
        nums: dict[str, MultiPoly] = {}
        dens: dict[str, MultiPoly] = {}
        for name, value in bindings.items():
            rf = as_rational_function(value, self.field)
            if rf.den.is_zero:
                raise DivisionByZeroPoly(f"binding for {name} has zero denominator")
            nums[name] = rf.num
            dens[name] = rf.den
        # variables sharing a denominator polynomial share one power of it in
        # the common denominator (keeps f(p)+f(q)-f(r)-f(s)-style sums small)
        groups: list[tuple[MultiPoly, list[str]]] = []
        for name, den_poly in dens.items():
            for existing, members in groups:
                if existing == den_poly:
                    members.append(name)
                    break
            else:
                groups.append((den_poly, [name]))
        group_of = {
            name: gi for gi, (_, members) in enumerate(groups) for name in members
        }
        group_max = [0] * len(groups)
        for exps in self.terms:
            totals = [0] * len(groups)
            for v, e in zip(self.vars, exps):
                if v in group_of and e:
                    totals[group_of[v]] += e
            for gi, tot in enumerate(totals):
                if tot > group_max[gi]:
                    group_max[gi] = tot
        acc = MultiPoly.zero(self.field)
        for exps, coeff in self.terms.items():
            term = MultiPoly.constant(coeff, self.field)
            totals = [0] * len(groups)
            for v, e in zip(self.vars, exps):
                if v in nums:
                    if e:
                        term = term * nums[v] ** e
                        totals[group_of[v]] += e
                elif e:
                    term = term * MultiPoly.variable(v, self.field) ** e
            for gi, (den_poly, _) in enumerate(groups):
                deficit = group_max[gi] - totals[gi]
                if deficit:
                    term = term * den_poly**deficit
            acc = acc + term
        den = MultiPoly.constant(1, self.field)
        for gi, (den_poly, _) in enumerate(groups):
            if group_max[gi]:
                den = den * den_poly ** group_max[gi]
        return RationalFunction(acc, den)

    def eval(self, point: dict):
        """Exact value at a fully scalar point."""
        missing = [v for v in self.support() if v not in point]
        if missing:
            raise ValueError(f"unbound variables: {missing}")
        vals = {v: _coerce(self.field, point[v]) for v in self.vars if v in point}
        total = _zero(self.field)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(self.vars, exps):
                if e:
                    term = term * vals[v] ** e
            total = total + term
        return total

    # -- printing -----------------------------------------------------------

    def _ordered_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True
        )

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in self._ordered_terms():
            factors = []
            cs = str(coeff)
            if isinstance(coeff, GaussianRational) and coeff.re and coeff.im:
                cs = f"({cs})"
            factors.append(cs)
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.field}, {self})"


def as_poly(value, field=FIELD_Q, vars=()) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value.to_field(field) if value.field != field else value
    p = MultiPoly.constant(value, field)
    return p.on_vars(vars) if vars else p


def _int_content(poly: MultiPoly) -> Fraction:
    """gcd of all rational components of the coefficients (positive)."""
    nums: list[int] = []
    dens: list[int] = []
    for c in poly.terms.values():
        comps = (c,) if isinstance(c, Fraction) else (c.re, c.im)
        for q in comps:
            if q:
                nums.append(abs(q.numerator))
                dens.append(q.denominator)
    if not nums:
        return Fraction(1)
    return Fraction(reduce(math.gcd, nums), reduce(math.lcm, dens))


class RationalFunction:
    """Quotient of two MultiPoly values; equality by cross-multiplication.

    Not reduced to lowest terms (no multivariate GCD); only the integer
    content and the sign of the denominator's leading term are normalized so
    printing is stable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.constant(1, num.field)
        if num.field != den.field:
            raise FieldMismatch(f"{num.field} vs {den.field}")
        if den.is_zero:
            raise DivisionByZeroPoly("denominator is identically zero")
        if num.is_zero:
            den = MultiPoly.constant(1, num.field)
        else:
            lead = den._ordered_terms()[0][1]
            lead_sign = lead if isinstance(lead, Fraction) else (
                lead.re if lead.re else lead.im
            )
            content = _int_content(den) * (1 if lead_sign > 0 else -1)
            if content != 1:
                inv = MultiPoly.constant(1 / content, num.field)
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @property
    def field(self) -> str:
        return self.num.field

    @property
    def is_identically_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        other = as_rational_function(other, self.field)
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_rational_function(other, self.field))

    def __rsub__(self, other):
        return as_rational_function(other, self.field) + (-self)

    def __mul__(self, other):
        other = as_rational_function(other, self.field)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_rational_function(other, self.field)
        if other.num.is_zero:
            raise DivisionByZeroPoly("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return as_rational_function(other, self.field) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self.den, self.num) ** (-n)
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            other = as_rational_function(other, self.field)
        return (self.num * other.den - other.num * self.den).is_zero

    def __hash__(self):
        raise TypeError("RationalFunction is not hashable")

    def substitute(self, bindings: dict) -> "RationalFunction":
        return self.num.substitute(bindings) / self.den.substitute(bindings)

    def eval(self, point: dict):
        d = self.den.eval(point)
        if not d:
            raise PoleAtPoint(f"denominator vanishes at {point}")
        return self.num.eval(point) / d

    def __str__(self):
        if self.den == MultiPoly.constant(1, self.field):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"


def as_rational_function(value, field=FIELD_Q) -> RationalFunction:
    if isinstance(value, RationalFunction):
        if value.field != field:
            return RationalFunction(value.num.to_field(field), value.den.to_field(field))
        return value
    if isinstance(value, MultiPoly):
        return RationalFunction(value.to_field(field) if value.field != field else value)
    return RationalFunction(MultiPoly.constant(value, field))


def is_identically_zero(f) -> bool:
    """Verdict of every identity check: no surviving numerator terms."""
    if isinstance(f, MultiPoly):
        return f.is_zero
    return as_rational_function(f).is_identically_zero


def discriminant_quadratic(p: MultiPoly, var: str) -> MultiPoly:
    """b^2 - 4ac for p = a*var^2 + b*var + c (degree in var exactly 2)."""
    if p.degree(var) != 2:
        raise NotQuadratic(f"degree in {var} is {p.degree(var)}, need 2")
    a = p.coefficient_of(var, 2)
    b = p.coefficient_of(var, 1)
    c = p.coefficient_of(var, 0)
    return b * b - 4 * a * c
