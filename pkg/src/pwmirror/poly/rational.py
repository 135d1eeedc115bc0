"""Quotients of Laurent polynomials and exact substitution."""

from __future__ import annotations

from typing import Mapping

from pwmirror.poly.laurent import LaurentPoly, VariableMismatchError, power


class RationalExpr:
    """``numerator / denominator`` with both Laurent polynomials over one variable list.

    A monomial denominator is folded into the numerator whenever the result
    keeps integer coefficients, so a Laurent polynomial always comes back with
    denominator ``1``. Equality is by cross-multiplication.
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: LaurentPoly, denominator: LaurentPoly | None = None):
        if denominator is None:
            denominator = LaurentPoly.constant(1, numerator.vars)
        if numerator.vars != denominator.vars:
            raise VariableMismatchError(f"variables {numerator.vars} vs {denominator.vars}")
        if not denominator:
            raise ZeroDivisionError("denominator is the zero polynomial")
        self.numerator, self.denominator = _fold(numerator, denominator)

    @property
    def vars(self) -> tuple[str, ...]:
        return self.numerator.vars

    @classmethod
    def lift(cls, value, vars) -> "RationalExpr":
        if isinstance(value, RationalExpr):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        if isinstance(value, int):
            return cls(LaurentPoly.constant(value, vars))
        raise TypeError(f"cannot interpret {value!r} as a rational expression")

    def is_polynomial(self) -> bool:
        return self.denominator == 1

    def as_polynomial(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    def __add__(self, other):
        other = RationalExpr.lift(other, self.vars)
        n1, d1, n2, d2 = self.numerator, self.denominator, other.numerator, other.denominator
        if d1 == d2:
            return RationalExpr(n1 + n2, d1)
        return RationalExpr(n1 * d2 + n2 * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-RationalExpr.lift(other, self.vars))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalExpr.lift(other, self.vars)
        return RationalExpr(self.numerator * other.numerator, self.denominator * other.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalExpr.lift(other, self.vars)
        if not other.numerator:
            raise ZeroDivisionError("division by the zero polynomial")
        return RationalExpr(self.numerator * other.denominator, self.denominator * other.numerator)

    def __rtruediv__(self, other):
        return RationalExpr.lift(other, self.vars) / self

    def __pow__(self, n: int):
        if n >= 0:
            return RationalExpr(power(self.numerator, n), power(self.denominator, n))
        if not self.numerator:
            raise ZeroDivisionError("negative power of zero")
        return RationalExpr(power(self.denominator, -n), power(self.numerator, -n))

    def __eq__(self, other) -> bool:
        if isinstance(other, (LaurentPoly, int)):
            other = RationalExpr.lift(other, self.vars)
        if not isinstance(other, RationalExpr):
            return NotImplemented
        if self.vars != other.vars:
            return False
        return self.numerator * other.denominator == other.numerator * self.denominator

    __hash__ = None  # equality is not structural

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalExpr({self.vars!r}, {str(self)!r})"


def _fold(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    vars = num.vars
    one = LaurentPoly.constant(1, vars)
    if not num:
        return num, one
    if not den.is_monomial():
        return num, den
    ((key, c),) = den.items()
    num = num.shift([-e for e in key])
    if c < 0:
        num, c = -num, -c
    if all(v % c == 0 for _, v in num.items()):
        return LaurentPoly(vars, {k: v // c for k, v in num.items()}), one
    return num, LaurentPoly.constant(c, vars)


def _substitute_poly(p: LaurentPoly, images: list[RationalExpr], new_vars) -> RationalExpr:
    # Clear negative and positive powers with a common denominator so every
    # factor is raised to a nonnegative power.
    bounds = [(min(0, lo), max(0, hi)) for lo, hi in p.degree_bounds()]
    zero = LaurentPoly(new_vars)
    for (lo, _), img in zip(bounds, images):
        if lo < 0 and not img.numerator:
            raise ZeroDivisionError("substitution sends a variable with a negative power to 0")
    cache: dict[tuple[int, str, int], LaurentPoly] = {}

    def pw(i: int, which: str, e: int) -> LaurentPoly:
        key = (i, which, e)
        if key not in cache:
            base = images[i].numerator if which == "n" else images[i].denominator
            cache[key] = power(base, e)
        return cache[key]

    total = zero
    for key, c in p.items():
        term = LaurentPoly.constant(c, new_vars)
        for i, e in enumerate(key):
            lo, hi = bounds[i]
            if e - lo:
                term = term * pw(i, "n", e - lo)
            if hi - e:
                term = term * pw(i, "d", hi - e)
        total = total + term
    den = LaurentPoly.constant(1, new_vars)
    for i, (lo, hi) in enumerate(bounds):
        if lo:
            den = den * pw(i, "n", -lo)
        if hi:
            den = den * pw(i, "d", hi)
    return RationalExpr(total, den)


def substitute(target, mapping: Mapping[str, object]) -> RationalExpr:
    """Substitute ``mapping[v]`` for every variable ``v`` of ``target``.

    Images may be :class:`RationalExpr`, :class:`LaurentPoly` or ``int`` and
    must share one variable list, which becomes the result's.
    """
    if isinstance(target, LaurentPoly):
        target = RationalExpr(target)
    missing = [v for v in target.vars if v not in mapping]
    if missing:
        raise KeyError(f"no image for variables {missing}")
    new_vars = None
    for v in target.vars:
        img = mapping[v]
        if isinstance(img, (RationalExpr, LaurentPoly)):
            if new_vars is None:
                new_vars = img.vars
            elif img.vars != new_vars:
                raise VariableMismatchError("images live over different variable lists")
    if new_vars is None:
        new_vars = ()
    images = [RationalExpr.lift(mapping[v], new_vars) for v in target.vars]
    num = _substitute_poly(target.numerator, images, new_vars)
    den = _substitute_poly(target.denominator, images, new_vars)
    if not den.numerator:
        raise ZeroDivisionError("denominator vanishes after substitution")
    return num / den
