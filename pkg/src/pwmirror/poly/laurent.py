"""Exact sparse multivariate Laurent polynomials over the integers.

Terms are stored in a dict keyed by exponent tuples. Multiplication packs the
exponent tuples into single signed integers (a balanced base-B encoding, which
is additive) and hands the packed dicts to the compiled kernel when it is
available; see :mod:`pwmirror.poly.kernels`.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from pwmirror.poly import kernels

Monomial = tuple[int, ...]

# Packed keys must stay inside a signed 64-bit word for the compiled kernel.
_PACK_LIMIT = 1 << 62


class VariableMismatchError(ValueError):
    """Operands live over different ordered variable lists."""


def format_term(coeff: int, names: Sequence[str], exps: Sequence[int]) -> str:
    """Format one term without its sign, e.g. ``3*x^2*y^-1``."""
    factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e != 0]
    c = abs(coeff)
    if not factors:
        return str(c)
    if c == 1:
        return "*".join(factors)
    return f"{c}*" + "*".join(factors)


def format_terms(items: Iterable[tuple[int, Sequence[str], Sequence[int]]]) -> str:
    """Join already-ordered ``(coeff, names, exps)`` triples with signs."""
    out = []
    for coeff, names, exps in items:
        body = format_term(coeff, names, exps)
        if not out:
            out.append(body if coeff > 0 else f"-{body}")
        else:
            out.append((" + " if coeff > 0 else " - ") + body)
    return "".join(out) if out else "0"


def pack_base(bounds: Sequence[int]) -> int | None:
    """Base for packing exponents bounded in absolute value by ``bounds``.

    Returns None when the packed keys would not fit the kernel word size.
    """
    m = max(bounds, default=0)
    base = 2 * m + 1
    if base ** len(bounds) >= _PACK_LIMIT:
        return None
    return base


def pack(key: Monomial, base: int) -> int:
    k = 0
    for e in reversed(key):
        k = k * base + e
    return k


def unpack(k: int, base: int, nvars: int) -> Monomial:
    half = base // 2
    out = []
    for _ in range(nvars):
        r = k % base
        if r > half:
            r -= base
        out.append(r)
        k = (k - r) // base
    return tuple(out)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients.

    >>> x = LaurentPoly.variable("x", ("x",))
    >>> str((x + 1) ** 2)
    '1 + 2*x + x^2'
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Monomial, int] | None = None):
        self._vars = tuple(vars)
        n = len(self._vars)
        clean: dict[Monomial, int] = {}
        for key, c in (terms or {}).items():
            key = tuple(int(e) for e in key)
            if len(key) != n:
                raise ValueError(f"monomial {key} does not match {n} variables")
            if c:
                clean[key] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, vars: tuple[str, ...], terms: dict[Monomial, int]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._vars = vars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, vars: Sequence[str]) -> "LaurentPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def monomial(cls, exps: Sequence[int], vars: Sequence[str], coeff: int = 1) -> "LaurentPoly":
        return cls(vars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, name: str, vars: Sequence[str]) -> "LaurentPoly":
        vars = tuple(vars)
        exps = [0] * len(vars)
        exps[vars.index(name)] = 1
        return cls._trusted(vars, {tuple(exps): 1})

    @property
    def vars(self) -> tuple[str, ...]:
        return self._vars

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coeff(self, key: Sequence[int]) -> int:
        return self._terms.get(tuple(key), 0)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def degree_bounds(self) -> list[tuple[int, int]]:
        """Per-variable (min, max) exponent over the support; (0, 0) if empty."""
        if not self._terms:
            return [(0, 0)] * len(self._vars)
        cols = list(zip(*self._terms))
        return [(min(c), max(c)) for c in cols]

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other._vars != self._vars:
                raise VariableMismatchError(f"variables {self._vars} vs {other._vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return LaurentPoly._trusted(self._vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._trusted(self._vars, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LaurentPoly._trusted(self._vars, _mul_terms(self._terms, other._terms, len(self._vars)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only exist for monomials")
            ((k, c),) = self._terms.items()
            if abs(c) != 1:
                raise ValueError("negative power of a non-unit monomial")
            return LaurentPoly._trusted(self._vars, {tuple(e * n for e in k): c ** -n})
        return power(self, n)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self._vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._vars == other._vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def sorted_items(self) -> list[tuple[Monomial, int]]:
        return sorted(self._terms.items())

    def __str__(self) -> str:
        return format_terms((c, self._vars, k) for k, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"LaurentPoly({self._vars!r}, {str(self)!r})"

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with exponent vector ``exps``."""
        e = tuple(exps)
        return LaurentPoly._trusted(
            self._vars, {tuple(a + b for a, b in zip(k, e)): c for k, c in self._terms.items()}
        )

    def permute(self, order: Sequence[int]) -> "LaurentPoly":
        """Reorder variables: new variable ``i`` is old variable ``order[i]``."""
        return LaurentPoly._trusted(
            tuple(self._vars[i] for i in order),
            {tuple(k[i] for i in order): c for k, c in self._terms.items()},
        )

    def rename(self, names: Sequence[str]) -> "LaurentPoly":
        if len(names) != len(self._vars):
            raise ValueError("rename needs one name per variable")
        return LaurentPoly._trusted(tuple(names), dict(self._terms))


def _mul_terms(a: dict, b: dict, nvars: int) -> dict:
    if not a or not b:
        return {}
    if nvars == 0:
        c = a[()] * b[()]
        return {(): c} if c else {}
    bounds = [
        max(abs(k[i]) for k in a) + max(abs(k[i]) for k in b) for i in range(nvars)
    ]
    base = pack_base(bounds)
    if base is None:
        return kernels.mul_tuple(a, b)
    pa = {pack(k, base): c for k, c in a.items()}
    pb = {pack(k, base): c for k, c in b.items()}
    return {unpack(k, base, nvars): c for k, c in kernels.mul_packed(pa, pb).items()}


def arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    """Apply ``op`` in {'add', 'sub', 'mul'} to two polynomials over the same variables."""
    if a.vars != b.vars:
        raise VariableMismatchError(f"variables {a.vars} vs {b.vars}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def power(p: LaurentPoly, n: int) -> LaurentPoly:
    """``p**n`` for ``n >= 0`` by repeated multiplication; ``p**0 == 1``."""
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    nvars = len(p.vars)
    one = {(0,) * nvars: 1}
    if n == 0:
        return LaurentPoly._trusted(p.vars, one)
    if not p:
        return LaurentPoly._trusted(p.vars, {})
    bounds = [n * max(abs(lo), abs(hi)) for lo, hi in p.degree_bounds()]
    base = pack_base(bounds)
    if base is None:
        acc = dict(p._terms)
        for _ in range(n - 1):
            acc = kernels.mul_tuple(acc, p._terms)
        return LaurentPoly._trusted(p.vars, acc)
    pp = {pack(k, base): c for k, c in p.items()}
    acc = pp
    for _ in range(n - 1):
        acc = kernels.mul_packed(acc, pp)
    return LaurentPoly._trusted(p.vars, {unpack(k, base, nvars): c for k, c in acc.items()})


def constant_term(p: LaurentPoly) -> int:
    return p.coeff((0,) * len(p.vars))


def support(p: LaurentPoly) -> set[Monomial]:
    return set(p.terms)
