"""Period sequences: constant terms of successive powers of a Laurent polynomial."""

from __future__ import annotations

from pwmirror.poly import kernels
from pwmirror.poly.laurent import LaurentPoly, pack, pack_base, unpack


def period_sequence(p: LaurentPoly, max_n: int, prune: bool = False) -> list[int]:
    """Return ``[ct(p**0), ..., ct(p**max_n)]``.

    Powers are built incrementally, ``p**(n+1) = p**n * p``. With ``prune``,
    monomials that cannot get back to the zero exponent vector within the
    remaining multiplications are dropped after each step; the result is
    identical either way.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    nvars = len(p.vars)
    zero = (0,) * nvars
    seq = [1]
    if max_n == 0:
        return seq
    if not p:
        return seq + [0] * max_n

    dbounds = p.degree_bounds()
    base = pack_base([max_n * max(abs(lo), abs(hi)) for lo, hi in dbounds])
    if base is None:
        keyed = lambda k: k  # noqa: E731
        mul = kernels.mul_tuple
        origin = zero
        step = dict(p.items())
    else:
        keyed = lambda k: unpack(k, base, nvars)  # noqa: E731
        mul = kernels.mul_packed
        origin = 0
        step = {pack(k, base): c for k, c in p.items()}

    acc = dict(step)
    for n in range(1, max_n + 1):
        if n > 1:
            acc = mul(acc, step)
        seq.append(acc.get(origin, 0))
        if prune and n < max_n:
            acc = _prune(acc, max_n - n, dbounds, keyed)
    return seq


def _prune(acc: dict, remaining: int, dbounds, keyed) -> dict:
    # After j more factors the exponent moves by at most [j*lo, j*hi] per
    # variable, j in [0, remaining]; keep a term only if -e lies in that hull.
    windows = [(min(0, remaining * lo), max(0, remaining * hi)) for lo, hi in dbounds]
    out = {}
    for k, c in acc.items():
        exps = keyed(k)
        if all(lo <= -e <= hi for e, (lo, hi) in zip(exps, windows)):
            out[k] = c
    return out
