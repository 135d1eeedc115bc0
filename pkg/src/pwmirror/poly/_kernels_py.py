"""Pure-Python multiplication kernels; the reference for the compiled ones."""


def mul_packed(a, b):
    """Product of two packed-key term dicts, zero coefficients dropped."""
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    items_b = list(b.items())
    for ka, ca in a.items():
        for kb, cb in items_b:
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def mul_tuple(a, b):
    """Product of two tuple-keyed term dicts; used when packing would overflow."""
    out = {}
    get = out.get
    items_b = list(b.items())
    for ka, ca in a.items():
        for kb, cb in items_b:
            k = tuple(x + y for x, y in zip(ka, kb))
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}
