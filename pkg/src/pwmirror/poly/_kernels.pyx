# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled multiplication kernels.

``mul_packed`` first tries a fixed-width path (int64 keys and coefficients,
overflow-checked accumulation in a hash map) and falls back to Python-object
coefficients on the first overflow. Results match ``_kernels_py`` exactly.
"""

from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair
from cython.operator cimport dereference as deref, preincrement as inc

cdef extern from *:
    """
    static inline int pw_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int pw_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint pw_mul_ovf(long long a, long long b, long long *r) nogil
    bint pw_add_ovf(long long a, long long b, long long *r) nogil


cdef bint _fixed(dict d, vector[long long]& keys, vector[long long]& coeffs):
    try:
        for k, c in d.items():
            keys.push_back(k)
            coeffs.push_back(c)
    except OverflowError:
        return False
    return True


cdef dict _mul_fixed(vector[long long]& ka, vector[long long]& ca,
                     vector[long long]& kb, vector[long long]& cb):
    cdef unordered_map[long long, long long] acc
    cdef size_t i, j, na = ka.size(), nb = kb.size()
    cdef long long prod, tot, key, ci
    cdef bint overflow = False
    acc.reserve(na * nb if na * nb < 4000000 else 4000000)
    with nogil:
        for i in range(na):
            ci = ca[i]
            for j in range(nb):
                if pw_mul_ovf(ci, cb[j], &prod):
                    overflow = True
                    break
                key = ka[i] + kb[j]
                if pw_add_ovf(acc[key], prod, &tot):
                    overflow = True
                    break
                acc[key] = tot
            if overflow:
                break
    if overflow:
        return None
    cdef dict out = {}
    cdef unordered_map[long long, long long].iterator it = acc.begin()
    while it != acc.end():
        if deref(it).second != 0:
            out[deref(it).first] = deref(it).second
        inc(it)
    return out


cdef dict _mul_object(vector[long long]& ka, list ca, vector[long long]& kb, list cb):
    cdef dict out = {}
    cdef size_t i, j, na = ka.size(), nb = kb.size()
    cdef object ci, key, old
    for i in range(na):
        ci = ca[i]
        for j in range(nb):
            key = ka[i] + kb[j]
            old = out.get(key)
            if old is None:
                out[key] = ci * cb[j]
            else:
                out[key] = old + ci * cb[j]
    return {k: c for k, c in out.items() if c}


def mul_packed(dict a, dict b):
    cdef vector[long long] ka, ca, kb, cb
    if _fixed(a, ka, ca) and _fixed(b, kb, cb):
        res = _mul_fixed(ka, ca, kb, cb)
        if res is not None:
            return res
    ka.clear()
    kb.clear()
    for k in a:
        ka.push_back(k)
    for k in b:
        kb.push_back(k)
    return _mul_object(ka, list(a.values()), kb, list(b.values()))


def mul_tuple(dict a, dict b):
    cdef dict out = {}
    for ka_, ca_ in a.items():
        for kb_, cb_ in b.items():
            k = tuple([x + y for x, y in zip(ka_, kb_)])
            out[k] = out.get(k, 0) + ca_ * cb_
    return {k: c for k, c in out.items() if c}
