# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; same interface as ``_pykernels``.

Coefficients stay Python objects (int or Fraction) so results are exact;
the gain comes from typed exponent arithmetic and fewer attribute lookups.
"""


def expand_binomials(factors):
    """Expand prod (1 - q^a t^b)^e for a sequence of (a, b, e) with e > 0."""
    cdef dict poly = {(0, 0): 1}
    cdef dict out
    cdef long a, b, e, x, y, k
    for f in factors:
        a, b, e = f
        for k in range(e):
            out = dict(poly)
            for key, c in poly.items():
                x, y = key
                nk = (x + a, y + b)
                v = out.get(nk, 0) - c
                if v:
                    out[nk] = v
                else:
                    del out[nk]
            poly = out
    return poly


def poly_mul(dict p, dict r):
    cdef dict out = {}
    cdef long x1, y1, x2, y2
    if len(p) < len(r):
        p, r = r, p
    cdef list left = [(k[0], k[1], c) for k, c in p.items()]
    for k2, c2 in r.items():
        x2, y2 = k2
        for x1, y1, c1 in left:
            nk = (x1 + x2, y1 + y2)
            out[nk] = out.get(nk, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def add_scaled(dict acc, dict p, coeff, long dx, long dy):
    """In place: acc += coeff * q^dx t^dy * p. Returns acc."""
    cdef long x, y
    for key, c in p.items():
        x, y = key
        nk = (x + dx, y + dy)
        v = acc.get(nk, 0) + coeff * c
        if v:
            acc[nk] = v
        else:
            acc.pop(nk, None)
    return acc
