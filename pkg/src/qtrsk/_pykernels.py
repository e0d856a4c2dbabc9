"""Pure-Python polynomial kernels.

Polynomials are dicts mapping (e_q, e_t) to nonzero coefficients.
The compiled module ``_ckernels`` exposes the same three functions.
"""


def expand_binomials(factors):
    """Expand prod (1 - q^a t^b)^e for a sequence of (a, b, e) with e > 0."""
    poly = {(0, 0): 1}
    for a, b, e in factors:
        for _ in range(e):
            out = dict(poly)
            for (x, y), c in poly.items():
                key = (x + a, y + b)
                v = out.get(key, 0) - c
                if v:
                    out[key] = v
                else:
                    del out[key]
            poly = out
    return poly


def poly_mul(p, r):
    if len(p) < len(r):
        p, r = r, p
    out = {}
    get = out.get
    for (x2, y2), c2 in r.items():
        for (x1, y1), c1 in p.items():
            key = (x1 + x2, y1 + y2)
            out[key] = get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def add_scaled(acc, p, coeff, dx, dy):
    """In place: acc += coeff * q^dx t^dy * p. Returns acc."""
    get = acc.get
    for (x, y), c in p.items():
        key = (x + dx, y + dy)
        v = get(key, 0) + coeff * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)
    return acc
