"""Monomial bookkeeping and sparse polynomial helpers.

Homogeneous polynomials in three variables are represented as dicts
mapping exponent triples ``(i, j, k)`` to exact integer coefficients.
The same machinery serves the geometric variables ``(x, y, z)`` and the
face-adapted substitution variables used by the cofactor systems.

``binom`` is the single shared vanishing-convention binomial: it returns
0 whenever the top argument is smaller than the bottom one, which is the
convention every closed-form dimension count in this package relies on.
"""

from math import comb


def binom(a: int, b: int) -> int:
    """Binomial coefficient with the vanishing convention for a < b."""
    if a < b or b < 0:
        return 0
    return comb(a, b)


def monomials(d: int):
    """Exponent triples of degree ``d`` in lexicographic descending order."""
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def monomial_index(d: int):
    """Map exponent triple -> position in ``monomials(d)``."""
    return {m: p for p, m in enumerate(monomials(d))}


def monomial_count(d: int) -> int:
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def linear_power(form, k: int):
    """Expansion of ``(a*x + b*y + c*z)**k`` as an exponent-triple dict."""
    a, b, c = form
    out = {}
    for i in range(k + 1):
        ai = a ** i
        if ai == 0:
            continue
        ci = comb(k, i)
        for j in range(k - i + 1):
            coeff = ci * comb(k - i, j) * ai * b ** j * c ** (k - i - j)
            if coeff:
                out[(i, j, k - i - j)] = coeff
    return out


def poly_shift(p, alpha):
    """Multiply a polynomial by the monomial with exponents ``alpha``."""
    ai, aj, ak = alpha
    return {(i + ai, j + aj, k + ak): c for (i, j, k), c in p.items()}


def poly_mul_linear(p, coeffs, max_last=None):
    """Multiply ``p`` by ``c0*X + c1*Y + c2*Z``.

    ``max_last`` truncates the product to terms whose last exponent is at
    most that bound (used to work modulo a power of the last variable).
    """
    c0, c1, c2 = coeffs
    out = {}
    for (i, j, k), c in p.items():
        if c0:
            key = (i + 1, j, k)
            out[key] = out.get(key, 0) + c * c0
        if c1:
            key = (i, j + 1, k)
            out[key] = out.get(key, 0) + c * c1
        if c2 and (max_last is None or k < max_last):
            key = (i, j, k + 1)
            out[key] = out.get(key, 0) + c * c2
    return {key: c for key, c in out.items() if c}


def monomial_chain(d: int):
    """Pairs ``(alpha, (pred, var))`` covering ``monomials(d)`` so that each
    exponent triple is its predecessor with ``var`` raised by one.  The
    degree-0 monomial has no predecessor."""
    chain = []
    for alpha in monomials(d):
        i, j, k = alpha
        if i:
            chain.append((alpha, ((i - 1, j, k), 0)))
        elif j:
            chain.append((alpha, ((i, j - 1, k), 1)))
        elif k:
            chain.append((alpha, ((i, j, k - 1), 2)))
        else:
            chain.append((alpha, (None, -1)))
    return chain
