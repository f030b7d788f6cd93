"""Linear forms of interior faces and graded dimensions of their ideals.

An interior two-face of a star is the triangle spanned by the center and
a link edge v-w; the form vanishing on it is the normalized cross product
of the two directions.  Per-edge arithmetic data (the counts and the
quotient/remainder pair controlling the edge-ideal dimension formula)
lives in :class:`EdgeProfile`.  Closed-form dimensions are pure binomial
arithmetic; the exact variants materialize generator-times-monomial
matrices and ask :mod:`starspline.linalg` for their rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DegenerateFace, NotClosed, StarSplineError
from .linalg import rank_of_int_rows
from .monomials import binom, linear_power, monomial_index, monomials, poly_shift
from .starmesh import VertexStar, cross


def normalize_form(coeffs) -> tuple[int, int, int]:
    """Canonical representative of a plane through the origin: coprime
    integer coefficients with the first nonzero one positive."""
    a, b, c = coeffs
    g = gcd(gcd(abs(a), abs(b)), abs(c))
    if g == 0:
        raise DegenerateFace("zero linear form")
    a, b, c = a // g, b // g, c // g
    for lead in (a, b, c):
        if lead:
            if lead < 0:
                a, b, c = -a, -b, -c
            break
    return (a, b, c)


LinearForm = tuple[int, int, int]


def face_form(star: VertexStar, face_index: int) -> LinearForm:
    """Normalized linear form vanishing on an interior two-face."""
    i, j = star.interior_faces[face_index]
    n = cross(star.directions[i], star.directions[j])
    if n == (0, 0, 0):
        raise DegenerateFace(f"interior face {face_index} spans no plane")
    return normalize_form(n)


def face_forms(star: VertexStar) -> tuple[LinearForm, ...]:
    return tuple(face_form(star, fi) for fi in range(len(star.interior_faces)))


@dataclass(frozen=True)
class EdgeProfile:
    """Arithmetic data of an interior edge for smoothness order ``r``.

    ``n_tau`` counts incident interior two-faces, ``distinct_planes`` the
    pairwise non-proportional forms among them.  ``t_tau`` truncates the
    used count at ``r + 2``; ``q_tau`` and ``a_tau`` are the quotient and
    remainder of ``t_tau*(r+1)`` by ``t_tau - 1`` and ``b_tau`` the
    complementary count ``t_tau - 1 - a_tau``.
    """

    n_tau: int
    distinct_planes: int
    t_tau: int
    q_tau: int
    a_tau: int
    b_tau: int


def edge_profile(star: VertexStar, edge_index: int, r: int,
                 use_distinct: bool = False) -> EdgeProfile:
    faces = star.edge_faces(edge_index)
    n = len(faces)
    distinct = len({face_form(star, fi) for fi in faces})
    used = distinct if use_distinct else n
    t = min(used, r + 2)
    if t < 2:
        raise StarSplineError(f"interior edge {edge_index} has t_tau < 2")
    q = t * (r + 1) // (t - 1)
    a = t * (r + 1) - (t - 1) * q
    b = t - 1 - a
    return EdgeProfile(n_tau=n, distinct_planes=distinct,
                       t_tau=t, q_tau=q, a_tau=a, b_tau=b)


def dim_J_sigma(r: int, d: int) -> int:
    """Graded dimension of the principal ideal of one face form power."""
    return binom(d + 1 - r, 2)


def dim_J_tau_formula(profile: EdgeProfile, r: int, d: int) -> int:
    """Closed-form dimension of an edge ideal from its profile.  Exact when
    the profile was built from distinct-plane counts; otherwise a lower
    bound."""
    t, q, a, b = profile.t_tau, profile.q_tau, profile.a_tau, profile.b_tau
    return (t * binom(d + 1 - r, 2)
            - a * binom(d + 1 - q, 2)
            - b * binom(d + 2 - q, 2))


def _span_rows(forms, r, d):
    """Integer rows spanning the degree-d part of the ideal generated by
    the (r+1)-st powers of the given forms."""
    if d <= r:
        return []
    idx = monomial_index(d)
    betas = monomials(d - r - 1)
    rows = []
    for form in forms:
        power = linear_power(form, r + 1)
        for beta in betas:
            shifted = poly_shift(power, beta)
            row = [0] * len(idx)
            for key, c in shifted.items():
                row[idx[key]] = c
            rows.append(row)
    return rows


def dim_J_tau_exact(star: VertexStar, edge_index: int, r: int, d: int) -> int:
    """Exact graded dimension of an edge ideal (rank oracle)."""
    forms = sorted({face_form(star, fi) for fi in star.edge_faces(edge_index)})
    return rank_of_int_rows(_span_rows(forms, r, d))


def dim_J_gamma_exact(star: VertexStar, r: int, d: int) -> int:
    """Exact graded dimension of the vertex ideal of a closed star."""
    if not star.is_closed:
        raise NotClosed("vertex ideal needs the closed interior vertex")
    forms = sorted(set(face_forms(star)))
    return rank_of_int_rows(_span_rows(forms, r, d))


def is_gamma_full(star: VertexStar, r: int, d: int) -> bool:
    """Whether the vertex ideal fills the whole degree-d space."""
    return dim_J_gamma_exact(star, r, d) == binom(d + 2, 2)
