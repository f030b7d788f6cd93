"""Closed-form dimension bounds, degree thresholds and Euler characteristics.

Everything here is exact integer arithmetic on binomials: the degree
threshold above which the closed-star bound is certified, the closed- and
open-star bound formulas, the single-variable closed form valid for
simplicial closed stars with distinct face planes, the graded Euler
characteristic of the face-ideal complex, and the certified lower-bound
report combining them.  Homology dimensions are recovered from the exact
kernel dimension and the exact Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeTooSmall, NotClosed, NotOpen, TooFewEdges
from .faceideals import (
    dim_J_gamma_exact,
    dim_J_sigma,
    dim_J_tau_exact,
    dim_J_tau_formula,
    edge_profile,
)
from .monomials import binom
from .starmesh import VertexStar


def d_gamma(f1_interior: int, r: int) -> int:
    """Degree threshold of the certified bound, by interior edge count."""
    if f1_interior < 4:
        raise TooFewEdges("a closed star has at least 4 interior edges")
    if r < 0:
        raise ValueError("r must be non-negative")
    if f1_interior == 4:
        return 2 * r
    if f1_interior == 5:
        return (5 * r + 2) // 3
    return (3 * r + 1) // 2


def _edge_term_sums(star: VertexStar, r: int, d: int, use_distinct: bool):
    t_sum = 0
    ab_sum = 0
    for e in range(len(star.interior_edges)):
        p = edge_profile(star, e, r, use_distinct)
        t_sum += p.t_tau
        ab_sum += (p.a_tau * binom(d + 1 - p.q_tau, 2)
                   + p.b_tau * binom(d + 2 - p.q_tau, 2))
    return t_sum, ab_sum


def lbcs(star: VertexStar, r: int, d: int, use_distinct: bool = False) -> int:
    """Closed-star bound formula.  May be negative in low degree; callers
    clamp with max(trivial, lbcs) only above the certified threshold."""
    if not star.is_closed:
        raise NotClosed("lbcs is the closed-star formula")
    f2 = len(star.interior_faces)
    t_sum, ab_sum = _edge_term_sums(star, r, d, use_distinct)
    return 2 * binom(d + 2, 2) + (f2 - t_sum) * binom(d + 1 - r, 2) + ab_sum


def lbos(star: VertexStar, r: int, d: int) -> int:
    """Open-star bound formula; a lower bound for every degree."""
    if star.is_closed:
        raise NotOpen("lbos is the open-star formula")
    f2 = len(star.interior_faces)
    t_sum, ab_sum = _edge_term_sums(star, r, d, use_distinct=False)
    return binom(d + 2, 2) + (f2 - t_sum) * binom(d + 1 - r, 2) + ab_sum


def lbcs_closed_form(star: VertexStar, r: int, d: int) -> int:
    """The f1-only rewriting of the closed-star bound.  Matches ``lbcs``
    on simplicial closed stars with distinct face planes for d >= r (the
    rewriting is a polynomial identity only above that degree)."""
    if not star.is_closed:
        raise NotClosed("closed-star formula")
    if not star.is_simplicial():
        raise NotClosed("f1-only closed form assumes a simplicial star")
    f1 = len(star.interior_edges)
    sigma = 0
    for e in range(len(star.interior_edges)):
        n = edge_profile(star, e, r).n_tau
        for j in range(1, d - r + 1):
            sigma += max(0, r + j + 1 - n * j)
    return ((d - r) * (d - 2 * r) * f1
            - 2 * d * d + 6 * d * r - 3 * r * r + 3 * r + 2 + sigma)


def euler_char_J(star: VertexStar, r: int, d: int, exact: bool = True) -> int:
    """Graded Euler characteristic of the face-ideal chain complex.

    With ``exact`` the edge and vertex ideal dimensions come from rank
    oracles; otherwise from the distinct-plane formula dims, with the
    vertex term replaced by its full value above the degree threshold and
    0 at or below it.
    """
    f2 = len(star.interior_faces)
    total = f2 * dim_J_sigma(r, d)
    for e in range(len(star.interior_edges)):
        if exact:
            total -= dim_J_tau_exact(star, e, r, d)
        else:
            total -= dim_J_tau_formula(edge_profile(star, e, r, True), r, d)
    if star.is_closed:
        if exact:
            total += dim_J_gamma_exact(star, r, d)
        else:
            f1 = len(star.interior_edges)
            total += binom(d + 2, 2) if d > d_gamma(f1, r) else 0
    return total


@dataclass(frozen=True)
class BoundReport:
    """Certified lower bound for the homogeneous spline dimension at one
    (r, d) cell of a closed star."""

    r: int
    d: int
    trivial_dim: int
    lbcs: int
    d_gamma: int
    applicable: bool
    best_lower: int


def homog_lower_bound(star: VertexStar, r: int, d: int,
                      use_distinct: bool = False) -> BoundReport:
    if not star.is_closed:
        raise NotClosed("the certified bound applies to closed stars")
    f1 = len(star.interior_edges)
    dg = d_gamma(f1, r)
    trivial = binom(d + 2, 2)
    bound = lbcs(star, r, d, use_distinct)
    applicable = d > dg
    return BoundReport(
        r=r, d=d, trivial_dim=trivial, lbcs=bound, d_gamma=dg,
        applicable=applicable,
        best_lower=max(trivial, bound) if applicable else trivial,
    )


def spline_lower_bound(star: VertexStar, r: int, d: int,
                       apply_max: bool = True,
                       use_distinct: bool = False) -> int:
    """Lower bound for the degree <= d spline space of a closed star.

    With ``apply_max`` each homogeneous summand above the threshold is
    clamped at the trivial dimension; without it the raw formula values
    are summed, reproducing the published cubic for the bipyramid."""
    if not star.is_closed:
        raise NotClosed("the certified bound applies to closed stars")
    dg = d_gamma(len(star.interior_edges), r)
    if d < dg:
        raise DegreeTooSmall(f"need d >= D_gamma = {dg}")
    total = binom(dg + 3, 3)
    for i in range(dg + 1, d + 1):
        term = lbcs(star, r, i, use_distinct)
        if apply_max:
            term = max(binom(i + 2, 2), term)
        total += term
    return total


def homology_dims(star: VertexStar, r: int, d: int) -> tuple[int, int]:
    """Dimensions of the top and middle homology of the face-ideal complex
    in degree d, recovered from the exact kernel dimension."""
    if not star.is_closed:
        raise NotClosed("homology recovery is for closed stars")
    from .splinedim import homog_dim  # local import: splinedim uses d_gamma

    h = homog_dim(star, r, d)
    trivial = binom(d + 2, 2)
    chi = euler_char_J(star, r, d, exact=True)
    return (h - trivial, h - trivial - chi)
