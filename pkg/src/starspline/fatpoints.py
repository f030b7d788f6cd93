"""Fat points dual to the interior faces of a closed star.

The coefficients of each interior face form give a point in the
projective plane; interior edges give lines (the dual line of the edge
through direction v is the set of points orthogonal to v).  On that
configuration this module runs the line-by-line reduction procedure,
evaluates the dimension and initial-degree bounds it certifies, computes
Waldschmidt-constant lower bounds, and provides an exact Hilbert-function
oracle for arbitrary fat point ideals via derivative interpolation
matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .errors import (
    BoundNotAboveOne,
    ConfigNotRegular,
    NotClosed,
    NotFull,
    NotPositive,
    StarSplineError,
)
from .faceideals import face_forms, normalize_form
from .linalg import rank_of_int_rows
from .monomials import binom, monomial_count, monomials
from .starmesh import VertexStar

ProjectivePoint = tuple[int, int, int]


@dataclass(frozen=True)
class DualLine:
    """A line in the dual plane: its normalized form and the indices of
    the configuration points it contains."""

    form: tuple[int, int, int]
    points: tuple[int, ...]


@dataclass(frozen=True)
class FatPointConfig:
    """Deduplicated dual points and lines of a closed star."""

    points: tuple[ProjectivePoint, ...]
    lines: tuple[DualLine, ...]
    #: interior face index -> point index
    face_to_point: tuple[int, ...]
    #: interior edge index -> line index
    edge_to_line: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edge_to_line)


def dual_config(star: VertexStar) -> FatPointConfig:
    if not star.is_closed:
        raise NotClosed("dual configuration needs a closed star")
    points: list[ProjectivePoint] = []
    face_to_point = []
    for form in face_forms(star):
        if form not in points:
            points.append(form)
        face_to_point.append(points.index(form))

    line_forms: list[tuple[int, int, int]] = []
    edge_to_line = []
    for v in star.interior_edges:
        form = normalize_form(star.directions[v])
        if form not in line_forms:
            line_forms.append(form)
        edge_to_line.append(line_forms.index(form))

    lines = []
    for form in line_forms:
        incident = tuple(
            pi for pi, p in enumerate(points)
            if p[0] * form[0] + p[1] * form[1] + p[2] * form[2] == 0
        )
        if len(incident) < 2:
            raise StarSplineError("dual line through fewer than two points")
        lines.append(DualLine(form=form, points=incident))
    return FatPointConfig(
        points=tuple(points),
        lines=tuple(lines),
        face_to_point=tuple(face_to_point),
        edge_to_line=tuple(edge_to_line),
    )


def config_to_text(config: FatPointConfig) -> str:
    """CLI dump: one ``p`` line per point, one ``l`` line per line."""
    out = []
    for p in config.points:
        out.append(f"p {p[0]} {p[1]} {p[2]}")
    for ln in config.lines:
        pts = " ".join(str(i) for i in ln.points)
        out.append(f"l {ln.form[0]} {ln.form[1]} {ln.form[2]} : {pts}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# the reduction procedure

@dataclass(frozen=True)
class ReductionVector:
    """Trace of the line-by-line reduction: the chosen line indices, the
    with-multiplicity point counts collected at each step, and the
    multiplicities left after all steps."""

    line_sequence: tuple[int, ...]
    entries: tuple[int, ...]
    residual_multiplicities: tuple[int, ...]


def reduce(config: FatPointConfig, multiplicities, line_sequence) -> ReductionVector:
    """Run the reduction along ``line_sequence``.  Each step counts the
    current (positive) multiplicities on the line, then lowers every
    positive one by 1; zero multiplicities are never decremented."""
    mult = [int(m) for m in multiplicities]
    if len(mult) != len(config.points):
        raise ValueError("need one multiplicity per configuration point")
    if any(m < 0 for m in mult):
        raise ValueError("multiplicities must be non-negative")
    entries = []
    for li in line_sequence:
        pts = config.lines[li].points
        entries.append(sum(mult[pi] for pi in pts))
        for pi in pts:
            if mult[pi] > 0:
                mult[pi] -= 1
    return ReductionVector(
        line_sequence=tuple(line_sequence),
        entries=tuple(entries),
        residual_multiplicities=tuple(mult),
    )


def is_full(rv: ReductionVector) -> bool:
    """A reduction is full when every residual multiplicity is zero."""
    return all(m == 0 for m in rv.residual_multiplicities)


def greedy_sequence(config: FatPointConfig, multiplicities) -> tuple[int, ...]:
    """Line sequence chosen by repeatedly taking the line with the largest
    current with-multiplicity count (lowest index on ties).  On these
    configurations every point lies on a line, so the result is full."""
    mult = [int(m) for m in multiplicities]
    seq = []
    while True:
        best, best_count = -1, 0
        for li, ln in enumerate(config.lines):
            count = sum(mult[pi] for pi in ln.points)
            if count > best_count:
                best, best_count = li, count
        if best < 0:
            break
        seq.append(best)
        for pi in config.lines[best].points:
            if mult[pi] > 0:
                mult[pi] -= 1
    if any(mult):
        raise StarSplineError("greedy reduction stalled with residual mass")
    return tuple(seq)


def cht_dim_bounds(rv: ReductionVector, d: int) -> tuple[int, int]:
    """Dimension bounds certified by a full reduction vector in degree d."""
    if not is_full(rv):
        raise NotFull("dimension bounds need a full reduction vector")
    ds = rv.entries
    n = len(ds)
    lower = binom(d - n + 2, 2)
    suffix = 0
    for i in range(n - 1, -1, -1):
        suffix += ds[i]
        lower = max(lower, binom(d - i + 2, 2) - suffix)
    upper = binom(d - n + 2, 2)
    for i in range(n):
        upper += binom(d - i - ds[i] + 1, 1)
    return (max(lower, 0), upper)


def alpha_bound(rv: ReductionVector) -> tuple[int, int]:
    """Initial-degree bounds from a positive full reduction vector."""
    if not is_full(rv):
        raise NotFull("initial-degree bounds need a full reduction vector")
    if any(e <= 0 for e in rv.entries):
        raise NotPositive("initial-degree bounds need positive entries")
    n = len(rv.entries)
    slack = min(min(e - n + i for i, e in enumerate(rv.entries)), 0)
    return (n + slack, n)


def canonical_reduction(config: FatPointConfig, s: int) -> ReductionVector:
    """Reduction of the uniform multiplicity-2s configuration along the
    interior-edge line order repeated s times.  Needs a regular
    configuration: lines biject with interior edges and every point lies
    on exactly two of them, so each pass lowers every multiplicity by 2."""
    if s <= 0:
        raise ValueError("s must be positive")
    _require_regular(config)
    seq = tuple(range(len(config.lines))) * s
    rv = reduce(config, [2 * s] * len(config.points), seq)
    if not is_full(rv):
        raise StarSplineError("canonical reduction left residual mass")
    return rv


def _require_regular(config: FatPointConfig) -> None:
    if len(config.lines) != config.edge_count:
        raise ConfigNotRegular("coincident dual lines (non-distinct planes)")
    on_lines = [0] * len(config.points)
    for ln in config.lines:
        for pi in ln.points:
            on_lines[pi] += 1
    bad = [pi for pi, c in enumerate(on_lines) if c != 2]
    if bad:
        raise ConfigNotRegular(f"points {bad} lie on != 2 lines")


def waldschmidt_lower(config: FatPointConfig) -> Fraction:
    """Certified Waldschmidt lower bound max(f1/2, 3) for regular
    configurations."""
    _require_regular(config)
    return max(Fraction(config.edge_count, 2), Fraction(3))


def chudnovsky_lower(alpha: int) -> Fraction:
    """Chudnovsky's Waldschmidt lower bound (alpha + 1) / 2."""
    if alpha < 1:
        raise ValueError("alpha must be at least 1")
    return Fraction(alpha + 1, 2)


def fullness_degree(waldschmidt_lb, r: int) -> int:
    """Smallest degree d with d > M*r/(M-1), where M > 1 bounds the
    Waldschmidt constant from below.  Beyond it the vertex ideal is full."""
    m = Fraction(waldschmidt_lb)
    if m <= 1:
        raise BoundNotAboveOne("need a Waldschmidt bound above 1")
    return floor(m * r / (m - 1)) + 1


def fatpoint_dim_exact(config: FatPointConfig, multiplicities, d: int) -> int:
    """Exact dimension of the degree-d forms vanishing to order m_i at
    every configuration point (derivative interpolation oracle)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    mult = [int(m) for m in multiplicities]
    if len(mult) != len(config.points):
        raise ValueError("need one multiplicity per configuration point")
    basis = monomials(d)
    rows = []
    for point, m in zip(config.points, mult):
        for order in range(m):
            for beta in monomials(order):
                rows.append(_derivative_row(point, beta, basis))
    return monomial_count(d) - rank_of_int_rows(rows)


def _derivative_row(point, beta, basis):
    row = []
    for alpha in basis:
        if all(a >= b for a, b in zip(alpha, beta)):
            c = 1
            for a, b, p in zip(alpha, beta, point):
                for k in range(a, a - b, -1):
                    c *= k
                c *= p ** (a - b)
                if c == 0:
                    break
            row.append(c)
        else:
            row.append(0)
    return row


def alpha_exact(config: FatPointConfig, s: int, start: int = 1) -> int:
    """Least degree of a nonzero form in the s-th symbolic power, found by
    raising d until the oracle dimension is positive."""
    cap = s * len(config.points) + 3
    d = max(start, 0)
    while d <= cap:
        if fatpoint_dim_exact(config, [s] * len(config.points), d) > 0:
            return d
        d += 1
    raise StarSplineError("initial degree not found below the safety cap")


def waldschmidt_estimate(config: FatPointConfig, s_max: int) -> list[Fraction]:
    """The sequence alpha(I^(s))/s for s = 1..s_max (oracle-backed)."""
    if s_max < 1:
        raise ValueError("s_max must be at least 1")
    out = []
    alpha = 1
    for s in range(1, s_max + 1):
        alpha = alpha_exact(config, s, start=alpha)
        out.append(Fraction(alpha, s))
    return out
