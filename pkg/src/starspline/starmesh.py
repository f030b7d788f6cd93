"""Vertex stars: a center vertex coned over a polygonal link.

A star is stored as its link (a triangulated or polygonal 2-sphere for a
closed star, a disk for an open one) with exact rational vertex
coordinates relative to the center, which sits at the origin.  Interior
faces of the star are derived: every link vertex spans an interior edge,
every link edge spans an interior triangle, and every link face spans a
cell.  All derived enumerations are in a fixed canonical order (sorted
index pairs, lexicographic) so downstream matrices and reports are
reproducible bit for bit.

Seeded perturbations use SplitMix64, a fixed 64-bit mixing generator, so
jittered stars reproduce across platforms and implementations.  For
simplicial links the vertex coordinates are jittered directly; for
polytopal links (some face has more than three vertices) the face planes
are jittered instead and vertices re-derived as triple-plane
intersections, which keeps every link polygon exactly planar.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf

from .errors import (
    DegenerateCell,
    Disconnected,
    NonManifoldLink,
    StarSplineError,
    UnknownName,
)

CLOSED = "closed"
OPEN = "open"

Vec3 = tuple[Fraction, Fraction, Fraction]


# ---------------------------------------------------------------------------
# exact vector helpers

def to_vec3(coords) -> Vec3:
    x, y, z = coords
    return (Fraction(x), Fraction(y), Fraction(z))


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def sub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def det3(u, v, w):
    return dot(u, cross(v, w))


def primitive_direction(v) -> tuple[int, int, int]:
    """Scale a nonzero rational vector by a positive rational to coprime
    integers.  The direction (sign) is preserved."""
    lcm = 1
    for c in v:
        den = Fraction(c).denominator
        lcm = lcm // gcd(lcm, den) * den
    ints = [int(Fraction(c) * lcm) for c in v]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    if g == 0:
        raise DegenerateCell("zero vector has no direction")
    return (ints[0] // g, ints[1] // g, ints[2] // g)


# ---------------------------------------------------------------------------
# the star itself

@dataclass(frozen=True)
class VertexStar:
    """Validated vertex star.  Immutable; build with :func:`build_star`."""

    link_vertices: tuple[Vec3, ...]
    link_faces: tuple[tuple[int, ...], ...]
    kind: str
    #: link-vertex indices spanning interior edges (all of them when closed)
    interior_edges: tuple[int, ...]
    #: link edges spanning interior triangles, as sorted pairs in lex order
    interior_faces: tuple[tuple[int, int], ...]
    #: per interior face, the two incident cell indices (ascending)
    face_cells: tuple[tuple[int, int], ...]
    #: per link vertex, coprime-integer direction of the ray through it
    directions: tuple[tuple[int, int, int], ...]

    @property
    def is_closed(self) -> bool:
        return self.kind == CLOSED

    @property
    def cell_count(self) -> int:
        return len(self.link_faces)

    def is_simplicial(self) -> bool:
        return all(len(f) == 3 for f in self.link_faces)

    def edge_faces(self, edge_index: int) -> tuple[int, ...]:
        """Interior two-faces incident to the given interior edge."""
        v = self.interior_edges[edge_index]
        return tuple(
            fi for fi, (a, b) in enumerate(self.interior_faces) if v in (a, b)
        )


def _canonical_cycle(face):
    face = tuple(face)
    k = face.index(min(face))
    face = face[k:] + face[:k]
    if len(face) > 2 and face[-1] < face[1]:
        face = (face[0],) + tuple(reversed(face[1:]))
    return face


def _validate_polygon(verts, planar=True):
    """Cell validity above a link face.  Triangles: the three vertices
    span a plane missing the origin.  Polygons: the same for the leading
    triple plus planarity and strict convexity of the cyclic order; with
    ``planar`` off (combinatorial stars over jittered rays) only the
    radial non-degeneracy of consecutive vertex pairs is required."""
    n = len(verts)
    if not planar and n > 3:
        for i in range(n):
            if cross(verts[i], verts[(i + 1) % n]) == (0, 0, 0):
                raise DegenerateCell("consecutive link vertices on one ray")
        return
    normal = cross(sub(verts[1], verts[0]), sub(verts[2], verts[0]))
    if normal == (0, 0, 0):
        raise DegenerateCell("collinear link-face vertices")
    if dot(verts[0], normal) == 0:
        raise DegenerateCell("origin lies in a link-face plane")
    if n == 3:
        return
    for p in verts[3:]:
        if dot(sub(p, verts[0]), normal) != 0:
            raise DegenerateCell("non-planar link polygon")
    for i in range(n):
        a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
        turn = dot(cross(sub(b, a), sub(c, b)), normal)
        if turn <= 0:
            raise DegenerateCell("non-convex link polygon")


def build_star(link_vertices, link_faces, kind,
               planar_polygons: bool = True) -> VertexStar:
    """Validate raw link data and derive the interior-face combinatorics.

    ``planar_polygons`` may be dropped for combinatorial stars over
    generic rays (see :func:`perturb`); triangulated links are unaffected.
    Raises DegenerateCell, NonManifoldLink or Disconnected (see module
    docstring and :mod:`starspline.errors`).
    """
    if kind not in (CLOSED, OPEN):
        raise ValueError(f"kind must be {CLOSED!r} or {OPEN!r}")
    verts = tuple(to_vec3(v) for v in link_vertices)
    nv = len(verts)
    for v in verts:
        if v == (0, 0, 0):
            raise DegenerateCell("link vertex at the origin")

    faces = []
    seen = set()
    for face in link_faces:
        face = _canonical_cycle(face)
        if len(face) < 3 or len(set(face)) != len(face):
            raise DegenerateCell(f"bad link face {face}")
        if any(not 0 <= i < nv for i in face):
            raise IndexError(f"face index out of range in {face}")
        if face in seen:
            raise NonManifoldLink(f"duplicate link face {face}")
        seen.add(face)
        faces.append(face)
    faces = tuple(sorted(faces))
    if not faces:
        raise DegenerateCell("star has no cells")

    # edge -> incident link faces
    edge_faces: dict[tuple[int, int], list[int]] = {}
    for fi, face in enumerate(faces):
        n = len(face)
        for k in range(n):
            a, b = face[k], face[(k + 1) % n]
            e = (a, b) if a < b else (b, a)
            edge_faces.setdefault(e, []).append(fi)
    allowed = (2,) if kind == CLOSED else (1, 2)
    for e, fs in edge_faces.items():
        if len(fs) not in allowed:
            raise NonManifoldLink(f"link edge {e} lies in {len(fs)} faces")
    if kind == OPEN and all(len(fs) == 2 for fs in edge_faces.values()):
        raise NonManifoldLink("open star has no boundary link edge")

    used = {i for face in faces for i in face}
    if used != set(range(nv)):
        raise Disconnected("unused link vertices")

    # connectivity of the link edge graph
    adj: dict[int, set[int]] = {i: set() for i in range(nv)}
    for a, b in edge_faces:
        adj[a].add(b)
        adj[b].add(a)
    stack, reached = [0], {0}
    while stack:
        for w in adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != nv:
        raise Disconnected("link edge graph is disconnected")

    # connectivity of the cell adjacency graph (hereditary condition)
    cell_adj: dict[int, set[int]] = {i: set() for i in range(len(faces))}
    for fs in edge_faces.values():
        if len(fs) == 2:
            cell_adj[fs[0]].add(fs[1])
            cell_adj[fs[1]].add(fs[0])
    stack, reached = [0], {0}
    while stack:
        for w in cell_adj[stack.pop()]:
            if w not in reached:
                reached.add(w)
                stack.append(w)
    if len(reached) != len(faces):
        raise Disconnected("cells are not face-connected")

    # umbrella condition: faces around a vertex form one cycle or one path
    for v in range(nv):
        corner_edges = []
        for f in faces:
            if v in f:
                k = f.index(v)
                corner_edges.append((f[k - 1], f[(k + 1) % len(f)]))
        deg: dict[int, int] = {}
        umb: dict[int, set[int]] = {}
        for a, b in corner_edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
            umb.setdefault(a, set()).add(b)
            umb.setdefault(b, set()).add(a)
        odd = sum(1 for c in deg.values() if c == 1)
        if any(c > 2 for c in deg.values()) or odd not in (0, 2):
            raise NonManifoldLink(f"faces around link vertex {v} are pinched")
        if odd == 2 and kind == CLOSED:
            raise NonManifoldLink(f"boundary vertex {v} in a closed star")
        start = next(iter(umb))
        stack, seen = [start], {start}
        while stack:
            for w in umb[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(umb):
            raise NonManifoldLink(f"faces around link vertex {v} are pinched")

    for face in faces:
        _validate_polygon([verts[i] for i in face], planar=planar_polygons)

    if kind == CLOSED:
        if nv - len(edge_faces) + len(faces) != 2:
            raise NonManifoldLink("link does not satisfy the sphere Euler relation")
        if all(len(f) == 3 for f in faces) and len(edge_faces) != 3 * nv - 6:
            raise NonManifoldLink("simplicial closed link violates f2 = 3 f1 - 6")

    boundary = {
        w for e, fs in edge_faces.items() if len(fs) == 1 for w in e
    }
    interior_edges = tuple(v for v in range(nv) if v not in boundary)
    interior_faces = tuple(sorted(e for e, fs in edge_faces.items() if len(fs) == 2))
    face_cells = tuple(tuple(sorted(edge_faces[e])) for e in interior_faces)
    directions = tuple(primitive_direction(v) for v in verts)
    return VertexStar(
        link_vertices=verts,
        link_faces=faces,
        kind=kind,
        interior_edges=interior_edges,
        interior_faces=interior_faces,
        face_cells=face_cells,
        directions=directions,
    )


def face_counts(star: VertexStar) -> tuple[int, int, int, int]:
    """Interior face counts ``(f0, f1, f2)`` and the cell count ``f3``."""
    f0 = 1 if star.is_closed else 0
    return (f0, len(star.interior_edges), len(star.interior_faces), star.cell_count)


# ---------------------------------------------------------------------------
# the graph of the star

@dataclass(frozen=True)
class StarGraph:
    """Graph whose vertices are the interior edges of a star and whose
    edges are its interior two-faces."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def degree_sequence(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(sorted(deg))


def star_graph(star: VertexStar) -> StarGraph:
    pos = {v: k for k, v in enumerate(star.interior_edges)}
    edges = set()
    for a, b in star.interior_faces:
        if a in pos and b in pos:
            edges.add((min(pos[a], pos[b]), max(pos[a], pos[b])))
    return StarGraph(vertex_count=len(star.interior_edges), edges=frozenset(edges))


def is_three_connected(g: StarGraph) -> bool:
    """Brute force: removing every vertex pair leaves a connected graph."""
    n = g.vertex_count
    adj = {i: set() for i in range(n)}
    for a, b in g.edges:
        if a == b:
            raise ValueError("graph has a loop")
        adj[a].add(b)
        adj[b].add(a)

    def connected_without(removed):
        keep = [v for v in range(n) if v not in removed]
        if not keep:
            return True
        stack, reached = [keep[0]], {keep[0]}
        while stack:
            for w in adj[stack.pop()]:
                if w not in removed and w not in reached:
                    reached.add(w)
                    stack.append(w)
        return len(reached) == len(keep)

    if not connected_without(()):
        return False
    return all(
        connected_without((u, v)) for u in range(n) for v in range(u + 1, n)
    )


# ---------------------------------------------------------------------------
# seeded perturbation (SplitMix64)

_M64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _M64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def _stream(seed: int, tag: int, index: int, coord: int) -> int:
    h = _splitmix64(seed & _M64)
    h = _splitmix64(h ^ (tag + 1))
    h = _splitmix64(h ^ (index + 1))
    h = _splitmix64(h ^ (coord + 1))
    return h


def _jitter(seed, tag, index, coord, scale) -> Fraction:
    """Deterministic rational jitter in [-1/scale, 1/scale] with numerator
    granularity 1/scale, from the (seed, index, coord) SplitMix64 stream."""
    u = _stream(seed, tag, index, coord) % (2 * scale + 1) - scale
    return Fraction(u, scale * scale)


def perturb(star: VertexStar, seed: int, denominator_scale) -> VertexStar:
    """Seeded generic jitter of the link-vertex coordinates; deterministic
    for fixed inputs.

    ``denominator_scale`` of ``None`` or ``math.inf`` is the no-op
    sentinel.  Each coordinate receives an additive rational jitter in
    [-1/scale, 1/scale] with numerator granularity 1/scale, drawn from
    the (seed, vertex, coordinate) SplitMix64 stream.  The result is
    revalidated; a DegenerateCell error means the caller should retry
    with another seed.

    Jittering the vertices of a polytopal link leaves its polygons skew,
    so those are rebuilt as combinatorial stars over the jittered rays
    (planarity validation relaxed).  Every dimension computed downstream
    depends only on the interior faces, which the jittered rays span
    generically; this is the object whose dimensions generic polytopal
    tables report.
    """
    if denominator_scale is None or denominator_scale == inf:
        return star
    scale = int(denominator_scale)
    if scale <= 0:
        raise ValueError("denominator_scale must be positive")
    verts = [
        tuple(
            star.link_vertices[vi][ci] + _jitter(seed, 0, vi, ci, scale)
            for ci in range(3)
        )
        for vi in range(len(star.link_vertices))
    ]
    return build_star(verts, star.link_faces, star.kind,
                      planar_polygons=star.is_simplicial())


# ---------------------------------------------------------------------------
# catalog

def _octahedron():
    verts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    faces = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    return verts, faces, CLOSED


def _alfeld_split():
    verts = [(1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    return verts, faces, CLOSED


def _bipyramid(base):
    n = len(base)
    verts = [(0, 0, 2), (0, 0, -2)] + [(x, y, 0) for x, y in base]
    faces = []
    for k in range(n):
        a, b = 2 + k, 2 + (k + 1) % n
        faces.append((0, a, b))
        faces.append((1, a, b))
    return verts, faces, CLOSED


_PENTAGON = [(2, 0), (1, 2), (-2, 1), (-2, -1), (1, -2)]


def _pentagonal_bipyramid():
    return _bipyramid(_PENTAGON)


def _pentagonal_bipyramid_planar_base():
    verts, faces, kind = _bipyramid(_PENTAGON)
    verts[0] = (1, 2, 5)      # apexes off-axis: the ten apex faces must
    verts[1] = (-2, 1, -4)    # span ten distinct planes
    return verts, faces, kind


def _triangular_bipyramid():
    return _bipyramid([(2, 0), (-1, 2), (-1, -2)])


def _cube_barycentric():
    verts = [
        (1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1),
        (-1, 1, 1), (-1, 1, -1), (-1, -1, 1), (-1, -1, -1),
    ]
    faces = [
        (0, 1, 3, 2), (4, 6, 7, 5),   # x = +1, x = -1
        (0, 4, 5, 1), (2, 3, 7, 6),   # y = +1, y = -1
        (0, 2, 6, 4), (1, 5, 7, 3),   # z = +1, z = -1
    ]
    return verts, faces, CLOSED


_CATALOG = {
    "regular-octahedron": _octahedron,
    "alfeld-split": _alfeld_split,
    "triangular-bipyramid": _triangular_bipyramid,
    "pentagonal-bipyramid": _pentagonal_bipyramid,
    "pentagonal-bipyramid-planar-base": _pentagonal_bipyramid_planar_base,
    "cube-barycentric": _cube_barycentric,
}

CATALOG_NAMES = tuple(sorted(_CATALOG))


def catalog(name: str, seed=None, denominator_scale=1000) -> VertexStar:
    """Named star from the catalog, optionally perturbed with a seed."""
    try:
        builder = _CATALOG[name]
    except KeyError:
        raise UnknownName(f"unknown catalog star {name!r}") from None
    star = build_star(*builder())
    if seed is not None:
        star = perturb(star, seed, denominator_scale)
    return star


# ---------------------------------------------------------------------------
# star description files

def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def star_to_text(star: VertexStar) -> str:
    """Canonical textual form of a star (also used for cache hashing)."""
    lines = [f"kind {star.kind}"]
    for v in star.link_vertices:
        lines.append("v " + " ".join(_format_rational(c) for c in v))
    for f in star.link_faces:
        lines.append("f " + " ".join(str(i) for i in f))
    return "\n".join(lines) + "\n"


def parse_star_text(text: str) -> VertexStar:
    kind = None
    verts = []
    faces = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "kind":
            if len(rest) != 1 or rest[0] not in (CLOSED, OPEN):
                raise StarSplineError(f"line {lineno}: bad kind line")
            kind = rest[0]
        elif head == "v":
            if len(rest) != 3:
                raise StarSplineError(f"line {lineno}: vertex needs 3 coordinates")
            verts.append(tuple(Fraction(t) for t in rest))
        elif head == "f":
            faces.append(tuple(int(t) for t in rest))
        else:
            raise StarSplineError(f"line {lineno}: unknown record {head!r}")
    if kind is None:
        raise StarSplineError("missing 'kind closed|open' header line")
    return build_star(verts, faces, kind)


def load_star(path) -> VertexStar:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_star_text(fh.read())
