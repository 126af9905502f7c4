"""The dP3 brane tiling: a doubly periodic bipartite graph with six faces per
fundamental domain.

The lattice is the superposition of the triangular lattice (vertices P(a,b)
at a*(1,0) + b*(1/2, sqrt3/2)) with its dual hexagonal lattice.  Each unit
triangle is cut by its centroid and edge midpoints into three quadrilateral
kites, so a face is addressed by the triangle (a, b, up/down) plus a corner
index c in {0,1,2}:

    up triangle  U(a,b), corners P(a,b), P(a+1,b), P(a,b+1):
        c=0 kite at P(a,b),   c=1 at P(a+1,b),   c=2 at P(a,b+1)
    down triangle D(a,b), corners P(a+1,b), P(a,b+1), P(a+1,b+1):
        c=0 kite at P(a+1,b), c=1 at P(a,b+1),   c=2 at P(a+1,b+1)

Midpoint vertices are black, triangle vertices and centroids are white.
Every face boundary is a 4-cycle TriVertex - Midpoint - Centroid - Midpoint.

All coordinates are exact integers in 1/12 units of the lattice spacing
(sqrt3/2 scales to 6), which keeps sorting, rotation and orientation tests
free of floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .laurent import SIGMA

LABELS = (1, 2, 3, 4, 5, 6)


class Vertex(NamedTuple):
    kind: str  # 't' tri-vertex, 'c' centroid, 'm' midpoint
    a: int
    b: int
    tag: str  # '' / 'u','d' / 'E','N','D'


class Face(NamedTuple):
    a: int
    b: int
    up: bool
    c: int


class Edge(NamedTuple):
    u: Vertex
    v: Vertex
    faces: tuple[Face, Face]


def tri(a: int, b: int) -> Vertex:
    return Vertex("t", a, b, "")


def centroid(a: int, b: int, up: bool) -> Vertex:
    return Vertex("c", a, b, "u" if up else "d")


def midpoint(a: int, b: int, d: str) -> Vertex:
    return Vertex("m", a, b, d)


def vertex_coords(v: Vertex) -> tuple[int, int]:
    """Exact position in 1/12 lattice units."""
    base_x, base_y = 12 * v.a + 6 * v.b, 12 * v.b
    if v.kind == "t":
        return base_x, base_y
    if v.kind == "c":
        return (base_x + 6, base_y + 4) if v.tag == "u" else (base_x + 12, base_y + 8)
    if v.tag == "E":
        return base_x + 6, base_y
    if v.tag == "N":
        return base_x + 3, base_y + 6
    return base_x + 9, base_y + 6  # 'D'


def vertex_color(v: Vertex) -> str:
    return "black" if v.kind == "m" else "white"


def _edge(u: Vertex, v: Vertex, f: Face, g: Face) -> Edge:
    if v < u:
        u, v = v, u
    return Edge(u, v, (f, g) if f <= g else (g, f))


# Boundary cycle (TriVertex, Midpoint, Centroid, Midpoint) of each face class,
# and the neighboring face across each boundary edge, anchored at (a, b).
def _boundary_spec(f: Face):
    a, b = f.a, f.b
    if f.up:
        c_v = centroid(a, b, True)
        if f.c == 0:
            verts = (tri(a, b), midpoint(a, b, "E"), c_v, midpoint(a, b, "N"))
            nbrs = (Face(a, b - 1, False, 1), Face(a, b, True, 1),
                    Face(a, b, True, 2), Face(a - 1, b, False, 0))
        elif f.c == 1:
            verts = (tri(a + 1, b), midpoint(a, b, "D"), c_v, midpoint(a, b, "E"))
            nbrs = (Face(a, b, False, 0), Face(a, b, True, 2),
                    Face(a, b, True, 0), Face(a, b - 1, False, 2))
        else:
            verts = (tri(a, b + 1), midpoint(a, b, "N"), c_v, midpoint(a, b, "D"))
            nbrs = (Face(a - 1, b, False, 2), Face(a, b, True, 0),
                    Face(a, b, True, 1), Face(a, b, False, 1))
    else:
        c_v = centroid(a, b, False)
        if f.c == 0:
            verts = (tri(a + 1, b), midpoint(a + 1, b, "N"), c_v, midpoint(a, b, "D"))
            nbrs = (Face(a + 1, b, True, 0), Face(a, b, False, 2),
                    Face(a, b, False, 1), Face(a, b, True, 1))
        elif f.c == 1:
            verts = (tri(a, b + 1), midpoint(a, b + 1, "E"), c_v, midpoint(a, b, "D"))
            nbrs = (Face(a, b + 1, True, 0), Face(a, b, False, 2),
                    Face(a, b, False, 0), Face(a, b, True, 2))
        else:
            verts = (tri(a + 1, b + 1), midpoint(a + 1, b, "N"), c_v, midpoint(a, b + 1, "E"))
            nbrs = (Face(a + 1, b, True, 2), Face(a, b, False, 0),
                    Face(a, b, False, 1), Face(a, b + 1, True, 1))
    return verts, nbrs


def face_boundary(f: Face) -> tuple[tuple[Vertex, ...], tuple[Edge, ...]]:
    """The 4 boundary vertices in rotational order and the 4 boundary edges,
    each edge carrying its two incident faces in the infinite lattice."""
    verts, nbrs = _boundary_spec(f)
    edges = tuple(_edge(verts[i], verts[(i + 1) % 4], f, nbrs[i]) for i in range(4))
    return verts, edges


def face_adjacency(f: Face) -> tuple[Face, ...]:
    """The 4 edge-adjacent faces, aligned with the boundary edges of f."""
    return _boundary_spec(f)[1]


def face_corner_sum(f: Face) -> tuple[int, int]:
    """Componentwise sum of the 4 boundary vertex coordinates (4x centroid)."""
    verts, _ = _boundary_spec(f)
    xs = ys = 0
    for v in verts:
        x, y = vertex_coords(v)
        xs += x
        ys += y
    return xs, ys


def in_row_neighbors(up: bool, c: int) -> tuple[tuple[bool, int, int], ...]:
    """Neighbors of face class (up, c) within its own triangle row, as
    (up', c', delta_a) triples."""
    out = []
    for g in face_adjacency(Face(0, 0, up, c)):
        if g.b == 0:
            out.append((g.up, g.c, g.a))
    return tuple(out)


# ---------------------------------------------------------------------------
# Labeling and 180-degree rotation


def _is_rotation_center(x: int, y: int) -> bool:
    # Valid 2-fold centers are tri-vertices and edge midpoints.
    if y % 12 == 0:
        return x % 6 == 0
    if y % 12 == 6:
        return x % 6 == 3
    return False


@dataclass(frozen=True)
class Labeling:
    """Bijective face labels per class plus the anchor of the 180-degree
    rotation that realizes sigma on the lattice."""

    up: tuple[int, int, int]
    down: tuple[int, int, int]
    rho_center: tuple[int, int] = (9, 6)  # midpoint of the (0,0) diagonal edge

    def __post_init__(self):
        if sorted(self.up + self.down) != list(LABELS):
            raise ValueError(f"labels must be a bijection onto 1..6: {self.up}+{self.down}")
        if not _is_rotation_center(*self.rho_center):
            raise ValueError(f"{self.rho_center} is not a 2-fold symmetry center")

    def label(self, f: Face) -> int:
        return (self.up if f.up else self.down)[f.c]

    def class_of(self, label: int) -> tuple[bool, int]:
        if label in self.up:
            return True, self.up.index(label)
        return False, self.down.index(label)


def _face_from_geometry(centroid_xy: tuple[int, int], corner_xy: tuple[int, int]) -> Face:
    cx, cy = centroid_xy
    if cy % 12 == 4:
        b, rem = divmod(cy - 4, 12)
        a = (cx - 6 * b - 6) // 12
        up = True
        corners = [tri(a, b), tri(a + 1, b), tri(a, b + 1)]
    elif cy % 12 == 8:
        b = (cy - 8) // 12
        a = (cx - 6 * b - 12) // 12
        up = False
        corners = [tri(a + 1, b), tri(a, b + 1), tri(a + 1, b + 1)]
    else:
        raise ValueError(f"{centroid_xy} is not a triangle centroid")
    for c, v in enumerate(corners):
        if vertex_coords(v) == corner_xy:
            return Face(a, b, up, c)
    raise ValueError(f"corner {corner_xy} does not belong to triangle at {centroid_xy}")


def rotate180(f: Face, labeling: Labeling) -> Face:
    """Image of f under the 180-degree rotation about the labeling's anchor.

    The rotation maps up kites to down kites and carries a face with label i
    to one with label sigma(i) for any labeling whose antipodal label pairs
    sit on antipodal face classes.
    """
    cx, cy = labeling.rho_center
    verts, _ = _boundary_spec(f)
    tx, ty = vertex_coords(verts[0])
    gx, gy = vertex_coords(centroid(f.a, f.b, f.up))
    return _face_from_geometry((2 * cx - gx, 2 * cy - gy), (2 * cx - tx, 2 * cy - ty))


def rotate_vertex(v: Vertex, labeling: Labeling) -> Vertex:
    cx, cy = labeling.rho_center
    x, y = vertex_coords(v)
    return vertex_from_coords(2 * cx - x, 2 * cy - y)


def vertex_from_coords(x: int, y: int) -> Vertex:
    r = y % 12
    if r == 0:
        b = y // 12
        q, s = divmod(x - 6 * b, 12)
        if s == 0:
            return tri(q, b)
        if s == 6:
            return midpoint(q, b, "E")
    elif r == 4:
        b = (y - 4) // 12
        q, s = divmod(x - 6 * b - 6, 12)
        if s == 0:
            return centroid(q, b, True)
    elif r == 8:
        b = (y - 8) // 12
        q, s = divmod(x - 6 * b - 12, 12)
        if s == 0:
            return centroid(q, b, False)
    elif r == 6:
        b = (y - 6) // 12
        q, s = divmod(x - 6 * b, 12)
        if s == 3:
            return midpoint(q, b, "N")
        if s == 9:
            return midpoint(q, b, "D")
    raise ValueError(f"({x}, {y}) is not a lattice vertex")


# ---------------------------------------------------------------------------
# Blocks


class BlockSchemeError(ValueError):
    """A labeling admits no consistent block scheme."""


#: Label multisets of the four block types, keyed by their conventional names.
BLOCK_TYPES = {"254": (2, 5, 4), "316": (3, 1, 6), "214": (2, 1, 4), "356": (3, 5, 6)}


def _derive_shape(classes: list[tuple[bool, int]]) -> dict[tuple[bool, int], int]:
    """Relative a-offsets realizing three face classes as a connected in-row
    triple; offsets are normalized to minimum 0.  Raises if disconnected."""
    offsets = {classes[0]: 0}
    frontier = [classes[0]]
    while frontier:
        cls = frontier.pop()
        for up2, c2, da in in_row_neighbors(*cls):
            other = (up2, c2)
            if other in classes:
                pos = offsets[cls] + da
                if other not in offsets:
                    offsets[other] = pos
                    frontier.append(other)
                elif offsets[other] != pos:
                    raise BlockSchemeError(f"inconsistent in-row offsets for {classes}")
    if len(offsets) != 3:
        raise BlockSchemeError(f"classes {classes} are not in-row connected")
    shift = min(offsets.values())
    return {k: v - shift for k, v in offsets.items()}


class BlockScheme:
    """The partition of the lattice faces into blocks T(i, j).

    Rows b <= 0 are tiled by [254]/[316] triples, rows b >= 1 by [214]/[356]
    triples; ``shapes`` holds each type's face classes with their relative
    a-offsets, and T(0,0) is the [254] block with unit index a = b = 0.
    The grid is walked lazily through block adjacency and cached.
    """

    def __init__(self, labeling: Labeling, shapes: dict[str, dict[tuple[bool, int], int]]):
        self.labeling = labeling
        self.shapes = shapes
        self._grid: dict[tuple[int, int], tuple[str, int, int]] = {(0, 0): ("254", 0, 0)}

    @staticmethod
    def from_labeling(labeling: Labeling) -> "BlockScheme":
        shapes = {}
        for name, labels in BLOCK_TYPES.items():
            classes = [labeling.class_of(l) for l in labels]
            if len(set(classes)) != 3:
                raise BlockSchemeError(f"block [{name}] has repeated classes")
            shapes[name] = _derive_shape(classes)
        for pair in (("254", "316"), ("214", "356")):
            union = set(shapes[pair[0]]) | set(shapes[pair[1]])
            if len(union) != 6:
                raise BlockSchemeError(f"blocks {pair} do not tile a strip")
        return BlockScheme(labeling, shapes)

    def _regime(self, b: int) -> tuple[str, str]:
        return ("254", "316") if b <= 0 else ("214", "356")

    def block_at_face(self, f: Face) -> tuple[str, int, int]:
        """The (type, a, b) of the unique block containing face f."""
        for name in self._regime(f.b):
            da = self.shapes[name].get((f.up, f.c))
            if da is not None:
                return name, f.a - da, f.b
        raise BlockSchemeError(f"face {f} not covered in its row regime")

    def instance_faces(self, name: str, a: int, b: int) -> tuple[Face, ...]:
        return tuple(sorted(Face(a + da, b, up, c)
                            for (up, c), da in self.shapes[name].items()))

    def _instance_neighbors(self, name: str, a: int, b: int):
        members = set(self.instance_faces(name, a, b))
        found = []
        for f in members:
            for g in face_adjacency(f):
                if g not in members:
                    blk = self.block_at_face(g)
                    if blk not in found:
                        found.append(blk)
        same_row = sorted((blk for blk in found if blk[2] == b),
                          key=lambda blk: sum(face_corner_sum(m)[0]
                                              for m in self.instance_faces(*blk)))
        north = [blk for blk in found if blk[2] == b + 1]
        south = [blk for blk in found if blk[2] == b - 1]
        if len(same_row) != 2 or len(north) != 1 or len(south) != 1:
            raise BlockSchemeError(f"block {(name, a, b)} lacks 4-directional neighbors")
        return {"W": same_row[0], "E": same_row[1], "N": north[0], "S": south[0]}

    def block(self, i: int, j: int) -> tuple[str, int, int]:
        """Block T(i, j): walked east/west along strip j after stepping
        north/south from the anchor column."""
        blk = self._grid.get((i, j))
        if blk is None:
            if j != 0:
                step = 1 if j > 0 else -1
                prev = self.block(i, j - step)
                blk = self._instance_neighbors(*prev)["N" if step > 0 else "S"]
            else:
                step = 1 if i > 0 else -1
                prev = self.block(i - step, 0)
                blk = self._instance_neighbors(*prev)["E" if step > 0 else "W"]
            self._grid[(i, j)] = blk
        return blk

    def block_faces(self, i: int, j: int) -> tuple[Face, ...]:
        """The three faces of block T(i, j)."""
        return self.instance_faces(*self.block(i, j))

    def block_type(self, i: int, j: int) -> str:
        return self.block(i, j)[0]

    def distinguished_square(self, label: int, i: int, j: int) -> Face:
        """The unique face with the given label inside block T(i, j)."""
        faces = [f for f in self.block_faces(i, j) if self.labeling.label(f) == label]
        if len(faces) != 1:
            raise BlockSchemeError(f"block T({i},{j}) has no unique label-{label} face")
        return faces[0]

    def s2(self) -> Face:
        return self.distinguished_square(2, 2, 0)

    def s3(self) -> Face:
        return self.distinguished_square(3, 1, 0)


def expected_block_type(i: int, j: int) -> str:
    """The parity rule for block types, validated at calibration time."""
    if j <= 0:
        return "254" if (i + j) % 2 == 0 else "316"
    return "214" if (i + j) % 2 == 0 else "356"


# ---------------------------------------------------------------------------
# Quiver duality


def _unit_cell_edges() -> Iterator[Edge]:
    """One representative edge per edge class: every edge has exactly one
    black (midpoint) endpoint, so the midpoints of cell (0,0) enumerate the
    twelve classes."""
    edge_map: dict[tuple[Vertex, Vertex], Edge] = {}
    for a in (-1, 0, 1):
        for b in (-1, 0, 1):
            for up in (True, False):
                for c in range(3):
                    for e in face_boundary(Face(a, b, up, c))[1]:
                        edge_map[(e.u, e.v)] = e
    cell_mids = {midpoint(0, 0, d) for d in "END"}
    for e in edge_map.values():
        black = e.u if e.u.kind == "m" else e.v
        if black in cell_mids:
            yield e


def quiver_from_tiling(labeling: Labeling) -> tuple[tuple[int, ...], ...]:
    """The exchange matrix dual to the tiling: one arrow per edge class,
    oriented so that, walking the edge white to black, the left face is the
    arrow's source."""
    b = [[0] * 6 for _ in range(6)]
    for e in _unit_cell_edges():
        white, black = (e.u, e.v) if e.u.kind != "m" else (e.v, e.u)
        wx, wy = vertex_coords(white)
        bx, by = vertex_coords(black)
        dx, dy = bx - wx, by - wy
        f, g = e.faces
        fx, fy = face_corner_sum(f)
        cross_f = dx * (fy - 4 * wy) - dy * (fx - 4 * wx)
        src, dst = (f, g) if cross_f > 0 else (g, f)
        s, t = labeling.label(src), labeling.label(dst)
        b[s - 1][t - 1] += 1
        b[t - 1][s - 1] -= 1
    return tuple(tuple(row) for row in b)


def sigma_label(i: int) -> int:
    return SIGMA(i)
