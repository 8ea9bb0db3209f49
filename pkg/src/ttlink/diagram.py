"""
The projection of beta^s as a cell complex on a disk.

All strands are pinched to one vertex at the top and one at the bottom;
every crossing is a 4-valent vertex and every strand segment an edge. The
complex is built as a rotation system (cyclic order of half-edges around
each vertex) and its faces are traced by walking half-edges, so face
counts come straight from the planar map and do not rely on any formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalError, InvalidArgument
from .roots import RootSubset, peripheral_profile, subset_to_word

__all__ = [
    "Face",
    "ProjectionComplex",
    "FaceCensus",
    "build_projection",
    "face_census_bruteforce",
    "face_census_closed",
    "census_violations",
]

@dataclass(frozen=True)
class Face:
    vertices: tuple[int, ...]  # boundary walk, one entry per side
    peripheral: bool

    @property
    def sides(self) -> int:
        return len(self.vertices)

    @property
    def kind(self) -> str:
        return {2: "bigon", 3: "triangle", 4: "quadrilateral"}.get(self.sides, f"{self.sides}-gon")


@dataclass(frozen=True)
class ProjectionComplex:
    r: int
    s: int
    word: tuple[int, ...]
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    faces: tuple[Face, ...]
    outer_sides: int
    top: int = 0
    bottom: int = -1

    @property
    def crossings(self) -> int:
        return len(self.word)

    @property
    def v(self) -> int:
        return self.vertex_count

    @property
    def e(self) -> int:
        return len(self.edges)

    @property
    def f(self) -> int:
        return len(self.faces)

    @property
    def euler_characteristic(self) -> int:
        return self.v - self.e + self.f

    def dump(self) -> str:
        """Plain-text face list for manual inspection."""
        lines = [
            f"# beta^s projection: r={self.r} s={self.s} word={' '.join(map(str, self.word))}",
            f"# v={self.v} e={self.e} f={self.f} chi={self.euler_characteristic}"
            f" boundary_edges={self.outer_sides}",
            f"# vertex {self.top} is the top pinch, vertex {self.bottom} the bottom pinch,"
            " vertex k (1..c) the k-th crossing",
        ]
        for idx, face in enumerate(self.faces):
            tag = "peripheral" if face.peripheral else "inner"
            verts = " ".join(map(str, face.vertices))
            lines.append(f"face {idx} {face.kind} {tag} : {verts}")
        return "\n".join(lines) + "\n"


def build_projection(J: RootSubset, s: int) -> ProjectionComplex:
    r = J.strands
    if r < 2:
        raise InvalidArgument("need at least 2 strands")
    if s < 0:
        raise InvalidArgument(f"s must be non-negative, got {s}")
    word = subset_to_word(J).letters * s
    c = len(word)
    top, bottom = 0, c + 1

    # half-edge h: origin[h], twin is h ^ 1; rot[v] lists half-edges counter-clockwise
    origin: list[int] = []
    rot: dict[int, list[int]] = {top: [None] * r, bottom: [None] * r}
    edges: list[tuple[int, int]] = []

    def add_edge(u, v):
        h = len(origin)
        origin.extend((u, v))
        edges.append((u, v))
        return h, h + 1

    # The top pinch emits strands downward, leftmost first counter-clockwise.
    # open_end[pos] = (vertex, rotation slot) of the segment hanging down at pos.
    open_end = [(top, pos) for pos in range(r)]
    for t, i in enumerate(word, start=1):
        g = i - 1  # gap between 0-based positions g and g+1
        # counter-clockwise around a crossing: upper-right, upper-left, lower-left, lower-right
        rot[t] = [None] * 4
        for pos, slot in ((g, 1), (g + 1, 0)):
            u, uslot = open_end[pos]
            down, up = add_edge(u, t)
            rot[u][uslot] = down
            rot[t][slot] = up
        open_end[g] = (t, 2)
        open_end[g + 1] = (t, 3)
    # bottom pinch: strands arrive from above, rightmost first counter-clockwise
    for pos in range(r):
        u, uslot = open_end[pos]
        down, up = add_edge(u, bottom)
        rot[u][uslot] = down
        rot[bottom][r - 1 - pos] = up

    where: dict[int, tuple[int, int]] = {}
    for v, hs in rot.items():
        for k, h in enumerate(hs):
            if h is None:
                raise InternalError(f"unfilled rotation slot at vertex {v}")
            where[h] = (v, k)

    def nxt(h):
        # arrive at the head of h, leave by the next half-edge clockwise from its twin
        v, k = where[h ^ 1]
        hs = rot[v]
        return hs[(k - 1) % len(hs)]

    seen = set()
    walks = []
    for h0 in range(len(origin)):
        if h0 in seen:
            continue
        walk = []
        h = h0
        while h not in seen:
            seen.add(h)
            walk.append(origin[h])
            h = nxt(h)
        walks.append(tuple(walk))

    if (c + 2) - len(edges) + len(walks) != 2:
        raise InternalError("rotation system is not planar")
    outer = [w for w in walks if top in w and bottom in w]
    if len(outer) != 1:
        raise InternalError(f"expected one outer face, found {len(outer)}")
    faces = []
    for w in walks:
        if w is outer[0]:
            continue
        if len(w) > 4:
            raise InternalError(f"face with {len(w)} sides: {w}")
        faces.append(Face(w, peripheral=(top in w or bottom in w)))
    return ProjectionComplex(
        r=r, s=s, word=word, vertex_count=c + 2, edges=tuple(edges),
        faces=tuple(faces), outer_sides=len(outer[0]), top=top, bottom=bottom,
    )


@dataclass(frozen=True)
class FaceCensus:
    B: int
    T_p: int
    T_i: int
    Q_p: int
    Q_i: int

    @property
    def T(self) -> int:
        return self.T_p + self.T_i

    @property
    def Q(self) -> int:
        return self.Q_p + self.Q_i

    @property
    def total(self) -> int:
        return self.B + self.T + self.Q

    def to_dict(self) -> dict:
        return {"B": self.B, "T_p": self.T_p, "T_i": self.T_i, "Q_p": self.Q_p, "Q_i": self.Q_i}


EMPTY_CENSUS = FaceCensus(0, 0, 0, 0, 0)


def face_census_bruteforce(J: RootSubset, s: int) -> FaceCensus:
    if J.strands < 3:
        raise InvalidArgument("face census needs r >= 3")
    if s == 0:
        return EMPTY_CENSUS
    cx = build_projection(J, s)
    counts = {"B": 0, "T_p": 0, "T_i": 0, "Q_p": 0, "Q_i": 0}
    for face in cx.faces:
        if face.sides == 2:
            counts["B"] += 1
        else:
            key = ("T" if face.sides == 3 else "Q") + ("_p" if face.peripheral else "_i")
            counts[key] += 1
    return FaceCensus(**counts)


def face_census_closed(J: RootSubset, s: int) -> FaceCensus:
    r = J.strands
    if r < 3:
        raise InvalidArgument("face census needs r >= 3")
    if s < 0:
        raise InvalidArgument(f"s must be non-negative, got {s}")
    if s == 0:
        return EMPTY_CENSUS
    prof = peripheral_profile(J)
    c = s * (r - 1)
    B = prof.bigons
    Q_p = prof.quads
    Q_i = (r - 3) * (s - 1)
    T_p = 2 * (r - 1) - B - Q_p
    T_i = (c + r - 1) - B - T_p - Q_p - Q_i
    return FaceCensus(B=B, T_p=T_p, T_i=T_i, Q_p=Q_p, Q_i=Q_i)


def census_violations(census: FaceCensus, r: int, s: int) -> list[str]:
    """Check the counting identities every census of beta^s must satisfy."""
    c = s * (r - 1)
    e = 2 * c + r
    out = []
    if census.total != c + r - 1:
        out.append(f"B+T+Q = {census.total} != c+r-1 = {c + r - 1}")
    if census.Q != (census.B - 2) + (r - 3) * (s - 1):
        out.append(f"Q = {census.Q} != (B-2)+(r-3)(s-1) = {(census.B - 2) + (r - 3) * (s - 1)}")
    if census.Q_p != census.B - 2:
        out.append(f"Q_p = {census.Q_p} != B-2 = {census.B - 2}")
    if census.Q_p > r - 2:
        out.append(f"Q_p = {census.Q_p} > r-2 = {r - 2}")
    if census.Q_p + census.T_p > 2 * (r - 2):
        out.append(f"Q_p+T_p = {census.Q_p + census.T_p} > 2(r-2) = {2 * (r - 2)}")
    if census.Q_i != (r - 3) * (s - 1):
        out.append(f"Q_i = {census.Q_i} != (r-3)(s-1) = {(r - 3) * (s - 1)}")
    if census.Q_p + census.T_p + census.B != 2 * (r - 1):
        out.append(f"Q_p+T_p+B = {census.Q_p + census.T_p + census.B} != 2(r-1)")
    if 2 * e != 2 * census.B + 3 * census.T + 4 * census.Q + 2 * (s + 1):
        out.append("edge-degree identity 2e = 2B+3T+4Q+2(s+1) fails")
    return out
