"""Polygonal cell complexes for closed surfaces and marked spheres.

A complex is a set of oriented skeleton edges and polygonal faces.  Each face
lists its sides counterclockwise as ``(edge, dir)`` where ``dir = +1`` means
the side runs from the edge's tail to its head.  Every edge is used once in
each direction, so the face traversing an edge forwards is its *left* face.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count

from .fatgraph import FatGraph

_ids = count()


@dataclass(eq=False)
class CellComplex:
    edge_ends: list[tuple[int, int]]                    # edge -> (tail vertex, head vertex)
    faces: list[list[tuple[int, int]]]                  # face -> sides (edge, dir), ccw
    side_labels: list[list[tuple]]                      # face -> label per side
    face_names: list[tuple]
    marked: frozenset = frozenset()                     # marked (puncture) vertices
    edge_names: list[tuple] = field(default_factory=list)
    uid: int = field(default_factory=lambda: next(_ids))

    def __post_init__(self):
        self.n_vertices = 1 + max(max(t, h) for t, h in self.edge_ends)
        # edge_side[e][dir] = (face, side index)
        self.edge_side = [dict() for _ in self.edge_ends]
        for f, sides in enumerate(self.faces):
            for k, (e, d) in enumerate(sides):
                if d in self.edge_side[e]:
                    raise ValueError(f"edge {e} used twice in direction {d}")
                self.edge_side[e][d] = (f, k)
        for e, s in enumerate(self.edge_side):
            if set(s) != {1, -1}:
                raise ValueError(f"edge {e} is not two-sided")
        self._face_index = {name: f for f, name in enumerate(self.face_names)}

    # -- combinatorics ---------------------------------------------------------

    @property
    def n_edges(self) -> int:
        return len(self.edge_ends)

    @property
    def n_faces(self) -> int:
        return len(self.faces)

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges + self.n_faces

    def genus(self) -> int:
        # closed orientable surface with marked points counted as ordinary vertices
        return (2 - self.euler_characteristic()) // 2

    def face(self, name) -> int:
        return self._face_index[name]

    def side_index(self, f: int, label) -> int:
        try:
            return self.side_labels[f].index(label)
        except ValueError:
            raise ValueError(f"face {self.face_names[f]} has no side {label}") from None

    def corner(self, f: int, k: int) -> int:
        """Vertex at the start of side ``k`` of face ``f``."""
        e, d = self.faces[f][k]
        t, h = self.edge_ends[e]
        return t if d == 1 else h

    def is_oriented_consistently(self) -> bool:
        # each face boundary must close up: end of side k == start of side k+1
        for f, sides in enumerate(self.faces):
            for k, (e, d) in enumerate(sides):
                t, h = self.edge_ends[e]
                end = h if d == 1 else t
                if end != self.corner(f, (k + 1) % len(sides)):
                    return False
        return True

    def vertex_links_are_cycles(self) -> bool:
        """Every vertex has a single disc-like link (the complex is a surface)."""
        # corners around a vertex: (face, side) -> next corner across the incoming edge
        succ = {}
        for f, sides in enumerate(self.faces):
            n = len(sides)
            for k in range(n):
                e_in, d_in = sides[(k - 1) % n]
                # corner of f at start of side k; rotate across edge e_in
                g, j = self.edge_side[e_in][-d_in]
                succ[(f, k)] = (g, j)  # side j of g starts at this vertex
        seen = set()
        per_vertex = {}
        for c in succ:
            if c in seen:
                continue
            v = self.corner(*c)
            per_vertex[v] = per_vertex.get(v, 0) + 1
            x = c
            while x not in seen:
                seen.add(x)
                x = succ[x]
        return all(n == 1 for n in per_vertex.values()) and len(per_vertex) == self.n_vertices

    def to_json(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "marked_vertices": sorted(self.marked),
            "edges": [{"id": e, "tail": t, "head": h, "name": list(self.edge_names[e])
                       if self.edge_names else None}
                      for e, (t, h) in enumerate(self.edge_ends)],
            "faces": [{"name": list(self.face_names[f]),
                       "sides": [{"edge": e, "dir": d, "label": list(lab)}
                                 for (e, d), lab in zip(self.faces[f], self.side_labels[f])]}
                      for f in range(self.n_faces)],
            "euler_characteristic": self.euler_characteristic(),
        }


@dataclass(eq=False)
class PantsComplex(CellComplex):
    """Surface obtained by thickening a trivalent fat graph.

    Each graph vertex ``v`` becomes a pair of pants cut into a front and a back
    hexagon by three seams.  Seam ``('s', v, k)`` runs from cuff ``k`` to cuff
    ``k+1``.  Graph edge ``e`` contributes a front cuff arc ``('f', e)`` and a
    back cuff arc ``('k', e)``.
    """

    graph: FatGraph | None = None

    def seam(self, v: int, k: int) -> int:
        return self._seam[(v, k % 3)]

    def front(self, v: int) -> int:
        return self.face((v, "F"))

    def back(self, v: int) -> int:
        return self.face((v, "B"))

    def to_json(self) -> dict:
        out = super().to_json()
        out["graph"] = self.graph.to_json() if self.graph else None
        out["pants"] = [{"vertex": v,
                         "cuffs": [h // 2 for h in self.graph.rotation[v]],
                         "faces": [self.front(v), self.back(v)]}
                        for v in range(self.graph.n_vertices)]
        return out


def thicken(G: FatGraph) -> PantsComplex:
    """Build the pants decomposition of the surface thickening ``G``."""
    if not G.is_trivalent():
        raise ValueError("thicken needs a trivalent fat graph")
    if not G.is_connected():
        raise ValueError("thicken needs a connected fat graph")

    # Cuff points: for half-edge h, X_h starts the front cuff arc and Y_h ends it.
    # Gluing along edge e identifies X_{2e} = Y_{2e+1} =: vertex 2e and
    # Y_{2e} = X_{2e+1} =: vertex 2e+1.
    def X(h):
        e = h // 2
        return 2 * e if h % 2 == 0 else 2 * e + 1

    def Y(h):
        e = h // 2
        return 2 * e + 1 if h % 2 == 0 else 2 * e

    edge_ends, edge_names = [], []
    seam = {}
    for v, rot in enumerate(G.rotation):
        for k in range(3):
            seam[(v, k)] = len(edge_ends)
            edge_ends.append((Y(rot[k]), X(rot[(k + 1) % 3])))
            edge_names.append(("s", v, k))
    front_arc, back_arc = {}, {}
    for e in range(G.n_edges):
        front_arc[e] = len(edge_ends)
        edge_ends.append((2 * e, 2 * e + 1))
        edge_names.append(("f", e))
    for e in range(G.n_edges):
        back_arc[e] = len(edge_ends)
        edge_ends.append((2 * e, 2 * e + 1))
        edge_names.append(("k", e))

    faces, labels, names = [], [], []
    for v, rot in enumerate(G.rotation):
        sides, labs = [], []
        for k in range(3):
            h = rot[k]
            sides.append((front_arc[h // 2], 1 if h % 2 == 0 else -1))
            labs.append(("c", k))
            sides.append((seam[(v, k)], 1))
            labs.append(("s", k))
        faces.append(sides)
        labels.append(labs)
        names.append((v, "F"))
        sides, labs = [], []
        for k in (0, 2, 1):
            h = rot[k]
            sides.append((back_arc[h // 2], -1 if h % 2 == 0 else 1))
            labs.append(("c", k))
            sides.append((seam[(v, (k - 1) % 3)], -1))
            labs.append(("s", (k - 1) % 3))
        faces.append(sides)
        labels.append(labs)
        names.append((v, "B"))

    P = PantsComplex(edge_ends, faces, labels, names, frozenset(), edge_names, graph=G)
    P._seam = seam
    P.front_arc = front_arc
    P.back_arc = back_arc
    return P


def marked_sphere(n: int) -> CellComplex:
    """Sphere with marked points 0..n, point 0 standing for the boundary.

    The points sit on an equator cut into edges ``E_j`` from ``j`` to ``j+1``;
    the upper face ``U`` runs along the equator forwards, the lower ``D`` backwards.
    """
    if n < 2:
        raise ValueError("marked_sphere needs n >= 2")
    m = n + 1
    edge_ends = [(j, (j + 1) % m) for j in range(m)]
    up = [(j, 1) for j in range(m)]
    down = [(j, -1) for j in reversed(range(m))]
    labels = [[("e", j) for j in range(m)], [("e", j) for j in reversed(range(m))]]
    return CellComplex(edge_ends, [up, down], labels, [("U",), ("D",)],
                       frozenset(range(m)), [("E", j) for j in range(m)])
