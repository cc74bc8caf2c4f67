"""Trivalent fat graphs (multigraphs with a rotation system).

Half-edges are numbered so that edge ``e`` consists of half-edges ``2e`` and
``2e + 1``; the edge involution is therefore ``h ^ 1``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class FatGraph:
    vertex_of: tuple[int, ...]            # half-edge -> vertex
    rotation: tuple[tuple[int, ...], ...]  # vertex -> half-edges in cyclic order
    name: str = ""

    def __post_init__(self):
        if len(self.vertex_of) % 2:
            raise ValueError("odd number of half-edges")
        seen = sorted(h for rot in self.rotation for h in rot)
        if seen != list(range(len(self.vertex_of))):
            raise ValueError("rotation system must list every half-edge exactly once")
        for v, rot in enumerate(self.rotation):
            if any(self.vertex_of[h] != v for h in rot):
                raise ValueError(f"rotation at vertex {v} lists a foreign half-edge")

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return len(self.vertex_of) // 2

    @property
    def half_edges(self) -> range:
        return range(len(self.vertex_of))

    def endpoints(self, e: int) -> tuple[int, int]:
        return self.vertex_of[2 * e], self.vertex_of[2 * e + 1]

    def slot(self, h: int) -> int:
        """Cyclic position of half-edge ``h`` at its vertex."""
        return self.rotation[self.vertex_of[h]].index(h)

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def is_trivalent(self) -> bool:
        return all(len(r) == 3 for r in self.rotation)

    def is_connected(self) -> bool:
        return _connected(self.n_vertices, [self.endpoints(e) for e in range(self.n_edges)],
                          set(range(self.n_vertices)))

    def euler_characteristic(self) -> int:
        return self.n_vertices - self.n_edges

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(range(self.n_vertices)),
            "half_edges": [{"id": h, "vertex": self.vertex_of[h], "position": self.slot(h)}
                           for h in self.half_edges],
            "pairing": [[2 * e, 2 * e + 1] for e in range(self.n_edges)],
            "rotation": [list(r) for r in self.rotation],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FatGraph":
        try:
            rotation = tuple(tuple(int(h) for h in r) for r in obj["rotation"])
            n_half = sum(len(r) for r in rotation)
            vertex_of = [0] * n_half
            for v, r in enumerate(rotation):
                for h in r:
                    vertex_of[h] = v
            for a, b in obj.get("pairing", []):
                if {a, b} != {a & ~1, (a & ~1) + 1}:
                    raise ValueError("pairing must match the (2e, 2e+1) convention")
        except (KeyError, TypeError, IndexError) as exc:
            raise ValueError(f"malformed fat graph JSON: {exc}") from exc
        return cls(tuple(vertex_of), rotation, obj.get("name", ""))


def _connected(n: int, edges, alive: set) -> bool:
    if not alive:
        return False
    adj = {v: [] for v in alive}
    for u, v in edges:
        if u in alive and v in alive:
            adj[u].append(v)
            adj[v].append(u)
    start = min(alive)
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == alive


def from_edge_list(n_vertices: int, edges, rotation_keys=None, name: str = "") -> FatGraph:
    """Build a fat graph; ``rotation_keys(v, e, end)`` sorts half-edges at each vertex.

    Without keys the rotation follows edge insertion order.
    """
    vertex_of = []
    for u, v in edges:
        vertex_of += [u, v]
    rot = [[] for _ in range(n_vertices)]
    for h, v in enumerate(vertex_of):
        rot[v].append(h)
    if rotation_keys is not None:
        rot = [sorted(r, key=lambda h, v=v: rotation_keys(v, h // 2, h % 2)) for v, r in enumerate(rot)]
    return FatGraph(tuple(vertex_of), tuple(tuple(r) for r in rot), name)


def build_gamma(g: int, rotation: str = "circle") -> FatGraph:
    """The trivalent graph on 2g-2 vertices placed on a circle.

    Each vertex is joined to its two circle neighbours and to its antipode.
    The ``circle`` rotation puts the antipodal chord between the two circle
    neighbours (order: previous, antipode, next); ``twisted`` reverses that
    order at odd vertices.
    """
    if g < 2:
        raise ValueError("build_gamma needs g >= 2")
    m = 2 * g - 2
    edges = [(i, (i + 1) % m) for i in range(m)]           # circle edges, e = i
    edges += [(i, i + m // 2) for i in range(m // 2)]      # antipodal chords

    def key(v, e, end):
        if e < m:
            # edge i leaves i (end 0, "next") and arrives at i+1 (end 1, "previous")
            return 2 if end == 0 else 0
        return 1

    G = from_edge_list(m, edges, key, name=f"gamma_{g}")
    if rotation == "circle":
        return G
    if rotation == "twisted":
        rot = tuple(tuple(reversed(r)) if v % 2 else r for v, r in enumerate(G.rotation))
        return FatGraph(G.vertex_of, rot, f"gamma_{g}_twisted")
    raise ValueError(f"unknown rotation {rotation!r}")


def caterpillar(g: int) -> FatGraph:
    """Chain of g handles: loop vertices u_1..u_g hung off a spine w_2..w_{g-1}.

    Vertex ids: u_i -> i - 1, w_i -> g + i - 2.  Rotation at u_i is
    (bridge, loop, loop); at w_i it is (handle, left, right).
    """
    if g < 2:
        raise ValueError("caterpillar needs g >= 2")
    u = lambda i: i - 1
    w = lambda i: g + i - 2
    edges = [(u(i), u(i)) for i in range(1, g + 1)]        # loops, e = i - 1
    if g == 2:
        edges.append((u(1), u(2)))
    else:
        edges.append((u(1), w(2)))                              # spine edge sigma_1
        edges += [(w(i), w(i + 1)) for i in range(2, g - 1)]    # sigma_i
        edges.append((w(g - 1), u(g)))                          # sigma_{g-1}
        edges += [(u(i), w(i)) for i in range(2, g)]            # handle bridges
    n = 2 * g - 2
    vertex_of = []
    for a, b in edges:
        vertex_of += [a, b]
    rot = [[] for _ in range(n)]
    for i in range(1, g + 1):
        loop = i - 1
        rot[u(i)] = [None, 2 * loop, 2 * loop + 1]
    for e, (a, b) in enumerate(edges):
        if a == b:
            continue
        for end, v in ((0, a), (1, b)):
            h = 2 * e + end
            if v < g:
                rot[v][0] = h
            else:
                i = v - g + 2
                other = b if end == 0 else a
                left = u(1) if i == 2 else w(i - 1)
                if other == u(i):
                    slot = 0
                elif other == left:
                    slot = 1
                else:
                    slot = 2
                if not rot[v]:
                    rot[v] = [None, None, None]
                rot[v][slot] = h
    return FatGraph(tuple(vertex_of), tuple(tuple(r) for r in rot), f"caterpillar_{g}")


def caterpillar_spine_edges(g: int) -> list[int]:
    """Edge ids of sigma_1..sigma_{g-1}; sigma_i separates handles 1..i from the rest."""
    if g == 2:
        return [2]
    return list(range(g, 2 * g - 1))


def edge_removal_connected(G: FatGraph, e: int) -> bool:
    """Is Γ minus a double-Y neighbourhood of ``e`` nonempty and connected?

    The neighbourhood removes ``e`` and its endpoints; other edges at those
    endpoints survive as stubs on their remaining endpoint, so only the
    surviving vertices decide connectivity.
    """
    if not 0 <= e < G.n_edges:
        raise ValueError(f"no edge {e}")
    dead = set(G.endpoints(e))
    alive = set(range(G.n_vertices)) - dead
    others = [G.endpoints(f) for f in range(G.n_edges) if f != e]
    return _connected(G.n_vertices, others, alive)


def spanning_tree(G: FatGraph) -> set[int]:
    """Edges of a BFS spanning tree from vertex 0 (deterministic)."""
    tree = set()
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for h in G.rotation[v]:
            w = G.vertex_of[h ^ 1]
            if w not in seen:
                seen.add(w)
                tree.add(h // 2)
                queue.append(w)
    return tree


def fundamental_cycle(G: FatGraph, tree: set[int], e: int) -> list[int]:
    """Half-edges of the cycle: traverse ``e`` from 2e, then the tree path back."""
    start, end = G.vertex_of[2 * e], G.vertex_of[2 * e + 1]
    if start == end:
        return [2 * e]
    # BFS in the tree rooted at `start`, then climb from `end`
    parent = {start: None}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for h in G.rotation[v]:
            if h // 2 in tree:
                w = G.vertex_of[h ^ 1]
                if w not in parent:
                    parent[w] = h
                    queue.append(w)
    path = []
    v = end
    while parent[v] is not None:
        h = parent[v]           # half-edge at the parent pointing to v
        path.append(h ^ 1)      # step from v towards the root
        v = G.vertex_of[h]
    return [2 * e] + path
