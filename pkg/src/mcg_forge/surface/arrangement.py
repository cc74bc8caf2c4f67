"""Joint drawings of curves on a cell complex.

Inside each face the boundary points (corners and curve points) are placed in
convex position, so every curve piece is a straight chord and two chords cross
exactly when their endpoints interleave.  From this planar picture we read off
crossings, complementary regions, their Euler characteristics and corners,
which is all the bigon criterion needs.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction

from .curves import CombCurve, CurveError


class NotMinimalPosition(ValueError):
    pass


def _between(x: int, a: int, b: int, n: int) -> bool:
    """Is ``x`` strictly inside the ccw interval from ``a`` to ``b``?"""
    return x != a and (x - a) % n < (b - a) % n


def _pt(i: int) -> tuple[int, int]:
    return i, i * i


def _param(a: int, b: int, c: int, d: int) -> Fraction:
    """Position in (0, 1) along chord a->b where it meets chord c->d."""
    (ax, ay), (bx, by), (cx, cy), (dx, dy) = _pt(a), _pt(b), _pt(c), _pt(d)
    rx, ry = bx - ax, by - ay
    sx, sy = dx - cx, dy - cy
    den = rx * sy - ry * sx
    return Fraction((cx - ax) * sy - (cy - ay) * sx, den)


class Arrangement:
    """Planar picture of several curves drawn together."""

    def __init__(self, curves):
        curves = list(curves)
        if not curves:
            raise ValueError("empty arrangement")
        C = curves[0].complex
        if any(c.complex is not C for c in curves):
            raise ValueError("curves live on different complexes")
        self.complex = C
        self._normalize(curves)
        self._build_faces()
        self._build_chords()
        self._regions = None

    # -- construction ----------------------------------------------------------

    def _normalize(self, curves):
        pts = defaultdict(list)
        for ci, c in enumerate(curves):
            for k, (e, d, key) in enumerate(c.crossings):
                pts[e].append((key, ci, k))
        self.edge_pts = {}
        rank = {}
        for e, lst in pts.items():
            lst.sort()
            self.edge_pts[e] = [(ci, k) for _, ci, k in lst]
            for r, (_, ci, k) in enumerate(lst):
                rank[(ci, k)] = r
        self.rank = rank
        self.curves = []
        for ci, c in enumerate(curves):
            cr = []
            for k, (e, d, _) in enumerate(c.crossings):
                cr.append((e, d, Fraction(rank[(ci, k)] + 1, len(self.edge_pts[e]) + 1)))
            self.curves.append(CombCurve(c.complex, tuple(cr), c.label))

    def _build_faces(self):
        C = self.complex
        self.face_nodes = []        # face -> boundary nodes in ccw order
        self.face_arcseg = []       # face -> segment (edge, j) of arc i -> i+1
        self.bindex = {}            # (curve, crossing, side dir) -> (face, index)
        for f, sides in enumerate(C.faces):
            nodes, segs = [], []
            for (e, d) in sides:
                plist = self.edge_pts.get(e, [])
                t = len(plist)
                tail, head = C.edge_ends[e]
                nodes.append(("v", tail if d == 1 else head))
                segs.append((e, 0 if d == 1 else t))
                order = range(t) if d == 1 else range(t - 1, -1, -1)
                for r in order:
                    ci, k = plist[r]
                    self.bindex[(ci, k, d)] = (f, len(nodes))
                    nodes.append(("p", ci, k))
                    segs.append((e, r + 1 if d == 1 else r))
            self.face_nodes.append(nodes)
            self.face_arcseg.append(segs)

    def _build_chords(self):
        # chord (ci, k) runs from crossing k to crossing k+1 inside one face
        self.chord_ends = {}
        self.face_chords = defaultdict(list)
        for ci, c in enumerate(self.curves):
            L = len(c.crossings)
            for k in range(L):
                e0, d0, _ = c.crossings[k]
                e1, d1, _ = c.crossings[(k + 1) % L]
                f, a = self.bindex[(ci, k, -d0)]
                f2, b = self.bindex[(ci, (k + 1) % L, d1)]
                assert f == f2
                self.chord_ends[(ci, k)] = (f, a, b)
                self.face_chords[f].append((ci, k))
        self.crossings = []                  # (chord1, chord2, t1, t2, face)
        self.chord_x = defaultdict(list)     # chord -> [(t, xid)]
        self.self_crossing = False
        for f, chords in self.face_chords.items():
            n = len(self.face_nodes[f])
            for i in range(len(chords)):
                ch1 = chords[i]
                _, a, b = self.chord_ends[ch1]
                for j in range(i + 1, len(chords)):
                    ch2 = chords[j]
                    _, c, d = self.chord_ends[ch2]
                    if _between(c, a, b, n) == _between(d, a, b, n):
                        continue
                    if ch1[0] == ch2[0]:
                        self.self_crossing = True
                    xid = len(self.crossings)
                    t1, t2 = _param(a, b, c, d), _param(c, d, a, b)
                    self.crossings.append((ch1, ch2, t1, t2, f))
                    self.chord_x[ch1].append((t1, xid))
                    self.chord_x[ch2].append((t2, xid))
        for lst in self.chord_x.values():
            lst.sort()

    # -- queries ------------------------------------------------------------------

    def is_simple(self) -> bool:
        return not self.self_crossing

    def crossing_count(self, i: int, j: int) -> int:
        return sum(1 for ch1, ch2, *_ in self.crossings if {ch1[0], ch2[0]} == {i, j} and i != j)

    def crossing_sign(self, xid: int) -> int:
        """+1 when the first chord's curve crosses the second's from right to left.

        Concretely, for chords x: A->B and y: C->D the sign is +1 iff the ccw
        boundary order is A, C, B, D, i.e. the tangent pair (x, y) is positively
        oriented.
        """
        ch1, ch2, _, _, f = self.crossings[xid]
        n = len(self.face_nodes[f])
        _, a, b = self.chord_ends[ch1]
        _, c, _ = self.chord_ends[ch2]
        return 1 if _between(c, a, b, n) else -1

    def algebraic(self, i: int, j: int) -> int:
        """Algebraic intersection of curve i with curve j."""
        s = 0
        for xid, (ch1, ch2, *_rest) in enumerate(self.crossings):
            if ch1[0] == i and ch2[0] == j:
                s += self.crossing_sign(xid)
            elif ch1[0] == j and ch2[0] == i:
                s -= self.crossing_sign(xid)
        return s

    def side_of(self, point_bidx: int, chord, face: int) -> int:
        """+1 if boundary point is left of the directed chord, -1 if right."""
        n = len(self.face_nodes[face])
        _, c, d = self.chord_ends[chord]
        return 1 if _between(point_bidx, d, c, n) else -1

    # -- regions ------------------------------------------------------------------

    def _trace_pieces(self, f: int):
        nodes = self.face_nodes[f]
        n = len(nodes)
        rot = {}      # node -> list of (target node, edge id) ccw
        eid = 0
        for i in range(n):
            rot.setdefault(("b", i), [])
        # boundary arcs
        arcs = {}
        for i in range(n):
            arcs[i] = eid
            eid += 1
        for i in range(n):
            fwd = (("b", (i + 1) % n), arcs[i])
            bwd = (("b", (i - 1) % n), arcs[(i - 1) % n])
            rot[("b", i)] = [fwd, bwd]
        # chord pieces
        ray_info = {}   # (node, edge id) at a crossing -> (curve, forward?)
        for ch in self.face_chords.get(f, []):
            _, a, b = self.chord_ends[ch]
            seq = [("b", a)] + [("x", xid) for _, xid in self.chord_x.get(ch, [])] + [("b", b)]
            ends = [a] + [None] * (len(seq) - 2) + [b]
            for s in range(len(seq) - 1):
                u, v = seq[s], seq[s + 1]
                if u[0] == "b":
                    rot[u].insert(1, (v, eid))
                else:
                    rot.setdefault(u, []).append((v, eid, b))
                    ray_info[(u, eid)] = (ch[0], True)
                if v[0] == "b":
                    rot[v].insert(1, (u, eid))
                else:
                    rot.setdefault(v, []).append((u, eid, a))
                    ray_info[(v, eid)] = (ch[0], False)
                eid += 1
        for node, lst in rot.items():
            if node[0] == "x":
                lst.sort(key=lambda item: item[2])
                rot[node] = [(t, e) for t, e, _ in lst]
        pos = {}
        for node, lst in rot.items():
            for idx, (t, e) in enumerate(lst):
                pos[(node, t, e)] = idx
        # trace faces: next dart is clockwise-next from the reversed dart
        seen = set()
        pieces = []
        darts = [(u, t, e) for u, lst in rot.items() for t, e in lst]
        for d0 in sorted(darts, key=lambda d: (d[0][0], d[0][1], d[2])):
            if d0 in seen:
                continue
            cyc = []
            d = d0
            while d not in seen:
                seen.add(d)
                cyc.append(d)
                u, v, e = d
                lst = rot[v]
                idx = pos[(v, u, e)]
                t2, e2 = lst[(idx - 1) % len(lst)]
                d = (v, t2, e2)
            pieces.append(cyc)
        out = []
        for cyc in pieces:
            fwd_arcs, corners, sectors = [], [], []
            outer = True
            for k, (u, v, e) in enumerate(cyc):
                is_arc = u[0] == "b" and v[0] == "b" and e in (arcs[u[1]], arcs[v[1]])
                if is_arc and e == arcs[u[1]] and v[1] == (u[1] + 1) % n:
                    fwd_arcs.append(u[1])
                    if nodes[u[1]][0] == "v":
                        corners.append(nodes[u[1]][1])
                if not (is_arc and e == arcs[v[1]] and u[1] == (v[1] + 1) % n):
                    outer = False
                if v[0] == "x":
                    nu, nv, ne = cyc[(k + 1) % len(cyc)]
                    first = ray_info[(v, ne)]            # outgoing ray
                    second = ray_info[(v, e)]            # ray back along incoming
                    sectors.append((v[1], first, second))
            if outer:
                continue
            out.append({"arcs": fwd_arcs, "vertices": corners, "sectors": sectors})
        return out

    def regions(self):
        if self._regions is not None:
            return self._regions
        pieces = []
        for f in range(self.complex.n_faces):
            for p in self._trace_pieces(f):
                p["face"] = f
                pieces.append(p)
        parent = list(range(len(pieces)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        seg_owner = {}
        for pi, p in enumerate(pieces):
            f = p["face"]
            for i in p["arcs"]:
                seg = self.face_arcseg[f][i]
                if seg in seg_owner:
                    a, b = find(seg_owner[seg]), find(pi)
                    if a != b:
                        parent[max(a, b)] = min(a, b)
                else:
                    seg_owner[seg] = pi
        groups = defaultdict(list)
        for pi in range(len(pieces)):
            groups[find(pi)].append(pi)
        regions = []
        for root in sorted(groups):
            members = groups[root]
            verts, segs, sectors = set(), set(), []
            for pi in members:
                f = pieces[pi]["face"]
                verts.update(pieces[pi]["vertices"])
                segs.update(self.face_arcseg[f][i] for i in pieces[pi]["arcs"])
                sectors += pieces[pi]["sectors"]
            regions.append({
                "pieces": len(members),
                "faces": sorted(pieces[pi]["face"] for pi in members),
                "vertices": sorted(verts),
                "euler": len(verts) - len(segs) + len(members),
                "sectors": sectors,
                "marked": any(v in self.complex.marked for v in verts),
            })
        self._regions = regions
        return regions

    def n_regions(self) -> int:
        return len(self.regions())

    def bigons(self):
        out = []
        for r in self.regions():
            if r["euler"] != 1 or r["marked"] or len(r["sectors"]) != 2:
                continue
            (p, *_), (q, *_) = r["sectors"]
            if p == q:
                continue
            out.append(r)
        return out


# -- bigon removal ---------------------------------------------------------------

def _arc(L: int, k0: int, t0, k1: int, t1, forward: bool) -> list[int]:
    """Crossing indices passed going from (chord k0, t0) to (chord k1, t1)."""
    if forward:
        if k0 == k1 and t1 > t0:
            return []
        n = (k1 - k0) % L or L
        return [(k0 + 1 + i) % L for i in range(n)]
    if k0 == k1 and t1 < t0:
        return []
    n = (k0 - k1) % L or L
    return [(k0 - i) % L for i in range(n)]


def _chord_and_t(arr: Arrangement, xid: int, ci: int):
    ch1, ch2, t1, t2, _ = arr.crossings[xid]
    return (ch1[1], t1) if ch1[0] == ci else (ch2[1], t2)


def _neighbour_key(arr_keys: list, key, toward_head: bool):
    if toward_head:
        above = [k for k in arr_keys if k > key]
        return min(above) if above else Fraction(1)
    below = [k for k in arr_keys if k < key]
    return max(below) if below else Fraction(0)


def remove_bigon(arr: Arrangement, region) -> list[CombCurve]:
    """Push one curve across the bigon ``region``; returns the new curve list."""
    (p, first_p, second_p), (q, first_q, second_q) = region["sectors"]
    curves_in = {first_p[0], second_p[0]}
    x = max(curves_in)
    y = min(curves_in)
    x_ray = first_p if first_p[0] == x else second_p
    y_ray = first_p if first_p[0] == y else second_p
    bigon_left_of_y = first_p[0] == y

    X = arr.curves[x].crossings
    Y = arr.curves[y].crossings
    kxp, txp = _chord_and_t(arr, p, x)
    kxq, txq = _chord_and_t(arr, q, x)
    kyp, typ = _chord_and_t(arr, p, y)
    kyq, tyq = _chord_and_t(arr, q, y)
    x_fwd, y_fwd = x_ray[1], y_ray[1]
    x_gone = _arc(len(X), kxp, txp, kxq, txq, x_fwd)
    y_path = _arc(len(Y), kyp, typ, kyq, tyq, y_fwd)

    # current keys per edge, without the x points that disappear
    gone = {(x, i) for i in x_gone}
    keys = defaultdict(list)
    for ci, c in enumerate(arr.curves):
        for i, (e, _, k) in enumerate(c.crossings):
            if (ci, i) not in gone:
                keys[e].append(k)
    new_pts = []
    for i in y_path:
        e, d, ky = Y[i]
        d_trav = d if y_fwd else -d
        toward_head = (d_trav == 1) != bigon_left_of_y
        nb = _neighbour_key(keys[e], ky, toward_head)
        nk = (ky + nb) / 2
        keys[e].append(nk)
        new_pts.append((e, d_trav, nk))

    L = len(X)
    keep = L - len(x_gone)
    if x_fwd:
        rest = [X[(kxq + 1 + i) % L] for i in range(keep)]
        new = new_pts + rest
    else:
        rest = [X[(kxp + 1 + i) % L] for i in range(keep)]
        new = [(e, -d, k) for e, d, k in reversed(new_pts)] + rest
    curves = list(arr.curves)
    if not new:
        raise CurveError("curve collapsed while removing a bigon")
    others = [cv for i, cv in enumerate(curves) if i != x]
    curves[x] = tighten(CombCurve(arr.complex, tuple(new), curves[x].label), others)
    return curves


def tighten(c: CombCurve, context) -> CombCurve:
    """Cancel immediate back-and-forth crossings of one edge with nothing between."""
    keys = defaultdict(list)
    for other in context:
        for e, _, k in other.crossings:
            keys[e].append(k)
    cr = list(c.crossings)
    changed = True
    while changed and len(cr) >= 2:
        changed = False
        L = len(cr)
        for i in range(L):
            e0, d0, k0 = cr[i]
            e1, d1, k1 = cr[(i + 1) % L]
            if e0 != e1 or d0 != -d1:
                continue
            lo, hi = min(k0, k1), max(k0, k1)
            own = [k for j, (e, _, k) in enumerate(cr) if e == e0 and lo < k < hi]
            if own or any(lo < k < hi for k in keys[e0]):
                continue
            j = (i + 1) % L
            cr = [cr[m] for m in range(L) if m not in (i, j)]
            changed = True
            break
    if not cr:
        raise CurveError("curve is null-homotopic")
    return CombCurve(c.complex, tuple(cr), c.label)


def _pick_bigon(arr: Arrangement):
    bigons = arr.bigons()
    if not bigons:
        return None
    return min(bigons, key=lambda r: (r["faces"], r["sectors"][0][0]))


def reduce_all(curves, max_steps: int = 100000) -> Arrangement:
    """Remove innermost bigons until none are left; returns the final arrangement."""
    arr = Arrangement(curves)
    if not arr.is_simple():
        raise CurveError("curve is not simple")
    steps = 0
    while True:
        r = _pick_bigon(arr)
        if r is None:
            return arr
        before = len(arr.crossings)
        arr = Arrangement(remove_bigon(arr, r))
        if len(arr.crossings) >= before:
            raise RuntimeError("bigon removal did not reduce the crossing count")
        steps += 1
        if steps > max_steps:
            raise RuntimeError("bigon removal did not terminate")


def geometric_intersection(c1: CombCurve, c2: CombCurve) -> int:
    if c1.complex is not c2.complex:
        raise ValueError("curves live on different complexes")
    for c in (c1, c2):
        if not Arrangement([c]).is_simple():
            raise CurveError(f"curve {c.label!r} is not simple")
    return reduce_all([c1, c2]).crossing_count(0, 1)


def algebraic_intersection(c1: CombCurve, c2: CombCurve) -> int:
    if c1.complex is not c2.complex:
        raise ValueError("curves live on different complexes")
    return Arrangement([c1, c2]).algebraic(0, 1)


def complement_components(curves, reduce: bool = True) -> int:
    """Number of components of the surface minus the curves (in minimal position)."""
    curves = list(curves)
    arr = Arrangement(curves)
    if not arr.is_simple():
        raise CurveError("curves must be simple")
    if arr.bigons():
        if not reduce:
            raise NotMinimalPosition("curves not bigon-free")
        arr = reduce_all(curves)
        for i in range(len(curves)):
            for j in range(i + 1, len(curves)):
                if arr.crossing_count(i, j) != geometric_intersection(curves[i], curves[j]):
                    raise NotMinimalPosition("curves cannot be put in pairwise minimal position")
    return arr.n_regions()


def push_off(c: CombCurve) -> CombCurve:
    """A parallel copy of ``c`` displaced to its left."""
    arr = Arrangement([c])
    c = arr.curves[0]
    keys = defaultdict(list)
    for e, _, k in c.crossings:
        keys[e].append(k)
    out = []
    for e, d, k in c.crossings:
        nb = _neighbour_key(keys[e], k, d == 1)
        out.append((e, d, (k + nb) / 2))
    return CombCurve(c.complex, tuple(out), c.label + "'")


# -- Dehn twists -------------------------------------------------------------------

# Handedness of the spiral relative to the orientation of ``about``; chosen so
# that twists act on homology by x -> x + <a, x> a.
SPIRAL_SIGN = -1


def twist_curve(c: CombCurve, about: CombCurve, power: int = 1) -> CombCurve:
    """Image of ``c`` under the ``power``-th Dehn twist about ``about``."""
    if c.complex is not about.complex:
        raise ValueError("curves live on different complexes")
    if power == 0:
        return c
    for cur in (c, about):
        if not Arrangement([cur]).is_simple():
            raise CurveError(f"curve {cur.label!r} is not simple")
    arr = Arrangement([c, about])
    cc, aa = arr.curves
    A = aa.crossings
    La = len(A)

    events = []
    for j in range(La):
        events.append(("phi", j))
        for _, xid in arr.chord_x.get((1, j), []):
            events.append(("p", xid))
    where = {ev: i for i, ev in enumerate(events)}
    Lt = len(events)
    P = abs(power)
    step = SPIRAL_SIGN * (1 if power > 0 else -1)

    # free gap around each of about's points
    gap = {}
    for j, (e, d, k) in enumerate(A):
        others = [kk for ci, cur in enumerate(arr.curves) for (ee, _, kk) in cur.crossings
                  if ee == e and not (ci == 1 and kk == k)]
        lo = max([kk for kk in others if kk < k], default=Fraction(0))
        hi = min([kk for kk in others if kk > k], default=Fraction(1))
        gap[j] = (lo, hi)

    def spiral(xid):
        start = where[("p", xid)]
        pts = []
        total = P * Lt
        for u in range(1, total + 1):
            ev = events[(start + step * u) % Lt]
            if ev[0] != "phi":
                continue
            j = ev[1]
            e, d, _ = A[j]
            t = Fraction(u, total + 1)
            lo, hi = gap[j]
            key = hi - (hi - lo) * t if d == 1 else lo + (hi - lo) * t
            pts.append((e, d if step == 1 else -d, key))
        return pts

    by_chord = defaultdict(list)
    for xid, (ch1, ch2, t1, t2, f) in enumerate(arr.crossings):
        if {ch1[0], ch2[0]} != {0, 1}:
            continue
        cch, tc = (ch1, t1) if ch1[0] == 0 else (ch2, t2)
        ach = ch2 if ch1[0] == 0 else ch1
        by_chord[cch[1]].append((tc, xid, ach, f))

    new = []
    Lc = len(cc.crossings)
    for k in range(Lc):
        new.append(cc.crossings[k])
        for tc, xid, ach, f in sorted(by_chord.get(k, [])):
            _, a_idx, _ = arr.chord_ends[(0, k)]
            pts = spiral(xid)
            if arr.side_of(a_idx, ach, f) == 1:
                new += pts
            else:
                new += [(e, -d, kk) for e, d, kk in reversed(pts)]
    out = tighten(CombCurve(c.complex, tuple(new), c.label), [])
    if not Arrangement([out]).is_simple():
        raise CurveError("twisted curve is not simple")
    return out
