"""Simple closed curves in normal position with respect to a cell complex.

A curve is recorded as the cyclic sequence of skeleton edges it crosses.  Each
crossing is ``(edge, dir, key)``: ``dir = +1`` crosses from the edge's left
face to its right face, and ``key`` in (0, 1) is the position along the edge
measured from its tail.  Keys only matter through their order; they make the
joint drawing of several curves unambiguous.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complex import CellComplex, PantsComplex

HALF = Fraction(1, 2)


class CurveError(ValueError):
    pass


@dataclass(eq=False, frozen=True)
class CombCurve:
    complex: CellComplex
    crossings: tuple[tuple[int, int, Fraction], ...]
    label: str = ""

    def __post_init__(self):
        cr = tuple((int(e), int(d), Fraction(k)) for e, d, k in self.crossings)
        object.__setattr__(self, "crossings", cr)
        if not cr:
            raise CurveError("a curve must cross the skeleton at least once")
        for e, d, k in cr:
            if not 0 <= e < self.complex.n_edges or d not in (1, -1) or not 0 < k < 1:
                raise CurveError(f"bad crossing {(e, d, k)}")
        # consecutive crossings must leave through the face they entered
        for i in range(len(cr)):
            if self.chord_face(i) != self._exit_face(i + 1):
                raise CurveError(f"crossings {i} and {i + 1} do not share a face")

    def __len__(self) -> int:
        return len(self.crossings)

    def chord_face(self, i: int) -> int:
        """Face entered through crossing ``i``."""
        e, d, _ = self.crossings[i % len(self.crossings)]
        return self.complex.edge_side[e][-d][0]

    def _exit_face(self, i: int) -> int:
        e, d, _ = self.crossings[i % len(self.crossings)]
        return self.complex.edge_side[e][d][0]

    def reversed(self) -> "CombCurve":
        return CombCurve(self.complex, tuple((e, -d, k) for e, d, k in reversed(self.crossings)),
                         self.label)

    def with_label(self, label: str) -> "CombCurve":
        return CombCurve(self.complex, self.crossings, label)

    def edge_sequence(self) -> tuple[tuple[int, int], ...]:
        return tuple((e, d) for e, d, _ in self.crossings)

    def canonical(self) -> tuple:
        """Orientation-sensitive signature, independent of the starting crossing."""
        seq = self.edge_sequence()
        return min(seq[i:] + seq[:i] for i in range(len(seq)))

    def to_json(self) -> dict:
        return {"label": self.label,
                "crossings": [{"edge": e, "dir": d, "key": [k.numerator, k.denominator]}
                              for e, d, k in self.crossings]}

    @classmethod
    def from_json(cls, complex_: CellComplex, obj: dict) -> "CombCurve":
        try:
            cr = tuple((int(c["edge"]), int(c["dir"]), Fraction(int(c["key"][0]), int(c["key"][1])))
                       for c in obj["crossings"])
        except (KeyError, TypeError, IndexError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed curve JSON: {exc}") from exc
        return cls(complex_, cr, obj.get("label", ""))


def walk(C: CellComplex, start, exits, keys=None, label: str = "") -> CombCurve:
    """Curve that starts in face ``start`` and leaves through the labelled sides ``exits``.

    ``start`` is a face id or face name.  The walk must end in ``start``.
    """
    f = start if isinstance(start, int) else C.face(start)
    f0 = f
    crossings = []
    for i, label_ in enumerate(exits):
        k = C.side_index(f, label_)
        e, ds = C.faces[f][k]
        key = keys[i] if keys is not None else HALF
        crossings.append((e, ds, key))
        f = C.edge_side[e][-ds][0]
    if f != f0:
        raise CurveError("walk does not close up")
    return CombCurve(C, tuple(crossings), label)


# -- curves on thickened graphs ------------------------------------------------

def _pants_of(P: PantsComplex, h: int) -> tuple[int, int]:
    G = P.graph
    return G.vertex_of[h], G.slot(h)


def meridian(P: PantsComplex, e: int, end: int = 0, label: str = "") -> CombCurve:
    """Cuff curve of graph edge ``e``, pushed into the pants at half-edge ``2e + end``."""
    v, k = _pants_of(P, 2 * e + end)
    # the seam leaving cuff k starts there; the one entering it ends there
    keys = [Fraction(1, 8), Fraction(7, 8)]
    return walk(P, (v, "F"), [("s", k), ("s", (k - 1) % 3)], keys, label or f"m{e}")


def b_curve(P: PantsComplex, e: int, label: str = "") -> CombCurve:
    """Curve meeting the cuff of ``e`` twice, running through both adjacent pants."""
    G = P.graph
    (v, k), (w, j) = _pants_of(P, 2 * e), _pants_of(P, 2 * e + 1)
    if v == w:
        raise CurveError("b_curve needs an edge joining two distinct pants")
    if G.n_vertices == 2:
        raise CurveError("b_curve is undefined on the theta graph")
    exits = [("s", (k + 1) % 3), ("c", k), ("s", (j + 1) % 3), ("c", j)]
    return walk(P, (v, "F"), exits, label=label or f"b{e}")


def longitude(P: PantsComplex, cycle: list[int], label: str = "") -> CombCurve:
    """Curve running along a closed walk of half-edges through the front hexagons."""
    G = P.graph
    v0 = G.vertex_of[cycle[0]]
    exits = []
    v = v0
    for h in cycle:
        if G.vertex_of[h] != v:
            raise CurveError("half-edge sequence is not a closed walk")
        exits.append(("c", G.slot(h)))
        v = G.vertex_of[h ^ 1]
    if v != v0:
        raise CurveError("half-edge sequence does not close up")
    return walk(P, (v0, "F"), exits, label=label)


def interval_curve(S: CellComplex, p: int, q: int, label: str = "") -> CombCurve:
    """On a marked sphere, the curve enclosing the marked points p..q."""
    n = S.n_vertices - 1
    if not 1 <= p < q <= n:
        raise CurveError("interval must satisfy 1 <= p < q <= n")
    return walk(S, ("U",), [("e", q), ("e", p - 1)], label=label or f"[{p},{q}]")
