"""Homology classes of curves on a thickened graph.

Cycles of the graph give longitudes and non-tree edges give meridians.  After a
unimodular correction the meridians A_i and corrected longitudes B_i form a
symplectic basis with <A_i, B_i> = +1, and a curve's coordinates are read off
by pairing: the a_j-coefficient is <x, B_j>, the b_j-coefficient is <A_j, x>.
"""

from __future__ import annotations

from functools import cached_property

from ..symplectic import HomologyClass
from .arrangement import algebraic_intersection
from .complex import PantsComplex
from .curves import CombCurve, longitude, meridian
from .fatgraph import fundamental_cycle, spanning_tree


class HomologyBasis:
    def __init__(self, P: PantsComplex):
        if not isinstance(P, PantsComplex):
            raise TypeError("homology is only modelled on thickened graphs")
        G = P.graph
        self.complex = P
        tree = spanning_tree(G)
        self.cut_edges = [e for e in range(G.n_edges) if e not in tree]
        self.g = len(self.cut_edges)
        self.A = [meridian(P, e, label=f"A{i + 1}") for i, e in enumerate(self.cut_edges)]
        self.gamma = [longitude(P, fundamental_cycle(G, tree, e), label=f"L{i + 1}")
                      for i, e in enumerate(self.cut_edges)]
        g = self.g
        self.s = [algebraic_intersection(self.A[i], self.gamma[i]) for i in range(g)]
        if any(abs(x) != 1 for x in self.s):
            raise RuntimeError("meridian and longitude must meet once algebraically")
        for i in range(g):
            for k in range(g):
                if i != k and algebraic_intersection(self.A[i], self.gamma[k]) != 0:
                    raise RuntimeError("longitude crosses a foreign cut edge")
        gram = [[self.s[i] * self.s[k] * algebraic_intersection(self.gamma[i], self.gamma[k])
                 for k in range(g)] for i in range(g)]
        # B_i = s_i gamma_i + sum_k t[i][k] A_k with t upper triangular kills <B_i, B_k>
        self.t = [[-gram[i][k] if i < k else 0 for k in range(g)] for i in range(g)]

    def pair_with_B(self, x: CombCurve, j: int) -> int:
        v = self.s[j] * algebraic_intersection(x, self.gamma[j])
        for k in range(self.g):
            if self.t[j][k]:
                v += self.t[j][k] * algebraic_intersection(x, self.A[k])
        return v

    def homology_class(self, x: CombCurve) -> HomologyClass:
        if x.complex is not self.complex:
            raise ValueError("curve lives on a different complex")
        coords = []
        for j in range(self.g):
            coords.append(self.pair_with_B(x, j))
            coords.append(algebraic_intersection(self.A[j], x))
        return HomologyClass(self.g, tuple(coords))

    @cached_property
    def basis_classes(self) -> list[HomologyClass]:
        return [self.homology_class(c) for c in self.A]


_bases: dict[int, HomologyBasis] = {}


def basis_for(P: PantsComplex) -> HomologyBasis:
    if P.uid not in _bases:
        _bases[P.uid] = HomologyBasis(P)
    return _bases[P.uid]


def homology_class(c: CombCurve, orientation: int = 1) -> HomologyClass:
    """Class of ``c``; ``orientation = -1`` reverses the curve."""
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    x = basis_for(c.complex).homology_class(c)
    return x if orientation == 1 else -x
