"""Surfaces as cell complexes, simple closed curves on them, and intersection data."""

from .arrangement import (
    Arrangement,
    NotMinimalPosition,
    algebraic_intersection,
    complement_components,
    geometric_intersection,
    push_off,
    reduce_all,
    twist_curve,
)
from .complex import CellComplex, PantsComplex, marked_sphere, thicken
from .curves import CombCurve, CurveError, b_curve, interval_curve, longitude, meridian, walk
from .fatgraph import (
    FatGraph,
    build_gamma,
    caterpillar,
    caterpillar_spine_edges,
    edge_removal_connected,
    fundamental_cycle,
    spanning_tree,
)
from .homology import HomologyBasis, homology_class

__all__ = [
    "Arrangement", "NotMinimalPosition", "algebraic_intersection", "complement_components",
    "geometric_intersection", "push_off", "reduce_all", "twist_curve",
    "CellComplex", "PantsComplex", "marked_sphere", "thicken",
    "CombCurve", "CurveError", "b_curve", "interval_curve", "longitude", "meridian", "walk",
    "FatGraph", "build_gamma", "caterpillar", "caterpillar_spine_edges",
    "edge_removal_connected", "fundamental_cycle", "spanning_tree",
    "HomologyBasis", "homology_class",
]
