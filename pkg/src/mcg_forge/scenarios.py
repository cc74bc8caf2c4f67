"""Curve families with declared intersection patterns, and their verification.

Each family ships the pattern it is supposed to realise as data.  Evaluating a
family recomputes every constrained entry (geometric intersection by bigon
removal, algebraic pairing from homology classes) and compares.
"""

from __future__ import annotations

import hashlib
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import ceil

from .exact_linalg import ExactMatrix
from .relations import MatrixFamily, check_nm_relations
from .surface.arrangement import complement_components, geometric_intersection, twist_curve
from .surface.complex import CellComplex, marked_sphere, thicken
from .surface.curves import CombCurve, b_curve, interval_curve, longitude, meridian, walk
from .surface.fatgraph import build_gamma, caterpillar, caterpillar_spine_edges, edge_removal_connected
from .surface.homology import homology_class
from .symplectic import pairing, twist_matrix

SCHEMA_VERSION = "1.0"


def threads() -> int:
    try:
        return max(1, int(os.environ.get("MCG_FORGE_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    n = threads()
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))


@dataclass
class CurveFamily:
    name: str
    surface: dict                          # {"g", "r", "b"}
    complex: CellComplex
    curves: list[CombCurve]
    expected_pattern: list[list[int | None]]
    expected_pairings: list[list[int | None]] | None
    pairs: list[tuple[int, int]]           # (a_i, b_i) index pairs
    connectivity: list[dict] = field(default_factory=list)    # {"curves": [...], "expected": k}
    auxiliary: list[CombCurve] = field(default_factory=list)
    aux_checks: list[tuple[int, int, int]] = field(default_factory=list)   # (aux, curve, i)
    null_homologous: list[int] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        labels = [c.label for c in self.curves]
        if len(set(labels)) != len(labels):
            raise ValueError("curve labels must be unique")
        for mat in filter(None, (self.expected_pattern, self.expected_pairings)):
            n = len(self.curves)
            if len(mat) != n or any(len(r) != n for r in mat):
                raise ValueError("pattern must be square of the family size")
        P = self.expected_pattern
        if any(P[i][j] != P[j][i] for i in range(len(P)) for j in range(len(P))):
            raise ValueError("pattern must be symmetric")

    @property
    def labels(self) -> list[str]:
        return [c.label for c in self.curves]

    @property
    def genus(self) -> int:
        return self.surface["g"]


def _pattern(n_pairs: int, diag_value, ab_offdiag=0, bb=0, aa=0):
    """Pattern for curves ordered a_1..a_n, b_1..b_n."""
    n = 2 * n_pairs
    P = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            ai, aj = i < n_pairs, j < n_pairs
            if i == j:
                P[i][j] = 0
            elif ai and aj:
                P[i][j] = aa
            elif not ai and not aj:
                P[i][j] = bb
            else:
                a, b = (i, j - n_pairs) if ai else (j, i - n_pairs)
                P[i][j] = diag_value[a] if a == b else ab_offdiag
    return P


def _zeros(n: int):
    return [[0] * n for _ in range(n)]


# -- families --------------------------------------------------------------------

def main_family(g: int, rotation: str = "circle") -> CurveFamily:
    if g < 3:
        raise ValueError("main_family needs g >= 3")
    G = build_gamma(g, rotation)
    P = thicken(G)
    m = G.n_edges
    A = [meridian(P, e, label=f"a{e + 1}") for e in range(m)]
    B = [b_curve(P, e, label=f"b{e + 1}") for e in range(m)]
    pattern = _pattern(m, [2] * m, 0, None)
    conn = [{"curves": [i, m + i], "expected": 1,
             "graph_level": edge_removal_connected(G, i)} for i in range(m)]
    return CurveFamily("main", {"g": g, "r": 0, "b": 0}, P, A + B, pattern, _zeros(2 * m),
                       [(i, m + i) for i in range(m)], conn,
                       notes={"graph": G.name, "rotation": rotation})


def delta_size(g: int) -> int:
    return g + (g - 2) // 2


def delta_family(g: int) -> CurveFamily:
    """Torus pairs on every handle plus pairs in four-holed spheres along the spine."""
    if g < 2:
        raise ValueError("delta_family needs g >= 2")
    G = caterpillar(g)
    P = thicken(G)
    A, B, diag = [], [], []
    for i in range(1, g + 1):
        loop = i - 1
        A.append(meridian(P, loop, label=f"a{i}"))
        # reversed so that <a_i, b_i> = +1 with the caterpillar's basis
        B.append(longitude(P, [2 * loop]).reversed().with_label(f"b{i}"))
        diag.append(1)
    spine = caterpillar_spine_edges(g)
    for k in range(1, (g - 2) // 2 + 1):
        e = spine[2 * k - 1]           # sigma_{2k} joins w_{2k} and w_{2k+1}
        idx = len(A) + 1
        A.append(meridian(P, e, label=f"a{idx}"))
        B.append(b_curve(P, e, label=f"b{idx}"))
        diag.append(2)
    n = len(A)
    pattern = _pattern(n, diag)
    pairings = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        if diag[i] == 1:
            pairings[i][n + i], pairings[n + i][i] = 1, -1
    return CurveFamily("delta", {"g": g, "r": 0, "b": 0}, P, A + B, pattern, pairings,
                       [(i, n + i) for i in range(n)],
                       notes={"n": n, "torus_pairs": g, "sphere_pairs": n - g})


def _johnson_aux(P, g: int, i: int) -> CombCurve:
    """Curve through the separating curve a_i twice, looping over handles i and i+1."""
    u = lambda j: j - 1
    w = lambda j: g + j - 2
    L = u(1) if i == 1 else w(i)
    R = u(g) if i == g - 1 else w(i + 1)
    exits = []
    if L == u(1):
        exits += [("s", 1), ("c", 0)]
    else:
        exits += [("c", 0), ("s", 1), ("c", 0), ("c", 2)]
    if R == u(g):
        exits += [("s", 1), ("c", 0)]
    else:
        exits += [("c", 0), ("s", 1), ("c", 0), ("c", 1)]
    return walk(P, (L, "F"), exits, label=f"c{i}")


def johnson_family(g: int) -> CurveFamily:
    if g < 2:
        raise ValueError("johnson_family needs g >= 2")
    G = caterpillar(g)
    P = thicken(G)
    spine = caterpillar_spine_edges(g)
    A = [meridian(P, spine[i - 1], label=f"a{i}") for i in range(1, g)]
    Cs = [_johnson_aux(P, g, i) for i in range(1, g)]
    B = [twist_curve(a, c, 1).with_label(f"b{i + 1}") for i, (a, c) in enumerate(zip(A, Cs))]
    n = g - 1
    pattern = _pattern(n, [4] * n)
    return CurveFamily("johnson", {"g": g, "r": 0, "b": 0}, P, A + B, pattern, _zeros(2 * n),
                       [(i, n + i) for i in range(n)],
                       [{"curves": [i], "expected": 2} for i in range(n)],
                       auxiliary=Cs, aux_checks=[(i, i, 2) for i in range(n)],
                       null_homologous=list(range(2 * n)))


def braid_family(n: int) -> CurveFamily:
    """Pairs of interval curves on a disk with n marked points (boundary = point 0)."""
    if n < 5 or n % 2 == 0:
        raise ValueError("braid_family needs odd n >= 5")
    S = marked_sphere(n)
    k = (n - 1) // 2
    A = [interval_curve(S, 2 * i, 2 * i + 1, label=f"a{i}") for i in range(1, k + 1)]
    B = [interval_curve(S, 1, 2 * i, label=f"b{i}") for i in range(1, k + 1)]
    return CurveFamily("braid", {"g": 0, "r": n, "b": 1}, S, A + B, _pattern(k, [2] * k), None,
                       [(i, k + i) for i in range(k)],
                       notes={"k": k, "enclosed": {c.label: [p for p in range(1, n + 1)
                                                             if _encloses(c, p)] for c in A + B}})


def _encloses(c: CombCurve, p: int) -> bool:
    # interval curves cross E_q and E_{p-1}; the enclosed points lie in between
    edges = sorted(e for e, _, _ in c.crossings)
    return edges[0] < p <= edges[1]


FAMILIES = {"main": main_family, "delta": delta_family, "johnson": johnson_family,
            "braid": braid_family}


# -- derived data ---------------------------------------------------------------------

def implied_bound(g: int) -> tuple[int, int, bool]:
    if g < 2:
        raise ValueError("implied_bound needs g >= 2")
    lower = ceil((9 * g - 9) / 2)
    budget = 4 * g - 4
    return lower, budget, 2 * budget < 9 * g - 9


def derive_matrix_family(f: CurveFamily) -> MatrixFamily:
    if f.surface.get("r", 0) or f.genus < 1:
        raise ValueError("matrix families are only derived on unmarked closed surfaces")
    g = f.genus
    I = ExactMatrix.identity(2 * g)
    M, N = [], []
    for a, b in f.pairs:
        M.append(twist_matrix(homology_class(f.curves[a])).mat - I)
        N.append(twist_matrix(homology_class(f.curves[b])).mat - I)
    return MatrixFamily(len(f.pairs), 2 * g, tuple(M), tuple(N))


def family_digest(fam: MatrixFamily) -> str:
    blob = json.dumps(fam.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def evaluate(f: CurveFamily, unconstrained: bool = True) -> dict:
    """Full report: every constrained entry recomputed and compared."""
    n = len(f.curves)
    todo = [(i, j) for i in range(n) for j in range(i + 1, n)
            if unconstrained or f.expected_pattern[i][j] is not None]
    geo = dict(zip(todo, _pmap(lambda ij: geometric_intersection(f.curves[ij[0]], f.curves[ij[1]]),
                               todo)))
    classes = None
    if f.expected_pairings is not None:
        classes = [homology_class(c) for c in f.curves]
    checks = []
    for i, j in todo:
        exp = f.expected_pattern[i][j]
        checks.append({"pair": [f.labels[i], f.labels[j]], "kind": "geometric",
                       "expected": exp, "computed": geo[(i, j)],
                       "ok": None if exp is None else geo[(i, j)] == exp})
    if classes is not None:
        for i in range(n):
            for j in range(i + 1, n):
                exp = f.expected_pairings[i][j]
                val = pairing(classes[i], classes[j])
                checks.append({"pair": [f.labels[i], f.labels[j]], "kind": "algebraic",
                               "expected": exp, "computed": val,
                               "ok": None if exp is None else val == exp})
    for ai, ci, exp in f.aux_checks:
        val = geometric_intersection(f.auxiliary[ai], f.curves[ci])
        checks.append({"pair": [f.auxiliary[ai].label, f.labels[ci]], "kind": "geometric",
                       "expected": exp, "computed": val, "ok": val == exp})
    for ci in f.null_homologous:
        x = classes[ci] if classes is not None else homology_class(f.curves[ci])
        checks.append({"pair": [f.labels[ci]], "kind": "homology_zero", "expected": 0,
                       "computed": list(x.coords), "ok": x.is_zero()})
    connectivity = []
    for item in f.connectivity:
        val = complement_components([f.curves[i] for i in item["curves"]])
        entry = {"curves": [f.labels[i] for i in item["curves"]], "expected": item["expected"],
                 "computed": val, "ok": val == item["expected"]}
        if "graph_level" in item:
            entry["graph_level_connected"] = item["graph_level"]
            entry["levels_agree"] = item["graph_level"] == (val == 1)
        connectivity.append(entry)
    mismatches = sum(1 for c in checks + connectivity if c["ok"] is False)
    report = {
        "schema_version": SCHEMA_VERSION,
        "family": f.name,
        "surface": f.surface,
        "labels": f.labels,
        "notes": f.notes,
        "checks": checks,
        "connectivity": connectivity,
        "mismatches": mismatches,
        "ok": mismatches == 0,
        "matrix_family_ref": None,
        "relation_verdict": None,
        "implied_bound": None,
    }
    if f.surface.get("r", 0) == 0:
        fam = derive_matrix_family(f)
        report["matrix_family_ref"] = {"n": fam.n, "d": fam.d, "sha256": family_digest(fam)}
        report["relation_verdict"] = check_nm_relations(fam).to_json()
    if f.genus >= 2:
        lo, budget, contra = implied_bound(f.genus)
        report["implied_bound"] = {"lower": lo, "budget": budget, "contradiction": contra}
    return report


def run_scenario(name: str, param: int, unconstrained: bool = True) -> dict:
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}")
    return evaluate(FAMILIES[name](param), unconstrained)
