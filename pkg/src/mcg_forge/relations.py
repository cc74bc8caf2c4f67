"""Matrix families (M_i, N_i) and the relation system

    N_j M_i = 0  iff  i != j,
    M_j N_i = 0  iff  i != j,
    M_j M_i = 0  for all i, j,

together with the rank bounds it forces and a seeded search for small witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import ceil

from .exact_linalg import ExactMatrix, ShapeError, range_sum_dim


@dataclass(frozen=True)
class MatrixFamily:
    n: int
    d: int
    M: tuple[ExactMatrix, ...]
    N: tuple[ExactMatrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "M", tuple(self.M))
        object.__setattr__(self, "N", tuple(self.N))
        if self.n < 1:
            raise ValueError("a family needs n >= 1")
        if len(self.M) != self.n or len(self.N) != self.n:
            raise ShapeError(f"expected {self.n} matrices in M and N")
        for X in self.M + self.N:
            if (X.rows, X.cols) != (self.d, self.d):
                raise ShapeError(f"all members must be {self.d}x{self.d}")

    def conjugate(self, P: ExactMatrix, P_inv: ExactMatrix) -> "MatrixFamily":
        return MatrixFamily(self.n, self.d, tuple(P @ X @ P_inv for X in self.M),
                            tuple(P @ X @ P_inv for X in self.N))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d,
                "M": [X.to_json() for X in self.M], "N": [X.to_json() for X in self.N]}

    @classmethod
    def from_json(cls, obj: dict) -> "MatrixFamily":
        try:
            return cls(int(obj["n"]), int(obj["d"]),
                       tuple(ExactMatrix.from_json(x) for x in obj["M"]),
                       tuple(ExactMatrix.from_json(x) for x in obj["N"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed matrix family JSON: {exc}") from exc


@dataclass(frozen=True)
class Violation:
    kind: str             # "NM" for N_j M_i, "MN" for M_j N_i, "MM" for M_j M_i
    j: int
    i: int
    reason: str           # "should_be_zero" | "should_be_nonzero"

    def to_json(self) -> dict:
        return {"kind": self.kind, "indices": [self.j, self.i], "reason": self.reason}


@dataclass(frozen=True)
class RelationVerdict:
    violations: tuple[Violation, ...] = ()

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"holds": self.holds, "violations": [v.to_json() for v in self.violations]}


class PreconditionError(ValueError):
    """A bound was requested for a family that does not satisfy its hypotheses."""

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = tuple(violations)

    def to_json(self) -> dict:
        return {"error": "precondition", "message": str(self),
                "violations": [v.to_json() for v in self.violations]}


def _sparse_rows(X: ExactMatrix) -> list[dict[int, object]]:
    # plain ints where possible: Fraction arithmetic dominates otherwise
    return [{j: (int(x) if x.denominator == 1 else x) for j, x in enumerate(X.row(i)) if x}
            for i in range(X.rows)]


def _product_is_zero(A: list[dict], B: list[dict]) -> bool:
    for row in A:
        if not row:
            continue
        acc = {}
        for k, a in row.items():
            for j, b in B[k].items():
                acc[j] = acc.get(j, 0) + a * b
        if any(acc.values()):
            return False
    return True


def check_nm_relations(f: MatrixFamily, kinds=("NM", "MN", "MM")) -> RelationVerdict:
    Ms = [_sparse_rows(X) for X in f.M]
    Ns = [_sparse_rows(X) for X in f.N]
    factors = {"NM": (Ns, Ms), "MN": (Ms, Ns), "MM": (Ms, Ms)}
    out = []
    for kind in kinds:
        left, right = factors[kind]
        for j in range(f.n):
            for i in range(f.n):
                zero = _product_is_zero(left[j], right[i])
                if kind == "MM" or i != j:
                    if not zero:
                        out.append(Violation(kind, j, i, "should_be_zero"))
                elif zero:
                    out.append(Violation(kind, j, i, "should_be_nonzero"))
    return RelationVerdict(tuple(out))


@dataclass(frozen=True)
class BoundCheck:
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


def check_naive_bound(f: MatrixFamily) -> BoundCheck:
    """dim sum_i range M_i >= n, for families satisfying the N_j M_i relations."""
    v = check_nm_relations(f, kinds=("NM",))
    if not v.holds:
        raise PreconditionError("family violates the N_j M_i relations", v.violations)
    return BoundCheck(range_sum_dim(f.M), f.n)


@dataclass(frozen=True)
class DimInfBound:
    lhs: int
    rhs: int
    and_2d_ge_3n: bool

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs and self.and_2d_ge_3n

    def to_json(self) -> dict:
        return {"lhs": self.lhs, "rhs": self.rhs, "and_2d_ge_3n": self.and_2d_ge_3n,
                "holds": self.holds}


def check_dim_inf_bound(f: MatrixFamily) -> DimInfBound:
    """dim sum_i (range M_i + range N_i) >= 3n - d, hence 2d >= 3n."""
    v = check_nm_relations(f)
    if not v.holds:
        raise PreconditionError("family violates the relation system", v.violations)
    if any(X.is_zero() for X in f.M + f.N):
        raise PreconditionError("family has a zero member")
    lhs = range_sum_dim(list(f.M) + list(f.N))
    return DimInfBound(lhs, 3 * f.n - f.d, 2 * f.d >= 3 * f.n)


# -- generators -------------------------------------------------------------------

def _unit(d: int, r: int, c: int, x) -> list[list[int]]:
    A = [[0] * d for _ in range(d)]
    A[r][c] = x
    return A


def unimodular_pair(d: int, rng: random.Random, steps: int | None = None):
    """Random P in SL_d(Z) with its exact inverse, built from elementary row operations."""
    P = [[int(i == j) for j in range(d)] for i in range(d)]
    Q = [row[:] for row in P]
    for _ in range(steps if steps is not None else 3 * d):
        if d < 2:
            break
        r, s = rng.sample(range(d), 2)
        k = rng.choice([-2, -1, 1, 2])
        # P <- E P with E = I + k e_r e_s^T ; Q <- Q E^{-1}
        P[r] = [a + k * b for a, b in zip(P[r], P[s])]
        for row in Q:
            row[s] -= k * row[r]
    return ExactMatrix.from_rows(P), ExactMatrix.from_rows(Q)


def block_witness(n: int, d: int | None = None, alpha=1, beta=1) -> MatrixFamily:
    """n copies of the 2x2 witness M = E_12, N = E_21 on disjoint coordinate pairs."""
    d = 2 * n if d is None else d
    if d < 2 * n:
        raise ValueError("block witness needs d >= 2n")
    M = tuple(ExactMatrix.from_rows(_unit(d, 2 * i, 2 * i + 1, alpha)) for i in range(n))
    N = tuple(ExactMatrix.from_rows(_unit(d, 2 * i + 1, 2 * i, beta)) for i in range(n))
    return MatrixFamily(n, d, M, N)


def random_valid_family(n: int, d: int, seed: int) -> MatrixFamily:
    if n < 1:
        raise ValueError("n must be >= 1")
    if d < 2 * n:
        raise ValueError(f"random_valid_family needs d >= 2n (got n={n}, d={d})")
    rng = random.Random(seed)
    nz = [-3, -2, -1, 1, 2, 3]
    Ms, Ns = [], []
    pair_cols = {2 * j for j in range(n)}
    pair_rows = {2 * j + 1 for j in range(n)}
    for i in range(n):
        Ms.append(_unit(d, 2 * i, 2 * i + 1, rng.choice(nz)))
        N = _unit(d, 2 * i + 1, 2 * i, rng.choice(nz))
        # extra entries may not touch columns 2j or rows 2j+1 of other blocks
        for r in range(d):
            if r in pair_rows and r != 2 * i + 1:
                continue
            for c in range(d):
                if c in pair_cols and c != 2 * i:
                    continue
                if (r, c) != (2 * i + 1, 2 * i) and rng.random() < 0.15:
                    N[r][c] = rng.randint(-2, 2)
        Ns.append(N)
    fam = MatrixFamily(n, d, tuple(ExactMatrix.from_rows(m) for m in Ms),
                       tuple(ExactMatrix.from_rows(m) for m in Ns))
    P, Q = unimodular_pair(d, rng)
    return fam.conjugate(P, Q)


# -- witness search ------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessResult:
    n: int
    d_max: int
    family: MatrixFamily | None
    candidates_checked: int
    floor: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "floor", ceil(3 * self.n / 2))

    @property
    def best_d(self) -> int | None:
        return self.family.d if self.family else None

    @property
    def meets_floor(self) -> bool:
        return self.family is not None and self.family.d == self.floor

    def to_json(self) -> dict:
        return {"n": self.n, "d_max": self.d_max, "found": self.family is not None,
                "best_d": self.best_d, "floor_ceil_3n_over_2": self.floor,
                "meets_floor": self.meets_floor, "candidates_checked": self.candidates_checked,
                "family": self.family.to_json() if self.family else None}


def _random_candidate(n: int, d: int, rng: random.Random) -> MatrixFamily:
    # shared-kernel ansatz: rank-one M_i = x_i y_i^T with every y_j chosen orthogonal to
    # a common subspace, plus random sparse N_i
    def vec():
        return [rng.choice([-1, 0, 0, 1]) for _ in range(d)]

    Ms, Ns = [], []
    for _ in range(n):
        x, y = vec(), vec()
        if d > 1:
            k = rng.randrange(d)
            y[k] = 0
            x = [0] * d
            x[k] = rng.choice([-1, 1])
        Ms.append(ExactMatrix.from_rows([[a * b for b in y] for a in x]))
        Ns.append(ExactMatrix.from_rows([vec() for _ in range(d)]))
    return MatrixFamily(n, d, tuple(Ms), tuple(Ns))


def witness_search(n: int, d_max: int, seed: int, random_per_d: int = 64) -> WitnessResult:
    """Smallest-d family passing the relation checks among a fixed candidate list.

    For each d = 1..d_max the block ansatz is tried first (when d >= 2n), then
    ``random_per_d`` seeded random candidates.  Every reported family is
    re-verified; optimality is never claimed.
    """
    if n < 1 or d_max < 1:
        raise ValueError("need n >= 1 and d_max >= 1")
    rng = random.Random(seed)
    checked = 0
    for d in range(1, d_max + 1):
        candidates = []
        if d >= 2 * n:
            candidates.append(block_witness(n, d))
        for _ in range(random_per_d):
            candidates.append(_random_candidate(n, d, rng))
        for fam in candidates:
            checked += 1
            if check_nm_relations(fam).holds:
                return WitnessResult(n, d_max, fam, checked)
    return WitnessResult(n, d_max, None, checked)


def witness_family(n: int = 1) -> MatrixFamily:
    """The basic witness: d = 2, M = [[0,1],[0,0]], N = [[0,0],[1,0]] (block-repeated)."""
    return block_witness(n)

