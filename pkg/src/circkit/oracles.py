"""Brute-force reference implementations built on dense matrices.

Deliberately independent of the Fourier and closed-form paths: exact
rational linear algebra, fraction-free determinants, first-step linear
systems, seeded simulation, and plain edge-subset enumeration.  Slow but
trustworthy at small sizes; the verification suite treats these as ground
truth.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DisconnectedGraphError, UnsupportedCaseError
from .graphs import CirculantSpec, circulant_distance, degree

__all__ = [
    "DenseLaplacian",
    "WalkConfig",
    "WalkStats",
    "build_laplacian",
    "resistance_oracle",
    "resistance_profile_oracle",
    "tree_count_oracle",
    "forest_count_oracle",
    "hitting_time_oracle",
    "hitting_time_monte_carlo",
    "spanning_tree_enumerate",
    "kirchhoff_oracle",
]

# exact rational solves above this size get slow; callers can still force them
EXACT_SIZE_CAP = 30


@dataclass
class DenseLaplacian:
    """Dense exact-rational Laplacian: diagonal degree, off-diagonal -w(h(i,j))."""

    n: int
    entries: list[list[Fraction]]

    def as_float(self) -> np.ndarray:
        return np.array([[float(x) for x in row] for row in self.entries], dtype=float)


@dataclass(frozen=True)
class WalkConfig:
    """Settings for simulated random walks.

    max_steps=None means n**3 at run time; anything below n**2 is rejected.
    """

    seed: int
    walks: int
    max_steps: int | None = None

    def __post_init__(self) -> None:
        if self.walks < 1:
            raise ValueError(f"walks must be >= 1, got {self.walks}")


@dataclass(frozen=True)
class WalkStats:
    mean: float
    stderr: float
    walks: int
    truncated: int


def build_laplacian(spec: CirculantSpec) -> DenseLaplacian:
    n = spec.n
    d = degree(spec)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(d)
            else:
                row.append(-spec.weight(circulant_distance(i, j, n)))
        rows.append(row)
    return DenseLaplacian(n=n, entries=rows)


def _connected_bfs(spec: CirculantSpec) -> bool:
    # breadth-first search over the step offsets, independent of the gcd
    # criterion used by the graph model
    n = spec.n
    seen = bytearray(n)
    seen[0] = 1
    frontier = [0]
    count = 1
    steps = [k for k in spec.support] + [n - k for k in spec.support]
    while frontier:
        nxt = []
        for x in frontier:
            for s in steps:
                y = (x + s) % n
                if not seen[y]:
                    seen[y] = 1
                    count += 1
                    nxt.append(y)
        frontier = nxt
    return count == n


def _require_connected(spec: CirculantSpec) -> None:
    if not _connected_bfs(spec):
        raise DisconnectedGraphError(
            f"graph on {spec.n} vertices with support {spec.support} is disconnected"
        )


def _scaled_int_rows(rows: list[list[Fraction]]) -> tuple[list[list[int]], list[int]]:
    """Clear denominators row by row; returns integer rows and per-row scales."""
    out, scales = [], []
    for row in rows:
        scale = math.lcm(*(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
        scales.append(scale)
    return out, scales


def _bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of a square integer matrix."""
    m = [row[:] for row in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, size):
            lead = m[i][k]
            ri, rk = m[i], m[k]
            for j in range(k + 1, size):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * m[-1][-1]


def _bareiss_forward(aug: list[list[int]]) -> list[list[int]] | None:
    """Fraction-free forward elimination of an augmented integer system.

    Eliminates below the diagonal of the leading square block; extra columns
    ride along.  Returns None when the block is singular.
    """
    size = len(aug)
    width = len(aug[0])
    prev = 1
    for k in range(size - 1):
        if aug[k][k] == 0:
            for i in range(k + 1, size):
                if aug[i][k] != 0:
                    aug[k], aug[i] = aug[i], aug[k]
                    break
            else:
                return None
        pivot = aug[k][k]
        for i in range(k + 1, size):
            lead = aug[i][k]
            ri, rk = aug[i], aug[k]
            for j in range(k + 1, width):
                ri[j] = (ri[j] * pivot - lead * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    if aug[size - 1][size - 1] == 0:
        return None
    return aug


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve A x = b in exact rationals (fraction-free elimination inside)."""
    aug_frac = [row + [b] for row, b in zip(rows, rhs)]
    aug, _ = _scaled_int_rows(aug_frac)
    size = len(aug)
    tri = _bareiss_forward(aug)
    if tri is None:
        raise RuntimeError("singular system in exact solve")
    x: list[Fraction] = [Fraction(0)] * size
    for i in reversed(range(size)):
        acc = Fraction(tri[i][size])
        for j in range(i + 1, size):
            acc -= tri[i][j] * x[j]
        x[i] = acc / tri[i][i]
    return x


def _invert_exact(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse via fraction-free elimination plus back-substitution."""
    size = len(rows)
    aug_frac = [list(row) + [Fraction(1 if i == j else 0) for j in range(size)]
                for i, row in enumerate(rows)]
    aug, _ = _scaled_int_rows(aug_frac)
    tri = _bareiss_forward(aug)
    if tri is None:
        raise RuntimeError("singular matrix in exact inverse")
    inv: list[list[Fraction]] = [[Fraction(0)] * size for _ in range(size)]
    for col in range(size):
        for i in reversed(range(size)):
            acc = Fraction(tri[i][size + col])
            for j in range(i + 1, size):
                acc -= tri[i][j] * inv[j][col]
            inv[i][col] = acc / tri[i][i]
    return inv


def _grounded(rows: list[list[Fraction]], ground: int) -> list[list[Fraction]]:
    return [[rows[i][j] for j in range(len(rows)) if j != ground]
            for i in range(len(rows)) if i != ground]


def _use_exact(spec: CirculantSpec, exact: bool | None) -> bool:
    return spec.n <= EXACT_SIZE_CAP if exact is None else exact


def resistance_oracle(
    spec: CirculantSpec, u: int, v: int, exact: bool | None = None
) -> Fraction | float:
    """Effective resistance by a grounded solve: drop row/column v, solve
    for the potential at u under a unit current injection.

    Exact rationals up to EXACT_SIZE_CAP vertices (or per the flag), floats
    beyond.
    """
    _require_connected(spec)
    if u == v:
        return Fraction(0) if _use_exact(spec, exact) else 0.0
    lap = build_laplacian(spec)
    idx = u if u < v else u - 1
    if _use_exact(spec, exact):
        grounded = _grounded(lap.entries, v)
        rhs = [Fraction(1) if i == idx else Fraction(0) for i in range(spec.n - 1)]
        return _solve_exact(grounded, rhs)[idx]
    mat = np.delete(np.delete(lap.as_float(), v, axis=0), v, axis=1)
    rhs = np.zeros(spec.n - 1)
    rhs[idx] = 1.0
    return float(np.linalg.solve(mat, rhs)[idx])


def resistance_profile_oracle(
    spec: CirculantSpec, exact: bool | None = None
) -> list[Fraction] | list[float]:
    """R(0, v) for every vertex v, from one grounded inverse at vertex 0."""
    _require_connected(spec)
    lap = build_laplacian(spec)
    if _use_exact(spec, exact):
        inv = _invert_exact(_grounded(lap.entries, 0))
        return [Fraction(0)] + [inv[v - 1][v - 1] for v in range(1, spec.n)]
    inv = np.linalg.inv(np.delete(np.delete(lap.as_float(), 0, axis=0), 0, axis=1))
    return [0.0] + [float(inv[v - 1, v - 1]) for v in range(1, spec.n)]


def tree_count_oracle(spec: CirculantSpec) -> int | Fraction:
    """Weighted spanning-tree count as a principal-minor determinant,
    computed fraction-free after clearing denominators.  0 when disconnected.
    """
    lap = build_laplacian(spec)
    minor = _grounded(lap.entries, 0)
    int_rows, scales = _scaled_int_rows(minor)
    det = Fraction(_bareiss_det(int_rows), math.prod(scales))
    if spec.is_indicator:
        assert det.denominator == 1
        return int(det)
    return det


def forest_count_oracle(spec: CirculantSpec, u: int, v: int) -> int | Fraction:
    """Two-component spanning forests separating u and v: the determinant of
    the Laplacian with rows and columns u, v both deleted."""
    if u == v:
        raise ValueError("forest count needs two distinct vertices")
    lap = build_laplacian(spec)
    keep = [i for i in range(spec.n) if i not in (u, v)]
    minor = [[lap.entries[i][j] for j in keep] for i in keep]
    int_rows, scales = _scaled_int_rows(minor)
    det = Fraction(_bareiss_det(int_rows), math.prod(scales))
    if spec.is_indicator:
        assert det.denominator == 1
        return int(det)
    return det


def hitting_time_oracle(
    spec: CirculantSpec, u: int, v: int, exact: bool | None = None
) -> Fraction | float:
    """Expected hitting time u -> v of the degree-proportional walk, by
    first-step analysis: solve (L grounded at v) h = degree vector."""
    _require_connected(spec)
    if u == v:
        return Fraction(0) if _use_exact(spec, exact) else 0.0
    lap = build_laplacian(spec)
    d = degree(spec)
    idx = u if u < v else u - 1
    if _use_exact(spec, exact):
        grounded = _grounded(lap.entries, v)
        rhs = [d] * (spec.n - 1)
        return _solve_exact(grounded, rhs)[idx]
    mat = np.delete(np.delete(lap.as_float(), v, axis=0), v, axis=1)
    rhs = np.full(spec.n - 1, float(d))
    return float(np.linalg.solve(mat, rhs)[idx])


_WALK_BATCH = 8192


def hitting_time_monte_carlo(
    spec: CirculantSpec, u: int, v: int, cfg: WalkConfig
) -> WalkStats:
    """Simulate cfg.walks seeded walks from u to absorption at v.

    Each fixed-size batch draws from its own generator spawned from the
    seed, so results do not depend on execution order.  Walks hitting the
    step cap are excluded from the mean; more than 0.1% of them aborts.
    """
    _require_connected(spec)
    if u == v:
        return WalkStats(mean=0.0, stderr=0.0, walks=cfg.walks, truncated=0)
    n = spec.n
    max_steps = cfg.max_steps if cfg.max_steps is not None else n**3
    if max_steps < n * n:
        raise ValueError(f"max_steps={max_steps} below the n**2 floor")

    offsets: list[int] = []
    weights: list[float] = []
    for k in spec.support:
        if n % 2 == 0 and k == n // 2:
            offsets.append(k)
            weights.append(float(spec.weights[k]))
        else:
            offsets.extend((k, n - k))
            weights.extend((float(spec.weights[k]),) * 2)
    offs = np.array(offsets, dtype=np.int64)
    cum = np.cumsum(np.array(weights) / sum(weights))
    cum[-1] = 1.0

    batches = (cfg.walks + _WALK_BATCH - 1) // _WALK_BATCH
    streams = np.random.SeedSequence(cfg.seed).spawn(batches)
    samples: list[np.ndarray] = []
    truncated = 0
    for b in range(batches):
        m = min(_WALK_BATCH, cfg.walks - b * _WALK_BATCH)
        rng = np.random.default_rng(streams[b])
        pos = np.full(m, u, dtype=np.int64)
        steps = np.zeros(m, dtype=np.int64)
        alive = np.arange(m)
        t = 0
        while alive.size and t < max_steps:
            t += 1
            draw = np.searchsorted(cum, rng.random(alive.size), side="right")
            pos[alive] = (pos[alive] + offs[draw]) % n
            hit = pos[alive] == v
            steps[alive[hit]] = t
            alive = alive[~hit]
        truncated += alive.size
        samples.append(steps[steps > 0])

    if truncated > 0.001 * cfg.walks:
        raise RuntimeError(
            f"{truncated} of {cfg.walks} walks exceeded {max_steps} steps"
        )
    done = np.concatenate(samples)
    mean = float(done.mean())
    stderr = float(done.std(ddof=1) / math.sqrt(done.size)) if done.size > 1 else 0.0
    return WalkStats(mean=mean, stderr=stderr, walks=cfg.walks, truncated=truncated)


def spanning_tree_enumerate(spec: CirculantSpec) -> int:
    """Count spanning trees by checking every (n-1)-edge subset.

    Exhaustive ground truth for the matrix-tree determinant; unweighted
    specs only, and n is capped because the subset count explodes.
    """
    if spec.n > 9:
        raise ValueError(f"enumeration refused for n={spec.n} > 9")
    if not spec.is_indicator:
        raise UnsupportedCaseError("enumeration counts unweighted trees only")
    n = spec.n
    edges = sorted({(min(i, j), max(i, j))
                    for i in range(n) for k in spec.support for j in ((i + k) % n,)})
    count = 0
    for combo in itertools.combinations(edges, n - 1):
        parent = list(range(n))
        for a, b in combo:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            while parent[b] != b:
                parent[b] = parent[parent[b]]
                b = parent[b]
            if a == b:
                break
            parent[a] = b
        else:
            count += 1
    return count


def kirchhoff_oracle(spec: CirculantSpec, exact: bool | None = None) -> Fraction | float:
    """Sum of effective resistances over unordered pairs, via one grounded
    inverse X: Kf = n*trace(X) - sum(X)."""
    _require_connected(spec)
    lap = build_laplacian(spec)
    if _use_exact(spec, exact):
        inv = _invert_exact(_grounded(lap.entries, 0))
        trace = sum((inv[i][i] for i in range(spec.n - 1)), Fraction(0))
        total = sum((x for row in inv for x in row), Fraction(0))
        return spec.n * trace - total
    inv = np.linalg.inv(np.delete(np.delete(lap.as_float(), 0, axis=0), 0, axis=1))
    return float(spec.n * np.trace(inv) - inv.sum())
