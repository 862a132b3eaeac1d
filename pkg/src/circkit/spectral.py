"""Invariants computed from the Fourier eigenvalues alone.

Works for every distance-weight profile and any n, even or odd.  Cosines
come from one symmetrized table per call (cos table index n-t reuses the
value at t), and every sum goes through math.fsum, so the j <-> n-j
symmetries hold bit for bit, not just approximately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedGraphError
from .graphs import CirculantSpec, oriented_residue, volume

__all__ = [
    "Spectrum",
    "TreeCount",
    "eigenvalues",
    "resistance_spectral",
    "tree_count_spectral",
    "forest_count_spectral",
    "hitting_time_spectral",
    "kirchhoff_spectral",
]

# integer side channel limits: value must fit a double exactly and sit
# close enough to an integer that rounding is unambiguous
_INT_CLAIM_N = 60
_INT_CLAIM_DEV = 0.25


@dataclass(frozen=True)
class Spectrum:
    """Laplacian eigenvalues in Fourier order; min_positive is the smallest
    among j >= 1 (the algebraic connectivity)."""

    n: int
    eigenvalues: tuple[float, ...]
    min_positive: float
    connected: bool


@dataclass(frozen=True)
class TreeCount:
    """log of the spanning-tree count, plus the exact integer when it can
    be claimed with confidence (small n, unweighted, unambiguous rounding)."""

    log_value: float
    integer: int | None


def _cosine_table(n: int) -> list[float]:
    c = [1.0] * n
    for t in range(1, n // 2 + 1):
        v = math.cos(2.0 * math.pi * t / n)
        c[t] = v
        c[n - t] = v
    return c


def _eigenvalue_list(spec: CirculantSpec, cos_table: list[float]) -> list[float]:
    n = spec.n
    half = n // 2 if n % 2 == 0 else None
    terms = [(k, float(spec.weights[k])) for k in spec.support]
    lams = [0.0] * n
    for j in range(1, n):
        parts = []
        for k, w in terms:
            gap = 1.0 - cos_table[(j * k) % n]
            parts.append(w * gap if k == half else 2.0 * w * gap)
        lams[j] = math.fsum(parts)
    return lams


def eigenvalues(spec: CirculantSpec) -> Spectrum:
    """All n Laplacian eigenvalues, lambda_j = sum_k 2 w(k)(1 - cos(2pi jk/n))."""
    lams = _eigenvalue_list(spec, _cosine_table(spec.n))
    min_pos = min(lams[1:])
    return Spectrum(
        n=spec.n,
        eigenvalues=tuple(lams),
        min_positive=min_pos,
        connected=min_pos > 1e-9 * spec.n,
    )


def _require_connected(spec: CirculantSpec, lams: list[float]) -> None:
    if min(lams[1:]) <= 1e-9 * spec.n:
        raise DisconnectedGraphError(
            f"zero eigenvalue beyond j=0; graph on {spec.n} vertices is disconnected"
        )


def _resistance_terms(n: int, q: int, cos_table: list[float], lams: list[float]) -> float:
    return (2.0 / n) * math.fsum(
        (1.0 - cos_table[(j * q) % n]) / lams[j] for j in range(1, n)
    )


def resistance_spectral(spec: CirculantSpec, u: int, v: int) -> float:
    """Effective resistance (2/n) sum_j (1 - cos(2pi jq/n)) / lambda_j."""
    cos_table = _cosine_table(spec.n)
    lams = _eigenvalue_list(spec, cos_table)
    _require_connected(spec, lams)
    q = oriented_residue(u, v, spec.n)
    return _resistance_terms(spec.n, q, cos_table, lams)


def tree_count_spectral(spec: CirculantSpec) -> TreeCount:
    """Spanning-tree count from the eigenvalue product, in log domain.

    For disconnected graphs the count is 0 and the log is -inf.  The integer
    channel recomputes the product in extended precision so that rounding is
    trustworthy whenever it is claimed at all.
    """
    lams = _eigenvalue_list(spec, _cosine_table(spec.n))
    if min(lams[1:]) <= 1e-9 * spec.n:
        return TreeCount(log_value=float("-inf"), integer=0)
    log_value = math.fsum(math.log(x) for x in lams[1:]) - math.log(spec.n)
    integer = None
    if spec.n <= _INT_CLAIM_N and spec.is_indicator:
        product = np.longdouble(1.0)
        for x in lams[1:]:
            product *= np.longdouble(x)
        product /= np.longdouble(spec.n)
        if product < np.longdouble(2.0**53):
            nearest = int(np.rint(product))
            if abs(float(product - np.longdouble(nearest))) < _INT_CLAIM_DEV:
                integer = nearest
    return TreeCount(log_value=log_value, integer=integer)


def forest_count_spectral(spec: CirculantSpec, u: int, v: int) -> float:
    """Two-component forests separating u and v, as tau * R(u, v)."""
    if u == v:
        raise ValueError("forest count needs two distinct vertices")
    cos_table = _cosine_table(spec.n)
    lams = _eigenvalue_list(spec, cos_table)
    _require_connected(spec, lams)
    q = oriented_residue(u, v, spec.n)
    log_tau = math.fsum(math.log(x) for x in lams[1:]) - math.log(spec.n)
    log_value = log_tau + math.log(_resistance_terms(spec.n, q, cos_table, lams))
    return math.exp(log_value) if log_value < 709.0 else float("inf")


def hitting_time_spectral(spec: CirculantSpec, u: int, v: int) -> float:
    """Expected hitting time, (volume/2) * R(u, v); symmetric in u and v."""
    return float(volume(spec)) / 2.0 * resistance_spectral(spec, u, v)


def kirchhoff_spectral(spec: CirculantSpec) -> float:
    """Kirchhoff index n * sum_j 1/lambda_j over j >= 1."""
    lams = _eigenvalue_list(spec, _cosine_table(spec.n))
    _require_connected(spec, lams)
    return spec.n * math.fsum(1.0 / x for x in lams[1:])
