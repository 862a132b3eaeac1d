"""Result records, tolerance configuration, the cross-method verification
harness, and asymptotic sweep tables.

Everything the CLI emits flows through the record types here, so the JSON
and CSV schemas live in one place.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import closedform as cf
from . import oracles as orc
from . import spectral as sp
from .graphs import CirculantSpec, is_connected, spec_from_dict, spec_to_dict

__all__ = [
    "QUANTITIES",
    "METHODS",
    "REPRESENTATIONS",
    "CSV_COLUMNS",
    "Tolerances",
    "InvariantResult",
    "VerificationCase",
    "VerificationReport",
    "run_verification",
    "sweep_rows",
]

QUANTITIES = ("resistance", "trees", "forests", "hitting", "kirchhoff", "eigenvalues")
METHODS = ("closed", "spectral", "oracle", "monte-carlo")
REPRESENTATIONS = ("rational", "float", "log")

# fixed CSV schema, shared by compute, verify and sweep output
CSV_COLUMNS = (
    "n", "s_or_r", "quantity", "method", "q", "u", "v",
    "value", "exact_value", "limit", "deviation",
)


@dataclass(frozen=True)
class Tolerances:
    """Relative tolerances for cross-method agreement, one per quantity.

    Defaults are the acceptance thresholds; flags can override them.
    """

    resistance: float = 1e-9
    trees: float = 1e-9
    forests: float = 1e-6
    hitting: float = 1e-9
    kirchhoff: float = 1e-9

    def for_quantity(self, quantity: str) -> float:
        return getattr(self, quantity)

    def override(self, **kwargs: float) -> "Tolerances":
        current = {k: getattr(self, k) for k in
                   ("resistance", "trees", "forests", "hitting", "kirchhoff")}
        for key, val in kwargs.items():
            if key not in current:
                raise ValueError(f"unknown tolerance {key!r}")
            current[key] = float(val)
        return Tolerances(**current)


@dataclass(frozen=True)
class InvariantResult:
    """One computed value: which graph, which quantity, which method."""

    spec: CirculantSpec
    quantity: str
    method: str
    representation: str
    value: float | int | str
    metadata: dict = field(default_factory=dict, hash=False)

    def __post_init__(self) -> None:
        if self.quantity not in QUANTITIES:
            raise ValueError(f"unknown quantity {self.quantity!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if self.representation not in REPRESENTATIONS:
            raise ValueError(f"unknown representation {self.representation!r}")

    def to_dict(self) -> dict:
        return {
            "spec": spec_to_dict(self.spec),
            "quantity": self.quantity,
            "method": self.method,
            "representation": self.representation,
            "value": self.value,
            "metadata": dict(self.metadata),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "InvariantResult":
        return cls(
            spec=spec_from_dict(data["spec"]),
            quantity=data["quantity"],
            method=data["method"],
            representation=data["representation"],
            value=data["value"],
            metadata=dict(data.get("metadata", {})),
        )

    def to_csv_row(self) -> dict:
        spec = self.spec
        s_or_r = ",".join(str(k) for k in sorted(spec.deleted)) if spec.deleted is not None else "w"
        meta = self.metadata
        return {
            "n": spec.n,
            "s_or_r": s_or_r,
            "quantity": self.quantity,
            "method": self.method,
            "q": meta.get("q", ""),
            "u": meta.get("u", ""),
            "v": meta.get("v", ""),
            "value": self.value if self.representation != "rational" else float(Fraction(self.value)),
            "exact_value": self.value if self.representation == "rational" else "",
            "limit": meta.get("limit", ""),
            "deviation": meta.get("deviation", ""),
        }


@dataclass
class VerificationCase:
    spec: CirculantSpec
    quantity: str
    pair: tuple[int, int] | None
    values: dict[str, float]
    max_abs_dev: float
    max_rel_dev: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "spec": spec_to_dict(self.spec),
            "quantity": self.quantity,
            "pair": list(self.pair) if self.pair is not None else None,
            "values": self.values,
            "max_abs_dev": self.max_abs_dev,
            "max_rel_dev": self.max_rel_dev,
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    cases: list[VerificationCase]
    tolerances: Tolerances

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    @property
    def summary(self) -> dict:
        failed = [c for c in self.cases if not c.passed]
        return {
            "cases": len(self.cases),
            "passed": len(self.cases) - len(failed),
            "failed": len(failed),
            "worst_abs_dev": max((c.max_abs_dev for c in self.cases), default=0.0),
            "worst_rel_dev": max((c.max_rel_dev for c in self.cases), default=0.0),
        }

    def to_dict(self) -> dict:
        return {"cases": [c.to_dict() for c in self.cases], "summary": self.summary}


def _case(spec: CirculantSpec, quantity: str, pair, values: dict[str, float],
          tol: float) -> VerificationCase:
    nums = [v for v in values.values() if v is not None]
    abs_dev = max((abs(a - b) for a in nums for b in nums), default=0.0)
    scale = max((abs(x) for x in nums), default=0.0)
    rel_dev = abs_dev / scale if scale > 0 else abs_dev
    return VerificationCase(
        spec=spec, quantity=quantity, pair=pair, values=values,
        max_abs_dev=abs_dev, max_rel_dev=rel_dev, passed=rel_dev <= tol,
    )


def _closed_distance(spec: CirculantSpec, q: int) -> int | None:
    """Distance to feed the closed forms, or None when they do not apply."""
    if spec.deleted is None or len(spec.deleted) != 1:
        return None
    n = spec.n
    if n % 2 == 0 or n < 5:
        return None
    (r,) = spec.deleted
    if math.gcd(r, n) != 1:
        return None
    return cf.reduce_coprime(n, r, q)


def run_verification(ns: Iterable[int], deleted: frozenset[int] | None = None,
                     tolerances: Tolerances | None = None) -> VerificationReport:
    """Cross-check every method on every quantity for the given sizes.

    The closed-form column appears whenever the spec is a single deleted
    class coprime to an odd n; otherwise spectral vs oracle only.
    """
    tol = tolerances if tolerances is not None else Tolerances()
    dels = deleted if deleted is not None else frozenset({1})
    cases: list[VerificationCase] = []
    for n in sorted(set(ns)):
        spec = CirculantSpec.from_deleted(n, {k for k in dels if k <= n // 2})
        if not is_connected(spec):
            t_or = orc.tree_count_oracle(spec)
            t_sp = sp.tree_count_spectral(spec)
            values = {"oracle": float(t_or), "spectral": float(t_sp.integer or 0)}
            case = _case(spec, "trees", None, values, tol.trees)
            case.passed = case.passed and t_or == 0 and t_sp.integer == 0
            cases.append(case)
            continue

        # trees
        t_or = orc.tree_count_oracle(spec)
        t_sp = sp.tree_count_spectral(spec)
        values = {"oracle": float(t_or), "spectral": math.exp(t_sp.log_value)
                  if t_sp.integer is None else float(t_sp.integer)}
        q1 = _closed_distance(spec, 1)
        if q1 is not None:
            values["closed"] = float(cf.tree_count_closed(spec.n))
        cases.append(_case(spec, "trees", None, values, tol.trees))

        # per-pair quantities at every distance
        for q in range(1, n // 2 + 1):
            dq = _closed_distance(spec, q)
            r_or = float(orc.resistance_oracle(spec, 0, q))
            values = {"oracle": r_or, "spectral": sp.resistance_spectral(spec, 0, q)}
            if dq is not None:
                values["closed"] = cf.resistance_closed(n, dq)
            cases.append(_case(spec, "resistance", (0, q), values, tol.resistance))

            values = {"oracle": float(orc.forest_count_oracle(spec, 0, q)),
                      "spectral": sp.forest_count_spectral(spec, 0, q)}
            if dq is not None:
                values["closed"] = float(cf.forest_count_closed(n, dq))
            cases.append(_case(spec, "forests", (0, q), values, tol.forests))

            values = {"oracle": float(orc.hitting_time_oracle(spec, 0, q)),
                      "spectral": sp.hitting_time_spectral(spec, 0, q)}
            if dq is not None:
                values["closed"] = cf.hitting_time_closed(n, dq)
            cases.append(_case(spec, "hitting", (0, q), values, tol.hitting))

        values = {"oracle": float(orc.kirchhoff_oracle(spec)),
                  "spectral": sp.kirchhoff_spectral(spec)}
        if _closed_distance(spec, 1) is not None:
            values["closed"] = cf.kirchhoff_closed(n)
        cases.append(_case(spec, "kirchhoff", None, values, tol.kirchhoff))
    return VerificationReport(cases=cases, tolerances=tol)


SWEEP_QUANTITIES = ("tree-ratio", "resistance-scaled", "kirchhoff-scaled", "rho-gap")


def sweep_rows(quantity: str, n_min: int, n_max: int, step: int = 2,
               q: int = 1) -> tuple[list[dict], int]:
    """Scaled asymptotic quantity per odd n, with its limit and deviation.

    Returns (rows, skipped) where skipped counts even n values dropped from
    the range.  All values come from the log-domain closed forms, so n in
    the thousands is fine.
    """
    if quantity not in SWEEP_QUANTITIES:
        raise ValueError(f"unknown sweep quantity {quantity!r}")
    rows: list[dict] = []
    skipped = 0
    for n in range(max(5, n_min), n_max + 1, step):
        if n % 2 == 0:
            skipped += 1
            continue
        if quantity == "tree-ratio":
            value, limit = cf.asymptotic_predictors(n).tree_ratio, math.exp(-2.0)
        elif quantity == "resistance-scaled":
            value, limit = n * cf.resistance_closed(n, q % n) / 2.0, 1.0
        elif quantity == "kirchhoff-scaled":
            value, limit = cf.kirchhoff_closed(n) / n, 1.0
        else:
            value, limit = (n - 2 - 1.0 / n) - cf.rho_constants(n).rho, 0.0
        rows.append({
            "n": n, "s_or_r": "1", "quantity": quantity, "method": "closed",
            "q": q if quantity == "resistance-scaled" else "",
            "u": "", "v": "", "value": value, "exact_value": "",
            "limit": limit, "deviation": abs(value - limit),
        })
    return rows, skipped
