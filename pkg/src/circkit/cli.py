"""Command-line surface: compute single invariants, run the cross-method
verification suite, dump spectra, and produce asymptotic sweep tables.

Exit codes: 0 success, 1 verification failure, 2 precondition violation,
3 disconnected graph.
"""

from __future__ import annotations

import csv
import functools
import io
import json
import math
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

import click

from . import closedform as cf
from . import oracles as orc
from . import spectral as sp
from .errors import DisconnectedGraphError, UnsupportedCaseError
from .graphs import CirculantSpec, oriented_residue
from .report import (
    CSV_COLUMNS,
    METHODS,
    QUANTITIES,
    SWEEP_QUANTITIES,
    InvariantResult,
    Tolerances,
    run_verification,
    sweep_rows,
)

OUTPUT_DIR_ENV = "CIRCKIT_OUTPUT_DIR"


def _translate_errors(f):
    """Map domain errors onto the documented exit codes."""

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except DisconnectedGraphError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(3)
        except (UnsupportedCaseError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)

    return wrapper


def _parse_classes(text: str | None) -> frozenset[int]:
    if not text:
        return frozenset()
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip())
    except ValueError:
        raise ValueError(f"could not parse distance classes from {text!r}")


def _parse_weights(text: str) -> dict[int, Fraction]:
    weights = {}
    for part in text.split(","):
        if not part.strip():
            continue
        key, _, val = part.partition("=")
        weights[int(key)] = Fraction(val)
    return weights


def _build_spec(n: int, delete: str | None, weights: str | None) -> CirculantSpec:
    if weights:
        return CirculantSpec.weighted(n, _parse_weights(weights))
    return CirculantSpec.from_deleted(n, _parse_classes(delete))


def _resolve_output(output: str | None) -> Path | None:
    if output is None:
        return None
    path = Path(output)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    return path


def _emit(rows: list[dict], fmt: str, output: str | None) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue().rstrip("\n")
    else:
        text = "\n".join(json.dumps(row) for row in rows)
    path = _resolve_output(output)
    if path is None:
        click.echo(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}" if value.denominator != 1 else str(value.numerator)


def _single_deleted_class(spec: CirculantSpec) -> int:
    """The class the closed forms apply to, or a precondition error."""
    if spec.n % 2 == 0:
        raise ValueError("closed forms require odd n")
    if spec.n < 5:
        raise ValueError("closed forms require n >= 5")
    if spec.deleted is None or len(spec.deleted) != 1:
        raise ValueError("closed forms cover exactly one deleted distance class")
    (r,) = spec.deleted
    return r


def _closed_value(spec: CirculantSpec, quantity: str, q: int | None, exact: bool):
    n = spec.n
    r = _single_deleted_class(spec)
    dq = cf.reduce_coprime(n, r, q) if q is not None else None
    if quantity == "resistance":
        return (_rational(cf.resistance_closed_exact(n, dq)), "rational") if exact \
            else (cf.resistance_closed(n, dq), "float")
    if quantity == "trees":
        return (str(cf.tree_count_closed(n)), "rational") if exact \
            else (cf.tree_count_closed_log(n), "log")
    if quantity == "forests":
        return (str(cf.forest_count_closed(n, dq)), "rational") if exact \
            else (cf.forest_count_closed_log(n, dq), "log")
    if quantity == "hitting":
        return (_rational(cf.hitting_time_closed_exact(n, dq)), "rational") if exact \
            else (cf.hitting_time_closed(n, dq), "float")
    if quantity == "kirchhoff":
        return (_rational(cf.kirchhoff_closed_exact(n)), "rational") if exact \
            else (cf.kirchhoff_closed(n), "float")
    raise ValueError(f"closed method does not produce {quantity}")


def _spectral_value(spec: CirculantSpec, quantity: str, pair):
    if quantity == "resistance":
        return sp.resistance_spectral(spec, *pair), "float", {}
    if quantity == "trees":
        tc = sp.tree_count_spectral(spec)
        meta = {} if tc.integer is None else {"integer": tc.integer}
        return tc.log_value, "log", meta
    if quantity == "forests":
        return sp.forest_count_spectral(spec, *pair), "float", {}
    if quantity == "hitting":
        return sp.hitting_time_spectral(spec, *pair), "float", {}
    if quantity == "kirchhoff":
        return sp.kirchhoff_spectral(spec), "float", {}
    raise ValueError(f"spectral method does not produce {quantity}")


def _oracle_value(spec: CirculantSpec, quantity: str, pair, exact: bool):
    use_exact = exact or spec.n <= orc.EXACT_SIZE_CAP
    if quantity == "resistance":
        val = orc.resistance_oracle(spec, *pair, exact=use_exact)
    elif quantity == "trees":
        val = orc.tree_count_oracle(spec)
    elif quantity == "forests":
        val = orc.forest_count_oracle(spec, *pair)
    elif quantity == "hitting":
        val = orc.hitting_time_oracle(spec, *pair, exact=use_exact)
    elif quantity == "kirchhoff":
        val = orc.kirchhoff_oracle(spec, exact=use_exact)
    else:
        raise ValueError(f"oracle method does not produce {quantity}")
    if isinstance(val, float):
        return val, "float"
    return _rational(Fraction(val)), "rational"


@click.group()
def main() -> None:
    """Resistance, tree/forest counts, hitting times and Kirchhoff indices
    of circulant graphs, three independent ways."""


@main.command()
@click.option("--n", type=int, required=True, help="number of vertices")
@click.option("--delete", "delete_", default=None, help="comma list of deleted distance classes")
@click.option("--weights", default=None, help="comma list k=w with rational weights")
@click.option("--quantity", type=click.Choice(QUANTITIES), required=True)
@click.option("--method", type=click.Choice(METHODS), default="spectral", show_default=True)
@click.option("--u", type=int, default=None, help="source vertex")
@click.option("--v", type=int, default=None, help="target vertex")
@click.option("--q", "q_", type=int, default=None, help="oriented residue, shorthand for u=0, v=q")
@click.option("--exact", is_flag=True, help="exact rational output where the method supports it")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--walks", type=int, default=100_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl", show_default=True)
@click.option("--output", default=None, help=f"output path (relative paths land in ${OUTPUT_DIR_ENV})")
@_translate_errors
def compute(n, delete_, weights, quantity, method, u, v, q_, exact, seed, walks, fmt, output):
    """Compute one invariant; per-pair quantities default to all distances."""
    spec = _build_spec(n, delete_, weights)
    if quantity == "eigenvalues":
        _emit(_eigen_rows(spec, fmt), fmt, output)
        return

    per_pair = quantity in ("resistance", "forests", "hitting")
    if per_pair:
        if u is not None and v is not None:
            pairs = [(u, v)]
        elif q_ is not None:
            pairs = [(0, q_ % n)]
        else:
            pairs = [(0, q) for q in range(1, n // 2 + 1)]
    else:
        pairs = [None]

    results = []
    for pair in pairs:
        started = time.perf_counter()
        meta: dict = {}
        if method == "closed":
            q = oriented_residue(*pair, n) if pair else None
            value, representation = _closed_value(spec, quantity, q, exact)
        elif method == "spectral":
            value, representation, meta = _spectral_value(spec, quantity, pair)
        elif method == "oracle":
            value, representation = _oracle_value(spec, quantity, pair, exact)
        else:
            if quantity != "hitting":
                raise ValueError("monte-carlo estimates hitting times only")
            stats = orc.hitting_time_monte_carlo(spec, *pair, orc.WalkConfig(seed=seed, walks=walks))
            value, representation = stats.mean, "float"
            meta = {"stderr": stats.stderr, "seed": seed, "walks": stats.walks,
                    "truncated": stats.truncated}
        if pair is not None:
            meta.update(u=pair[0], v=pair[1], q=oriented_residue(*pair, n))
        meta["runtime"] = round(time.perf_counter() - started, 6)
        results.append(InvariantResult(
            spec=spec, quantity=quantity, method=method,
            representation=representation, value=value, metadata=meta,
        ))
    rows = [r.to_dict() if fmt == "jsonl" else r.to_csv_row() for r in results]
    _emit(rows, fmt, output)


def _eigen_rows(spec: CirculantSpec, fmt: str) -> list[dict]:
    spectrum = sp.eigenvalues(spec)
    results = [
        InvariantResult(spec=spec, quantity="eigenvalues", method="spectral",
                        representation="float", value=lam, metadata={"q": j})
        for j, lam in enumerate(spectrum.eigenvalues)
    ]
    return [r.to_dict() if fmt == "jsonl" else r.to_csv_row() for r in results]


@main.command()
@click.option("--n", type=int, required=True)
@click.option("--delete", "delete_", default=None, help="comma list of deleted distance classes")
@click.option("--weights", default=None, help="comma list k=w with rational weights")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl", show_default=True)
@click.option("--output", default=None)
@_translate_errors
def eig(n, delete_, weights, fmt, output):
    """Dump the full Laplacian spectrum, one record per eigenvalue."""
    spec = _build_spec(n, delete_, weights)
    _emit(_eigen_rows(spec, fmt), fmt, output)


@main.command()
@click.option("--n", "ns", type=int, multiple=True, help="explicit sizes (repeatable)")
@click.option("--n-min", type=int, default=5, show_default=True)
@click.option("--n-max", type=int, default=15, show_default=True)
@click.option("--odd-only", is_flag=True)
@click.option("--delete", "delete_", default=None, help="deleted classes for every size")
@click.option("--r", "r_", type=int, default=None, help="single deleted class (transport check)")
@click.option("--tol", "tols", multiple=True, help="override, e.g. --tol resistance=1e-8")
@click.option("--output", default=None)
@_translate_errors
def verify(ns, n_min, n_max, odd_only, delete_, r_, tols, output):
    """Cross-check closed vs spectral vs oracle and report deviations."""
    sizes = list(ns) if ns else list(range(n_min, n_max + 1, 2 if odd_only else 1))
    if r_ is not None:
        deleted = frozenset({r_})
    else:
        deleted = _parse_classes(delete_) or frozenset({1})
    overrides = {}
    for item in tols:
        key, _, val = item.partition("=")
        overrides[key.strip()] = float(val)
    report = run_verification(sizes, deleted, Tolerances().override(**overrides))
    text = json.dumps(report.to_dict(), indent=2)
    path = _resolve_output(output)
    if path is None:
        click.echo(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n")
    summary = report.summary
    click.echo(
        f"cases={summary['cases']} passed={summary['passed']} failed={summary['failed']} "
        f"worst_rel_dev={summary['worst_rel_dev']:.3e}",
        err=True,
    )
    if not report.passed:
        sys.exit(1)


@main.command()
@click.option("--quantity", type=click.Choice(SWEEP_QUANTITIES), required=True)
@click.option("--n-min", type=int, default=5, show_default=True)
@click.option("--n-max", type=int, required=True)
@click.option("--step", type=int, default=2, show_default=True)
@click.option("--q", type=int, default=1, show_default=True, help="residue for resistance-scaled")
@click.option("--format", "fmt", type=click.Choice(["jsonl", "csv"]), default="jsonl", show_default=True)
@click.option("--output", default=None)
@_translate_errors
def sweep(quantity, n_min, n_max, step, q, fmt, output):
    """Emit a scaled asymptotic quantity per odd n with its limit."""
    rows, skipped = sweep_rows(quantity, n_min, n_max, step=step, q=q)
    _emit(rows, fmt, output)
    if skipped:
        click.echo(f"skipped {skipped} even n values", err=True)


if __name__ == "__main__":
    main()
