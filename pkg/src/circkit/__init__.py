"""Circulant graph invariants three independent ways: closed forms for the
single-deleted-class family, Fourier eigenvalue sums, and dense-matrix
oracles that keep the other two honest."""

from .closedform import (
    AsymptoticPredictors,
    RhoConstants,
    asymptotic_predictors,
    forest_count_closed,
    forest_count_closed_log,
    hitting_time_closed,
    hitting_time_closed_exact,
    kirchhoff_closed,
    kirchhoff_closed_exact,
    reduce_coprime,
    resistance_closed,
    resistance_closed_exact,
    rho_constants,
    root_of_unity_sum,
    root_of_unity_sum_closed,
    tree_count_closed,
    tree_count_closed_log,
)
from .errors import DisconnectedGraphError, UnsupportedCaseError
from .graphs import (
    CirculantSpec,
    VertexPair,
    circulant_distance,
    degree,
    is_connected,
    oriented_residue,
    spec_from_json,
    spec_to_json,
    volume,
)
from .oracles import (
    DenseLaplacian,
    WalkConfig,
    WalkStats,
    build_laplacian,
    forest_count_oracle,
    hitting_time_monte_carlo,
    hitting_time_oracle,
    kirchhoff_oracle,
    resistance_oracle,
    resistance_profile_oracle,
    spanning_tree_enumerate,
    tree_count_oracle,
)
from .quadfield import QuadElem, delta_element, rho_element
from .report import (
    InvariantResult,
    Tolerances,
    VerificationReport,
    run_verification,
    sweep_rows,
)
from .spectral import (
    Spectrum,
    TreeCount,
    eigenvalues,
    forest_count_spectral,
    hitting_time_spectral,
    kirchhoff_spectral,
    resistance_spectral,
    tree_count_spectral,
)

__version__ = "0.1.0"
