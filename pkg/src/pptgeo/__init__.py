"""pptgeo: Hilbert-Schmidt geometry of density matrices.

Partial transposes, Schmidt data, separable/PPT ball radii, Werner
thresholds, distillability witnesses, and a seeded Monte-Carlo harness that
verifies each radius claim where it holds and serializes counterexamples
where it does not.
"""

from .bipartite import (
    BipartiteSplit,
    SchmidtDecomposition,
    is_ppt,
    partial_transpose,
    pt_spectrum_analytic,
    schmidt,
)
from .bounds import (
    BoundsTable,
    Zone,
    ZoneClassification,
    ball_radius,
    bounds_table,
    classify,
    cone_boundary_distance,
    ppt_radius,
    separable_radius,
    werner_distance,
    werner_pm,
)
from .distill import WitnessResult, find_schmidt2_witness, witness_expectation
from .harness import (
    ClaimCheckReport,
    ShellReport,
    SweepReport,
    claim_check,
    shell_scan,
    spectrum_check,
    werner_sweep,
)
from .linalg import (
    DimensionMismatch,
    HermitianEigen,
    NoConvergence,
    NotHermitian,
    adjoint,
    frob_norm,
    hermitian_eigen,
    hs_distance,
    is_psd,
    matmul,
    trace,
)
from .serialize import TOOL_VERSION as __version__
from .states import (
    DensityMatrix,
    NotNormalized,
    PureState,
    ShellUnreachable,
    WernerParams,
    convex_mix,
    max_entangled,
    maximally_mixed,
    pure_density,
    sample_hs_random,
    sample_on_shell,
    werner,
)

__all__ = [
    "__version__",
    "BipartiteSplit",
    "BoundsTable",
    "ClaimCheckReport",
    "DensityMatrix",
    "DimensionMismatch",
    "HermitianEigen",
    "NoConvergence",
    "NotHermitian",
    "NotNormalized",
    "PureState",
    "SchmidtDecomposition",
    "ShellReport",
    "ShellUnreachable",
    "SweepReport",
    "WernerParams",
    "WitnessResult",
    "Zone",
    "ZoneClassification",
    "adjoint",
    "ball_radius",
    "bounds_table",
    "claim_check",
    "classify",
    "cone_boundary_distance",
    "convex_mix",
    "find_schmidt2_witness",
    "frob_norm",
    "hermitian_eigen",
    "hs_distance",
    "is_ppt",
    "is_psd",
    "matmul",
    "max_entangled",
    "maximally_mixed",
    "partial_transpose",
    "ppt_radius",
    "pt_spectrum_analytic",
    "pure_density",
    "sample_hs_random",
    "sample_on_shell",
    "schmidt",
    "separable_radius",
    "shell_scan",
    "spectrum_check",
    "trace",
    "werner",
    "werner_distance",
    "werner_pm",
    "werner_sweep",
    "witness_expectation",
]
