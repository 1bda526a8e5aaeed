"""Two-branch macroscopic superpositions, the measurements that collapse
them, and the quantum resources left in the outcomes.

Layout:

- ``effective_states``: Gram-matrix algebra of two-branch states.
- ``collapse``: the collapsing (minimum-error) measurement, its outcome
  states, and the m-branch square-root construction.
- ``spin_metrology``: phase-estimation deviations and scaling in the
  symmetric subspace.
- ``dynamics``: survival amplitude under the measurement generator and
  the orthogonalization-speed experiment.
- ``entanglement``: two-mode entanglement entropies.
- ``photonic``: truncated-Fock cats and displacement metrology.
- ``oracle``: dense 2^N reference implementations of all of the above.
- ``cli``: the ``catcollapse`` command.
"""

from .collapse import (
    CMConditionReport,
    CMPair,
    MeasurementSet,
    branch_coefficients,
    cm_single,
    collapsed_outcomes,
    helstrom_success_probability,
    mary_cm,
)
from .dynamics import (
    OverlapTrace,
    SpeedLimitReport,
    overlap_trace,
    recurrence_scan,
    speed_limit_trial,
)
from .effective_states import (
    BranchPair,
    TwoBranchState,
    branch_pair_from_overlap,
    overlap_power,
    qubit_branch_pair,
    superposition,
    two_branch_inner,
)
from .entanglement import (
    DensityMatrix2,
    entropy_crossing,
    entropy_sweep,
    reduced_state,
    von_neumann_entropy,
)
from .errors import (
    CutoffError,
    DomainError,
    IncompatibleStateError,
    InvalidStateError,
    LinearDependenceError,
    NoCrossingError,
    SingularOverlapError,
    SizeLimitError,
)
from .photonic import (
    FockVector,
    HcsCollapseReport,
    best_quadrature_angle,
    cat_vector,
    coherent_vector,
    hcs_collapse_report,
    mandel_q,
    quadrature_variance,
)
from .spin_metrology import (
    DickeOperator,
    DickeVector,
    cm_generator_check,
    collective_generator,
    deviation,
    dicke_embed,
    max_deviation,
    qcrb,
    scaling_exponent,
)

__version__ = "0.1.0"

__all__ = [
    "BranchPair",
    "CMConditionReport",
    "CMPair",
    "CutoffError",
    "DensityMatrix2",
    "DickeOperator",
    "DickeVector",
    "DomainError",
    "FockVector",
    "HcsCollapseReport",
    "IncompatibleStateError",
    "InvalidStateError",
    "LinearDependenceError",
    "MeasurementSet",
    "NoCrossingError",
    "OverlapTrace",
    "SingularOverlapError",
    "SizeLimitError",
    "SpeedLimitReport",
    "TwoBranchState",
    "best_quadrature_angle",
    "branch_coefficients",
    "branch_pair_from_overlap",
    "cat_vector",
    "cm_generator_check",
    "cm_single",
    "coherent_vector",
    "collapsed_outcomes",
    "collective_generator",
    "deviation",
    "dicke_embed",
    "entropy_crossing",
    "entropy_sweep",
    "hcs_collapse_report",
    "helstrom_success_probability",
    "mandel_q",
    "mary_cm",
    "max_deviation",
    "overlap_power",
    "overlap_trace",
    "qcrb",
    "quadrature_variance",
    "qubit_branch_pair",
    "recurrence_scan",
    "reduced_state",
    "scaling_exponent",
    "speed_limit_trial",
    "superposition",
    "two_branch_inner",
    "von_neumann_entropy",
]
