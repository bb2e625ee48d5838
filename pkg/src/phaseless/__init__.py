"""Sign-ambiguous reconstruction of real bandlimited functions from sample magnitudes."""
from .approx import (
    BandlimitedSampleSet,
    BoundInputs,
    fine_grid_interpolate,
    main_rate_bound,
    sinc_gauss_interpolate,
    thm3_bound,
)
from .errors import (
    DomainMismatch,
    EmptySpec,
    InvalidRate,
    NearZeroOnLine,
    ParseError,
    PhaselessError,
    QuadratureNonConvergence,
)
from .kernels import GStarTable, eval_G, eval_G_deriv, eval_G_star, tabulate_G_star
from .pipeline import (
    ErrorDomain,
    FineGrid,
    MagnitudeSamples,
    PhaseTrack,
    ReconstructionConfig,
    ReconstructionResult,
    reconstruct,
    worst_case_error,
)
from .signals import (
    TestSignal,
    bessel_j1_shifted,
    counterexample_pair,
    multitone,
    sample_magnitudes,
)

__version__ = "0.1.0"
