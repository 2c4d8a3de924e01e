"""q-Ruscheweyh operators, Janowski-type coefficient classes, and their numerical audit.

The package is organized bottom-up:

- qcore: q-numbers, q-factorials, q-Pochhammer products, operator multipliers
- series: truncated normalized power series, convolution, q-derivative
- janowski: class parameters, target domains, the subordination margin
- classcheck: the coefficient criterion, sharp bounds, extreme points
- bounds: distortion envelopes and the three radii
- verify: disk-grid checks, witness search, quadrature, the audit runner
- cli: the `qrusch` command-line entry point
"""

from .bounds import (
    DistortionEnvelope,
    RadiusResult,
    distortion_f,
    distortion_fprime,
    radius_close_to_convex,
    radius_convex,
    radius_starlike,
)
from .classcheck import (
    MembershipResult,
    MuProfile,
    coefficient_bound,
    decompose,
    extremal_fk,
    membership_iff_T,
    membership_sufficient,
    mu,
    mu_profile,
    recompose,
)
from .exceptions import (
    InputFormatError,
    MarginPoleError,
    NotAMemberError,
    PoleError,
    SchwarzFunctionError,
    SpecValidationError,
    UnconvergedError,
)
from .janowski import (
    OmegaDomain,
    QClassSpec,
    janowski_map,
    omega_domain,
    p_functional,
    subordination_margin,
)
from .qcore import (
    classical_limit_coeff,
    q_factorial,
    q_number,
    q_pochhammer,
    ruscheweyh_coeff,
)
from .series import (
    NegativeCoeffSeries,
    TruncatedSeries,
    apply_ruscheweyh,
    apply_ruscheweyh_differential,
    hadamard,
    q_derivative,
)
from .verify import (
    AuditConfig,
    AuditReport,
    DiskGrid,
    default_spec_grid,
    distortion_empirical_check,
    integral_mean,
    integral_mean_dominance,
    littlewood_check,
    necessity_witness_search,
    radius_empirical_check,
    run_audit,
    subordination_grid_check,
)

__version__ = "0.1.0"
