"""Numerical radius computation and its catalog of weighted upper bounds."""

from .bounds import (BoundContext, BoundReport, BoundValue, CATALOG_IDS,
                     T_DEPENDENT_IDS, WeightParams, aluthge_half,
                     aluthge_weighted, classic_envelope, compare_all,
                     fourth_power, integral_bound, integral_refined,
                     kittaneh_mixed, kittaneh_square, kittaneh_sum,
                     minimize_over_t, product_bound, schwarz_radius,
                     weight_params, weighted_R, weighted_power, yamazaki)
from .campaign import CampaignConfig, run_campaign
from .errors import (DimensionMismatch, DomainError, NoConvergence, NonFinite,
                     NotHermitian, NotPSD, NumradError, ParseError,
                     WeightOutOfRange)
from .matrix import (HermitianEigen, SingularDecomposition, adjoint,
                     frac_power, hermitian_eigen, real_part, spectral_norm,
                     spectral_radius, svd)
from .matrixio import parse_matrix, serialize_matrix
from .pointwise import (InequalityCheck, UnitVector, amer_bound,
                        cs_refinement, kato, log_convexity,
                        log_convexity_midpoint, mccarthy, schwarz_covariance,
                        schwarz_self)
from .polar import (PolarDecomposition, WeightedAluthge, abs_value, aluthge,
                    polar)
from .radius import (OracleEstimate, RadiusEstimate, power_check,
                     radius_oracle, radius_sweep, splitmix64)

__version__ = "0.1.0"
