"""Newman-Penrose and GHP calculus on the Kerr exterior, verified numerically."""

from .errors import DomainError, GhpKerrError, UsageError
from .geometry import (Chart, KerrParams, MetricValue, SpacetimePoint, christoffel_at,
                       convert_point, covariant_derivative_at, curvature_at, kretschmann_at,
                       metric_at)
from .jets import BACKEND, Jet2
from .newman_penrose import NPCoefficients, WeylScalars, np_table, one_forms_abc, weyl_scalars
from .swfield import (SpinWeight, SpinWeightedField, TestField, chart_transition, ghp_apply,
                      weighted_multipliers)
from .teukolsky import (OperatorReport, apply_G, apply_T, apply_T_closed_form,
                        identity_residuals)
from .tetrad import (Tetrad, Trivialization, act_tetrad, extended_tetrad_at, kinnersley_at,
                     tetrad_for, tetrad_residuals)

__all__ = [
    'DomainError', 'GhpKerrError', 'UsageError', 'Chart', 'KerrParams', 'MetricValue',
    'SpacetimePoint', 'christoffel_at', 'convert_point', 'covariant_derivative_at',
    'curvature_at', 'kretschmann_at', 'metric_at', 'BACKEND', 'Jet2', 'NPCoefficients',
    'WeylScalars', 'np_table', 'one_forms_abc', 'weyl_scalars', 'SpinWeight',
    'SpinWeightedField', 'TestField', 'chart_transition', 'ghp_apply',
    'weighted_multipliers', 'OperatorReport', 'apply_G', 'apply_T', 'apply_T_closed_form',
    'identity_residuals', 'Tetrad', 'Trivialization', 'act_tetrad', 'extended_tetrad_at',
    'kinnersley_at', 'tetrad_for', 'tetrad_residuals',
]

__version__ = "0.1.0"
