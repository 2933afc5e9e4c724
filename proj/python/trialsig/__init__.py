"""Continuum-limit binomial significance, trial sizing and
continuous-distribution tools backed by the C++ core."""

from trialsig._core import (  # noqa: F401
    ConvergenceError,
    DiscreteDistribution,
    McEstimate,
    NoSolutionError,
    QuadratureConfig,
    SampleSizeResult,
    __version__,
    density,
    fit_truncated_gaussian,
    inc_beta_integer_series,
    joint_density,
    load_distribution_csv,
    mc_mean_distribution,
    mc_significance,
    mc_superiority,
    mean_sampling_distribution,
    required_trials,
    required_trials_bivariate,
    significance,
    significance_curve,
    significance_quadrature,
    superiority,
    superiority_exact,
    superiority_gaussian,
    superiority_gaussian_quadrature,
    superiority_tabulated,
    tail_continuum,
    tail_discrete,
    truncated_moments,
)
