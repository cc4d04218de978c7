"""Kernel hazard rate estimation with visual error criteria."""

from ._core import (
    Bandwidth,
    CensoredSample,
    CurveGraph,
    ErrorReport,
    KernelSpec,
    LifetimeModel,
    RankingReport,
    __version__,
    bridge_weight,
    builtin_kernel,
    catalog,
    default_tau,
    dn_normalizer,
    error_report,
    estimate,
    estimate_d1,
    estimate_on_grid,
    generate,
    hazard_graph,
    inverse_transform,
    lp,
    make_model,
    mise_asymptotic,
    point_to_graph,
    run_experiment,
    scenario_bimodal,
    se,
    ve,
    weighted_mise_asymptotic,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
