"""Exact generating functions for tautological sheaves on Hilbert schemes of points."""
from .exactalg import LaurentZ, NotConstant, NotLaurent, RatFunZ, UVPoly
from .hilbloc import find_specialization, hilb_chi_series
from .inclexcl import CoeffSeq, combine_direct, combine_log, combine_strata, infer_fourth, residual
from .powerseries import QSeries, series_exp, series_inv, series_log, series_mul
from .toricgeom import (
    ProjProduct,
    ToricLineBundle,
    ToricSurface,
    builtin,
    chi_lambda_pair,
    chi_line_bundle,
    make_blowup_scenario,
)
from .verify import (
    predicted_closed_form,
    predicted_series,
    verify_conjecture_surface,
    verify_inclusion_exclusion,
)

__all__ = [
    "LaurentZ",
    "NotConstant",
    "NotLaurent",
    "RatFunZ",
    "UVPoly",
    "find_specialization",
    "hilb_chi_series",
    "CoeffSeq",
    "combine_direct",
    "combine_log",
    "combine_strata",
    "infer_fourth",
    "residual",
    "QSeries",
    "series_exp",
    "series_inv",
    "series_log",
    "series_mul",
    "ProjProduct",
    "ToricLineBundle",
    "ToricSurface",
    "builtin",
    "chi_lambda_pair",
    "chi_line_bundle",
    "make_blowup_scenario",
    "predicted_closed_form",
    "predicted_series",
    "verify_conjecture_surface",
    "verify_inclusion_exclusion",
]

__version__ = "0.1.0"
