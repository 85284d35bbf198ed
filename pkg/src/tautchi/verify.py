"""Predicted generating series for tautological pairings and checks of
the two identities this package is about: the product formula on surfaces
and the inclusion-exclusion identity along a simple degeneration."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .exactalg import UVPoly
from .hilbloc import find_specialization, hilb_chi_series
from .inclexcl import residual
from .powerseries import QSeries, binom_power, series_exp, series_log, series_mul
from .toricgeom import (
    DegenerationScenario,
    ProjProduct,
    ToricSurface,
    _bundle_ops,
    chi_lambda_pair,
    chi_line_bundle,
    generators,
)

__all__ = [
    "VerdictReport",
    "predicted_series",
    "predicted_closed_form",
    "verify_conjecture_surface",
    "verify_inclusion_exclusion",
    "generator_report",
    "describe_space",
]


@dataclass(frozen=True)
class VerdictReport:
    subject: dict
    order: int
    lhs: QSeries
    rhs: QSeries
    residual: QSeries
    passed: bool
    timing_ms: float

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "subject": self.subject,
            "order": self.order,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "residual": self.residual.to_json(),
            "pass": self.passed,
        }
        if include_timing:
            out["timing_ms"] = round(self.timing_ms, 3)
        return out


def describe_space(X) -> dict:
    if isinstance(X, ProjProduct):
        return X.to_json()
    return {"type": "fan", "name": X.name, "rays": [list(r) for r in X.rays]}


def _bundle_json(X, B):
    return {"m": list(B)} if isinstance(X, ProjProduct) else B.to_json()


def predicted_series(X, K, L, N: int) -> QSeries:
    """``exp(sum_r P(u^r, v^r) Q^r / r)`` with ``P = chi_lambda_pair(X, K, L)``."""
    pair = chi_lambda_pair(X, K, L)
    terms = [UVPoly()] + [pair.subs_power(r) * Fraction(1, r) for r in range(1, N + 1)]
    return series_exp(QSeries(terms, N))


def predicted_closed_form(X, K, L, N: int) -> QSeries:
    """``(1-Q)^-chi(O) (1-uQ)^chi(K^v) (1-vQ)^chi(L) (1-uvQ)^-chi(K^v L)``."""
    dual, tensor, trivial = _bundle_ops(X)
    Kd = dual(K)
    factors = [
        binom_power("1-Q", -chi_line_bundle(X, trivial), N),
        binom_power("1-uQ", chi_line_bundle(X, Kd), N),
        binom_power("1-vQ", chi_line_bundle(X, L), N),
        binom_power("1-uvQ", -chi_line_bundle(X, tensor(Kd, L)), N),
    ]
    out = QSeries.one(N)
    for f in factors:
        out = series_mul(out, f)
    return out


def verify_conjecture_surface(S: ToricSurface, K, L, N: int, spec=None) -> VerdictReport:
    """Compare the localized series on ``Hilb^n(S)`` with the predicted one."""
    t0 = time.perf_counter()
    spec = spec or find_specialization(S, N)
    lhs = hilb_chi_series(S, K, L, N, spec)
    rhs = predicted_series(S, K, L, N)
    res = lhs - rhs
    subject = {
        "kind": "product-formula",
        "surface": describe_space(S),
        "K": K.to_json(),
        "L": L.to_json(),
        "specialization": spec.to_json(),
    }
    return VerdictReport(subject, N, lhs, rhs, res, res.is_zero(),
                         (time.perf_counter() - t0) * 1000)


def verify_inclusion_exclusion(sc: DegenerationScenario, N: int) -> VerdictReport:
    """Localize all four pieces and test ``log X + log P_D = log Y_1 + log Y_2``.

    ``lhs`` is ``log X_xi + log P_D`` and ``rhs`` is ``log Y_1 + log Y_2`` as
    series; the residual is their difference.
    """
    t0 = time.perf_counter()
    series = {}
    for tag, e in sc.entries().items():
        if not isinstance(e.space, ToricSurface):
            raise TypeError(f"{tag} is not a toric surface")
        series[tag] = hilb_chi_series(e.space, e.K, e.L, N)
    res = residual(series["X_xi"], series["Y1"], series["Y2"], series["PD"])
    lhs = series_log(series["X_xi"]) + series_log(series["PD"])
    rhs = series_log(series["Y1"]) + series_log(series["Y2"])
    subject = {"kind": "inclusion-exclusion", "scenario": sc.to_json(),
               "series": {k: s.to_json() for k, s in series.items()}}
    return VerdictReport(subject, N, lhs, rhs, res, res.is_zero(),
                         (time.perf_counter() - t0) * 1000)


def generator_report(n: int, N: int) -> list[tuple[tuple, QSeries]]:
    return [((X, K, L), predicted_series(X, K, L, N)) for X, K, L in generators(n)]
