"""Torus localization on ``Hilb^n`` of a smooth toric surface.

Fixed points are tuples of partitions, one per chart.  At a chart with
coordinate characters ``w_1, w_2`` the box ``(r, c)`` of a partition stands
for the monomial ``x^(c-1) y^(r-1)``; the arm of a box counts boxes to its
right and the leg counts boxes below it.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .exactalg import ONE, UVPoly
from .lefschetz import Contribution, InadmissibleSpecialization, Specialization, lefschetz_sum
from .powerseries import QSeries
from .toricgeom import Chart, ToricLineBundle, ToricSurface, charts, fiber_character, partitions

__all__ = [
    "Partition",
    "HilbFixedPoint",
    "Specialization",
    "InadmissibleSpecialization",
    "enumerate_fixed_points",
    "oz_character",
    "tangent_character",
    "taut_character",
    "hilb_coefficient",
    "hilb_chi_series",
    "find_specialization",
    "forbidden_weights",
    "fixed_point_count",
]

Partition = tuple[int, ...]
Weight = tuple[int, int]


def boxes(mu: Partition) -> Iterator[tuple[int, int]]:
    for r, length in enumerate(mu, start=1):
        for c in range(1, length + 1):
            yield r, c


@lru_cache(maxsize=None)
def arms_legs(mu: Partition) -> tuple[tuple[int, int], ...]:
    """``(arm, leg)`` of every box, in row-major order."""
    conj = [sum(1 for part in mu if part >= c) for c in range(1, (mu[0] if mu else 0) + 1)]
    return tuple((mu[r - 1] - c, conj[c - 1] - r) for r, c in boxes(mu))


class HilbFixedPoint(tuple):
    """One partition per chart of the surface (``()`` for no points there)."""

    @property
    def size(self) -> int:
        return sum(sum(mu) for mu in self)


def enumerate_fixed_points(S: ToricSurface, n: int) -> list[HilbFixedPoint]:
    """All fixed points of ``Hilb^n(S)``, ordered by chart index then partition."""
    k = S.n_rays

    def compositions(total: int, slots: int):
        if slots == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, slots - 1):
                yield (first,) + rest

    out = []
    for sizes in compositions(n, k):
        for combo in product(*(sorted(partitions(s)) for s in sizes)):
            out.append(HilbFixedPoint(combo))
    return out


def fixed_point_count(n_charts: int, n: int) -> int:
    """Coefficient of ``q^n`` in ``prod_k (1 - q^k)^(-n_charts)``."""
    p = [0] * (n + 1)
    p[0] = 1
    for k in range(1, n + 1):
        for i in range(k, n + 1):
            p[i] += p[i - k]
    out = [1] + [0] * n
    for _ in range(n_charts):
        out = [sum(out[i] * p[m - i] for i in range(m + 1)) for m in range(n + 1)]
    return out[n]


def _lin(a: int, w1: Weight, b: int, w2: Weight) -> Weight:
    return (a * w1[0] + b * w2[0], a * w1[1] + b * w2[1])


def oz_character(mu: Partition, chart: Chart) -> list[Weight]:
    w1, w2 = chart.coord_chars
    return [_lin(-(c - 1), w1, -(r - 1), w2) for r, c in boxes(mu)]


def tangent_character(mu: Partition, chart: Chart) -> list[Weight]:
    w1, w2 = chart.coord_chars
    out = []
    for a, l in arms_legs(mu):
        out.append(_lin(a + 1, w1, -l, w2))
        out.append(_lin(-a, w1, l + 1, w2))
    return out


def taut_character(S: ToricSurface, E: ToricLineBundle, fp: Sequence[Partition]) -> list[Weight]:
    out = []
    for ch, mu in zip(charts(S), fp):
        if not mu:
            continue
        m = fiber_character(S, E, ch)
        out.extend((m[0] + x, m[1] + y) for x, y in oz_character(mu, ch))
    return out


def _contribution(S, chs, E, F, fp, spec: Specialization) -> Contribution:
    u_exps, v_exps, den = [], [], []
    for ch, mu in zip(chs, fp):
        if not mu:
            continue
        mE = fiber_character(S, E, ch)
        mF = fiber_character(S, F, ch)
        for x, y in oz_character(mu, ch):
            u_exps.append(-spec.pair((mE[0] + x, mE[1] + y)))
            v_exps.append(spec.pair((mF[0] + x, mF[1] + y)))
        for w in tangent_character(mu, ch):
            k = spec.pair(w)
            if k == 0:
                raise InadmissibleSpecialization(
                    f"specialization {spec} kills tangent weight {w} at chart {ch.index}")
            den.append(-k)
    return Contribution(0, tuple(u_exps), tuple(v_exps), tuple(den))


def hilb_coefficient(S: ToricSurface, E: ToricLineBundle, F: ToricLineBundle, n: int,
                     spec: Specialization) -> UVPoly:
    """``chi(Hilb^n S, lambda_{-u} E^[n]^v (x) lambda_{-v} F^[n])``."""
    if n == 0:
        return ONE
    chs = charts(S)
    return lefschetz_sum(_contribution(S, chs, E, F, fp, spec)
                         for fp in enumerate_fixed_points(S, n))


def hilb_chi_series(S: ToricSurface, E: ToricLineBundle, F: ToricLineBundle, N: int,
                    spec: Specialization | None = None) -> QSeries:
    if N < 0:
        raise ValueError("order must be >= 0")
    if spec is None:
        spec = find_specialization(S, N)
    return QSeries([hilb_coefficient(S, E, F, n, spec) for n in range(N + 1)], N)


def forbidden_weights(S: ToricSurface, N: int) -> set[Weight]:
    """Every tangent weight that can occur at a fixed point of ``Hilb^n``, ``n <= N``.

    Arms and legs satisfy ``a + l + 1 <= N``.
    """
    out = set()
    for ch in charts(S):
        w1, w2 = ch.coord_chars
        for a in range(N):
            for l in range(N - a):
                out.add(_lin(a + 1, w1, -l, w2))
                out.add(_lin(-a, w1, l + 1, w2))
    return out


def find_specialization(S: ToricSurface, N: int, start: int = 1) -> Specialization:
    """First ``(1, beta)`` with ``beta >= start`` pairing nontrivially with every
    possible tangent weight up to ``Hilb^N``."""
    weights = forbidden_weights(S, max(N, 1))
    beta = start
    while True:
        s = Specialization(1, beta)
        if s.admissible_for(weights):
            return s
        beta += 1
