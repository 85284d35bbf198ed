"""Exact summation of holomorphic Lefschetz contributions after restricting
the torus to a one-parameter subgroup ``t = (z**alpha, z**beta)``.

A contribution is stored as exponents only::

    z**shift * prod_e (1 - u z**e) * prod_f (1 - v z**f) / prod_w (1 - z**w)

Denominators are pooled over cyclotomic factors: ``1 - z**k`` equals
``-Phi_{d_1}(z) ... Phi_{d_m}(z)`` over the divisors of ``k > 0``, and
``z**-k (Phi ...)`` for ``k < 0``.  The common denominator is the product of
``Phi_d ** max multiplicity``; each numerator is multiplied by its complement
and the pooled sum becomes one :class:`RatFunZ`.  That quotient is the
equivariant Euler characteristic, a Laurent polynomial in ``z``; the ordinary
Euler characteristic is its value at ``z = 1``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np
from sympy import Poly, cyclotomic_poly, divisors, symbols

from .exactalg import LaurentZ, RatFunZ, UVPoly, ratfun_at_one, ratfun_to_laurent

__all__ = [
    "Specialization",
    "InadmissibleSpecialization",
    "Contribution",
    "lefschetz_character",
    "lefschetz_sum",
    "equivariant_character",
]

_z = symbols("z")


class InadmissibleSpecialization(ValueError):
    """The chosen one-parameter subgroup kills a tangent weight."""


@dataclass(frozen=True)
class Specialization:
    """One-parameter subgroup ``t = (z**alpha, z**beta)``."""

    alpha: int
    beta: int

    def pair(self, w: Sequence[int]) -> int:
        return self.alpha * w[0] + self.beta * w[1]

    def admissible_for(self, weights: Iterable[Sequence[int]]) -> bool:
        return all(self.pair(w) != 0 for w in weights)

    def to_json(self) -> list[int]:
        return [self.alpha, self.beta]


@dataclass(frozen=True)
class Contribution:
    """One fixed-point term, all exponents already paired with the subgroup."""

    shift: int
    u_exps: tuple[int, ...]
    v_exps: tuple[int, ...]
    den_exps: tuple[int, ...]


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> np.ndarray:
    # ascending coefficients of Phi_d
    coeffs = Poly(cyclotomic_poly(d, _z), _z).all_coeffs()[::-1]
    return np.array([int(c) for c in coeffs], dtype=object)


@lru_cache(maxsize=None)
def _divisors(k: int) -> tuple[int, ...]:
    return tuple(divisors(k))


def _factor_denominator(den_exps: Sequence[int]) -> tuple[int, int, Counter]:
    """Write ``prod (1 - z**k)`` as ``sign * z**shift * prod Phi_d**m_d``."""
    sign, shift = 1, 0
    mult: Counter = Counter()
    for k in den_exps:
        if k == 0:
            raise InadmissibleSpecialization("zero weight in a localization denominator")
        if k > 0:
            sign = -sign
        else:
            shift += k
        for d in _divisors(abs(k)):
            mult[d] += 1
    return sign, shift, mult


def _poly_pow_product(mult: dict[int, int]) -> np.ndarray:
    out = np.array([1], dtype=object)
    for d in sorted(mult):
        for _ in range(mult[d]):
            out = np.convolve(out, _cyclotomic(d))
    return out


def _one_minus_product(exps: Sequence[int]) -> tuple[int, list[np.ndarray]]:
    """Expand ``prod_e (1 - x z**e)`` as ``z**low * sum_i x**i P_i(z)``."""
    low = sum(e for e in exps if e < 0)
    span = sum(abs(e) for e in exps)
    # polys[i] holds the coefficient of x**i as a dense array on [low, low + span]
    polys = [np.zeros(span + 1, dtype=object)]
    polys[0][-low] = 1
    for e in exps:
        new = [p.copy() for p in polys] + [np.zeros(span + 1, dtype=object)]
        for i, p in enumerate(polys):
            if e >= 0:
                new[i + 1][e:] -= p[: span + 1 - e]
            else:
                new[i + 1][: span + 1 + e] -= p[-e:]
        polys = new
    return low, polys


def lefschetz_character(contributions: Iterable[Contribution]) -> RatFunZ:
    """Pooled exact sum of the contributions as a single rational function."""
    prepared = []
    pooled: Counter = Counter()
    for c in contributions:
        sign, dshift, mult = _factor_denominator(c.den_exps)
        for d, m in mult.items():
            pooled[d] = max(pooled[d], m)
        prepared.append((c, sign, dshift, mult))
    if not prepared:
        return RatFunZ(LaurentZ())

    numer: dict[tuple[int, int], dict[int, int]] = {}
    complement_cache: dict[tuple, np.ndarray] = {}
    for c, sign, dshift, mult in prepared:
        key = tuple(sorted((d, pooled[d] - mult.get(d, 0)) for d in pooled))
        comp = complement_cache.get(key)
        if comp is None:
            comp = _poly_pow_product(dict(key))
            complement_cache[key] = comp
        ulow, upolys = _one_minus_product(c.u_exps)
        vlow, vpolys = _one_minus_product(c.v_exps)
        offset = c.shift - dshift + ulow + vlow
        ucomp = [np.convolve(p, comp) if p.any() else None for p in upolys]
        for i, up in enumerate(ucomp):
            if up is None:
                continue
            for j, vp in enumerate(vpolys):
                if not vp.any():
                    continue
                prod = np.convolve(up, vp)
                acc = numer.setdefault((i, j), {})
                for k in np.nonzero(prod)[0]:
                    e = offset + int(k)
                    acc[e] = acc.get(e, 0) + sign * prod[k]

    by_exp: dict[int, dict[tuple[int, int], int]] = {}
    for ij, poly in numer.items():
        for e, coef in poly.items():
            if coef:
                by_exp.setdefault(e, {})[ij] = coef
    num = LaurentZ({e: UVPoly(t) for e, t in by_exp.items()})
    den_arr = _poly_pow_product(dict(pooled))
    den = LaurentZ({k: int(x) for k, x in enumerate(den_arr) if x})
    return RatFunZ(num, den)


def lefschetz_sum(contributions: Iterable[Contribution]) -> UVPoly:
    """Non-equivariant value: the pooled sum must be a Laurent polynomial in
    ``z``, which is then evaluated at ``z = 1``."""
    return ratfun_at_one(lefschetz_character(contributions))


def equivariant_character(contributions: Iterable[Contribution]) -> LaurentZ:
    return ratfun_to_laurent(lefschetz_character(contributions))
