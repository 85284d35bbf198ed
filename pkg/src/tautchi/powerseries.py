"""Truncated power series in ``Q`` with :class:`UVPoly` coefficients."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactalg import ONE, U, V, ZERO, UVPoly

__all__ = [
    "NotUnit",
    "NonzeroConstant",
    "QSeries",
    "series_mul",
    "series_inv",
    "series_log",
    "series_exp",
    "binom_power",
]


class NotUnit(ValueError):
    """The series does not have constant term 1."""


class NonzeroConstant(ValueError):
    """``exp`` was applied to a series with nonzero constant term."""


class QSeries:
    """Power series ``sum_{n<=order} coeffs[n] Q^n``, known modulo ``Q^(order+1)``.

    Binary operations truncate to the smaller of the two orders.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [UVPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        cs = cs[: order + 1] + [ZERO] * (order + 1 - len(cs))
        self.order = order
        self.coeffs: tuple[UVPoly, ...] = tuple(cs)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([ONE], order)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order)

    def __getitem__(self, n: int) -> UVPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs, min(order, self.order))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __add__(self, other: "QSeries") -> "QSeries":
        n = min(self.order, other.order)
        return QSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other: "QSeries") -> "QSeries":
        return self + (-other)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return series_mul(self, other)
        return QSeries([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def map_coeffs(self, f) -> "QSeries":
        return QSeries([f(c) for c in self.coeffs], self.order)

    def to_json(self) -> dict:
        return {"order": self.order,
                "coefficients": [[n, c.to_json()] for n, c in enumerate(self.coeffs)]}

    @classmethod
    def from_json(cls, data: dict) -> "QSeries":
        order = int(data["order"])
        cs = [ZERO] * (order + 1)
        for n, c in data["coefficients"]:
            if n <= order:
                cs[int(n)] = UVPoly.from_json(c)
        return cls(cs, order)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})Q^{n}" for n, c in enumerate(self.coeffs) if c)
        return f"QSeries({body or '0'} + O(Q^{self.order + 1}))"


def series_mul(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        acc = ZERO
        for i in range(k + 1):
            if a.coeffs[i] and b.coeffs[k - i]:
                acc = acc + a.coeffs[i] * b.coeffs[k - i]
        out.append(acc)
    return QSeries(out, n)


def _check_unit(a: QSeries) -> None:
    if a.coeffs[0] != ONE:
        raise NotUnit(f"constant term is {a.coeffs[0]}, expected 1")


def series_inv(a: QSeries) -> QSeries:
    _check_unit(a)
    out = [ONE]
    for k in range(1, a.order + 1):
        acc = ZERO
        for i in range(1, k + 1):
            if a.coeffs[i]:
                acc = acc + a.coeffs[i] * out[k - i]
        out.append(-acc)
    return QSeries(out, a.order)


def _compose(x: QSeries, weights: Sequence[Fraction]) -> QSeries:
    """``sum_k weights[k] * x**k`` for ``x`` with zero constant term."""
    total = QSeries([weights[0]], x.order)
    power = QSeries.one(x.order)
    for k in range(1, x.order + 1):
        power = series_mul(power, x)
        if weights[k]:
            total = total + power * weights[k]
    return total


def series_log(a: QSeries) -> QSeries:
    _check_unit(a)
    x = QSeries((ZERO,) + a.coeffs[1:], a.order)
    weights = [Fraction(0)] + [Fraction((-1) ** (k - 1), k) for k in range(1, a.order + 1)]
    return _compose(x, weights)


def series_exp(a: QSeries) -> QSeries:
    if a.coeffs[0]:
        raise NonzeroConstant(f"constant term is {a.coeffs[0]}, expected 0")
    weights = [Fraction(1)]
    for k in range(1, a.order + 1):
        weights.append(weights[-1] / k)
    return _compose(a, weights)


_BASES = {"1-Q": ONE, "1-uQ": U, "1-vQ": V, "1-uvQ": U * V}


def binom_power(base, e: int, order: int) -> QSeries:
    """``(1 - m Q)**e`` computed as ``exp(e log(1 - m Q))``.

    ``base`` is one of ``"1-Q"``, ``"1-uQ"``, ``"1-vQ"``, ``"1-uvQ"`` or the
    monomial ``m`` itself as a :class:`UVPoly`.
    """
    m = _BASES[base] if isinstance(base, str) else UVPoly.coerce(base)
    # log(1 - mQ) = -sum_r m^r Q^r / r
    log_base = QSeries([ZERO] + [m ** r * Fraction(-1, r) for r in range(1, order + 1)], order)
    return series_exp(log_base * e)
