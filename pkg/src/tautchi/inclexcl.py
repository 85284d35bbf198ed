"""Inclusion-exclusion calculus for sequences ``a, b, c, d`` related by

    log(1 + sum c_i Q^i) = log(1 + sum a_i Q^i) + log(1 + sum b_i Q^i) - log(1 + sum d_i Q^i).

Three independent routes compute ``c`` from ``a, b, d``:

* :func:`combine_log` works in the power-series group directly;
* :func:`combine_direct` sums over strictly decreasing index chains;
* :func:`combine_strata` sums over nonempty subsets ``I`` of ``{1, ..., n+1}``,
  the index set of the strata of a degenerate Hilbert scheme.

:func:`direct_coefficient` and :func:`strata_coefficient` only use ``+``,
``-`` and ``*`` of their entries, so they also run on symbolic inputs.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .exactalg import ONE, UVPoly
from .powerseries import QSeries, series_exp, series_log

__all__ = [
    "CoeffSeq",
    "StratumSignature",
    "stratum_signatures",
    "decreasing_chains",
    "direct_coefficient",
    "strata_coefficient",
    "combine_log",
    "combine_direct",
    "combine_strata",
    "residual",
    "infer_fourth",
]


@dataclass(frozen=True)
class CoeffSeq:
    """Coefficients ``c_1, ..., c_N``; the constant ``c_0 = 1`` is implicit."""

    entries: tuple[UVPoly, ...]

    def __init__(self, entries: Sequence = ()):
        object.__setattr__(self, "entries", tuple(UVPoly.coerce(e) for e in entries))

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> UVPoly:
        """1-based access; ``self[0]`` is the implicit 1."""
        if i == 0:
            return ONE
        return self.entries[i - 1]

    def to_series(self, order: int | None = None) -> QSeries:
        order = self.order if order is None else order
        return QSeries((ONE,) + self.entries, order)

    @classmethod
    def from_series(cls, s: QSeries) -> "CoeffSeq":
        if s.coeffs[0] != ONE:
            raise ValueError("series must have constant term 1")
        return cls(s.coeffs[1:])

    def truncate(self, n: int) -> "CoeffSeq":
        return CoeffSeq(self.entries[:n])


def _as_seq(x) -> CoeffSeq:
    return x if isinstance(x, CoeffSeq) else CoeffSeq(x)


@dataclass(frozen=True)
class StratumSignature:
    """A nonempty subset ``I = {a_1 < ... < a_r}`` of ``{1, ..., n+1}``.

    ``parts`` is ``(a_1 - 1, a_2 - a_1, ..., a_r - a_{r-1}, n + 1 - a_r)``:
    the number of points on ``Y_1``, on each of the ``r - 1`` copies of the
    bubble over ``D``, and on ``Y_2``.
    """

    n: int
    subset: tuple[int, ...]

    @property
    def parts(self) -> tuple[int, ...]:
        s = self.subset
        return (s[0] - 1,) + tuple(s[i + 1] - s[i] for i in range(len(s) - 1)) + (self.n + 1 - s[-1],)

    @property
    def sign(self) -> int:
        return -1 if len(self.subset) % 2 == 0 else 1


def stratum_signatures(n: int) -> Iterator[StratumSignature]:
    ground = range(1, n + 2)
    for r in range(1, n + 2):
        for subset in combinations(ground, r):
            yield StratumSignature(n, subset)


def decreasing_chains(n: int, length: int) -> Iterator[tuple[int, ...]]:
    """Chains ``n >= i_1 > ... > i_l >= 0``; the ``j_k = n - i_k`` are implied."""
    for c in combinations(range(n, -1, -1), length):
        yield c


def direct_coefficient(a, b, d, n: int, one=1):
    """``c_n`` via the chain sum, with ``a_0 = b_0 = one``.

    ``a``, ``b``, ``d`` are indexable with ``x[i]`` for ``1 <= i <= n``.
    """
    def at(seq, i):
        return one if i == 0 else seq[i]

    total = None
    for length in range(1, n + 2):
        for chain in decreasing_chains(n, length):
            term = at(a, chain[-1]) * at(b, n - chain[0])
            for k in range(length - 1):
                step = chain[k] - chain[k + 1]
                assert step >= 1
                term = term * d[step]
            if length % 2 == 0:
                term = -term
            total = term if total is None else total + term
    return total


def strata_coefficient(a, b, d, n: int, one=1):
    """``c_n`` as the signed sum over stratum signatures of size ``n``."""
    def at(seq, i):
        return one if i == 0 else seq[i]

    total = None
    for sig in stratum_signatures(n):
        parts = sig.parts
        term = at(a, parts[0]) * at(b, parts[-1])
        for p in parts[1:-1]:
            assert p >= 1
            term = term * d[p]
        if sig.sign < 0:
            term = -term
        total = term if total is None else total + term
    return total


def combine_log(a, b, d, N: int) -> CoeffSeq:
    a, b, d = _as_seq(a), _as_seq(b), _as_seq(d)
    la = series_log(a.to_series(N))
    lb = series_log(b.to_series(N))
    ld = series_log(d.to_series(N))
    return CoeffSeq.from_series(series_exp(la + lb - ld))


def combine_direct(a, b, d, N: int) -> CoeffSeq:
    a, b, d = _as_seq(a), _as_seq(b), _as_seq(d)
    return CoeffSeq([direct_coefficient(a, b, d, n, ONE) for n in range(1, N + 1)])


def combine_strata(a, b, d, n: int) -> UVPoly:
    a, b, d = _as_seq(a), _as_seq(b), _as_seq(d)
    return strata_coefficient(a, b, d, n, ONE)


def residual(cX: QSeries, cY1: QSeries, cY2: QSeries, cPD: QSeries) -> QSeries:
    """``log cX + log cPD - log cY1 - log cY2``; zero exactly when the
    inclusion-exclusion identity holds to the common order."""
    return series_log(cX) + series_log(cPD) - series_log(cY1) - series_log(cY2)


def infer_fourth(a: QSeries, b: QSeries, c: QSeries) -> QSeries:
    """The ``d`` with ``log c = log a + log b - log d``."""
    return series_exp(series_log(a) + series_log(b) - series_log(c))
