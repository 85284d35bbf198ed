"""Exact arithmetic: rationals, polynomials in ``u, v`` and Laurent
polynomials / rational functions in an auxiliary variable ``z``.

Rationals are :class:`fractions.Fraction`.  Everything here is immutable.
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping

__all__ = [
    "NotConstant",
    "UVPoly",
    "LaurentZ",
    "RatFunZ",
    "uvpoly_arith",
    "ratfun_sum",
    "ratfun_to_constant",
    "ratfun_to_laurent",
    "ratfun_at_one",
    "NotLaurent",
    "rational_to_str",
    "rational_from_str",
]


class NotConstant(ValueError):
    """A rational function expected to be constant in ``z`` is not."""


class NotLaurent(ValueError):
    """A rational function expected to be a Laurent polynomial in ``z`` is not."""


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return rational_from_str(x)
    return Fraction(x)


def rational_to_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s.strip())


class UVPoly:
    """Polynomial in ``u`` and ``v`` with rational coefficients.

    ``terms`` maps ``(i, j)`` to the coefficient of ``u**i * v**j``.
    Zero coefficients are never stored.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError(f"negative exponent ({i}, {j}) in UVPoly")
                c = _frac(c)
                if c:
                    clean[(int(i), int(j))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "UVPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "UVPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int = 0, j: int = 0, c=1) -> "UVPoly":
        return cls({(i, j): c})

    @classmethod
    def coerce(cls, x) -> "UVPoly":
        if isinstance(x, UVPoly):
            return x
        return cls.const(x)

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant_term(self) -> Fraction:
        return self.coeff(0, 0)

    def degree_u(self) -> int:
        return max((i for i, _ in self._terms), default=0)

    def degree_v(self) -> int:
        return max((j for _, j in self._terms), default=0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, UVPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == UVPoly.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __neg__(self) -> "UVPoly":
        return UVPoly._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other) -> "UVPoly":
        if not isinstance(other, UVPoly):
            if isinstance(other, (int, Fraction)):
                other = UVPoly.const(other)
            else:
                return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return UVPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other) -> "UVPoly":
        if not isinstance(other, UVPoly):
            if isinstance(other, (int, Fraction)):
                other = UVPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UVPoly":
        return (-self) + other

    def __mul__(self, other) -> "UVPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return UVPoly()
            return UVPoly._raw({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, UVPoly):
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return UVPoly._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other) -> "UVPoly":
        # division by scalars only
        other = _frac(other)
        return UVPoly._raw({k: c / other for k, c in self._terms.items()})

    def __pow__(self, e: int) -> "UVPoly":
        if e < 0:
            raise ValueError("UVPoly powers must be non-negative")
        out = UVPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def subs_power(self, r: int) -> "UVPoly":
        """Substitute ``u -> u**r`` and ``v -> v**r``."""
        return UVPoly._raw({(i * r, j * r): c for (i, j), c in self._terms.items()})

    def swap_uv(self) -> "UVPoly":
        return UVPoly._raw({(j, i): c for (i, j), c in self._terms.items()})

    def evaluate(self, u=0, v=0) -> Fraction:
        return sum((c * Fraction(u) ** i * Fraction(v) ** j
                    for (i, j), c in self._terms.items()), Fraction(0))

    def to_json(self) -> list[dict]:
        return [{"u": i, "v": j, "value": rational_to_str(c)}
                for (i, j), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data) -> "UVPoly":
        if isinstance(data, (int, str)):
            return cls.const(_frac(data))
        return cls({(int(r["u"]), int(r["v"])): _frac(r["value"]) for r in data})

    def __repr__(self) -> str:
        return f"UVPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self._terms.items()):
            mono = "*".join(
                p for p in (
                    "" if i == 0 else ("u" if i == 1 else f"u^{i}"),
                    "" if j == 0 else ("v" if j == 1 else f"v^{j}"),
                ) if p
            )
            if not mono:
                parts.append(rational_to_str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{rational_to_str(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


U = UVPoly.monomial(1, 0)
V = UVPoly.monomial(0, 1)
ONE = UVPoly.const(1)
ZERO = UVPoly()


def uvpoly_arith(a: UVPoly, b: UVPoly, op: str) -> UVPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


class LaurentZ:
    """Laurent polynomial in ``z`` with :class:`UVPoly` coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = UVPoly.coerce(c)
                if c:
                    clean[int(k)] = c
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict) -> "LaurentZ":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentZ":
        return cls({k: c})

    @classmethod
    def one_minus(cls, k: int, c=1) -> "LaurentZ":
        """``1 - c * z**k``."""
        if k == 0:
            return cls({0: ONE - UVPoly.coerce(c)})
        return cls({0: 1, k: -UVPoly.coerce(c)})

    @property
    def terms(self) -> dict[int, UVPoly]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_uv_free(self) -> bool:
        return all(c.is_constant() for c in self._terms.values())

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentZ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> "LaurentZ":
        return LaurentZ._raw({k: -c for k, c in self._terms.items()})

    def __add__(self, other: "LaurentZ") -> "LaurentZ":
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentZ._raw(out)

    def __sub__(self, other: "LaurentZ") -> "LaurentZ":
        return self + (-other)

    def __mul__(self, other) -> "LaurentZ":
        if isinstance(other, (int, Fraction, UVPoly)):
            other = UVPoly.coerce(other)
            return LaurentZ({k: c * other for k, c in self._terms.items()})
        out: dict[int, UVPoly] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return LaurentZ._raw({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentZ":
        return LaurentZ._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, q) -> "LaurentZ":
        q = _frac(q)
        return LaurentZ._raw({k: c * q for k, c in self._terms.items()})

    def rational_content(self) -> Fraction:
        """Positive gcd of all rational coefficients (0 for the zero polynomial)."""
        coeffs = [c for p in self._terms.values() for c in p._terms.values()]
        if not coeffs:
            return Fraction(0)
        num = reduce(gcd, (c.numerator for c in coeffs))
        den = reduce(lambda x, y: x * y // gcd(x, y), (c.denominator for c in coeffs))
        return Fraction(abs(num), den)

    def __repr__(self) -> str:
        body = ", ".join(f"z^{k}: {c}" for k, c in sorted(self._terms.items()))
        return f"LaurentZ({{{body}}})"


class RatFunZ:
    """Quotient of Laurent polynomials in ``z``; the denominator is u,v-free."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentZ, den: LaurentZ | None = None):
        if den is None:
            den = LaurentZ({0: 1})
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_uv_free():
            raise ValueError("RatFunZ denominators must not involve u, v")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def from_uv(cls, p) -> "RatFunZ":
        return cls(LaurentZ({0: UVPoly.coerce(p)}))

    def __add__(self, other: "RatFunZ") -> "RatFunZ":
        if self.den == other.den:
            return RatFunZ(self.num + other.num, self.den)
        return RatFunZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatFunZ":
        return RatFunZ(-self.num, self.den)

    def __sub__(self, other: "RatFunZ") -> "RatFunZ":
        return self + (-other)

    def __mul__(self, other: "RatFunZ") -> "RatFunZ":
        return RatFunZ(self.num * other.num, self.den * other.den)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunZ):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __repr__(self) -> str:
        return f"RatFunZ({self.num!r} / {self.den!r})"


def _normalize(num: LaurentZ, den: LaurentZ) -> tuple[LaurentZ, LaurentZ]:
    # strip the z-power and rational content of the denominator, monic-ish sign
    if num.is_zero():
        return num, LaurentZ({0: 1})
    k = den.min_exp()
    num, den = num.shift(-k), den.shift(-k)
    c = den.rational_content()
    lead = den._terms[den.max_exp()].constant_term()
    if lead < 0:
        c = -c
    return num.scale(1 / c), den.scale(1 / c)


def ratfun_sum(parts: Iterable[RatFunZ]) -> RatFunZ:
    total = RatFunZ(LaurentZ())
    for p in parts:
        total = total + p
    return total


def ratfun_to_constant(f: RatFunZ) -> UVPoly:
    """Return the value of ``f`` as a :class:`UVPoly`, or raise :class:`NotConstant`."""
    num, den = f.num, f.den
    if num.is_zero():
        return ZERO
    if (num.min_exp(), num.max_exp()) != (den.min_exp(), den.max_exp()):
        raise NotConstant(f"numerator and denominator have different z-support: {f!r}")
    k = den.max_exp()
    c = num._terms[k] / den._terms[k].constant_term()
    if not (num - den * c).is_zero():
        raise NotConstant(f"rational function depends on z: {f!r}")
    return c


def _long_divide(num: list, den: list) -> tuple[list, bool]:
    """Divide dense ascending coefficient lists; return (quotient, exact)."""
    num = list(num)
    dn = len(den) - 1
    lead = den[-1]
    if len(num) - 1 < dn:
        return [], not any(num)
    q = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if not c:
            continue
        c = c * lead if lead in (1, -1) else Fraction(c) / lead
        q[k - dn] = c
        for t in range(dn + 1):
            if den[t]:
                num[k - dn + t] -= c * den[t]
    return q, not any(num[:dn])


def ratfun_to_laurent(f: RatFunZ) -> LaurentZ:
    """Exact quotient ``num / den``, or :class:`NotLaurent` if it leaves a remainder."""
    num, den = f.num, f.den
    if num.is_zero():
        return LaurentZ()
    dlow = den.min_exp()
    dcoef = [den._terms.get(k, ZERO).constant_term() for k in range(dlow, den.max_exp() + 1)]
    dcoef = [int(c) if c.denominator == 1 else c for c in dcoef]
    nlow, nhigh = num.min_exp(), num.max_exp()
    per_mono: dict[tuple[int, int], list] = {}
    for k, p in num._terms.items():
        for ij, c in p._terms.items():
            arr = per_mono.setdefault(ij, [0] * (nhigh - nlow + 1))
            arr[k - nlow] = int(c) if c.denominator == 1 else c
    out: dict[int, dict] = {}
    for ij, arr in per_mono.items():
        q, exact = _long_divide(arr, dcoef)
        if not exact:
            raise NotLaurent(f"denominator does not divide the numerator: {f!r}")
        for k, c in enumerate(q):
            if c:
                out.setdefault(k + nlow - dlow, {})[ij] = c
    return LaurentZ({k: UVPoly(t) for k, t in out.items()})


def ratfun_at_one(f: RatFunZ) -> UVPoly:
    """Value at ``z = 1`` of a rational function that is a Laurent polynomial."""
    total = ZERO
    for c in ratfun_to_laurent(f)._terms.values():
        total = total + c
    return total
