"""Smooth complete toric surfaces, torus-invariant line bundles and products of
projective spaces, with Euler characteristics of line bundles and of the
pairing ``chi(lambda_{-u} K, lambda_{-v} L)``.

Conventions
-----------
A line bundle is ``O(sum_rho a_rho D_rho)``.  At the fixed point of the cone
spanned by ``(v_i, v_{i+1})`` the local coordinates carry the characters
``w_1, w_2`` dual to the two rays, and the fibre of the bundle carries the
character ``m`` with ``<m, v> = a_v`` on both rays.  All characters are read
with the torus acting on points, so local functions contribute ``z**-<s, w>``:
with this choice ``chi(P^2, O(1)) = 3``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import atan2, pi
from typing import Sequence, Union

from .exactalg import U, V, UVPoly
from .lefschetz import Contribution, Specialization, lefschetz_sum

__all__ = [
    "InvalidFan",
    "ToricSurface",
    "ToricLineBundle",
    "Chart",
    "ProjProduct",
    "ScenarioEntry",
    "DegenerationScenario",
    "builtin",
    "charts",
    "fiber_character",
    "chi_line_bundle",
    "chi_lambda_pair",
    "canonical_bundle",
    "blowup_at_chart",
    "pullback_and_twist",
    "make_blowup_scenario",
    "generators",
    "partitions",
    "fans_isomorphic",
]


class InvalidFan(ValueError):
    pass


def _det(a: Sequence[int], b: Sequence[int]) -> int:
    return a[0] * b[1] - a[1] * b[0]


@dataclass(frozen=True)
class ToricSurface:
    """Complete smooth fan in ``Z^2`` given by its cyclically ordered rays."""

    rays: tuple[tuple[int, int], ...]
    name: str = field(default="fan", compare=False)

    def __post_init__(self):
        rays = tuple((int(x), int(y)) for x, y in self.rays)
        object.__setattr__(self, "rays", rays)
        if len(rays) < 3:
            raise InvalidFan("a complete fan needs at least 3 rays")
        dets = [_det(rays[i], rays[(i + 1) % len(rays)]) for i in range(len(rays))]
        if any(abs(d) != 1 for d in dets):
            raise InvalidFan(f"fan is not smooth: consecutive determinants {dets}")
        if len(set(dets)) != 1:
            raise InvalidFan("rays are not cyclically ordered")
        # consecutive cones all turn the same way; completeness means one full turn
        angles = [atan2(y, x) for x, y in rays]
        turn = 0.0
        for i in range(len(rays)):
            step = (angles[(i + 1) % len(rays)] - angles[i]) % (2 * pi)
            turn += step if dets[0] > 0 else (2 * pi - step)
        if abs(turn - 2 * pi) > 1e-9:
            raise InvalidFan("rays do not wind exactly once around the origin")

    @property
    def orientation(self) -> int:
        return _det(self.rays[0], self.rays[1])

    @property
    def n_rays(self) -> int:
        return len(self.rays)

    def to_json(self) -> dict:
        return {"type": "fan", "rays": [list(r) for r in self.rays]}


@dataclass(frozen=True)
class ToricLineBundle:
    ray_coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "ray_coeffs", tuple(int(a) for a in self.ray_coeffs))

    @classmethod
    def trivial(cls, S: ToricSurface) -> "ToricLineBundle":
        return cls((0,) * S.n_rays)

    def __mul__(self, other: "ToricLineBundle") -> "ToricLineBundle":
        if len(self.ray_coeffs) != len(other.ray_coeffs):
            raise ValueError("bundles live on different fans")
        return ToricLineBundle(tuple(a + b for a, b in zip(self.ray_coeffs, other.ray_coeffs)))

    def dual(self) -> "ToricLineBundle":
        return ToricLineBundle(tuple(-a for a in self.ray_coeffs))

    def __pow__(self, k: int) -> "ToricLineBundle":
        return ToricLineBundle(tuple(k * a for a in self.ray_coeffs))

    def to_json(self) -> dict:
        return {"ray_coeffs": list(self.ray_coeffs)}


@dataclass(frozen=True)
class Chart:
    index: int
    cone: tuple[tuple[int, int], tuple[int, int]]
    coord_chars: tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class ProjProduct:
    """``P^{lambda_1} x ... x P^{lambda_l}``; bundles are tuples ``(m_1, ..., m_l)``."""

    lam: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        if not lam or any(x < 1 for x in lam):
            raise ValueError(f"invalid factor dimensions {lam}")
        object.__setattr__(self, "lam", lam)

    @property
    def dim(self) -> int:
        return sum(self.lam)

    def to_json(self) -> dict:
        return {"type": "proj_product", "lambda": list(self.lam)}


Space = Union[ToricSurface, ProjProduct]


def builtin(name: str, e: int = 0) -> ToricSurface:
    """``"p2"``, ``"p1xp1"`` or ``"hirzebruch"`` (with ``e >= 0``)."""
    if name == "p2":
        return ToricSurface(((1, 0), (0, 1), (-1, -1)), name="p2")
    if name == "p1xp1":
        return ToricSurface(((1, 0), (0, 1), (-1, 0), (0, -1)), name="p1xp1")
    if name in ("hirzebruch", "fe"):
        if e < 0:
            raise ValueError("Hirzebruch index must be >= 0")
        return ToricSurface(((1, 0), (0, 1), (-1, e), (0, -1)), name=f"F{e}")
    raise ValueError(f"unknown builtin surface {name!r}")


def charts(S: ToricSurface) -> list[Chart]:
    out = []
    n = S.n_rays
    for i in range(n):
        v1, v2 = S.rays[i], S.rays[(i + 1) % n]
        det = _det(v1, v2)
        # inverse of the matrix with rows v1, v2, transposed: dual basis
        w1 = (v2[1] * det, -v2[0] * det)
        w2 = (-v1[1] * det, v1[0] * det)
        out.append(Chart(i, (v1, v2), (w1, w2)))
    return out


def fiber_character(S: ToricSurface, Lb: ToricLineBundle, chart: Chart | int) -> tuple[int, int]:
    """The ``m`` with ``<m, v> = a_v`` for both rays of the chart."""
    if isinstance(chart, int):
        chart = charts(S)[chart]
    i = chart.index
    a1 = Lb.ray_coeffs[i]
    a2 = Lb.ray_coeffs[(i + 1) % S.n_rays]
    w1, w2 = chart.coord_chars
    return (a1 * w1[0] + a2 * w2[0], a1 * w1[1] + a2 * w2[1])


def _surface_specialization(S: ToricSurface) -> Specialization:
    from .hilbloc import find_specialization
    return find_specialization(S, 1)


def chi_line_bundle(X: Space, Lb, spec: Specialization | None = None) -> int:
    """Euler characteristic of a line bundle.

    On a :class:`ProjProduct` this is ``prod_i binom(lambda_i + m_i, lambda_i)``
    read as a polynomial in ``m_i``; on a surface it is evaluated by
    localization at the torus-fixed points.
    """
    if isinstance(X, ProjProduct):
        m = tuple(Lb)
        if len(m) != len(X.lam):
            raise ValueError("bundle does not match the number of factors")
        total = Fraction(1)
        for lam_i, m_i in zip(X.lam, m):
            for k in range(1, lam_i + 1):
                total *= Fraction(m_i + k, k)
        return int(total)
    if spec is None:
        spec = _surface_specialization(X)
    contribs = []
    for ch in charts(X):
        m = fiber_character(X, Lb, ch)
        contribs.append(Contribution(
            shift=spec.pair(m), u_exps=(), v_exps=(),
            den_exps=tuple(-spec.pair(w) for w in ch.coord_chars),
        ))
    value = lefschetz_sum(contribs).constant_term()
    assert value.denominator == 1
    return int(value)


def _bundle_ops(X: Space):
    if isinstance(X, ProjProduct):
        return (lambda a: tuple(-x for x in a),
                lambda a, b: tuple(x + y for x, y in zip(a, b)),
                tuple(0 for _ in X.lam))
    return (lambda a: a.dual(), lambda a, b: a * b, ToricLineBundle.trivial(X))


def chi_lambda_pair(X: Space, K, L) -> UVPoly:
    """``chi(O) - u chi(K^v) - v chi(L) + uv chi(K^v (x) L)``."""
    dual, tensor, trivial = _bundle_ops(X)
    Kd = dual(K)
    return (UVPoly.const(chi_line_bundle(X, trivial))
            - U * chi_line_bundle(X, Kd)
            - V * chi_line_bundle(X, L)
            + U * V * chi_line_bundle(X, tensor(Kd, L)))


def canonical_bundle(S: ToricSurface) -> ToricLineBundle:
    return ToricLineBundle((-1,) * S.n_rays)


def blowup_at_chart(S: ToricSurface, chart: Chart | int) -> ToricSurface:
    i = chart if isinstance(chart, int) else chart.index
    n = S.n_rays
    v1, v2 = S.rays[i], S.rays[(i + 1) % n]
    new = (v1[0] + v2[0], v1[1] + v2[1])
    rays = list(S.rays)
    rays.insert(i + 1, new)
    return ToricSurface(tuple(rays), name=f"Bl({S.name})")


def _exceptional_index(S_blown: ToricSurface, S: ToricSurface) -> int:
    extra = [k for k, r in enumerate(S_blown.rays) if r not in S.rays]
    if len(extra) != 1 or S_blown.n_rays != S.n_rays + 1:
        raise ValueError("first surface is not a one-point blow-up of the second")
    return extra[0]


def pullback_and_twist(S_blown: ToricSurface, S: ToricSurface, Lb: ToricLineBundle,
                       c: int = 0) -> ToricLineBundle:
    """``pi^* Lb - c E`` on the blow-up, ``E`` the exceptional curve."""
    k = _exceptional_index(S_blown, S)
    n = S_blown.n_rays
    prev, nxt = S_blown.rays[k - 1], S_blown.rays[(k + 1) % n]
    coeff = dict(zip(S.rays, Lb.ray_coeffs))
    out = []
    for r in S_blown.rays:
        if r in coeff:
            out.append(coeff[r])
        else:
            out.append(coeff[prev] + coeff[nxt] - c)
    return ToricLineBundle(tuple(out))


def _lattice_automorphisms_match(a: Sequence, b: Sequence) -> bool:
    # find g in GL(2, Z) with g a[0] = b[0], g a[1] = b[1], then compare all rays
    det_a = _det(a[0], a[1])
    if abs(det_a) != 1:
        return False
    # g = B A^{-1} where columns of A are a[0], a[1]
    A_inv = ((a[1][1] * det_a, -a[1][0] * det_a), (-a[0][1] * det_a, a[0][0] * det_a))
    g = tuple(
        tuple(b[0][r] * A_inv[0][c] + b[1][r] * A_inv[1][c] for c in range(2))
        for r in range(2)
    )
    mapped = [(g[0][0] * x + g[0][1] * y, g[1][0] * x + g[1][1] * y) for x, y in a]
    return mapped == list(b)


def fans_isomorphic(S: ToricSurface, T: ToricSurface) -> bool:
    """Whether the two fans agree up to ``GL(2, Z)`` (any rotation/reflection of the ray cycle)."""
    if S.n_rays != T.n_rays:
        return False
    n = S.n_rays
    for order in (list(T.rays), list(reversed(T.rays))):
        for shift in range(n):
            rotated = order[shift:] + order[:shift]
            if _lattice_automorphisms_match(S.rays, rotated):
                return True
    return False


@dataclass(frozen=True)
class ScenarioEntry:
    space: Space
    K: object
    L: object

    def to_json(self) -> dict:
        if isinstance(self.space, ProjProduct):
            return {"space": self.space.to_json(), "K": {"m": list(self.K)}, "L": {"m": list(self.L)}}
        return {"space": self.space.to_json(), "K": self.K.to_json(), "L": self.L.to_json()}


@dataclass(frozen=True)
class DegenerationScenario:
    """The generic fibre and the three pieces of a simple degeneration."""

    X_xi: ScenarioEntry
    Y1: ScenarioEntry
    Y2: ScenarioEntry
    PD: ScenarioEntry
    note: str = ""

    def entries(self) -> dict[str, ScenarioEntry]:
        return {"X_xi": self.X_xi, "Y1": self.Y1, "Y2": self.Y2, "PD": self.PD}

    def swap_dual_bundles(self) -> "DegenerationScenario":
        """Replace ``(K, L)`` by ``(L^v, K^v)``, which swaps ``u`` and ``v`` in every pairing."""
        def dual(X, B):
            return _bundle_ops(X)[0](B)

        return DegenerationScenario(
            *(ScenarioEntry(e.space, dual(e.space, e.L), dual(e.space, e.K))
              for e in self.entries().values()),
            note=self.note)

    def to_json(self) -> dict:
        out = {k: e.to_json() for k, e in self.entries().items()}
        out["note"] = self.note
        return out


def make_blowup_scenario(S: ToricSurface, chart: Chart | int, K0: ToricLineBundle, cK: int,
                         L0: ToricLineBundle, cL: int) -> DegenerationScenario:
    """Degeneration of ``S`` obtained by blowing up ``(p, 0)`` in ``S x A^1``,
    ``p`` the fixed point of ``chart``, with bundles ``pr^* K0 (-cK E)`` and
    ``pr^* L0 (-cL E)``.

    The special fibre is ``Bl_p S`` glued to the exceptional plane along the
    exceptional curve ``D``.  ``D`` has normal bundle ``O(-1)`` in ``Bl_p S``,
    so the bubble ``P(N + O)`` is ``F_1`` and the bundles on it are pulled back
    from ``D = P^1``.
    """
    i = chart if isinstance(chart, int) else chart.index
    Y1 = blowup_at_chart(S, i)
    p2 = builtin("p2")
    f1 = builtin("hirzebruch", 1)

    def on_p2(c):
        return ToricLineBundle((c, 0, 0))

    def on_f1(c):
        # ray (1, 0) is a fibre of F_1 -> P^1
        return ToricLineBundle((c, 0, 0, 0))

    note = (f"blow-up of {S.name} x A^1 at (fixed point of chart {i}, 0); "
            f"Y1 = Bl_p {S.name}, Y2 = exceptional P^2, D = exceptional line, P_D = F_1; "
            f"family bundles pr^*K0(-{cK}E), pr^*L0(-{cL}E)")
    return DegenerationScenario(
        X_xi=ScenarioEntry(S, K0, L0),
        Y1=ScenarioEntry(Y1, pullback_and_twist(Y1, S, K0, cK), pullback_and_twist(Y1, S, L0, cL)),
        Y2=ScenarioEntry(p2, on_p2(cK), on_p2(cL)),
        PD=ScenarioEntry(f1, on_f1(cK), on_f1(cL)),
        note=note,
    )


def partitions(n: int, max_part: int | None = None):
    """Partitions of ``n`` as weakly decreasing tuples, in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def generators(n: int) -> list[tuple[ProjProduct, tuple[int, ...], tuple[int, ...]]]:
    """Triples ``(P^lambda, p_i^* O(k_1), p_j^* O(k_2))`` with ``k_1, k_2`` in
    ``{0, 1}`` and ``i != j`` when ``k_1 = k_2 = 1``, for ``lambda`` a
    partition of ``n``.  Identical triples (which arise whenever a ``k`` is 0)
    are listed once.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    out = []
    seen = set()
    for lam in partitions(n):
        X = ProjProduct(lam)
        ell = len(lam)
        for k1, k2 in product((0, 1), repeat=2):
            for i, j in product(range(ell), repeat=2):
                if k1 == k2 == 1 and i == j:
                    continue
                K = tuple(k1 if t == i else 0 for t in range(ell))
                L = tuple(k2 if t == j else 0 for t in range(ell))
                key = (lam, K, L)
                if key not in seen:
                    seen.add(key)
                    out.append((X, K, L))
    return out
