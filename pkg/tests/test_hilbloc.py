import pytest
import sympy as sp

from tautchi.exactalg import ONE, U, V, UVPoly
from tautchi.hilbloc import (
    InadmissibleSpecialization,
    Specialization,
    arms_legs,
    enumerate_fixed_points,
    find_specialization,
    fixed_point_count,
    forbidden_weights,
    hilb_chi_series,
    hilb_coefficient,
    oz_character,
    tangent_character,
    taut_character,
)
from tautchi.powerseries import binom_power
from tautchi.toricgeom import ToricLineBundle as T, builtin, charts, chi_lambda_pair

P2 = builtin("p2")
P1P1 = builtin("p1xp1")
F1 = builtin("hirzebruch", 1)


def count_oracle(k, n):
    q = sp.symbols("q")
    gen = sp.prod([(1 - q ** j) ** -1 for j in range(1, n + 1)]) ** k
    return int(sp.series(gen, q, 0, n + 1).removeO().coeff(q, n))


def test_fixed_point_examples():
    assert len(enumerate_fixed_points(P2, 0)) == 1
    assert len(enumerate_fixed_points(P2, 1)) == 3
    assert len(enumerate_fixed_points(P2, 2)) == 9
    assert len(enumerate_fixed_points(P2, 5)) == 108


@pytest.mark.parametrize("S", [P2, P1P1, builtin("hirzebruch", 2)])
def test_fixed_point_counts(S):
    for n in range(7):
        fps = enumerate_fixed_points(S, n)
        assert len(fps) == fixed_point_count(S.n_rays, n) == count_oracle(S.n_rays, n)
        assert len(set(fps)) == len(fps)
        assert all(fp.size == n for fp in fps)


def test_fixed_point_order_is_deterministic():
    assert enumerate_fixed_points(P1P1, 4) == enumerate_fixed_points(P1P1, 4)
    assert enumerate_fixed_points(P2, 1) == [((), (), (1,)), ((), (1,), ()), ((1,), (), ())]


def test_oz_character():
    ch = charts(P2)[1]
    w1, w2 = ch.coord_chars
    assert oz_character((1,), ch) == [(0, 0)]
    assert oz_character((2,), ch) == [(0, 0), (-w1[0], -w1[1])]
    for mu in [(3, 1), (2, 2), (4, 2, 1)]:
        assert len(oz_character(mu, ch)) == sum(mu)


def test_arms_legs():
    assert arms_legs((2,)) == ((1, 0), (0, 0))
    assert arms_legs((2, 1)) == ((1, 1), (0, 0), (0, 0))


def test_tangent_character_examples():
    ch = charts(P2)[2]
    w1, w2 = ch.coord_chars
    assert sorted(tangent_character((1,), ch)) == sorted([w1, w2])
    lin = lambda a, b: (a * w1[0] + b * w2[0], a * w1[1] + b * w2[1])
    assert sorted(tangent_character((2,), ch)) == sorted([lin(2, 0), lin(-1, 1), lin(1, 0), lin(0, 1)])
    for mu in [(3, 1), (2, 2, 1), (5,)]:
        ws = tangent_character(mu, ch)
        assert len(ws) == 2 * sum(mu) and (0, 0) not in ws


def test_taut_character():
    fp = enumerate_fixed_points(P2, 1)[0]
    assert taut_character(P2, T((0, 0, 0)), fp) == [(0, 0)]
    E = T((1, 2, -1))
    for fp in enumerate_fixed_points(P2, 3):
        ws = taut_character(P2, E, fp)
        assert len(ws) == 3
    # a global character shift moves every weight by the same vector
    m = (2, -1)
    shift = T(tuple(m[0] * v[0] + m[1] * v[1] for v in P2.rays))
    for fp in enumerate_fixed_points(P2, 3):
        a = taut_character(P2, E, fp)
        b = taut_character(P2, E * shift, fp)
        assert [(x[0] + m[0], x[1] + m[1]) for x in a] == b


def sympy_oracle(S, E, F, n, spec):
    """Sum the fixed-point contributions with sympy and take z -> 1."""
    z, u, v = sp.symbols("z u v")
    total = 0
    for fp in enumerate_fixed_points(S, n):
        term = sp.Integer(1)
        for e in taut_character(S, E, fp):
            term *= 1 - u * z ** (-spec.pair(e))
        for f in taut_character(S, F, fp):
            term *= 1 - v * z ** spec.pair(f)
        for ch, mu in zip(charts(S), fp):
            for w in tangent_character(mu, ch):
                term /= 1 - z ** (-spec.pair(w))
        total += term
    value = sp.limit(sp.cancel(sp.together(total)), z, 1)
    poly = sp.Poly(sp.expand(value), u, v)
    return UVPoly({m: int(c) for m, c in poly.terms()})


@pytest.mark.parametrize("S,E,F,n", [
    (P2, T((1, 0, 0)), T((2, 0, 0)), 2),
    (P1P1, T((1, 0, 0, 0)), T((0, 1, 0, 0)), 2),
    (F1, T((0, 1, -1, 0)), T((1, 0, 0, 1)), 1),
])
def test_coefficient_matches_sympy_oracle(S, E, F, n):
    spec = find_specialization(S, n)
    assert hilb_coefficient(S, E, F, n, spec) == sympy_oracle(S, E, F, n, spec)


def test_n1_reduction():
    for S, E, F in [(P2, T((1, 0, 0)), T((2, 0, 0))), (P1P1, T((0, 0, 0, 0)), T((0, 0, 0, 0))),
                    (F1, T((2, -1, 0, 1)), T((0, 1, 1, -2)))]:
        s = hilb_chi_series(S, E, F, 1)
        assert s[0] == ONE
        assert s[1] == chi_lambda_pair(S, E, F)
    assert hilb_chi_series(P1P1, T((0,) * 4), T((0,) * 4), 1)[1] == (1 - U) * (1 - V)


def test_u_v_zero_gives_structure_sheaf():
    s = hilb_chi_series(P2, T((1, 0, 0)), T((2, 1, 0)), 5)
    closed = binom_power("1-Q", -1, 5)
    for n in range(6):
        assert s[n].evaluate(0, 0) == 1 == closed[n].constant_term()


def test_specialization_independence():
    E, F = T((1, 0, 0)), T((0, 2, 0))
    s1 = find_specialization(P2, 3)
    s2 = Specialization(3, 17)
    assert s2.admissible_for(forbidden_weights(P2, 3)) and s1 != s2
    assert hilb_chi_series(P2, E, F, 3, s1) == hilb_chi_series(P2, E, F, 3, s2)


def test_linearization_independence():
    E, F = T((1, 0, 0)), T((2, 0, 0))
    m = (1, -2)
    shift = T(tuple(m[0] * v[0] + m[1] * v[1] for v in P2.rays))
    base = hilb_chi_series(P2, E, F, 3)
    assert hilb_chi_series(P2, E * shift, F, 3) == base
    assert hilb_chi_series(P2, E, F * shift, 3) == base


def test_degree_bound_and_integrality():
    s = hilb_chi_series(F1, T((1, -1, 2, 0)), T((0, 2, -1, 1)), 3)
    for n, c in enumerate(s.coeffs):
        assert c.degree_u() <= n and c.degree_v() <= n
        assert c.is_integral()


def test_find_specialization():
    s = find_specialization(P2, 3)
    assert s.admissible_for(forbidden_weights(P2, 3))
    M = max(max(abs(x), abs(y)) for x, y in forbidden_weights(P2, 3))
    assert Specialization(1, 3 * M + 1).admissible_for(forbidden_weights(P2, 3))


def test_inadmissible_specialization_raises():
    # (1, 0) kills w = (0, 1) at the first chart of P^2
    with pytest.raises(InadmissibleSpecialization):
        hilb_chi_series(P2, T((0, 0, 0)), T((0, 0, 0)), 1, Specialization(1, 0))


def test_fiber_character_sign_guard():
    # the sign of the fibre character is what makes chi(P^2, O(1)) = 3
    assert hilb_chi_series(P2, T((0, 0, 0)), T((1, 0, 0)), 1)[1] == 1 - 3 * V - U + 3 * U * V
