"""Exit criteria.  All comparisons are exact (tolerance 0); each criterion
also has a wall-clock budget.  Run with ``pytest tests/test_acceptance.py``;
one PASS/FAIL line per criterion is printed in the terminal summary."""
import random
import time
from contextlib import contextmanager

import pytest
import sympy as sp

from conftest import ACCEPTANCE_LINES
from tautchi.hilbloc import (
    Specialization,
    enumerate_fixed_points,
    find_specialization,
    forbidden_weights,
    hilb_chi_series,
)
from tautchi.inclexcl import CoeffSeq, combine_direct, combine_log, combine_strata, direct_coefficient
from tautchi.toricgeom import (
    ProjProduct,
    ToricLineBundle as T,
    builtin,
    chi_lambda_pair,
    generators,
    make_blowup_scenario,
    partitions,
)
from tautchi.verify import (
    predicted_closed_form,
    predicted_series,
    verify_conjecture_surface,
    verify_inclusion_exclusion,
)

P2, P1P1, F1 = builtin("p2"), builtin("p1xp1"), builtin("hirzebruch", 1)


@contextmanager
def criterion(number, title, budget_s):
    t0 = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget_s, f"took {elapsed:.2f}s, budget {budget_s}s"
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"[FAIL] {number}. {title}: {exc}")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"[PASS] {number}. {title} ({elapsed:.2f}s < {budget_s}s)")
    print(ACCEPTANCE_LINES[-1])


def _bundle(rng, S, bound=2):
    return T(tuple(rng.randint(-bound, bound) for _ in S.rays))


def test_1_route_equivalence(seed):
    rng = random.Random(seed)
    with criterion(1, "log / chain / strata routes agree; c_2..c_4 match hand expansions", 5):
        for _ in range(100):
            N = rng.randint(1, 8)
            a, b, d = (CoeffSeq([rng.randint(-9, 9) for _ in range(N)]) for _ in range(3))
            via_log = combine_log(a, b, d, N)
            assert combine_direct(a, b, d, N) == via_log
            assert [combine_strata(a, b, d, n) for n in range(1, N + 1)] == list(via_log.entries)
        A, B, D = sp.symbols("a0:5"), sp.symbols("b0:5"), sp.symbols("d0:5")
        a1, a2, a3, a4 = A[1:]
        b1, b2, b3, b4 = B[1:]
        d1, d2, d3, d4 = D[1:]
        by_hand = {
            2: a2 + b2 + a1*b1 - a1*d1 - b1*d1 - d2 + d1**2,
            3: (a3 + a2*b1 + a1*b2 + b3 - a2*d1 - a1*d2 - d3 - a1*b1*d1 - b1*d2 - b2*d1
                + a1*d1**2 + b1*d1**2 + 2*d1*d2 - d1**3),
            4: (a4 + a3*b1 + a2*b2 + a1*b3 + b4 - a3*d1 - a2*d2 - a1*d3 - d4
                - a2*b1*d1 - a1*b1*d2 - b1*d3 - a1*b2*d1 - b2*d2 - b3*d1
                + a2*d1**2 + 2*a1*d1*d2 + 2*d1*d3 + d2**2 + a1*b1*d1**2 + 2*b1*d1*d2 + b2*d1**2
                - a1*d1**3 - 3*d1**2*d2 - b1*d1**3 + d1**4),
        }
        gens = (*A[1:], *B[1:], *D[1:])
        for n, expr in by_hand.items():
            ours = sp.Poly(sp.expand(direct_coefficient(A, B, D, n)), *gens)
            assert ours.terms() == sp.Poly(expr, *gens).terms()


def test_2_product_formula_on_surfaces(seed):
    rng = random.Random(seed)
    with criterion(2, "localized series = predicted series on P^2, P^1xP^1, F_1 (N=4; P^2 N=5)", 60):
        cases = [(P2, T((1, 0, 0)), T((2, 0, 0)), 4),
                 (P1P1, T((1, 0, 0, 0)), T((0, 1, 0, 0)), 4)]
        cases += [(F1, _bundle(rng, F1), _bundle(rng, F1), 4) for _ in range(2)]
        cases.append((P2, T((1, 0, 0)), T((2, 0, 0)), 5))
        assert len(enumerate_fixed_points(P2, 5)) == 108
        for S, K, L, N in cases:
            r = verify_conjecture_surface(S, K, L, N)
            assert r.passed, f"residual {r.residual} on {S.name}"


def test_3_inclusion_exclusion_on_blowup():
    with criterion(3, "inclusion-exclusion residual vanishes mod Q^4 on the P^2 blow-up degeneration", 60):
        for cK, cL in [(1, 1), (0, 0)]:
            sc = make_blowup_scenario(P2, 0, T((1, 0, 0)), cK, T((2, 0, 0)), cL)
            r = verify_inclusion_exclusion(sc, 3)
            assert r.passed and r.residual.order == 3


def test_4_closed_form(seed):
    rng = random.Random(seed)
    with criterion(4, "exp form = closed product form on 50 random inputs, N <= 8", 5):
        spaces = [P2, P1P1, F1, builtin("hirzebruch", 2), ProjProduct((1,)), ProjProduct((2, 1))]
        for _ in range(50):
            X = rng.choice(spaces)
            N = rng.randint(0, 8)
            if isinstance(X, ProjProduct):
                K = tuple(rng.randint(-2, 2) for _ in X.lam)
                L = tuple(rng.randint(-2, 2) for _ in X.lam)
            else:
                K, L = _bundle(rng, X), _bundle(rng, X)
            assert predicted_series(X, K, L, N) == predicted_closed_form(X, K, L, N)


def test_5_n1_reduction_and_additivity(seed):
    rng = random.Random(seed)
    with criterion(5, "Q^1 of localization = chi pair; n=1 additivity for every |c| <= 2", 5):
        for S in (P2, P1P1, F1, builtin("hirzebruch", 2)):
            for _ in range(3):
                K, L = _bundle(rng, S), _bundle(rng, S)
                assert hilb_chi_series(S, K, L, 1)[1] == chi_lambda_pair(S, K, L)
        for S in (P2, P1P1):
            K0, L0 = _bundle(rng, S), _bundle(rng, S)
            for chart in range(S.n_rays):
                for cK in range(-2, 3):
                    for cL in range(-2, 3):
                        sc = make_blowup_scenario(S, chart, K0, cK, L0, cL)
                        p = {k: chi_lambda_pair(e.space, e.K, e.L) for k, e in sc.entries().items()}
                        assert p["X_xi"] == p["Y1"] + p["Y2"] - p["PD"]


def test_6_robustness():
    with criterion(6, "specialization and linearization independence on P^2, N=3", 30):
        K, L = T((1, 0, 0)), T((2, 0, 0))
        s1 = find_specialization(P2, 3)
        s2 = Specialization(2, 11)
        assert s1 != s2 and s2.admissible_for(forbidden_weights(P2, 3))
        base = hilb_chi_series(P2, K, L, 3, s1)
        assert hilb_chi_series(P2, K, L, 3, s2) == base
        m = (-1, 3)
        shift = T(tuple(m[0] * v[0] + m[1] * v[1] for v in P2.rays))
        assert hilb_chi_series(P2, K * shift, L, 3, s1) == base
        assert hilb_chi_series(P2, K, L * shift.dual(), 3, s2) == base


def _partition_power_coeffs(k, n):
    # coefficients of prod_j (1 - q^j)^-k, by repeated geometric-series multiplication
    coeffs = [1] + [0] * n
    for _ in range(k):
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                coeffs[i] += coeffs[i - j]
    return coeffs


def test_7_structural_counts():
    with criterion(7, "fixed-point counts (n <= 6) and generator counts (n <= 4)", 5):
        for S in (P2, P1P1):
            expected = _partition_power_coeffs(S.n_rays, 6)
            assert [len(enumerate_fixed_points(S, n)) for n in range(7)] == expected
        for n in range(1, 5):
            rule = set()
            for lam in partitions(n):
                ell = len(lam)
                for k1 in (0, 1):
                    for k2 in (0, 1):
                        for i in range(ell):
                            for j in range(ell):
                                if not (k1 == k2 == 1 and i == j):
                                    rule.add((lam, tuple(k1 * (t == i) for t in range(ell)),
                                              tuple(k2 * (t == j) for t in range(ell))))
            assert len(generators(n)) == len(rule)


def test_8_out_of_scope_statement():
    ACCEPTANCE_LINES.append(
        "[N/A ] 8. 3-folds mod Q^7 and relative Hilbert-stack series: not reproducible here; "
        "covered by criteria 1-7")
    pytest.skip("3-fold Hilbert schemes and relative Hilbert stacks are not computed")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
