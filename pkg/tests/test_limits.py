"""Root sequences, limiting values, closed forms and the pendant-path operators.

Derived reference values are cross-checked against independent routes:
companion-matrix eigenvalues (numpy.roots) for polynomial roots, exact
surd expressions where one exists, and frozen regression decimals that
were produced by a separate bisection implementation.
"""

import math

import numpy as np
import pytest

from alphalimits.graphs import cycle, path, star
from alphalimits import limits as L
from alphalimits.limits import (
    BracketError,
    BranchSelectionError,
    HalfPoly,
    RootConfig,
    beta_n,
    difference_poly_f,
    eta_classic,
    eta_n,
    gamma_n,
    gamma_tilde_n,
    guo_wang_poly,
    half_alpha_poly,
    laplacian_guo_wang,
    laplacian_new,
    limit_table,
    new_version_sequence,
    omega1,
    omega2,
    omega2_closed_form,
    pendant_path_limit,
    phi_hoffman,
    phi_version1,
    phi_version2,
    psi,
    psi_closed_form,
    theta_from_lambda,
    theta_substitution,
    two_pendant_paths_limit,
)

SQRT_2_PLUS_SQRT5 = math.sqrt(2.0 + math.sqrt(5.0))


def roots_oracle(coeffs_ascending):
    """Real positive roots via the companion matrix, an independent route."""
    r = np.roots(list(reversed(coeffs_ascending)))
    real = r[np.abs(r.imag) < 1e-9].real
    return sorted(float(x) for x in real if x > 0)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


def test_half_poly_evaluation():
    p = HalfPoly((0.0, 1.0, 2.0))  # sqrt(x) + 2x
    assert abs(p(4.0) - (2.0 + 8.0)) < 1e-14
    assert abs(p.eval_t(3.0) - (3.0 + 18.0)) < 1e-14
    assert p.degree_t == 2


def test_root_config_validation():
    with pytest.raises(ValueError):
        RootConfig(tol=0.0)
    with pytest.raises(ValueError):
        RootConfig(max_iter=0)
    with pytest.raises(ValueError):
        RootConfig(scan_points=1)


def test_bisect_raises_without_sign_change():
    with pytest.raises(BracketError):
        L._bisect(lambda t: t * t + 1.0, 0.0, 1.0, L.DEFAULT_CONFIG)


def test_classic_polynomial_values():
    p = phi_hoffman(3)  # x^4 - x^2 - x - 1
    assert abs(p(2.0) - (16.0 - 4.0 - 2.0 - 1.0)) < 1e-12
    assert abs(p(1.0) - (1 - 3)) < 1e-12


def test_version1_polynomial_against_direct_sum():
    for n in (1, 2, 6):
        for alpha in (0.0, 0.3, 0.75):
            for x in (0.2, 0.5, 0.9):
                a = alpha
                direct = ((1 - a) ** 2 * x ** (n + 1)
                          + 2 * a * (1 - a) * sum(x ** (n - i + 0.5) for i in range(n))
                          + (1 - 2 * a + 2 * a * a) * sum(x ** (i + 2) for i in range(n - 1))
                          + a * a * x - (1 - a) ** 2)
                assert abs(phi_version1(n, alpha)(x) - direct) < 1e-13


def test_version2_polynomial_against_direct_sum():
    for n in (1, 2, 6):
        for alpha in (0.0, 0.3, 0.75):
            for x in (1.1, 1.6, 2.5):
                a = alpha
                direct = ((1 - a) ** 2 * x ** (n + 1) - a * a * x ** n
                          - 2 * a * (1 - a) * sum(x ** (n - i + 0.5) for i in range(1, n + 1))
                          - (1 - 2 * a + 2 * a * a) * sum(x ** i for i in range(1, n))
                          - (1 - a) ** 2)
                assert abs(phi_version2(n, alpha)(x) - direct) < 1e-12


def test_version1_at_alpha_zero_collapses():
    # x^(n+1) + x^n + ... + x^2 - 1, all half powers gone
    for n in (1, 4):
        for x in (0.3, 0.8):
            expect = sum(x ** k for k in range(2, n + 2)) - 1.0
            assert abs(phi_version1(n, 0.0)(x) - expect) < 1e-14


def test_version1_value_at_one():
    for n in (1, 2, 5, 12):
        for a in (0.0, 0.25, 0.5, 0.9):
            expect = 2 * a * (1 - a) * n + (1 - 2 * a + 2 * a * a) * (n - 1) + a * a
            assert abs(phi_version1(n, a)(1.0) - expect) < 1e-12
            if n == 1 and a == 0.0:
                assert expect == 0.0  # the single case whose root is exactly 1
            else:
                assert expect > 0


def test_classic_to_version1_transform():
    # phi_version1 at alpha=0 is -x^(n+1) times the classic polynomial at 1/x
    for n in (1, 3, 8):
        for x in (0.2, 0.6, 0.9):
            lhs = phi_version1(n, 0.0)(x)
            rhs = -(x ** (n + 1)) * phi_hoffman(n)(1.0 / x)
            assert abs(lhs - rhs) < 1e-12


# ---------------------------------------------------------------------------
# the root sequences
# ---------------------------------------------------------------------------


def test_beta_sequence_anchors():
    assert abs(beta_n(1) - 1.0) < 1e-13
    plastic = roots_oracle([-1.0, -1.0, 0.0, 1.0])[-1]  # x^3 - x - 1
    assert abs(beta_n(2) - plastic) < 5e-13
    assert abs(eta_classic(1) - 2.0) < 1e-12
    t = math.sqrt(plastic)
    assert abs(eta_classic(2) - (t + 1.0 / t)) < 5e-13


def test_eta_classic_approaches_the_supremum():
    vals = [eta_classic(n) for n in (5, 10, 20, 40)]
    assert all(b > a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < SQRT_2_PLUS_SQRT5
    assert SQRT_2_PLUS_SQRT5 - vals[-1] < 1e-7


def test_gamma_edges():
    assert gamma_n(0, 0.4) == 1.0
    assert gamma_n(1, 0.0) == 1.0
    assert gamma_tilde_n(1, 0.0) == 1.0
    with pytest.raises(ValueError):
        gamma_n(2, 1.0)
    with pytest.raises(ValueError):
        gamma_n(-1, 0.3)


def test_gamma_against_companion_matrix():
    # integer t-power coefficients feed an independent eigenvalue root-finder
    for n, alpha in ((2, 0.25), (4, 0.5), (7, 0.8)):
        coeffs = phi_version1(n, alpha).coeffs
        cands = [x for x in roots_oracle(list(coeffs)) if x < 1.0 - 1e-9]
        assert cands, "expected a root below 1"
        t_root = cands[-1]
        assert abs(gamma_n(n, alpha) - t_root * t_root) < 5e-12


def test_gamma_reciprocal_duality():
    for n in (1, 3, 9, 22):
        for alpha in (0.0, 0.2, 0.55, 0.9):
            assert abs(gamma_n(n, alpha) * gamma_tilde_n(n, alpha) - 1.0) < 1e-11


def test_eta_frozen_regression_values():
    # produced by a separate bisection implementation, kept as anchors
    frozen = {
        (2, 0.25): 2.06585393512966,
        (3, 0.5): 2.18652545597598,
        (7, 0.75): 2.43252331399066,
        (30, 0.9): 2.72729745062279,
    }
    for (n, alpha), want in frozen.items():
        assert abs(eta_n(n, alpha) - want) < 5e-12


def test_eta_matches_growing_path_eigenvalues():
    from alphalimits.graphs import p2_two_paths
    from alphalimits.spectral import radius_of

    for n, alpha in ((1, 0.3), (3, 0.6)):
        g, _ = p2_two_paths(300, n)
        assert abs(radius_of(g, alpha) - eta_n(n, alpha)) < 1e-8


def test_new_version_is_the_alpha_zero_column():
    for n in (1, 2, 9, 30):
        d, z = new_version_sequence(n)
        assert abs(d - gamma_n(n, 0.0)) < 1e-13
        assert abs(z - eta_n(n, 0.0)) < 1e-13
        assert abs(d * beta_n(n) - 1.0) < 1e-12
    assert abs(new_version_sequence(1)[1] - 2.0) < 1e-12


# ---------------------------------------------------------------------------
# the limiting value and closed forms
# ---------------------------------------------------------------------------


def test_psi_anchors():
    assert abs(psi(0.0) - SQRT_2_PLUS_SQRT5) < 1e-10
    eps = ((54 - 6 * math.sqrt(33.0)) ** (1 / 3)
           + (54 + 6 * math.sqrt(33.0)) ** (1 / 3)) / 3.0
    assert abs(2.0 * psi(0.5) - (2.0 + eps)) < 1e-10
    assert psi(1.0) == 3.0
    with pytest.raises(ValueError):
        psi(-0.1)


def test_psi_strictly_increasing_in_alpha():
    grid = [psi(a) for a in np.linspace(0.0, 0.95, 20)]
    assert all(b > a for a, b in zip(grid, grid[1:]))


def test_psi_closed_form_agrees_with_root_finder():
    for alpha in np.arange(0.0, 0.96, 0.05):
        a = float(alpha)
        assert abs(psi_closed_form(a) - psi(a)) < 1e-8


def test_psi_closed_form_branch_values():
    g = L._psi_surds(0.0)
    assert abs(g["g4"] - complex(1.0 + math.sqrt(3.0) / 2.0,
                                 1.5 + math.sqrt(3.0))) < 1e-12
    assert abs(g["g5"] - complex(12.0, 6.0)) < 1e-10
    assert abs(abs(g["g4"]) - (2.0 + math.sqrt(3.0))) < 1e-12


def test_psi_closed_form_residue_guard():
    with pytest.raises(BranchSelectionError):
        psi_closed_form(0.3, residue_tol=-1.0)


def test_omega1_surds():
    assert abs(omega1(0.0) - 3.0 * math.sqrt(2.0) / 2.0) < 1e-14
    assert abs(omega1(0.5) - 0.5 * (2.5 + 1.5 * math.sqrt(3.0))) < 1e-14
    for a in np.arange(0.0, 0.96, 0.05):
        assert psi(float(a)) < omega1(float(a))


def test_omega2_anchors_and_closed_form():
    assert abs(omega2(0.0) - SQRT_2_PLUS_SQRT5) < 1e-9
    for a in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9):
        o = omega2(a)
        assert abs(o - omega2_closed_form(a)) < 1e-7
        assert o >= psi(a) - 1e-9


# ---------------------------------------------------------------------------
# pendant-path limit operators
# ---------------------------------------------------------------------------


def test_one_growing_path_on_a_star_gives_omega1():
    for alpha in (0.0, 0.33, 0.7):
        assert abs(pendant_path_limit(star(3), 0, alpha) - omega1(alpha)) < 1e-9


def test_one_growing_path_mid_p5_gives_omega2():
    for alpha in (0.0, 0.4, 0.8):
        assert abs(pendant_path_limit(path(5), 2, alpha) - omega2(alpha)) < 1e-9


def test_growing_path_on_a_path_stays_at_two():
    assert pendant_path_limit(path(2), 1, 0.0) == 2.0
    assert pendant_path_limit(path(1), 0, 0.35) == 2.0


def test_growing_path_on_a_cycle_matches_eigenvalues():
    from alphalimits.graphs import attach_pendant_path
    from alphalimits.spectral import radius_of

    for alpha in (0.0, 0.5):
        limit = pendant_path_limit(cycle(4), 0, alpha)
        approx = radius_of(attach_pendant_path(cycle(4), 0, 400), alpha)
        assert abs(limit - approx) < 1e-8


def test_two_growing_paths_on_an_edge_give_psi():
    for alpha in (0.0, 0.25, 0.6, 0.9):
        assert abs(two_pendant_paths_limit(path(2), 0, alpha) - psi(alpha)) < 1e-10


def test_two_paths_dominate_one_path():
    for g, u in ((path(2), 0), (star(3), 0), (cycle(5), 2)):
        for alpha in (0.0, 0.45):
            one = pendant_path_limit(g, u, alpha)
            two = two_pendant_paths_limit(g, u, alpha)
            assert two >= one - 1e-12


# ---------------------------------------------------------------------------
# Laplacian corollary sequences
# ---------------------------------------------------------------------------


def test_laplacian_sequence_anchors():
    mu0, kap0 = laplacian_guo_wang(0)
    assert (mu0, kap0) == (1.0, 4.0)
    th0, xi0 = laplacian_new(0)
    assert (th0, xi0) == (1.0, 4.0)
    mu1, kap1 = laplacian_guo_wang(1)
    golden_sq = (3.0 + math.sqrt(5.0)) / 2.0
    assert abs(mu1 - golden_sq) < 1e-12
    root = math.sqrt(golden_sq)
    assert abs(kap1 - (2.0 + root + 1.0 / root)) < 1e-12


def test_laplacian_guo_wang_against_companion_matrix():
    coeffs = guo_wang_poly(3).coeffs
    t_root = roots_oracle(list(coeffs))[-1]
    mu3, _ = laplacian_guo_wang(3)
    assert abs(mu3 - t_root * t_root) < 5e-12


def test_laplacian_sequences_agree():
    eps = ((54 - 6 * math.sqrt(33.0)) ** (1 / 3)
           + (54 + 6 * math.sqrt(33.0)) ** (1 / 3)) / 3.0
    kappas = []
    for n in range(0, 31):
        mu, kappa = laplacian_guo_wang(n)
        th, xi = laplacian_new(n)
        assert abs(mu * th - 1.0) < 1e-11
        assert abs(xi - kappa) < 1e-11
        assert abs(xi - 2.0 * eta_n(n, 0.5)) < 1e-11
        assert kappa < 2.0 + eps + 1e-12
        kappas.append(kappa)
    # strictly increasing until the gaps shrink below double resolution,
    # then at worst flat (the tail rides the limit at machine precision)
    saturated = False
    for prev, cur in zip(kappas, kappas[1:]):
        gap = cur - prev
        if not saturated and gap < 1e-12:
            saturated = True
        if saturated:
            assert gap >= -5e-15
        else:
            assert gap > 0.0


def test_half_alpha_poly_is_four_times_version1():
    for n in (1, 2, 7):
        a = np.asarray(half_alpha_poly(n).coeffs)
        b = 4.0 * np.asarray(phi_version1(n, 0.5).coeffs)
        assert np.allclose(a, b, atol=1e-15)


def test_guo_wang_transform_to_half_alpha():
    # x^(n+1) f_n(1/x) = -phi_n(x) with phi_n the half-alpha polynomial
    for n in (1, 3, 6):
        for x in (0.25, 0.5, 0.85):
            lhs = x ** (n + 1) * guo_wang_poly(n)(1.0 / x)
            rhs = -half_alpha_poly(n)(x)
            assert abs(lhs - rhs) < 1e-11


# ---------------------------------------------------------------------------
# substitutions and the difference polynomial
# ---------------------------------------------------------------------------


def test_theta_substitution_basics():
    for alpha in (0.0, 0.4, 0.9):
        assert abs(theta_substitution(1.0, alpha) - 2.0) < 1e-14
        for th in (0.2, 0.7):
            assert abs(theta_substitution(th, alpha)
                       - theta_substitution(1.0 / th, alpha)) < 1e-12
    with pytest.raises(ValueError):
        theta_substitution(0.0, 0.3)


def test_theta_substitution_hits_eta():
    for n, alpha in ((1, 0.2), (4, 0.5), (9, 0.8)):
        lam = theta_substitution(math.sqrt(gamma_n(n, alpha)), alpha)
        assert abs(lam - eta_n(n, alpha)) < 1e-11


def test_theta_inverse_round_trip():
    for alpha in (0.0, 0.3, 0.8):
        for th in (0.1, 0.45, 0.9):
            lam = theta_substitution(th, alpha)
            assert abs(theta_from_lambda(lam, alpha) - th) < 1e-11
    with pytest.raises(ValueError):
        theta_from_lambda(2.0, 0.3)
    with pytest.raises(ValueError):
        theta_from_lambda(3.0, 1.0)


def test_difference_polynomial_identity():
    for n in range(1, 11):
        for alpha in (0.0, 0.35, 0.7, 0.95):
            for x in (0.15, 0.5, 0.85):
                lhs = phi_version1(n + 1, alpha)(x) - x * phi_version1(n, alpha)(x)
                assert abs(lhs - difference_poly_f(x, alpha)) < 1e-12


def test_difference_polynomial_spot_value():
    assert abs(difference_poly_f(1.0, 0.0) - 1.0) < 1e-14
    with pytest.raises(ValueError):
        difference_poly_f(-0.5, 0.2)


def test_first_step_difference_is_a_square():
    # phi_2 - phi_1 = x^2 ((1-a) sqrt(x) + a)^2, positive on (0,1)
    for alpha in (0.0, 0.3, 0.6, 0.9):
        for x in (0.2, 0.5, 0.9):
            lhs = phi_version1(2, alpha)(x) - phi_version1(1, alpha)(x)
            rhs = x * x * ((1 - alpha) * math.sqrt(x) + alpha) ** 2
            assert abs(lhs - rhs) < 1e-13
            assert lhs > 0


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def test_limit_table_classic():
    t = limit_table("classic", 2)
    assert [r.n for r in t.rows] == [1, 2]
    assert abs(t.rows[0].eta - 2.0) < 1e-12
    assert abs(t.rows[1].eta - 2.01980088709048) < 1e-11
    assert len(t.limits) == 1
    assert abs(t.limits[0][1] - SQRT_2_PLUS_SQRT5) < 1e-12


def test_limit_table_version_columns_match_new():
    tv = limit_table("versionI", 6, alphas=(0.0,))
    tn = limit_table("new", 6)
    v_etas = {r.n: r.eta for r in tv.rows if r.n >= 1}
    n_etas = {r.n: r.eta for r in tn.rows}
    for n, e in n_etas.items():
        assert abs(v_etas[n] - e) < 1e-12


def test_limit_table_laplacian_start():
    t = limit_table("laplacian", 0)
    assert t.rows[0].eta == 4.0
    eps = ((54 - 6 * math.sqrt(33.0)) ** (1 / 3)
           + (54 + 6 * math.sqrt(33.0)) ** (1 / 3)) / 3.0
    assert abs(t.limits[0][1] - (2.0 + eps)) < 1e-11


def test_limit_table_validation():
    with pytest.raises(ValueError):
        limit_table("classic", 0)
    with pytest.raises(ValueError):
        limit_table("nope", 3)


def test_eta_all_values_below_limit():
    for kind, bound_idx in (("versionI", 0), ("versionII", 0)):
        t = limit_table(kind, 12, alphas=(0.3,))
        lim = t.limits[0][1]
        assert all(r.eta < lim for r in t.rows)
