import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import closed_form_cases
import properties
from alphaspectra.digraph import Digraph, DigraphError, EvalPoint, alpha_matrix, charpoly_oracle, principal_minor
from alphaspectra.families import (
    FamilySpec,
    Inf,
    ThetaHat,
    coalesce,
    cycle,
    inf,
    path_bundle,
    rose,
    theta,
    theta_hat,
)
from alphaspectra.spectral import (
    ConvergenceError,
    F_value,
    ResamplePoint,
    closed_form,
    cp_attach_cycles,
    cp_coalescence,
    cp_merged,
    cp_schwenk_vertex,
    cp_theta,
    cp_theta_hat,
    cp_two_coalescence,
    cp_two_cycles_two_vertices,
    random_eval_points,
    rel_err,
    rho_any,
    rho_bisect,
    spectral_radius,
)
from alphaspectra.extremal import family_instances
from oracles import eig_radius, random_strong_digraph


def phi_psi(g, v, p):
    return charpoly_oracle(g, p), principal_minor(g, p.alpha, [v], p.x)


# --- power iteration -------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 7, 20])
@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.9])
def test_cycle_radius_is_one(n, alpha):
    res = spectral_radius(cycle(n), alpha)
    assert abs(res.rho - 1) < 1e-10
    assert np.allclose(res.perron, 1 / n)


def test_reference_radius_values():
    # the printed 1.208 is a truncation of 1.20894
    rho = spectral_radius(inf(9, 9, 6), 0.5).rho
    assert math.floor(rho * 1000) / 1000 == 1.208
    assert abs(spectral_radius(theta((2, 2, 2, 1), (4, 4, 3)), 0.2).rho - 1.6971) <= 0.5e-4


def test_result_fields():
    g = theta((3, 2), (2, 1))
    res = spectral_radius(g, 0.4)
    M = alpha_matrix(g, 0.4)
    assert res.method == "power" and res.iterations >= 1
    assert res.residual <= 1e-12
    assert np.all(res.perron > 0) and res.perron.sum() == pytest.approx(1)
    assert np.max(np.abs(M @ res.perron - res.rho * res.perron)) <= 1e-11


def test_rejects_not_strongly_connected():
    g = path_bundle((3, 2))
    with pytest.raises(DigraphError):
        spectral_radius(g, 0.2)
    # the per-component path accepts it
    assert rho_any(g, 0.2) == pytest.approx(eig_radius(alpha_matrix(g, 0.2)), abs=1e-12)


def test_cap_raises_with_best_estimate():
    g = theta_hat(18)
    with pytest.raises(ConvergenceError) as info:
        spectral_radius(g, 0.8, max_iter=10)
    best = info.value.best
    assert best.iterations >= 10 and best.residual > 1e-12
    # outdegrees are 1 and 2
    assert 1.0 < best.rho < 2.0


def test_bad_tolerance():
    with pytest.raises(DigraphError):
        spectral_radius(cycle(3), 0.1, tol=0)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**31), st.floats(0, 0.95))
def test_power_matches_dense_eigensolver(seed, alpha):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 9))
    g = random_strong_digraph(rng, n, int(rng.integers(0, 2 * n)))
    assert spectral_radius(g, alpha).rho == pytest.approx(eig_radius(alpha_matrix(g, alpha)), abs=1e-8)


# --- bisection --------------------------------------------------------------


def test_bisect_small_examples():
    assert rho_bisect(cycle(3), 0.0, (0.5, 2)) == pytest.approx(1, abs=1e-12)
    assert abs(rho_bisect(inf(5, 5, 5), 0.2, (1, 3)) - 1.233) <= 0.5e-3
    assert rho_bisect(rose((2, 2)), 0.0, (1, 3)) == pytest.approx(math.sqrt(2), abs=1e-12)


def test_bisect_no_sign_change():
    with pytest.raises(ArithmeticError):
        rho_bisect(cycle(3), 0.0, (0.0, 0.5))


@pytest.mark.parametrize("spec,alpha", [
    (Inf(2, 12, 2), 0.8),   # two eigenvalues 3e-4 apart
    (ThetaHat(18), 0.8),    # nearly defective top eigenvalue
    (ThetaHat(30), 0.9),
])
def test_bisect_hard_cases(spec, alpha):
    g = spec.build()
    ref = spectral_radius(g, alpha, max_iter=10**8).rho
    assert rho_bisect(g, alpha) == pytest.approx(ref, abs=1e-6)


def test_bisect_and_power_agree_on_sample():
    pool = family_instances(16)
    rng = np.random.default_rng(11)
    for i in rng.choice(len(pool), size=150, replace=False):
        g = pool[i].build()
        for a in (0.0, 0.5, 0.8):
            assert abs(rho_bisect(g, a) - spectral_radius(g, a, max_iter=10**8).rho) < 1e-8, (pool[i], a)


# --- closed forms -------------------------------------------------------------


def test_F_value_examples():
    for p in random_eval_points(3, 5):
        assert F_value((1,), (1,), p) == pytest.approx(p.d**2)
    half = EvalPoint(2.0, 0.0)
    assert F_value((2, 2), (1,), half) == pytest.approx(0.25)


def test_coalescence_identity_and_roses():
    p = EvalPoint(1.7, 0.35)
    c2 = phi_psi(cycle(2), 0, p)
    assert cp_coalescence([c2], p.x) == c2[0]
    assert cp_coalescence([c2, c2], p.x) == pytest.approx(charpoly_oracle(rose((2, 2)), p))
    assert cp_coalescence([c2] * 3, p.x) == pytest.approx(charpoly_oracle(rose((2, 2, 2)), p))


def test_coalescence_zero_minor_resamples():
    with pytest.raises(ResamplePoint):
        cp_coalescence([(1.0, 0.0), (2.0, 1.0)], 1.5)


def test_two_coalescence_examples():
    p = EvalPoint(2.2, 0.25)
    c2, c3 = phi_psi(cycle(2), 0, p), phi_psi(cycle(3), 0, p)
    assert cp_two_coalescence(*c3, p.x, 1.0, p.x) == pytest.approx(c3[0])
    assert cp_two_coalescence(*c2, *c2, p.x) == pytest.approx(charpoly_oracle(rose((2, 2)), p))
    assert cp_two_coalescence(*c3, *c2, p.x) == pytest.approx(charpoly_oracle(rose((3, 2)), p))


def test_attach_cycles_examples():
    p = EvalPoint(1.9, 0.4)
    assert cp_attach_cycles(cycle(2), 0, [2], p) == pytest.approx(charpoly_oracle(rose((2, 2)), p))
    assert cp_attach_cycles(cycle(5), 0, [], p) == pytest.approx(charpoly_oracle(cycle(5), p))
    h = coalesce(coalesce(cycle(5), 2, cycle(3), 0), 2, cycle(4), 0)
    assert cp_attach_cycles(cycle(5), 2, [3, 4], p) == pytest.approx(charpoly_oracle(h, p))


def test_two_cycles_examples():
    assert cp_two_cycles_two_vertices(cycle(2), 0, 1, 2, 2, EvalPoint(2.0, 0.0)) == pytest.approx(5)
    assert charpoly_oracle(inf(2, 2, 2), EvalPoint(2.0, 0.0)) == pytest.approx(5)
    p = EvalPoint(1.5, 0.5)
    assert rel_err(cp_two_cycles_two_vertices(cycle(5), 0, 1, 5, 5, p), charpoly_oracle(inf(5, 5, 5), p)) < 1e-9
    q = EvalPoint(1.8, 0.3)
    a = cp_two_cycles_two_vertices(cycle(6), 0, 3, 4, 4, q)
    b = cp_two_cycles_two_vertices(cycle(6), 3, 0, 4, 4, q)
    assert a == pytest.approx(b)


def test_schwenk_examples():
    p = EvalPoint(1.6, 0.3)
    for n in (2, 5, 8):
        assert cp_schwenk_vertex(cycle(n), 0, p) == pytest.approx((p.x - p.alpha) ** n - (1 - p.alpha) ** n)
    assert cp_schwenk_vertex(rose((2, 2)), 0, p) == pytest.approx(charpoly_oracle(rose((2, 2)), p))
    g = theta((2, 1), (1,))
    for q in random_eval_points(5, 10):
        assert rel_err(cp_schwenk_vertex(g, 0, q), charpoly_oracle(g, q)) < 1e-9


def test_schwenk_guard():
    with pytest.raises(DigraphError):
        cp_schwenk_vertex(rose((2,) * 13), 0, EvalPoint(2.0, 0.1))


def test_theta_examples():
    p = EvalPoint(2.0, 0.0)
    assert cp_theta((2, 1), (1,), p) == pytest.approx(5)
    assert charpoly_oracle(theta((2, 1), (1,)), p) == pytest.approx(5)
    q = EvalPoint(1.45, 0.6)
    for n in range(5, 10):
        assert rel_err(cp_theta((2, 2), (n - 3,), q), charpoly_oracle(theta((2, 2), (n - 3,)), q)) < 1e-9
    assert cp_theta((4,), (3,), q) == pytest.approx(charpoly_oracle(cycle(7), q))


def test_theta_hat_examples():
    assert cp_theta_hat(4, EvalPoint(2.0, 0.0)) == pytest.approx(11)
    assert charpoly_oracle(theta_hat(4), EvalPoint(2.0, 0.0)) == pytest.approx(11)
    assert math.isfinite(cp_theta_hat(6, EvalPoint(0.3, 0.3)))
    assert cp_theta_hat(6, EvalPoint(0.3, 0.3)) == pytest.approx(charpoly_oracle(theta_hat(6), EvalPoint(0.3, 0.3)))


def test_merged_examples():
    p = EvalPoint(1.7, 0.45)
    K1, K2 = (3, 2, 1), (2, 2)
    g2 = path_bundle(K2)
    rev = Digraph(g2.n, tuple((j, i) for i, j in g2.arcs))
    assert cp_merged(path_bundle(K1), 0, 1, rev, 0, 1, p) == pytest.approx(cp_theta(K1, K2, p))
    arc = Digraph(2, ((1, 0),))
    assert cp_merged(path_bundle(K1), 0, 1, arc, 0, 1, p) == pytest.approx(cp_theta(K1, (1,), p))


def test_merged_checks_degrees():
    with pytest.raises(DigraphError):
        cp_merged(cycle(3), 0, 1, cycle(3), 0, 1, EvalPoint(2.0, 0.2))


def test_closed_form_rejects_bad_spec():
    with pytest.raises(DigraphError):
        closed_form(FamilySpec("Q", (3,)), EvalPoint(2.0, 0.1))


@pytest.mark.parametrize("max_m", [9])
def test_closed_forms_agree_with_oracle(max_m):
    seen = set()
    for i, spec in enumerate(family_instances(max_m)):
        for name, label, fn, g in closed_form_cases.cases(spec):
            seen.add(name)
            for p in random_eval_points(1000 + i, 20):
                assert rel_err(fn(p), charpoly_oracle(g, p)) <= 1e-9, (spec, name, label, p)
    assert set(closed_form_cases.EVALUATORS) <= seen


# --- property sweeps ------------------------------------------------------------


@pytest.mark.parametrize("suite", [
    "perron_positivity",
    "row_sum_identity",
    "scc_spectrum_product",
    "charpoly_monotone",
    "internal_vertex_invariance",
    "inf_placement",
    "perron_path_monotone",
])
def test_property_suite(suite):
    count, fails = getattr(properties, suite)()
    assert count >= 50
    assert fails == []


def test_reassignment_suite():
    (n_in, n_all), fails = properties.reassignment()
    assert n_in >= 50 and n_all >= 50
    assert fails == []
