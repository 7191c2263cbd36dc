import numpy as np
import pytest

from statesphere import (
    Grid,
    gaussian,
    fs_distance,
    minimize_multistart,
    minimize_product,
    momentum_op,
    normalize,
    objective,
    position_op,
    relations_report,
    riemannian_grad,
    spectral,
    validate_state,
)

from conftest import random_hermitian, random_state


def fd_gradient(a, b, v, step=1e-5):
    """Central differences of the normalized variance product."""
    grad = np.zeros(v.size, dtype=complex)
    for k in range(v.size):
        for direction in (1.0, 1j):
            e = np.zeros(v.size, dtype=complex)
            e[k] = direction * step
            diff = (objective(a, b, v + e) - objective(a, b, v - e)) / (2 * step)
            grad[k] += direction * diff
    return grad


class TestRiemannianGrad:
    def test_zero_at_eigenstate(self, sx, sy):
        # eigenstate of A is a global minimum of the product
        phi = normalize([1, 1])
        g = riemannian_grad(sx, sy, phi)
        assert np.linalg.norm(g) <= 1e-10

    def test_finite_difference_match_pauli(self, sx, sy):
        phi = validate_state([1, 0])
        g = riemannian_grad(sx, sy, phi)
        fd = fd_gradient(sx, sy, phi.amplitudes)
        assert np.linalg.norm(g - fd) <= 1e-5 * max(np.linalg.norm(fd), 1.0)

    def test_finite_difference_match_random(self):
        rng = np.random.default_rng(0)
        for _ in range(10):
            n = int(rng.integers(2, 6))
            a = random_hermitian(rng, n)
            b = random_hermitian(rng, n)
            phi = random_state(rng, n)
            g = riemannian_grad(a, b, phi)
            fd = fd_gradient(a, b, phi.amplitudes)
            assert np.linalg.norm(g - fd) <= 1e-5 * max(np.linalg.norm(fd), 1e-3)

    def test_horizontality(self):
        rng = np.random.default_rng(1)
        a = random_hermitian(rng, 4)
        b = random_hermitian(rng, 4)
        phi = random_state(rng, 4)
        g = riemannian_grad(a, b, phi)
        from statesphere import inner

        assert abs(inner(g, phi.amplitudes)) <= 1e-10

    def test_phase_gauge_invariance(self):
        rng = np.random.default_rng(2)
        a = random_hermitian(rng, 3)
        b = random_hermitian(rng, 3)
        phi = random_state(rng, 3)
        shifted = normalize(np.exp(0.9j) * phi.amplitudes)
        f1 = objective(a, b, phi.amplitudes)
        f2 = objective(a, b, shifted.amplitudes)
        assert f2 == pytest.approx(f1, abs=1e-10)
        n1 = np.linalg.norm(riemannian_grad(a, b, phi))
        n2 = np.linalg.norm(riemannian_grad(a, b, shifted))
        assert n2 == pytest.approx(n1, abs=1e-10)


class TestMinimizeProduct:
    def test_pauli_pair_reaches_eigenstate(self, sx, sy):
        res = minimize_multistart(sx, sy, restarts=8, seed=0)
        assert res.value <= 1e-8
        eigvecs = [
            validate_state(col)
            for obs in (sx, sy)
            for col in spectral(obs).eigenvectors.T
        ]
        assert min(fs_distance(res.state, e) for e in eigvecs) <= 1e-4

    def test_grid_pair_from_gaussian(self):
        g = Grid(256, 40.0)
        p = momentum_op(g)
        x = position_op(g)
        start = gaussian(g, 0.0, 0.0, 1.3)
        res = minimize_product(p, x, start, max_iter=2000, grad_tol=1e-6)
        assert res.value <= (g.hbar / 2) ** 2 + 1e-3
        assert res.certificate.is_minimal

    def test_self_pair(self):
        rng = np.random.default_rng(3)
        a = random_hermitian(rng, 3)
        res = minimize_multistart(a, a, restarts=4, seed=1)
        assert res.value <= 1e-10

    def test_monotone_trace(self, sx, sy):
        rng = np.random.default_rng(4)
        res = minimize_product(sx, sy, random_state(rng, 2))
        trace = np.asarray(res.objective_trace)
        assert np.all(np.diff(trace) <= 0)

    def test_value_consistent_with_report(self, sx, sy):
        rng = np.random.default_rng(5)
        res = minimize_product(sx, sy, random_state(rng, 2), max_iter=20)
        rep = relations_report(sx, sy, res.state)
        assert res.value == pytest.approx(
            rep.delta_a**2 * rep.delta_b**2, abs=1e-10
        )

    def test_invalid_max_iter(self, sx, sy):
        with pytest.raises(ValueError):
            minimize_product(sx, sy, validate_state([1, 0]), max_iter=0)

    def test_invalid_restarts(self, sx, sy):
        with pytest.raises(ValueError):
            minimize_multistart(sx, sy, restarts=0)

    def test_seed_determinism(self, sx, sy):
        r1 = minimize_multistart(sx, sy, restarts=3, seed=7)
        r2 = minimize_multistart(sx, sy, restarts=3, seed=7)
        assert np.array_equal(r1.state.amplitudes, r2.state.amplitudes)
        assert r1.value == r2.value
        assert r1.seed == 7

    def test_canonical_equality_structure_at_converged_point(self):
        # at the canonical minimum the area carries hbar/2 and the metric
        # term vanishes
        g = Grid(256, 40.0)
        p = momentum_op(g)
        x = position_op(g)
        res = minimize_product(p, x, gaussian(g, 0.0, 0.0, 1.3), max_iter=2000, grad_tol=1e-6)
        rep = relations_report(p, x, res.state)
        assert rep.area == pytest.approx(g.hbar / 2, abs=1e-3)
        assert abs(rep.metric_term) <= 1e-3
