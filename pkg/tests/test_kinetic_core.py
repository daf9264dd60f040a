import itertools

import numpy as np
import pytest

from political_kinetics.errors import InvalidArgumentError
from political_kinetics.kinetic_core import (
    CITIZENS,
    COMPETING,
    INFLUENCE_PAIRS,
    RULER,
    ActivityGrid,
    Distribution,
    KineticParams,
    Moments,
    PopulationState,
    SubsystemId,
    b_matrix,
    flux_external,
    flux_internal,
    kernel_B,
    kernel_D,
    moments,
    rhs,
    rhs_array,
)

from oracles import brute_rhs, random_state

P = KineticParams()
HIGH, LOW = Moments(0.7, 0.7), Moments(0.3, 0.3)


def test_grid_nodes():
    g = ActivityGrid(4, 5)
    assert g.u[0] == 0 and g.u[-1] == 1 and len(g.u) == 5
    assert g.nu[0] == 0 and g.nu[-1] == 1 and len(g.nu) == 6
    with pytest.raises(InvalidArgumentError):
        ActivityGrid(0, 3)


def test_distribution_invariants():
    g = ActivityGrid(2, 2)
    with pytest.raises(InvalidArgumentError):
        Distribution(g, np.full(g.shape, 0.2))
    f = np.full(g.shape, 1 / 9)
    f[0, 0] = -1e-3
    with pytest.raises(InvalidArgumentError):
        Distribution(g, f)
    with pytest.raises(InvalidArgumentError):
        Distribution(g, np.ones((2, 2)) / 4)


def test_params_defaults_and_validation():
    assert (P.alpha_tilde, P.beta, P.gamma_tilde) == (0.1, 0.3, 0.9)
    assert P.eta == (1.0, 1.0, 1.0)
    for s, j in itertools.product(SubsystemId, SubsystemId):
        expected = 1.0 if (s, j) in INFLUENCE_PAIRS else 0.0
        assert P.mu_rate[s.index][j.index] == expected
    assert P.max_total_rate() == 3.0
    with pytest.raises(InvalidArgumentError):
        KineticParams(beta=1.5)
    with pytest.raises(InvalidArgumentError):
        # citizens are not influenced by the competing group
        KineticParams(mu_rate=((0, 1, 1), (1, 0, 1), (1, 0, 0)))


def test_moments_examples():
    g = ActivityGrid()
    m = moments(Distribution.uniform(g))
    assert (m.e_u, m.e_nu) == pytest.approx((0.5, 0.5), abs=1e-14)
    m = moments(Distribution.dirac(g, g.I, 0))
    assert (m.e_u, m.e_nu) == (1.0, 0.0)
    f = np.zeros(g.shape)
    f[0, 0] = f[g.I, g.R] = 0.5
    m = moments(Distribution(g, f))
    assert (m.e_u, m.e_nu) == (0.5, 0.5)


def test_kernel_D_examples():
    g = ActivityGrid(5, 5)
    np.testing.assert_allclose(kernel_D(RULER, P, HIGH, g, 0, 2, 0, 0), [0, 0, 0.25, 0.25, 0.25, 0.25])
    row = kernel_D(CITIZENS, P, HIGH, g, 1, 1, 3, 4)
    np.testing.assert_allclose(row, [0, 0.7, 0, 0, 0.3, 0])
    np.testing.assert_array_equal(kernel_D(RULER, P, LOW, g, 0, 0, 0, 0), [1, 0, 0, 0, 0, 0])
    np.testing.assert_allclose(kernel_D(RULER, P, LOW, g, 0, 4, 0, 0), [0.25] * 4 + [0, 0])
    # no imitation when the field is not wealthier
    np.testing.assert_array_equal(kernel_D(CITIZENS, P, HIGH, g, 3, 1, 3, 4), [0, 1, 0, 0, 0, 0])


def test_kernel_B_examples():
    g = ActivityGrid(5, 5)
    row = kernel_B(RULER, COMPETING, P, Moments(0.2, 0.8), g, 3)
    np.testing.assert_allclose(row, [0, 0, 0.9, 0.1, 0, 0], atol=1e-15)
    row = kernel_B(CITIZENS, RULER, P, Moments(0.2, 0.6), g, 2)
    np.testing.assert_allclose(row, [0, 0, 0.9, 0.1, 0, 0], atol=1e-15)
    for h in range(6):
        row = kernel_B(CITIZENS, RULER, P, Moments(0.9, 0.4), g, h)
        np.testing.assert_array_equal(row, np.eye(6)[h])
    np.testing.assert_allclose(kernel_B(RULER, CITIZENS, P, Moments(0, 0.2), g, 4), [0.25] * 4 + [0, 0])
    np.testing.assert_allclose(kernel_B(COMPETING, RULER, P, Moments(0, 0.5), g, 3), [0, 0, 0, 1 / 3, 1 / 3, 1 / 3])


def test_kernel_B_unspecified_pair():
    g = ActivityGrid(3, 3)
    with pytest.raises(InvalidArgumentError):
        kernel_B(CITIZENS, COMPETING, P, HIGH, g, 0)
    with pytest.raises(InvalidArgumentError):
        kernel_B(RULER, RULER, P, HIGH, g, 0)


def test_kernel_index_range():
    g = ActivityGrid(3, 3)
    with pytest.raises(InvalidArgumentError):
        kernel_D(RULER, P, HIGH, g, 0, 4, 0, 0)
    with pytest.raises(InvalidArgumentError):
        kernel_B(RULER, CITIZENS, P, HIGH, g, -1)


def _all_kernel_rows(I, R, params):
    g = ActivityGrid(I, R)
    for means in (HIGH, LOW, Moments(0.5, 0.5)):
        for s in SubsystemId:
            for h, p, k, q in itertools.product(range(I + 1), range(R + 1), range(I + 1), range(R + 1)):
                if s is not CITIZENS and (h, k, q) != (0, 0, 0):
                    continue  # independent of the field particle
                yield kernel_D(s, params, means, g, h, p, k, q)
        for s, j in INFLUENCE_PAIRS:
            for h in range(I + 1):
                yield kernel_B(s, j, params, means, g, h)


@pytest.mark.parametrize("I, R", [(1, 1), (2, 3), (5, 4), (7, 7)])
def test_kernel_rows_stochastic(I, R):
    params = KineticParams(alpha_tilde=0.37, beta=0.61, gamma_tilde=0.83)
    for row in _all_kernel_rows(I, R, params):
        assert row.min() >= 0
        assert abs(row.sum() - 1) <= 1e-12


def test_b_sign_structure():
    g = ActivityGrid(8, 8)
    for means in (HIGH, LOW):
        up_only = [b_matrix(CITIZENS, RULER, P, g, means), b_matrix(COMPETING, RULER, P, g, means)]
        for m in up_only:
            assert np.all(np.tril(m, -1) == 0)
        assert np.all(np.triu(b_matrix(RULER, COMPETING, P, g, means), 1) == 0)


def test_flux_internal_citizens_dirac_is_zero():
    g = ActivityGrid(4, 4)
    for i, r in itertools.product(range(5), range(5)):
        np.testing.assert_array_equal(flux_internal(CITIZENS, P, Distribution.dirac(g, i, r)), 0)


def test_flux_internal_ruler_top_dirac_is_zero():
    g = ActivityGrid(4, 4)
    np.testing.assert_array_equal(flux_internal(RULER, P, Distribution.dirac(g, 4, 4)), 0)


def _state(rng, I, R):
    g = ActivityGrid(I, R)
    return PopulationState(g, random_state(rng, I, R))


def test_flux_marginals_random():
    rng = np.random.default_rng(1)
    for _ in range(100):
        st = _state(rng, int(rng.integers(1, 8)), int(rng.integers(1, 8)))
        for s in SubsystemId:
            J = flux_internal(s, P, st.dist(s))
            assert abs(J.sum()) <= 1e-13
            assert np.abs(J.sum(axis=1)).max() <= 1e-13
            JJ = flux_external(s, P, st)
            assert abs(JJ.sum()) <= 1e-13
            assert np.abs(JJ.sum(axis=0)).max() <= 1e-13


def test_flux_external_examples():
    g = ActivityGrid(4, 4)
    # citizens with E1_nu < 1/2 feel no influence
    ruler = np.zeros(g.shape)
    ruler[2, 1] = 1.0
    st = PopulationState(g, np.stack([ruler, random_state(np.random.default_rng(3), 4, 4)[1], np.full(g.shape, 1 / 25)]))
    np.testing.assert_array_equal(flux_external(CITIZENS, P, st), 0)
    # ruler at u_0 under a strong competing group: the downward step is identity at h = 0
    only_comp = KineticParams(mu_rate=((0, 0, 1), (1, 0, 0), (1, 0, 0)))
    ruler = np.zeros(g.shape)
    ruler[0, 3] = 1.0
    comp = np.zeros(g.shape)
    comp[:, 4] = 0.2
    st = PopulationState(g, np.stack([ruler, np.full(g.shape, 1 / 25), comp]))
    np.testing.assert_array_equal(flux_external(RULER, only_comp, st), 0)


def test_rhs_stationary_configuration():
    g = ActivityGrid(4, 4)
    ruler = np.zeros(g.shape)
    ruler[0, 0] = 1.0  # E1_u = 0: nu moves down, identity at nu_0; E1_nu = 0: no push on others
    citizens = np.zeros(g.shape)
    citizens[2, 0] = 1.0  # Dirac: no imitation; E2_nu = 0: ruler u pushed down, identity at u_0
    competing = np.zeros(g.shape)
    competing[0, 0] = 1.0  # E3_u = 0: nu down, identity at 0; E3_nu < 1/2: no erosion
    st = PopulationState(g, np.stack([ruler, citizens, competing]))
    for d in rhs(st, P):
        np.testing.assert_array_equal(d, 0)


@pytest.mark.parametrize("I, R", [(1, 1), (2, 2), (1, 2), (2, 1)])
def test_rhs_matches_brute_force(I, R):
    rng = np.random.default_rng(I * 10 + R)
    params = KineticParams(alpha_tilde=0.23, beta=0.41, gamma_tilde=0.77, eta=(0.9, 1.3, 0.6),
                           mu_rate=((0, 0.8, 1.1), (0.7, 0, 0), (1.2, 0, 0)))
    g = ActivityGrid(I, R)
    for _ in range(100):
        f = random_state(rng, I, R, sparsity=0.3)
        np.testing.assert_allclose(rhs_array(g, f, params), brute_rhs(f, params), rtol=0, atol=1e-13)


def test_rhs_conserves_mass():
    rng = np.random.default_rng(7)
    for _ in range(50):
        st = _state(rng, 6, 5)
        for d in rhs(st, P):
            assert abs(d.sum()) <= 1e-12
