"""Total-nonnegativity certificates, sign counting, and matrix generators."""

from itertools import combinations

import numpy as np
import pytest

from wedgespec import (
    ResourceLimitError,
    ValidationError,
    ZeroVectorError,
    eigenvalues,
    is_totally_nonnegative,
    is_two_totally_nonnegative,
    random_oscillatory,
    random_tn,
    sign_changes,
)
from tests.test_compound import det_laplace


def all_minors(m, k):
    """Brute-force oracle: every minor of orders 1..k via Laplace expansion."""
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    out = []
    for j in range(1, k + 1):
        for rows in combinations(range(n), j):
            for cols in combinations(range(n), j):
                out.append(det_laplace(m[np.ix_(rows, cols)]))
    return out


THREE_CYCLE = np.array([[0.0, 0.0, 1.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]])


class TestIsTotallyNonnegative:
    def test_all_ones(self):
        cert = is_totally_nonnegative([[1.0, 1.0], [1.0, 1.0]], 2)
        assert cert.verdict and cert.witness is None
        assert cert.minors_evaluated == 5  # four entries and one determinant
        assert cert.mode == "exhaustive"

    def test_antidiagonal_witness(self):
        cert = is_totally_nonnegative([[0.0, 1.0], [1.0, 0.0]], 2)
        assert not cert.verdict
        assert cert.witness.rows == (0, 1)
        assert cert.witness.cols == (0, 1)
        assert cert.witness.value == -1.0

    def test_vandermonde_totally_positive(self):
        v = [[1.0, 1.0, 1.0], [1.0, 2.0, 4.0], [1.0, 3.0, 9.0]]
        assert min(all_minors(v, 3)) > 0  # oracle: 9 + 9 + 1 positive minors
        cert = is_totally_nonnegative(v, 3)
        assert cert.verdict
        assert cert.minors_evaluated == 19

    def test_order_validation(self):
        with pytest.raises(ValidationError):
            is_totally_nonnegative(np.eye(3), 0)
        with pytest.raises(ValidationError):
            is_totally_nonnegative(np.eye(3), 4)

    def test_budget_exceeded(self):
        with pytest.raises(ResourceLimitError):
            is_totally_nonnegative(np.eye(30), 15, budget=1000)

    def test_sampled_mode(self):
        cert = is_totally_nonnegative(np.eye(30), 15, budget=1000, sample=True,
                                      samples=50, seed=3)
        assert cert.mode == "sampled"
        assert cert.verdict
        assert cert.minors_evaluated == 50

    def test_sampled_mode_finds_violations(self):
        cert = is_totally_nonnegative(THREE_CYCLE, 2, sample=True, samples=300, seed=0)
        assert not cert.verdict
        assert cert.witness.value < 0

    def test_scale_invariance_of_verdict(self):
        m = random_tn(4, 8, factors=12)
        assert is_totally_nonnegative(m, 4).verdict
        assert is_totally_nonnegative(1e6 * m, 4).verdict
        assert is_totally_nonnegative(1e-6 * m, 4).verdict


class TestTwoTotallyNonnegative:
    def test_diagonal(self):
        c1, c2 = is_two_totally_nonnegative(np.diag([1.0, 2.0, 3.0]))
        assert c1.verdict and c2.verdict
        assert (c1.order_checked, c2.order_checked) == (1, 2)

    def test_tridiagonal(self):
        t = [[2.0, 1.0, 0.0], [1.0, 2.0, 1.0], [0.0, 1.0, 2.0]]
        assert min(all_minors(t, 2)) >= 0  # oracle enumeration
        c1, c2 = is_two_totally_nonnegative(t)
        assert c1.verdict and c2.verdict

    def test_three_cycle(self):
        # oracle: some 2-minors are -1
        assert min(all_minors(THREE_CYCLE, 2)) == -1.0
        c1, c2 = is_two_totally_nonnegative(THREE_CYCLE)
        assert c1.verdict and not c2.verdict
        assert c2.witness.value == -1.0

    def test_negative_entry_witnessed_at_order_one(self):
        c1, c2 = is_two_totally_nonnegative([[1.0, -2.0], [0.0, 1.0]])
        assert not c1.verdict
        assert c1.witness.rows == (0,) and c1.witness.cols == (1,)

    def test_sampled_above_budget(self):
        rng = np.random.default_rng(0)
        m = rng.uniform(0.5, 1.0, (80, 80))
        c1, c2 = is_two_totally_nonnegative(m, budget=10_000, samples=200, seed=1)
        assert c1.mode == "exhaustive"
        assert c2.mode == "sampled"


class TestSignChanges:
    def test_alternating(self):
        s = sign_changes([1.0, -1.0, 1.0])
        assert s.strict_count == 2
        assert s.zero_count == 0

    def test_monotone(self):
        assert sign_changes([1.0, 2.0, 3.0]).strict_count == 0

    def test_zero_discarded(self):
        s = sign_changes([1.0, 0.0, -1.0])
        assert s.strict_count == 1
        assert s.zero_count == 1

    def test_negation_invariant(self):
        v = np.array([0.3, -0.2, 0.0, 0.7, -0.1])
        assert sign_changes(v).strict_count == sign_changes(-v).strict_count

    def test_positive_scaling_invariant(self):
        v = np.array([0.3, -0.2, 0.0, 0.7, -0.1])
        assert sign_changes(v).strict_count == sign_changes(1e8 * v).strict_count

    def test_all_zero_signals(self):
        with pytest.raises(ZeroVectorError):
            sign_changes([0.0, 0.0, 0.0])

    def test_empty_rejected(self):
        with pytest.raises(ValidationError):
            sign_changes([])


class TestRandomTN:
    def test_small_case_nonnegative_det(self):
        m = random_tn(2, seed=5)
        assert m.min() >= 0.0
        assert np.linalg.det(m) >= 0.0

    def test_single_factor_is_positive_diagonal(self):
        m = random_tn(3, seed=9, factors=1)
        assert np.count_nonzero(m - np.diag(np.diag(m))) == 0
        assert np.diag(m).min() > 0.0

    def test_factors_zero_disallowed(self):
        with pytest.raises(ValidationError):
            random_tn(3, seed=0, factors=0)

    def test_checker_oracle_n5(self):
        m = random_tn(5, seed=42, factors=30)
        assert is_totally_nonnegative(m, 5, tol=1e-10).verdict

    def test_deterministic_per_seed(self):
        np.testing.assert_array_equal(random_tn(4, 7), random_tn(4, 7))
        assert not np.array_equal(random_tn(4, 7), random_tn(4, 8))

    @pytest.mark.parametrize("seed", range(8))
    def test_exhaustive_low_orders_and_sampled_high(self, seed):
        n = 3 + seed % 4
        m = random_tn(n, seed=1000 + seed, factors=3 * n)
        assert is_totally_nonnegative(m, min(n, 4), tol=1e-10).verdict
        if n > 4:
            cert = is_totally_nonnegative(m, n, tol=1e-10, sample=True,
                                          samples=200, seed=seed)
            assert cert.verdict


class TestRandomOscillatory:
    def test_two_by_two(self):
        m = random_oscillatory(2, seed=7)
        assert m.min() > 0.0
        assert np.linalg.det(m) > 0.0

    @pytest.mark.parametrize("seed", range(6))
    def test_spectrum_real_positive_simple(self, seed):
        n = 2 + seed % 5
        m = random_oscillatory(n, seed=seed)
        w = eigenvalues(m)
        assert np.abs(w.imag).max() <= 1e-10 * np.abs(w[0])
        real = np.sort(w.real)[::-1]
        assert real.min() > 0.0
        gaps = (real[:-1] - real[1:]) / real[0]
        assert gaps.min() > 1e-10

    def test_second_eigenvector_one_sign_change(self):
        from wedgespec import eigenpairs

        m = random_oscillatory(5, seed=3)
        _, v = eigenpairs(m)
        e2 = v[:, 1].real
        assert sign_changes(e2).strict_count == 1

    @pytest.mark.parametrize("seed", range(6))
    def test_sign_change_ladder(self, seed):
        # eigenvector j has j-1 strict sign changes; positions above the
        # second are asserted only when no entry fell below the zero
        # threshold, where the strict count is unambiguous
        from wedgespec import eigenpairs

        n = 4 + seed % 3
        m = random_oscillatory(n, seed=8000 + seed)
        _, v = eigenpairs(m)
        for j in range(n):
            s = sign_changes(v[:, j].real)
            if j < 2 or s.zero_count == 0:
                assert s.strict_count == j

    def test_deterministic_per_seed(self):
        np.testing.assert_array_equal(random_oscillatory(4, 11), random_oscillatory(4, 11))

    def test_dimension_validation(self):
        with pytest.raises(ValidationError):
            random_oscillatory(1, seed=0)
