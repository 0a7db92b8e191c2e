import math
import random

import pytest

import oracle
from conftest import assert_close, random_number
from ivqrof import (
    AuditTrail,
    CISParams,
    DecisionMatrix,
    DistanceMode,
    IVqROFN,
    Polarity,
    RungContext,
    ScoreParams,
    attribute_index,
    column_mean,
    column_stddev,
    correlation,
    interval_weights,
    interval_weights_standardized,
    nis,
    pis,
    realize_weights,
    score,
    standardize,
)
from ivqrof.core import ShapeError

HALF = ScoreParams()


def benefit_matrix(rows):
    return DecisionMatrix.from_rows(rows)


def random_matrix(rng, m, n, polarity=None):
    rows = [[random_number(rng).astuple() for _ in range(n)] for _ in range(m)]
    return DecisionMatrix.from_rows(rows, polarity)


class TestStandardize:
    def test_benefit_cell_matches_direct_recomputation(self, ctx):
        rng = random.Random(501)
        a = random_matrix(rng, 4, 3)
        x = standardize(a, ctx)
        for j in range(3):
            col = a.column(j)
            scores = [score(c, HALF, ctx) for c in col]
            c_max = col[max(range(4), key=lambda i: scores[i])]
            c_min = col[min(range(4), key=lambda i: scores[i])]
            spread = oracle.sub(c_max.astuple(), c_min.astuple(), 3)
            for i in range(4):
                want = oracle.div(
                    oracle.sub(col[i].astuple(), c_min.astuple(), 3), spread, 3
                )
                assert_close(x.cells[i][j], want, tol=1e-10)

    def test_cost_column_flips_direction(self, ctx):
        rng = random.Random(502)
        a = random_matrix(rng, 4, 1, polarity=["cost"])
        x = standardize(a, ctx)
        col = a.column(0)
        scores = [score(c, HALF, ctx) for c in col]
        c_max = col[max(range(4), key=lambda i: scores[i])]
        c_min = col[min(range(4), key=lambda i: scores[i])]
        spread = oracle.sub(c_max.astuple(), c_min.astuple(), 3)
        for i in range(4):
            want = oracle.div(
                oracle.sub(c_max.astuple(), col[i].astuple(), 3), spread, 3
            )
            assert_close(x.cells[i][0], want, tol=1e-10)

    def test_degenerate_column_passes_through(self, ctx):
        cell = (0.4, 0.5, 0.2, 0.3)
        a = benefit_matrix([[cell], [cell], [cell]])
        audit = AuditTrail()
        x = standardize(a, ctx, audit=audit)
        assert x.cells == a.cells
        assert audit.count("degenerate-column") == 1

    def test_single_row_rejected(self, ctx):
        a = benefit_matrix([[(0.4, 0.5, 0.2, 0.3)]])
        with pytest.raises(ShapeError):
            standardize(a, ctx)

    def test_output_polarity_is_benefit(self, ctx):
        rng = random.Random(503)
        a = random_matrix(rng, 3, 2, polarity=["cost", "benefit"])
        x = standardize(a, ctx)
        assert all(p is Polarity.BENEFIT for p in x.polarity)


class TestColumnMean:
    def test_single_row_returns_the_entry(self, ctx):
        a = benefit_matrix([[(0.4, 0.5, 0.2, 0.3)]])
        assert_close(column_mean(a, 0, ctx), (0.4, 0.5, 0.2, 0.3), tol=1e-12)

    def test_matches_fold_oracle(self, ctx):
        rng = random.Random(504)
        a = random_matrix(rng, 5, 2)
        got = column_mean(a, 1, ctx)
        want = oracle.ywa([c.astuple() for c in a.column(1)], [0.2] * 5, 3, 2)
        assert_close(got, want, tol=1e-10)


class TestCorrelation:
    def test_symmetric_exactly(self, ctx):
        rng = random.Random(505)
        a = standardize(random_matrix(rng, 4, 3), ctx)
        for j in range(3):
            for k in range(3):
                assert correlation(a, j, k, ctx) == correlation(a, k, j, ctx)

    def test_membership_is_degenerate(self, ctx):
        rng = random.Random(506)
        a = standardize(random_matrix(rng, 4, 3), ctx)
        rho = correlation(a, 0, 2, ctx)
        assert rho.mu_lo == rho.mu_hi

    def test_matches_high_precision_replica(self, ctx):
        rng = random.Random(507)
        a = standardize(random_matrix(rng, 3, 2), ctx)
        for j, k in ((0, 0), (0, 1), (1, 1)):
            col_j = [c.astuple() for c in a.column(j)]
            col_k = [c.astuple() for c in a.column(k)]
            mean_j = oracle.column_mean(col_j, 3, 2)
            mean_k = oracle.column_mean(col_k, 3, 2)
            codev = oracle.codeviation(col_j, col_k, mean_j, mean_k, 3)
            want = oracle.pair_correlation(codev, 3, 3)
            assert_close(correlation(a, j, k, ctx), want, tol=1e-9)


class TestColumnStddev:
    def test_constant_column_stays_in_range(self, ctx):
        cell = (0.5, 0.6, 0.2, 0.3)
        # constant column inside a non-degenerate matrix
        a = benefit_matrix(
            [[cell, (0.2, 0.3, 0.4, 0.5)], [cell, (0.6, 0.7, 0.1, 0.2)]]
        )
        sigma = column_stddev(standardize(a, ctx), 0, ctx)
        for c in sigma.astuple():
            assert 0.0 <= c <= 1.0

    def test_matches_high_precision_replica(self, ctx):
        rng = random.Random(508)
        a = standardize(random_matrix(rng, 4, 2), ctx)
        col = [c.astuple() for c in a.column(0)]
        mean = oracle.column_mean(col, 3, 2)
        codev = oracle.codeviation(col, col, mean, mean, 3)
        want = oracle.dispersion(codev, 4, 3)
        assert_close(column_stddev(a, 0, ctx), want, tol=1e-9)

    def test_membership_is_upper_first(self, ctx):
        rng = random.Random(509)
        a = standardize(random_matrix(rng, 4, 2), ctx)
        sigma = column_stddev(a, 0, ctx)
        assert sigma.mu_lo >= sigma.mu_hi  # reported upper bound first


class TestAttributeIndex:
    def test_perfect_correlation_collapses_membership(self, ctx):
        sigma = IVqROFN(0.5, 0.6, 0.2, 0.3)
        perfect = IVqROFN(1.0, 1.0, 0.0, 0.0)
        n = attribute_index(sigma, [perfect] * 3, ctx)
        assert n.mu_lo == 0.0 and n.mu_hi == 0.0

    def test_single_attribute_formula(self, ctx):
        sigma = IVqROFN(0.5, 0.6, 0.2, 0.3)
        rho = IVqROFN(0.7, 0.7, 0.05, 0.1)
        want = oracle.attribute_index(sigma.astuple(), [rho.astuple()], 3)
        assert_close(attribute_index(sigma, [rho], ctx), want, tol=1e-12)

    def test_empty_rhos_rejected(self, ctx):
        with pytest.raises(ShapeError):
            attribute_index(IVqROFN(0.5, 0.6, 0.2, 0.3), [], ctx)


class TestIntervalWeights:
    def test_duplicate_columns_receive_equal_scores(self, ctx):
        rng = random.Random(510)
        base = [[random_number(rng).astuple() for _ in range(2)] for _ in range(4)]
        rows = [row + [row[0]] for row in base]  # third column copies the first
        w = interval_weights(benefit_matrix(rows), ctx)
        s0 = score(w[0], HALF, ctx)
        s2 = score(w[2], HALF, ctx)
        assert abs(s0 - s2) < 1e-12

    def test_single_attribute(self, ctx):
        rng = random.Random(511)
        a = random_matrix(rng, 3, 1)
        w = interval_weights(a, ctx)
        assert len(w) == 1
        for c in w[0].astuple():
            assert 0.0 <= c <= 1.0

    def test_column_permutation_equivariance(self, ctx):
        rng = random.Random(512)
        a = random_matrix(rng, 4, 3)
        w = interval_weights(a, ctx)
        perm = [2, 0, 1]
        permuted = DecisionMatrix(
            tuple(tuple(row[j] for j in perm) for row in a.cells),
            tuple(a.polarity[j] for j in perm),
        )
        w_p = interval_weights(permuted, ctx)
        # the correlation fold runs in column order, so equivariance holds
        # to roundoff rather than bit-for-bit
        for new_j, old_j in enumerate(perm):
            assert_close(w_p[new_j], w[old_j].astuple(), tol=1e-12)

    def test_unordered_dispersion_is_flagged(self, ctx):
        rng = random.Random(513)
        audit = AuditTrail()
        interval_weights(random_matrix(rng, 4, 2), ctx, audit=audit)
        assert audit.count("unordered-interval") >= 1


class TestRealizeWeights:
    def test_identical_weights_become_uniform(self, ctx):
        w = [IVqROFN(0.3, 0.4, 0.05, 0.1)] * 4
        for mode in DistanceMode:
            out = realize_weights(w, mode, ctx)
            for v in out:
                assert abs(v - 0.25) < 1e-12

    def test_sum_to_one_and_nonnegative(self, ctx):
        rng = random.Random(514)
        w = [random_number(rng) for _ in range(5)]
        for mode in DistanceMode:
            out = realize_weights(w, mode, ctx)
            assert abs(math.fsum(out) - 1.0) < 1e-9
            assert all(v >= 0.0 for v in out)

    def test_nis_mode_normalizes_nis_distances(self, ctx):
        rng = random.Random(515)
        w = [random_number(rng) for _ in range(4)]
        raw = [nis(x, ctx) for x in w]
        want = [r / math.fsum(raw) for r in raw]
        got = realize_weights(w, DistanceMode.NIS, ctx)
        for g, e in zip(got, want):
            assert abs(g - e) < 1e-12

    def test_cis_theta_zero_normalizes_nis_complements(self, ctx):
        # the theta = 0 compromise equals the negative-ideal distance, so
        # its realization normalizes 1 - nis (not nis itself)
        rng = random.Random(516)
        w = [random_number(rng) for _ in range(4)]
        raw = [1.0 - nis(x, ctx) for x in w]
        want = [r / math.fsum(raw) for r in raw]
        got = realize_weights(w, DistanceMode.CIS, ctx, cis_params=CISParams(theta=0.0))
        for g, e in zip(got, want):
            assert abs(g - e) < 1e-12

    def test_mode_accepts_strings(self, ctx):
        w = [IVqROFN(0.3, 0.4, 0.05, 0.1), IVqROFN(0.2, 0.3, 0.1, 0.2)]
        assert realize_weights(w, "nis", ctx) == realize_weights(
            w, DistanceMode.NIS, ctx
        )

    def test_pis_mode_equals_nis_mode_on_valid_numbers(self, ctx):
        # pis + nis = 1 for well-formed numbers, so normalizing (1 - pis)
        # and normalizing nis coincide
        rng = random.Random(517)
        w = [random_number(rng) for _ in range(4)]
        a = realize_weights(w, DistanceMode.NIS, ctx)
        b = realize_weights(w, DistanceMode.PIS, ctx)
        for x, y in zip(a, b):
            assert abs(x - y) < 1e-12
