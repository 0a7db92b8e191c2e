import itertools
import random

import pytest

import oracle
from conftest import assert_close, random_number
from ivqrof import (
    DecisionMatrix,
    FuzzyDomainError,
    IVqROFN,
    RungContext,
    ScoreParams,
    WaspasParams,
    blend,
    rank,
    score,
    wpm_importance,
    wsm_importance,
)

HALF = ScoreParams()


def matrix_of(rng, m, n):
    rows = [[random_number(rng).astuple() for _ in range(n)] for _ in range(m)]
    return DecisionMatrix.from_rows(rows)


def weights_of(rng, n):
    raw = [rng.random() + 1e-3 for _ in range(n)]
    s = sum(raw)
    w = [x / s for x in raw]
    w[-1] = 1.0 - sum(w[:-1])
    return w


class TestImportance:
    def test_constant_row_is_fixed_point(self, ctx):
        cell = (0.5, 0.6, 0.2, 0.3)
        x = DecisionMatrix.from_rows([[cell] * 4, [cell] * 4])
        w = [0.1, 0.2, 0.3, 0.4]
        for q1 in wsm_importance(x, w, ctx):
            assert_close(q1, cell, tol=1e-12)
        for q2 in wpm_importance(x, w, ctx):
            assert_close(q2, cell, tol=1e-12)

    @pytest.mark.parametrize("seed", range(10))
    def test_rows_match_fold_oracles(self, ctx, seed):
        rng = random.Random(7700 + seed)
        x = matrix_of(rng, 3, 4)
        w = weights_of(rng, 4)
        got_sum = wsm_importance(x, w, ctx)
        got_prod = wpm_importance(x, w, ctx)
        for i in range(3):
            row = [c.astuple() for c in x.cells[i]]
            assert_close(got_sum[i], oracle.ywa(row, w, 3, 2), tol=1e-10)
            assert_close(got_prod[i], oracle.ywg(row, w, 3, 2), tol=1e-10)


class TestBlend:
    def test_endpoints_return_operands_exactly(self, ctx):
        q1 = IVqROFN(0.5, 0.6, 0.2, 0.3)
        q2 = IVqROFN(0.4, 0.5, 0.3, 0.4)
        assert blend(q1, q2, WaspasParams(lam=1.0), ctx) is q1
        assert blend(q1, q2, WaspasParams(lam=0.0), ctx) is q2

    def test_idempotent_on_equal_operands(self, ctx):
        q1 = IVqROFN(0.5, 0.6, 0.2, 0.3)
        assert_close(blend(q1, q1, WaspasParams(lam=0.3), ctx), q1.astuple(), tol=1e-12)

    def test_midpoint_matches_direct_recomputation(self, ctx):
        rng = random.Random(7800)
        q1, q2 = random_number(rng), random_number(rng)
        got = blend(q1, q2, WaspasParams(lam=0.5), ctx)
        want = oracle.add(
            oracle.scale(0.5, q1.astuple(), 3), oracle.scale(0.5, q2.astuple(), 3), 3
        )
        assert_close(got, want, tol=1e-12)

    def test_lambda_validated(self):
        with pytest.raises(FuzzyDomainError):
            WaspasParams(lam=1.2)

    @pytest.mark.parametrize("lam", (0.0, 0.25, 0.5, 0.75, 1.0))
    def test_blend_score_between_endpoint_scores(self, ctx, lam):
        rng = random.Random(7900)
        for _ in range(20):
            q1, q2 = random_number(rng), random_number(rng)
            s = score(blend(q1, q2, WaspasParams(lam=lam), ctx), HALF, ctx)
            lo = min(score(q1, HALF, ctx), score(q2, HALF, ctx))
            hi = max(score(q1, HALF, ctx), score(q2, HALF, ctx))
            assert lo - 1e-9 <= s <= hi + 1e-9


class TestRank:
    def test_all_equal_gives_identity_order(self, ctx):
        a = IVqROFN(0.5, 0.6, 0.2, 0.3)
        out = rank([a, a, a], HALF, ctx)
        assert out.order == (0, 1, 2)

    def test_matches_pairwise_comparison_sort(self, ctx):
        rng = random.Random(8000)
        items = [random_number(rng) for _ in range(3)]
        out = rank(items, HALF, ctx)
        # brute force: the best alternative beats-or-ties every other
        best = out.order[0]
        for other in range(3):
            assert score(items[best], HALF, ctx) >= score(items[other], HALF, ctx)
        # full order agrees with selection sort over pairwise comparisons
        remaining = list(range(3))
        expected = []
        while remaining:
            top = remaining[0]
            for cand in remaining[1:]:
                if score(items[cand], HALF, ctx) > score(items[top], HALF, ctx):
                    top = cand
            expected.append(top)
            remaining.remove(top)
        assert list(out.order) == expected

    def test_permuting_alternatives_permutes_ranking(self, ctx):
        rng = random.Random(8100)
        items = [random_number(rng) for _ in range(5)]
        base = rank(items, HALF, ctx)
        perm = [3, 1, 4, 0, 2]
        permuted = [items[i] for i in perm]
        out = rank(permuted, HALF, ctx)
        # position of item (old index) in the new ranking matches
        relabel = {old: new for new, old in enumerate(perm)}
        assert [relabel[i] for i in base.order] == list(out.order)

    def test_deterministic_and_total(self, ctx):
        rng = random.Random(8200)
        items = [random_number(rng) for _ in range(6)]
        out1 = rank(items, HALF, ctx)
        out2 = rank(items, HALF, ctx)
        assert out1 == out2
        assert sorted(out1.order) == list(range(6))
