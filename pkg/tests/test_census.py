import json
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmfields.census import (
    CensusCounts,
    CensusError,
    QuarticDensities,
    bayes_posterior,
    default_grid,
    empirical_ratio,
    round5,
    summary,
    summary_json,
    to_csv,
)
from cmfields.classifier import Category
from cmfields.lmfdb import LmfdbRecord, load_fixtures

prob = st.fractions(min_value=0, max_value=1, max_denominator=10**6)


def quartic(abs_disc, k):
    return LmfdbRecord(f"4.0.{abs_disc}.{k}", (1, 0, 0, 0, 1), 4, 2, "4T3", False, abs_disc)


class TestBayes:
    def test_published_values(self):
        res = bayes_posterior(QuarticDensities.published())
        assert res.rounded == (Decimal("0.66948"), Decimal("0.33052"))
        assert res.p_S4_given_TI == Fraction(2486670000, 3714332917)

    def test_float_inputs_read_exactly(self):
        d = QuarticDensities(0.17111, 0.82889, 0.30, 0.71747)
        assert d == QuarticDensities.published()

    def test_uninformative_likelihood(self):
        d = QuarticDensities("0.4", "0.6", "0.25", "0.25")
        assert bayes_posterior(d).p_S4_given_TI == Fraction(3, 5)

    def test_symmetric(self):
        assert bayes_posterior(QuarticDensities(*["0.5"] * 4)).p_S4_given_TI == Fraction(1, 2)

    def test_zero_denominator(self):
        with pytest.raises(CensusError):
            bayes_posterior(QuarticDensities(0, 1, 0, "0.5"))

    @pytest.mark.parametrize("args", [(2, -1, 0, 0), ("0.5", "0.6", "0.1", "0.1"), ("0.5", "0.5", "1.5", 0)])
    def test_invalid(self, args):
        with pytest.raises(CensusError):
            QuarticDensities(*args)

    def test_round_half_even(self):
        assert round5(Fraction(5, 10**6)) == Decimal("0.00000")
        assert round5(Fraction(15, 10**6)) == Decimal("0.00002")

    @given(prob, prob, prob)
    def test_components_sum_to_one(self, p, a, b):
        if a * (1 - p) + b * p == 0:
            return
        r = bayes_posterior(QuarticDensities(1 - p, p, b, a))
        assert r.p_S4_given_TI + r.p_CM == 1
        assert 0 <= r.p_S4_given_TI <= 1

    @given(prob, prob, prob, st.fractions(min_value=Fraction(1, 100), max_value=1))
    def test_likelihood_scaling(self, p, a, b, s):
        if a * (1 - p) + b * p == 0:
            return
        base = bayes_posterior(QuarticDensities(1 - p, p, b, a))
        scaled = bayes_posterior(QuarticDensities(1 - p, p, b * s, a * s))
        assert base.p_S4_given_TI == scaled.p_S4_given_TI


class TestEmpirical:
    def test_all_cm(self):
        recs = [quartic(d, 1) for d in (117, 125, 144)]
        counts = empirical_ratio(recs, [100, 130, 200], verdicts=lambda r: Category.CM_FIELD)
        assert [c.n_TI for c in counts] == [0, 2, 3]
        assert counts[0].ratio is None and not counts[0].defined
        assert all(c.ratio == 1 for c in counts[1:])

    def test_empty(self):
        (c,) = empirical_ratio([], [1000])
        assert c.ratio is None and c.to_dict()["ratio"] is None

    def test_mapping_verdicts(self):
        recs = [quartic(117, 1), quartic(229, 1)]
        v = {"4.0.117.1": Category.CM_TYPE, "4.0.229.1": Category.TR_TYPE}
        (c,) = empirical_ratio(recs, [300], verdicts=v)
        assert (c.n_TI, c.n_CM, c.ratio) == (2, 1, Fraction(1, 2))

    def test_rejects_mixed_degrees(self):
        six = LmfdbRecord("6.0.16807.1", (1,) * 7, 6, 3, "6T1", True, 16807)
        with pytest.raises(CensusError):
            empirical_ratio([quartic(117, 1), six], [10**6], verdicts=lambda r: Category.TR_TYPE)

    def test_rejects_not_totally_imaginary(self):
        real = LmfdbRecord("4.4.725.1", (1, 3, 0, -3, 1), 4, 0, "4T3", False, 725)
        with pytest.raises(CensusError):
            empirical_ratio([real], [1000], verdicts=lambda r: Category.TR_TYPE)

    def test_counts_invariant(self):
        with pytest.raises(CensusError):
            CensusCounts(10, 1, 2)

    @given(st.lists(st.tuples(st.integers(1, 10**5), st.booleans()), max_size=40), st.lists(st.integers(1, 10**5), min_size=1, max_size=8))
    def test_monotone_and_bounded(self, data, grid):
        recs = [quartic(d, i) for i, (d, _) in enumerate(data)]
        flags = {r.label: (Category.CM_TYPE if cm else Category.TR_TYPE) for r, (_, cm) in zip(recs, data)}
        counts = empirical_ratio(recs, grid, verdicts=flags)
        for a, b in zip(counts, counts[1:]):
            assert a.n_TI <= b.n_TI and a.n_CM <= b.n_CM
        assert all(0 <= c.ratio <= 1 for c in counts if c.defined)

    def test_grid(self):
        recs = [quartic(d, 1) for d in (100, 1000)]
        assert default_grid(recs, 4) == [250, 500, 750, 1000]
        assert default_grid([], 4) == []


class TestOutput:
    def test_csv(self):
        text = to_csv([CensusCounts(10, 0, 0), CensusCounts(20, 4, 1)])
        assert text == "X,n_TI,n_CM,ratio\n10,0,0,\n20,4,1,0.250000\n"

    def test_summary(self):
        counts = [CensusCounts(10, 0, 0), CensusCounts(20, 4, 1)]
        s = summary(counts, 4)
        assert s["non_asymptotic"] and s["largest_X"] == 20 and s["ratio_at_largest_X"] == 0.25
        assert s["asymptotic_limit"] == pytest.approx(0.33052, abs=5e-6)
        assert "asymptotic_limit" not in summary(counts, 6)
        assert json.loads(summary_json(counts, 4)) == json.loads(json.dumps(s))


def test_bundled_quartic_census_classifies():
    recs = load_fixtures("quartic_census")
    truth = {r.label: (Category.CM_TYPE if r.is_cm_type else Category.TR_TYPE) for r in recs}
    grid = default_grid(recs, 5)
    counts = empirical_ratio(recs, grid, verdicts=truth)
    assert counts[-1].n_TI == len(recs)
    assert all(0 <= c.ratio <= 1 for c in counts if c.defined)


def test_quartic_census_agrees_with_fixture_truth():
    from cmfields.lmfdb import cross_validate

    recs = load_fixtures("quartic_census")[:120]
    rep = cross_validate(recs)
    assert rep.rate == 1.0, [c.to_dict() for c in rep.mismatches]
