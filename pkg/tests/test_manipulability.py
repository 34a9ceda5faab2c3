"""Best-case / worst-case manipulation detection, both solver routes."""

import itertools

import pytest

from omvote import (
    UnsupportedRuleError,
    borda,
    bruteforce_feasible,
    case_outcomes,
    classify,
    classify_randomized_tiebreak,
    enumerate_rankings,
    find_bom,
    find_wom,
    kapproval,
    paperfamily,
    plurality,
    possible_outcomes,
    score_vector,
    scoring_winner,
    make_profile,
)

IDENTITY3 = (0, 1, 2)
IDENTITY4 = (0, 1, 2, 3)


class TestCaseOutcomes:
    def test_plurality_full_range(self):
        cases = case_outcomes((0, 1, 2), (0, 1, 2), plurality(), 3, IDENTITY3)
        assert cases.feasible == {0, 1, 2}
        assert cases.best == 0 and cases.worst == 2

    def test_singleton_feasible(self):
        # two voters, top-priority outcome 0 wins every tie: reporting 0 first
        # pins the election regardless of the other ballot
        cases = case_outcomes((2, 1, 0), (0, 1, 2), plurality(), 2, IDENTITY3)
        assert cases.feasible == {0}
        assert cases.best == cases.worst == 0

    def test_judged_by_truth_not_report(self):
        cases = case_outcomes((2, 1, 0), (0, 1, 2), plurality(), 3, IDENTITY3)
        assert cases.best == 2 and cases.worst == 0


class TestFindBom:
    @pytest.mark.parametrize("truth", list(enumerate_rankings(3)))
    def test_strict_scoring_never_improves_best(self, truth):
        # with strictly decreasing weights the truthful best is the top choice
        assert find_bom(truth, borda(), 3, IDENTITY3) is None

    @pytest.mark.parametrize("truth", list(enumerate_rankings(3)))
    def test_plurality_never(self, truth):
        assert find_bom(truth, plurality(), 3, IDENTITY3) is None

    def test_large_kapproval_witness(self):
        # m=15, k=14, n=3, identity priority: only outcomes 0..3 are ever
        # electable; a voter whose top choice is 3 but who ranks 14 last can
        # reach 3 only by misreporting
        truth = (3,) + tuple(o for o in range(15) if o != 3)
        witness = find_bom(truth, kapproval(14), 3, tuple(range(15)))
        assert witness is not None
        improved = case_outcomes(truth, witness.misreport, kapproval(14), 3, tuple(range(15)))
        assert improved.best == 3
        # the witness ballots really elect 3
        profile = make_profile((witness.misreport,) + witness.others)
        assert scoring_winner(score_vector(kapproval(14), 15), profile, tuple(range(15))) == 3


class TestFindWom:
    def test_large_kapproval_reduction_witness(self):
        # the disapproval swap: dropping the dangerous tie-break leader and
        # approving the harmless bottom outcome instead improves the worst case
        m, k = 15, 14
        truth = tuple(range(m))
        tiebreak = (13,) + tuple(range(13)) + (14,)
        witness = find_wom(truth, kapproval(k), 3, tiebreak, mode="reduction")
        assert witness == tuple(range(13)) + (14, 13)

    def test_paperfamily_bruteforce_witness_is_lex_first(self):
        # truth ranks outcome 2 last; swapping outcomes 1 and 3 vetoes 2
        witness = find_wom((0, 1, 3, 2), paperfamily(), 3, IDENTITY4, mode="bruteforce")
        assert witness == (0, 3, 1, 2)

    @pytest.mark.parametrize("truth", list(enumerate_rankings(3)))
    def test_borda_never(self, truth):
        assert find_wom(truth, borda(), 3, IDENTITY3, mode="bruteforce") is None

    def test_reduction_refuses_non_kapproval(self):
        with pytest.raises(UnsupportedRuleError):
            find_wom((0, 1, 2), borda(), 3, IDENTITY3, mode="reduction")

    def test_top_choice_worst_case_cannot_improve(self):
        # feasible set {0} with truth (0,1,2): worst case is the top choice
        assert find_wom((0, 1, 2), plurality(), 2, IDENTITY3, mode="bruteforce") is None


class TestClassify:
    @pytest.mark.parametrize("truth", list(enumerate_rankings(3)))
    @pytest.mark.parametrize("mode", ["reduction", "bruteforce"])
    def test_plurality_nom(self, truth, mode):
        report = classify(truth, plurality(), 3, IDENTITY3, mode=mode)
        assert report.classification == "NOM"

    def test_paperfamily_wom_only(self):
        report = classify((0, 1, 3, 2), paperfamily(), 3, IDENTITY4, mode="bruteforce")
        assert report.classification == "WOM-only"
        assert report.truthful_cases.worst == 2
        assert report.wom_witness == (0, 3, 1, 2)
        assert report.bom_witness is None

    def test_bom_implies_wom_on_sampled_truths(self):
        # m=5, k=4, n=3 is the one manipulable cell with m <= 5
        rule = kapproval(4)
        for truth in enumerate_rankings(5):
            report = classify(truth, rule, 3, (0, 1, 2, 3, 4), mode="reduction")
            assert report.classification != "BOM-only"


class TestReductionAgainstBruteforce:
    """The polynomial route must answer exactly like exhaustive search."""

    @pytest.mark.parametrize("m", [3, 4])
    def test_all_tiebreaks_small(self, m):
        self._sweep(m)

    @pytest.mark.slow
    def test_all_tiebreaks_m5(self):
        self._sweep(5)

    @staticmethod
    def _sweep(m):
        n = 3
        rankings = list(enumerate_rankings(m))
        for k in range(1, m):
            rule = kapproval(k)
            for tiebreak in rankings:
                for truth in rankings:
                    red = find_wom(truth, rule, n, tiebreak, mode="reduction")
                    bru = find_wom(truth, rule, n, tiebreak, mode="bruteforce")
                    assert (red is None) == (bru is None), (m, k, tiebreak, truth)
                    bom = find_bom(truth, rule, n, tiebreak)
                    pos = {o: i for i, o in enumerate(truth)}
                    truthful_best = min(
                        bruteforce_feasible(rule, n, truth, tiebreak), key=pos.get
                    )
                    improvable = any(
                        pos[min(bruteforce_feasible(rule, n, r, tiebreak), key=pos.get)]
                        < pos[truthful_best]
                        for r in rankings
                    )
                    assert (bom is not None) == improvable, (m, k, tiebreak, truth)


class TestBruteforceFeasible:
    def test_matches_naive_product(self):
        # quotienting voters down to approval multisets must not change the sets
        rankings = list(enumerate_rankings(3))
        for k in (1, 2):
            rule = kapproval(k)
            for report in rankings:
                naive = set()
                for others in itertools.product(rankings, repeat=2):
                    profile = make_profile((report,) + others)
                    naive.add(scoring_winner(score_vector(rule, 3), profile, IDENTITY3))
                assert bruteforce_feasible(rule, 3, report, IDENTITY3) == naive

    def test_matches_possible_outcomes(self):
        for rule in (plurality(), kapproval(2), borda()):
            for report in enumerate_rankings(3):
                assert bruteforce_feasible(rule, 3, report, IDENTITY3) == possible_outcomes(
                    rule, 3, report, IDENTITY3
                )


class TestRandomizedTiebreak:
    @pytest.mark.parametrize("weights", [(2, 1, 0), (1, 1, 0)])
    @pytest.mark.parametrize("truth", list(enumerate_rankings(3)))
    def test_nom_for_borda_and_two_approval(self, weights, truth):
        report = classify_randomized_tiebreak(truth, weights, 3)
        assert report.classification == "NOM"

    def test_feasible_uses_cowinner_union(self):
        report = classify_randomized_tiebreak((0, 1, 2), (1, 1, 0), 3)
        assert report.truthful_cases.feasible == {0, 1, 2}
