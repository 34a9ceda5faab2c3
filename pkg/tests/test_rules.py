"""Winner determination under every supported rule."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from omvote import (
    DimensionMismatchError,
    InvalidParametersError,
    borda,
    condorcet_winner,
    copeland,
    copeland_winner,
    dowdall,
    enumerate_profiles,
    enumerate_rankings,
    kapproval,
    kapproval_k,
    make_profile,
    make_score_vector,
    paperfamily,
    parse_rule,
    plurality,
    plurality_runoff_winner,
    rule_label,
    runoff,
    score_vector,
    scoring,
    scoring_cowinners,
    scoring_scores,
    scoring_winner,
    stv,
    stv_winner,
    vetofamily,
    winner,
)

F = Fraction

# three ballots used throughout: the strict-rule counterexample election
PROOF_PROFILE = make_profile([(0, 1, 3, 2), (2, 0, 3, 1), (2, 1, 3, 0)])


class TestScoreVectors:
    def test_borda(self):
        assert score_vector(borda(), 4) == (3, 2, 1, 0)

    def test_kapproval(self):
        assert score_vector(kapproval(2), 4) == (1, 1, 0, 0)

    def test_dowdall(self):
        assert score_vector(dowdall(), 3) == (1, F(1, 2), F(1, 3))

    def test_paperfamily(self):
        assert score_vector(paperfamily(), 4) == (6, 5, 4, 0)
        assert score_vector(paperfamily(), 5) == (7, 6, 5, 4, 0)

    def test_vetofamily(self):
        assert score_vector(vetofamily(9, 1), 4, n=3) == (13, 12, 11, 0)

    def test_vetofamily_constraint(self):
        # omega must exceed m*eps*(n-1) once n is known
        with pytest.raises(InvalidParametersError):
            score_vector(vetofamily(8, 1), 4, n=3)
        with pytest.raises(InvalidParametersError):
            vetofamily(0, 1)

    def test_kapproval_bounds(self):
        with pytest.raises(InvalidParametersError):
            score_vector(kapproval(4), 4)
        with pytest.raises(InvalidParametersError):
            kapproval(0)

    def test_increasing_vector_rejected(self):
        with pytest.raises(InvalidParametersError):
            make_score_vector([1, 2, 3])

    def test_constant_vector_rejected(self):
        with pytest.raises(InvalidParametersError):
            make_score_vector([1, 1, 1])

    def test_kapproval_k_detection(self):
        assert kapproval_k(plurality(), 5) == 1
        assert kapproval_k(kapproval(3), 5) == 3
        assert kapproval_k(scoring([1, 1, 0, 0]), 4) == 2
        assert kapproval_k(borda(), 5) is None
        assert kapproval_k(scoring([2, 2, 0, 0]), 4) is None


class TestScoring:
    def test_unanimous_borda(self):
        profile = make_profile([(0, 1, 2), (0, 1, 2)])
        assert scoring_scores((2, 1, 0), profile) == {0: 4, 1: 2, 2: 0}

    def test_plurality_counts(self):
        profile = make_profile([(0, 1, 2), (1, 0, 2), (1, 2, 0)])
        assert scoring_scores((1, 0, 0), profile) == {0: 1, 1: 2, 2: 0}

    def test_proof_profile_scores(self):
        # hand sum: 6+5+0, 5+0+5, 0+6+6, 4+4+4 -- outcomes 2 and 3 tie at 12
        scores = scoring_scores((6, 5, 4, 0), PROOF_PROFILE)
        assert scores == {0: 11, 1: 10, 2: 12, 3: 12}

    def test_proof_profile_winner_by_tiebreak(self):
        assert scoring_winner((6, 5, 4, 0), PROOF_PROFILE, (0, 1, 2, 3)) == 2
        assert scoring_winner((6, 5, 4, 0), PROOF_PROFILE, (3, 2, 1, 0)) == 3

    def test_tie_resolved_by_priority(self):
        profile = make_profile([(0, 1, 2), (1, 0, 2)])
        assert scoring_winner((1, 1, 0), profile, (2, 1, 0)) == 1

    def test_cowinners(self):
        profile = make_profile([(0, 1, 2), (1, 0, 2)])
        assert scoring_cowinners((1, 1, 0), profile) == {0, 1}
        rotations = make_profile([(0, 1, 2), (1, 2, 0), (2, 0, 1)])
        assert scoring_cowinners((2, 1, 0), rotations) == {0, 1, 2}

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            scoring_scores((1, 0), make_profile([(0, 1, 2)]))
        with pytest.raises(DimensionMismatchError):
            scoring_winner((1, 0, 0), make_profile([(0, 1, 2)]), (0, 1))

    def test_dowdall_exact_tie(self):
        # 1 + 1/2 + 1/3 arithmetic must compare exactly, not approximately
        profile = make_profile([(0, 1, 2), (1, 2, 0), (2, 0, 1)])
        weights = score_vector(dowdall(), 3)
        assert scoring_cowinners(weights, profile) == {0, 1, 2}


class TestStv:
    def test_unanimous(self):
        profile = make_profile([(1, 0, 2)] * 3)
        assert stv_winner(profile, (0, 1, 2)) == 1

    def test_elimination_trace(self):
        profile = make_profile([(0, 1, 2), (0, 1, 2), (1, 2, 0)])
        assert stv_winner(profile, (0, 1, 2)) == 0

    def test_majority_top_never_loses(self):
        for profile in enumerate_profiles(3, 3):
            firsts = [0, 0, 0]
            for ballot in profile:
                firsts[ballot[0]] += 1
            leaders = [o for o in range(3) if 2 * firsts[o] > 3]
            if leaders:
                assert stv_winner(profile, (0, 1, 2)) == leaders[0]


class TestRunoff:
    def test_unanimous(self):
        profile = make_profile([(2, 0, 1)] * 4)
        assert plurality_runoff_winner(profile, (0, 1, 2)) == 2

    def test_all_tied_finalists_by_priority(self):
        profile = make_profile([(0, 2, 1), (1, 2, 0), (2, 0, 1)])
        # finalists 0 and 1 by priority; 0 beats 1 pairwise 2-1
        assert plurality_runoff_winner(profile, (0, 1, 2)) == 0

    def test_two_outcomes_equals_plurality(self):
        for profile in enumerate_profiles(2, 3):
            assert plurality_runoff_winner(profile, (0, 1)) == scoring_winner(
                (1, 0), profile, (0, 1)
            )


class TestCopelandCondorcet:
    def test_unanimous(self):
        profile = make_profile([(1, 2, 0)] * 3)
        assert copeland_winner(profile, (0, 1, 2)) == 1
        assert condorcet_winner(profile) == 1

    def test_cycle(self):
        rotations = make_profile([(0, 1, 2), (1, 2, 0), (2, 0, 1)])
        assert condorcet_winner(rotations) is None
        assert copeland_winner(rotations, (2, 0, 1)) == 2  # all tied, priority decides

    def test_condorcet_example(self):
        profile = make_profile([(0, 1, 2), (0, 2, 1), (1, 0, 2)])
        assert condorcet_winner(profile) == 0

    def test_copeland_extends_condorcet_exhaustively(self):
        # all 216 profiles with n=3, m=3
        for profile in enumerate_profiles(3, 3):
            cw = condorcet_winner(profile)
            if cw is not None:
                for tiebreak in enumerate_rankings(3):
                    assert copeland_winner(profile, tiebreak) == cw


class TestAlmostUnanimousBehaviour:
    @pytest.mark.parametrize("rule", [stv(), runoff(), copeland()])
    def test_shared_top_of_all_but_one_wins(self, rule):
        # n=3, m=3: whenever two of three voters rank o first, o wins
        for profile in enumerate_profiles(3, 3):
            firsts = [ballot[0] for ballot in profile]
            for o in range(3):
                if firsts.count(o) >= 2:
                    assert winner(rule, profile, (0, 1, 2)) == o


class TestRelabeling:
    @given(
        st.lists(st.permutations(list(range(3))), min_size=2, max_size=4),
        st.permutations(list(range(3))),
        st.permutations(list(range(3))),
    )
    def test_winner_commutes_with_relabeling(self, ballots, sigma, tiebreak):
        profile = make_profile([tuple(b) for b in ballots])
        mapped = make_profile([tuple(sigma[o] for o in b) for b in ballots])
        mapped_tb = tuple(sigma[o] for o in tiebreak)
        for rule in (borda(), plurality(), kapproval(2), stv(), runoff(), copeland()):
            got = winner(rule, mapped, mapped_tb)
            assert got == sigma[winner(rule, profile, tuple(tiebreak))]

    def test_winner_in_cowinners(self):
        for profile in enumerate_profiles(3, 2):
            for w in ((2, 1, 0), (1, 1, 0), (1, 0, 0)):
                cowinners = scoring_cowinners(w, profile)
                for tiebreak in enumerate_rankings(3):
                    assert scoring_winner(w, profile, tiebreak) in cowinners
                if len(cowinners) == 1:
                    assert scoring_winner(w, profile, (0, 1, 2)) in cowinners


class TestRuleSyntax:
    @pytest.mark.parametrize(
        "text",
        ["borda", "plurality", "antiplurality", "dowdall", "paperfamily", "stv",
         "runoff", "copeland", "kapproval:k=14", "scoring:w=6,5,4,0",
         "vetofamily:omega=9,eps=1"],
    )
    def test_round_trip(self, text):
        assert rule_label(parse_rule(text)) == text

    def test_scoring_fractions(self):
        spec = parse_rule("scoring:w=1,1/2,1/3")
        assert spec.weights == (1, F(1, 2), F(1, 3))

    def test_unknown_rule(self):
        with pytest.raises(InvalidParametersError):
            parse_rule("bucklin")

    def test_bad_parameters(self):
        with pytest.raises(InvalidParametersError):
            parse_rule("kapproval:k=two")
        with pytest.raises(InvalidParametersError):
            parse_rule("borda:k=2")
