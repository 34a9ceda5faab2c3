"""Tour of the voting rules on one small election.

Three committee members rank four proposals; we total the positional
scores under several rules, watch the tie between proposals 2 and 3 get
resolved by priority, and compare with the elimination-style rules.
"""

from omvote import (
    borda,
    condorcet_winner,
    copeland,
    dowdall,
    format_profile,
    kapproval,
    make_profile,
    paperfamily,
    plurality,
    rule_label,
    runoff,
    score_vector,
    scoring_scores,
    stv,
    winner,
)

profile = make_profile([
    (0, 1, 3, 2),
    (2, 0, 3, 1),
    (2, 1, 3, 0),
])
tiebreak = (0, 1, 2, 3)

print("ballots (most preferred first):")
print(format_profile(profile, tiebreak))

for rule in (plurality(), kapproval(2), borda(), dowdall(), paperfamily()):
    weights = score_vector(rule, profile.m, profile.n)
    scores = scoring_scores(weights, profile)
    print(f"{rule_label(rule):14s} weights={tuple(map(str, weights))}")
    print(f"{'':14s} scores={ {o: str(s) for o, s in scores.items()} }"
          f" -> winner {winner(rule, profile, tiebreak)}")

print()
print("note the paperfamily scores: 2 and 3 tie at 12, and priority elects 2")
print()

for rule in (stv(), runoff(), copeland()):
    print(f"{rule_label(rule):14s} -> winner {winner(rule, profile, tiebreak)}")
print(f"{'condorcet':14s} -> {condorcet_winner(profile)} (None means a majority cycle)")
