"""Why a voter with zero information can still gain by lying.

Under the strict scoring rule with weights (6, 5, 4, 0) a voter whose
honest order is 0 > 1 > 3 > 2 cannot stop outcome 2 from winning: some
completions of the election elect it even though she ranks it last.
Swapping outcomes 1 and 3 on her ballot walls outcome 2 off completely,
so her worst case improves no matter what the others do.  Plurality, by
contrast, admits no such trick for any preference at all.
"""

from omvote import (
    case_outcomes,
    classify,
    enumerate_rankings,
    has_veto_power,
    paperfamily,
    plurality,
)

N = 3
TIEBREAK = (0, 1, 2, 3)
truth = (0, 1, 3, 2)

rule = paperfamily()  # weights (6, 5, 4, 0) for four outcomes
print("rule weights (6,5,4,0), three voters, priority order 0>1>2>3")
print(f"voter's honest ranking: {truth}")

truthful = case_outcomes(truth, truth, rule, N, TIEBREAK)
print(f"reachable outcomes when reporting honestly: {sorted(truthful.feasible)}")
print(f"best case {truthful.best}, worst case {truthful.worst} (her last choice!)")

report = classify(truth, rule, N, TIEBREAK, mode="bruteforce")
print(f"\nclassification: {report.classification}")
print(f"worst-case-improving misreport: {report.wom_witness}")

shifted = case_outcomes(truth, report.wom_witness, rule, N, TIEBREAK)
print(f"reachable outcomes under the misreport: {sorted(shifted.feasible)}")
print(f"new worst case: {shifted.worst} (ranked above {truthful.worst} in her true order)")

print(f"\nthe rule admits a voter with veto power: {has_veto_power(rule, N, 4)}")
print("(ranking an outcome last starves it of the 4 points it needs)")

print("\nplurality, for comparison, is immune for every preference:")
for t in enumerate_rankings(3):
    label = classify(t, plurality(), 3, (0, 1, 2), mode="bruteforce").classification
    print(f"  truth {t}: {label}")
