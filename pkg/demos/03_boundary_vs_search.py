"""The manipulability boundary of k-approval, predicted and then searched.

The closed form says k-approval with n voters and m outcomes admits an
obvious manipulation exactly when n(m-k) <= m-2, i.e. when the voters'
disapprovals cannot cover all outcomes minus one.  We print the predicted
boundary for every small cell and confirm each verdict by exhaustive
search over all truths and reports.  The veto-power story is subtler:
the (13, 12, 11, 0) rule lets a voter veto an outcome, yet no preference
admits any manipulation.
"""

from omvote import (
    bruteforce_feasible,
    classify,
    enumerate_rankings,
    has_veto_power,
    kapproval,
    kapproval_om,
    vetofamily,
)
from omvote.core import ranking_positions

print("predicted vs searched, n=3 and n=4, m up to 5:")
for n in (3, 4):
    for m in (3, 4, 5):
        for k in range(1, m):
            verdict = kapproval_om(n, m, k)
            tiebreak = tuple(range(m))
            rule = kapproval(k)
            tables = {r: bruteforce_feasible(rule, n, r, tiebreak)
                      for r in enumerate_rankings(m)}
            found = False
            for truth in enumerate_rankings(m):
                pos = ranking_positions(truth)
                best0 = min(pos[o] for o in tables[truth])
                worst0 = max(pos[o] for o in tables[truth])
                if any(min(pos[o] for o in f) < best0 or max(pos[o] for o in f) < worst0
                       for f in set(tables.values())):
                    found = True
                    break
            mark = "ok" if found == verdict.holds else "MISMATCH"
            print(f"  n={n} m={m} k={k}: predicted {verdict.implied_classification:3s}"
                  f"  searched {'OM' if found else 'NOM':3s}  [{mark}]")

print("\nveto power without manipulability (weights (13,12,11,0), n=3):")
rule = vetofamily(9, 1)
print(f"  has_veto_power: {has_veto_power(rule, 3, 4)}")
labels = {classify(t, rule, 3, (0, 1, 2, 3), mode='bruteforce').classification
          for t in enumerate_rankings(4)}
print(f"  classifications over all 24 truths: {labels}")
