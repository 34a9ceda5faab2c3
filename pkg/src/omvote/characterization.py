"""Closed-form manipulability predicates and structural rule properties.

The arithmetic predicates classify rule instances instantly; the structural
detectors (veto power, almost-unanimity) decide the same questions by
exhaustive search at small scale, so each side can validate the other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import rules
from .ccum import possible_outcomes
from .core import Profile, enumerate_rankings, identity_tiebreak, make_tiebreak
from .errors import InvalidParametersError

OM = "OM"
NOM = "NOM"
BOM = "BOM"
NOT_BOM = "not-BOM"
NO_CLAIM = "no-claim"


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one predicate, with the classification it licenses.

    Biconditional predicates imply a definite classification either way;
    sufficient-only predicates imply 'no-claim' when their test fails.
    """

    predicate: str
    holds: bool
    implied_classification: str
    parameters: dict = field(default_factory=dict)


def kapproval_om(n: int, m: int, k: int) -> TheoremVerdict:
    """k-approval is obviously manipulable iff n <= (m-2)/(m-k)."""
    if n < 3 or m < 3:
        raise InvalidParametersError("characterization assumes n >= 3 and m >= 3")
    if not 0 < k < m:
        raise InvalidParametersError(f"need 0 < k < m, got k={k}, m={m}")
    holds = n * (m - k) <= m - 2
    return TheoremVerdict(
        "kapproval_om",
        holds,
        OM if holds else NOM,
        {"n": n, "m": m, "k": k},
    )


def scoring_nom_sufficient(n: int, weights) -> TheoremVerdict:
    """A scoring rule is NOM once n > s1/(s1-s2) + 1 (sufficient only)."""
    ws = rules.make_score_vector(weights)
    s1, s2 = ws[0], ws[1]
    holds = s1 > s2 and Fraction(n) > s1 / (s1 - s2) + 1
    return TheoremVerdict(
        "scoring_nom_sufficient",
        holds,
        NOM if holds else NO_CLAIM,
        {"n": n, "weights": ws},
    )


def bom_iff(n: int, weights) -> TheoremVerdict:
    """Best-case manipulability of a scoring rule, decided by its equal prefix.

    Holds iff the first k weights are equal for some k > 1 with
    n <= (m-2)/(m-k); the longest equal prefix decides the existential,
    since larger k only loosens the inequality.
    """
    ws = rules.make_score_vector(weights)
    m = len(ws)
    prefix = 1
    while prefix < m and ws[prefix] == ws[0]:
        prefix += 1
    holds = prefix > 1 and n * (m - prefix) <= m - 2
    return TheoremVerdict(
        "bom_iff",
        holds,
        BOM if holds else NOT_BOM,
        {"n": n, "weights": ws, "equal_prefix": prefix},
    )


def weakly_diminishing(weights) -> TheoremVerdict:
    """Strictly decreasing weights with non-increasing gaps imply NOM."""
    ws = rules.make_score_vector(weights)
    strict = all(a > b for a, b in zip(ws, ws[1:]))
    gaps = [a - b for a, b in zip(ws, ws[1:])]
    holds = strict and all(g1 >= g2 for g1, g2 in zip(gaps, gaps[1:]))
    return TheoremVerdict(
        "weakly_diminishing",
        holds,
        NOM if holds else NO_CLAIM,
        {"weights": ws},
    )


def has_veto_power(rule: rules.RuleSpec, n: int, m: int, tiebreak=None, budget=None) -> bool:
    """True iff some single report makes some otherwise-possible outcome unreachable."""
    tiebreak = identity_tiebreak(m) if tiebreak is None else make_tiebreak(tiebreak, m)
    possible = possible_outcomes(rule, n, None, tiebreak, budget)
    for report in enumerate_rankings(m):
        if possible - possible_outcomes(rule, n, report, tiebreak, budget):
            return True
    return False


def is_almost_unanimous(rule: rules.RuleSpec, n: int, m: int, tiebreak=None, budget=None) -> bool:
    """True iff an outcome ranked first by at least n-1 voters always wins.

    With tiebreak=None the property is required for every priority order.
    """
    if n < 2:
        raise InvalidParametersError("almost-unanimity needs at least two voters")
    if tiebreak is None:
        return all(
            _almost_unanimous_under(rule, n, m, tb) for tb in enumerate_rankings(m)
        )
    return _almost_unanimous_under(rule, n, m, make_tiebreak(tiebreak, m))


def _almost_unanimous_under(rule, n, m, tiebreak) -> bool:
    rankings = tuple(enumerate_rankings(m))
    for top in range(m):
        supporters = [r for r in rankings if r[0] == top]
        for deviant_slot in range(n):
            for deviant in rankings:
                for backers in itertools.product(supporters, repeat=n - 1):
                    ballots = backers[:deviant_slot] + (deviant,) + backers[deviant_slot:]
                    if rules.winner(rule, Profile(ballots, m), tiebreak) != top:
                        return False
    return True
