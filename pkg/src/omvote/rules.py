"""Winner determination for positional scoring rules, STV, runoff and Copeland.

All score arithmetic is exact (ints and fractions.Fraction), so score ties are
detected exactly; ties between outcomes are resolved by a fixed tie-break
priority order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Profile
from .errors import DimensionMismatchError, InvalidParametersError, UnsupportedRuleError

SCORING_RULE_NAMES = frozenset(
    {"scoring", "kapproval", "plurality", "antiplurality", "borda", "dowdall", "vetofamily", "paperfamily"}
)
RULE_NAMES = SCORING_RULE_NAMES | {"stv", "runoff", "copeland"}


def make_score_vector(weights: Sequence) -> tuple:
    """Validate positional weights: non-increasing with at least one strict drop."""
    ws = tuple(Fraction(w) for w in weights)
    if len(ws) < 2:
        raise InvalidParametersError("a score vector needs at least two weights")
    for a, b in zip(ws, ws[1:]):
        if a < b:
            raise InvalidParametersError(f"weights must be non-increasing, got {a} < {b}")
    if ws[0] == ws[-1]:
        raise InvalidParametersError("weights must decrease somewhere (constant vectors select nothing)")
    return ws


@dataclass(frozen=True)
class RuleSpec:
    """A voting rule plus its parameters; materializes to weights per m."""

    name: str
    k: int | None = None
    weights: tuple | None = None
    omega: Fraction | None = None
    eps: Fraction | None = None

    @property
    def is_scoring(self) -> bool:
        return self.name in SCORING_RULE_NAMES


def borda() -> RuleSpec:
    return RuleSpec("borda")


def plurality() -> RuleSpec:
    return RuleSpec("plurality")


def antiplurality() -> RuleSpec:
    return RuleSpec("antiplurality")


def dowdall() -> RuleSpec:
    return RuleSpec("dowdall")


def paperfamily() -> RuleSpec:
    """The strict scoring family (m+2, m+1, ..., 4, 0) with a large tail gap."""
    return RuleSpec("paperfamily")


def kapproval(k: int) -> RuleSpec:
    if k < 1:
        raise InvalidParametersError("k-approval needs k >= 1")
    return RuleSpec("kapproval", k=k)


def scoring(weights: Sequence) -> RuleSpec:
    return RuleSpec("scoring", weights=make_score_vector(weights))


def vetofamily(omega, eps) -> RuleSpec:
    """Strict scoring family (w+m*e, ..., w+2*e, 0); needs w > m*e*(n-1)."""
    omega, eps = Fraction(omega), Fraction(eps)
    if omega <= 0 or eps <= 0:
        raise InvalidParametersError("vetofamily needs omega > 0 and eps > 0")
    return RuleSpec("vetofamily", omega=omega, eps=eps)


def stv() -> RuleSpec:
    return RuleSpec("stv")


def runoff() -> RuleSpec:
    return RuleSpec("runoff")


def copeland() -> RuleSpec:
    return RuleSpec("copeland")


def score_vector(rule: RuleSpec, m: int, n: int | None = None) -> tuple:
    """Materialize the exact score vector of a scoring rule for m outcomes.

    For the vetofamily the constraint omega > m*eps*(n-1) is checked whenever
    the voter count n is supplied.
    """
    if m < 2:
        raise InvalidParametersError("scoring rules need at least two outcomes")
    if rule.name == "borda":
        return tuple(Fraction(m - 1 - i) for i in range(m))
    if rule.name == "plurality":
        return (Fraction(1),) + (Fraction(0),) * (m - 1)
    if rule.name == "antiplurality":
        return (Fraction(1),) * (m - 1) + (Fraction(0),)
    if rule.name == "dowdall":
        return tuple(Fraction(1, i + 1) for i in range(m))
    if rule.name == "paperfamily":
        return tuple(Fraction(m + 2 - i) for i in range(m - 1)) + (Fraction(0),)
    if rule.name == "kapproval":
        if not 0 < rule.k < m:
            raise InvalidParametersError(f"k-approval needs 0 < k < m, got k={rule.k}, m={m}")
        return (Fraction(1),) * rule.k + (Fraction(0),) * (m - rule.k)
    if rule.name == "vetofamily":
        if n is not None and rule.omega <= m * rule.eps * (n - 1):
            raise InvalidParametersError(
                f"vetofamily needs omega > m*eps*(n-1): {rule.omega} <= {m * rule.eps * (n - 1)}"
            )
        head = tuple(rule.omega + (m - i) * rule.eps for i in range(m - 1))
        return head + (Fraction(0),)
    if rule.name == "scoring":
        if len(rule.weights) != m:
            raise InvalidParametersError(f"score vector has {len(rule.weights)} weights, m={m}")
        return rule.weights
    raise InvalidParametersError(f"{rule.name} is not a positional scoring rule")


def kapproval_k(rule: RuleSpec, m: int) -> int | None:
    """The k of a k-approval style rule (1/0 weights), or None otherwise."""
    if rule.name == "kapproval":
        if not 0 < rule.k < m:
            raise InvalidParametersError(f"k-approval needs 0 < k < m, got k={rule.k}, m={m}")
        return rule.k
    if rule.name == "plurality":
        return 1
    if rule.name == "antiplurality":
        return m - 1
    if rule.name == "scoring" and len(rule.weights) == m:
        k = sum(1 for w in rule.weights if w == 1)
        if rule.weights == (Fraction(1),) * k + (Fraction(0),) * (m - k) and 0 < k < m:
            return k
    return None


def _plain_weights(weights: Sequence) -> list:
    # ints where possible: integer score sums are much cheaper than Fractions
    out = []
    for w in weights:
        f = w if isinstance(w, (int, Fraction)) else Fraction(w)
        out.append(int(f) if isinstance(f, Fraction) and f.denominator == 1 else f)
    return out


def scoring_scores(weights: Sequence, profile: Profile) -> dict:
    """Total positional score of every outcome under the given weights."""
    m = profile.m
    if len(weights) != m:
        raise DimensionMismatchError(f"{len(weights)} weights for {m} outcomes")
    ws = _plain_weights(weights)
    totals = [0] * m
    for ballot in profile.ballots:
        for pos, o in enumerate(ballot):
            totals[o] += ws[pos]
    return {o: totals[o] for o in range(m)}


def _check_tiebreak(tiebreak, m: int) -> list:
    if len(tiebreak) != m:
        raise DimensionMismatchError(f"tie-break over {len(tiebreak)} outcomes, profile has {m}")
    prank = [0] * m
    for r, o in enumerate(tiebreak):
        prank[o] = r
    return prank


def scoring_winner(weights: Sequence, profile: Profile, tiebreak) -> int:
    """Highest-scoring outcome; exact score ties go to the higher priority."""
    prank = _check_tiebreak(tiebreak, profile.m)
    scores = scoring_scores(weights, profile)
    return max(range(profile.m), key=lambda o: (scores[o], -prank[o]))


def scoring_cowinners(weights: Sequence, profile: Profile) -> frozenset:
    """All outcomes attaining the maximum score (no tie-break applied)."""
    scores = scoring_scores(weights, profile)
    top = max(scores.values())
    return frozenset(o for o, s in scores.items() if s == top)


def pairwise_tally(profile: Profile) -> list:
    """tally[a][b] = number of ballots ranking a above b."""
    m = profile.m
    tally = [[0] * m for _ in range(m)]
    for ballot in profile.ballots:
        for i, a in enumerate(ballot):
            row = tally[a]
            for b in ballot[i + 1 :]:
                row[b] += 1
    return tally


def condorcet_winner(profile: Profile):
    """The outcome beating every other by strict pairwise majority, or None."""
    tally = pairwise_tally(profile)
    n = profile.n
    for a in range(profile.m):
        if all(2 * tally[a][b] > n for b in range(profile.m) if b != a):
            return a
    return None


def copeland_winner(profile: Profile, tiebreak) -> int:
    """Most pairwise wins (ties half a point each), priority breaking ties."""
    m = profile.m
    prank = _check_tiebreak(tiebreak, m)
    tally = pairwise_tally(profile)
    n = profile.n
    doubled = [0] * m  # 2 per win, 1 per pairwise tie, exact in ints
    for a in range(m):
        for b in range(a + 1, m):
            if 2 * tally[a][b] > n:
                doubled[a] += 2
            elif 2 * tally[a][b] < n:
                doubled[b] += 2
            else:
                doubled[a] += 1
                doubled[b] += 1
    return max(range(m), key=lambda o: (doubled[o], -prank[o]))


def stv_winner(profile: Profile, tiebreak) -> int:
    """Iteratively drop the outcome with fewest first places among survivors.

    Elimination ties drop the lowest-priority outcome; the last survivor wins.
    """
    m = profile.m
    prank = _check_tiebreak(tiebreak, m)
    remaining = set(range(m))
    while len(remaining) > 1:
        firsts = dict.fromkeys(remaining, 0)
        for ballot in profile.ballots:
            for o in ballot:
                if o in remaining:
                    firsts[o] += 1
                    break
        fewest = min(firsts.values())
        doomed = max((o for o in remaining if firsts[o] == fewest), key=lambda o: prank[o])
        remaining.remove(doomed)
    return remaining.pop()


def plurality_runoff_winner(profile: Profile, tiebreak) -> int:
    """Top two plurality scorers meet in a pairwise majority runoff."""
    m = profile.m
    if m < 2:
        raise InvalidParametersError("runoff needs at least two outcomes")
    prank = _check_tiebreak(tiebreak, m)
    firsts = [0] * m
    for ballot in profile.ballots:
        firsts[ballot[0]] += 1
    a, b = sorted(range(m), key=lambda o: (-firsts[o], prank[o]))[:2]
    a_wins = sum(1 for ballot in profile.ballots if ballot.index(a) < ballot.index(b))
    if 2 * a_wins > profile.n:
        return a
    if 2 * a_wins < profile.n:
        return b
    return a if prank[a] < prank[b] else b


def winner(rule: RuleSpec, profile: Profile, tiebreak) -> int:
    """Evaluate any supported rule on a profile with a fixed tie-break."""
    if rule.is_scoring:
        ws = score_vector(rule, profile.m, profile.n)
        return scoring_winner(ws, profile, tiebreak)
    if rule.name == "stv":
        return stv_winner(profile, tiebreak)
    if rule.name == "runoff":
        return plurality_runoff_winner(profile, tiebreak)
    if rule.name == "copeland":
        return copeland_winner(profile, tiebreak)
    raise UnsupportedRuleError(f"unknown rule {rule.name!r}")


# ---------------------------------------------------------------------------
# Rule syntax used on the command line, e.g. "borda", "kapproval:k=2",
# "scoring:w=6,5,4,0", "vetofamily:omega=9,eps=1".


def parse_rule(text: str) -> RuleSpec:
    name, _, params = text.strip().partition(":")
    name = name.lower()
    if name not in RULE_NAMES:
        raise InvalidParametersError(f"unknown rule {name!r}")
    try:
        if name == "kapproval":
            return kapproval(int(_single_param(params, "k")))
        if name == "scoring":
            return scoring([Fraction(tok) for tok in _single_param(params, "w").split(",")])
        if name == "vetofamily":
            pairs = dict(item.split("=", 1) for item in params.split(","))
            return vetofamily(Fraction(pairs["omega"]), Fraction(pairs["eps"]))
    except (ValueError, KeyError, ZeroDivisionError) as exc:
        raise InvalidParametersError(f"bad parameters for {name}: {params!r}") from exc
    if params:
        raise InvalidParametersError(f"rule {name} takes no parameters, got {params!r}")
    return RuleSpec(name)


def _single_param(params: str, key: str) -> str:
    prefix = key + "="
    if not params.startswith(prefix):
        raise ValueError(f"expected {prefix}...")
    return params[len(prefix) :]


def rule_label(rule: RuleSpec) -> str:
    """Round-trippable text form of a RuleSpec."""
    if rule.name == "kapproval":
        return f"kapproval:k={rule.k}"
    if rule.name == "scoring":
        return "scoring:w=" + ",".join(str(w) for w in rule.weights)
    if rule.name == "vetofamily":
        return f"vetofamily:omega={rule.omega},eps={rule.eps}"
    return rule.name
