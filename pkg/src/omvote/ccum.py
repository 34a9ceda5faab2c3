"""Constructive coalitional manipulation: can free voters make a target win?

The greedy solver handles k-approval style rules in polynomial time; the
brute-force solver enumerates manipulator ballot tuples for any rule and
doubles as the correctness oracle for the greedy one.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

from . import rules
from .core import DEFAULT_BUDGET, Profile, enumerate_rankings, make_ranking, make_tiebreak
from .errors import InvalidParametersError, TooLargeError, VerificationError


@dataclass(frozen=True)
class CcumInstance:
    """Fixed ballots, a count of free manipulators, and a target to elect."""

    rule: rules.RuleSpec
    fixed_ballots: tuple
    num_manipulators: int
    target: int
    tiebreak: tuple

    def __post_init__(self):
        m = self.m
        object.__setattr__(self, "fixed_ballots", tuple(make_ranking(b, m) for b in self.fixed_ballots))
        object.__setattr__(self, "tiebreak", make_tiebreak(self.tiebreak, m))
        if self.num_manipulators < 0:
            raise InvalidParametersError("num_manipulators must be >= 0")
        if not self.fixed_ballots and self.num_manipulators == 0:
            raise InvalidParametersError("instance has no voters at all")
        if not 0 <= self.target < m:
            raise InvalidParametersError(f"target {self.target} not in [0, {m})")

    @property
    def m(self) -> int:
        return len(self.tiebreak)

    @property
    def n(self) -> int:
        return len(self.fixed_ballots) + self.num_manipulators


@dataclass(frozen=True)
class CcumCertificate:
    achievable: bool
    manipulator_ballots: tuple | None


def _priority_ranks(tiebreak) -> list:
    prank = [0] * len(tiebreak)
    for r, o in enumerate(tiebreak):
        prank[o] = r
    return prank


def _kapproval_recount(ballots, k: int, prank, m: int) -> int:
    # fresh winner recount, independent of any incremental bookkeeping
    approvals = [0] * m
    for ballot in ballots:
        for o in ballot[:k]:
            approvals[o] += 1
    return max(range(m), key=lambda o: (approvals[o], -prank[o]))


def ccum_greedy_kapproval(inst: CcumInstance) -> CcumCertificate:
    """Greedy manipulator ballots for a k-approval rule.

    Every manipulator ranks the target first and spends the remaining k-1
    approvals on the outcomes with the currently lowest scores, preferring
    the lowest tie-break priority among score ties.  Disapproved outcomes
    are appended lowest priority first (their order cannot affect scores).
    The returned ballots are reported even when the target still loses.
    """
    m = inst.m
    k = rules.kapproval_k(inst.rule, m)
    if k is None:
        raise InvalidParametersError(f"greedy solver needs a k-approval rule, got {inst.rule.name}")
    prank = _priority_ranks(inst.tiebreak)
    scores = [0] * m
    for ballot in inst.fixed_ballots:
        for o in ballot[:k]:
            scores[o] += 1
    target = inst.target
    ballots = []
    for _ in range(inst.num_manipulators):
        scores[target] += 1
        others = sorted((o for o in range(m) if o != target), key=lambda o: (scores[o], -prank[o]))
        approved = others[: k - 1]
        for o in approved:
            scores[o] += 1
        trailer = sorted(others[k - 1 :], key=lambda o: -prank[o])
        ballots.append((target, *approved, *trailer))
    completed = inst.fixed_ballots + tuple(ballots)
    achievable = _kapproval_recount(completed, k, prank, m) == target
    return CcumCertificate(achievable, tuple(ballots))


def ccum_bruteforce(inst: CcumInstance, budget: int | None = None) -> CcumCertificate:
    """Exhaustive search over manipulator ballot tuples, lexicographic order.

    Returns the first tuple electing the target, or achievable=False after
    scanning all (m!)^num_manipulators of them.
    """
    m = inst.m
    count = math.factorial(m) ** inst.num_manipulators
    if count > (DEFAULT_BUDGET if budget is None else budget):
        raise TooLargeError(f"{count} manipulator ballot tuples exceed the budget")
    rankings = tuple(enumerate_rankings(m))
    for tup in itertools.product(rankings, repeat=inst.num_manipulators):
        profile = Profile(inst.fixed_ballots + tup, m)
        if rules.winner(inst.rule, profile, inst.tiebreak) == inst.target:
            return CcumCertificate(True, tup)
    return CcumCertificate(False, None)


def solve_ccum(inst: CcumInstance, solver: str = "auto", budget: int | None = None) -> CcumCertificate:
    """Dispatch to the greedy solver for k-approval, brute force otherwise."""
    if solver == "auto":
        solver = "greedy" if rules.kapproval_k(inst.rule, inst.m) is not None else "bruteforce"
    if solver == "greedy":
        cert = ccum_greedy_kapproval(inst)
    elif solver == "bruteforce":
        cert = ccum_bruteforce(inst, budget)
    else:
        raise InvalidParametersError(f"unknown solver {solver!r}")
    if cert.achievable:
        _verify_certificate(inst, cert)
    return cert


def _verify_certificate(inst: CcumInstance, cert: CcumCertificate) -> None:
    profile = Profile(inst.fixed_ballots + tuple(cert.manipulator_ballots), inst.m)
    elected = rules.winner(inst.rule, profile, inst.tiebreak)
    if elected != inst.target:
        raise VerificationError(
            f"certificate for target {inst.target} actually elects {elected}"
        )


@lru_cache(maxsize=100_000)
def possible_outcomes(rule: rules.RuleSpec, n: int, fixed, tiebreak, budget: int | None = None) -> frozenset:
    """Outcomes some ballots of the free voters can elect.

    With *fixed* set to one voter's ranking the other n-1 voters are free;
    with fixed=None all n are.  k-approval rules go through the greedy
    solver target by target; everything else enumerates ballot tuples.
    """
    m = len(tiebreak)
    if fixed is not None and len(fixed) != m:
        raise InvalidParametersError("fixed ballot and tie-break sizes disagree")
    free = n - 1 if fixed is not None else n
    if free < 0 or n < 1:
        raise InvalidParametersError("need n >= 1 (n >= 2 when one ballot is fixed)")
    fixed_ballots = (fixed,) if fixed is not None else ()
    if rules.kapproval_k(rule, m) is not None:
        found = set()
        for target in range(m):
            inst = CcumInstance(rule, fixed_ballots, free, target, tiebreak)
            if ccum_greedy_kapproval(inst).achievable:
                found.add(target)
        return frozenset(found)
    count = math.factorial(m) ** free
    if count > (DEFAULT_BUDGET if budget is None else budget):
        raise TooLargeError(f"{count} ballot tuples exceed the budget")
    rankings = tuple(enumerate_rankings(m))
    found = set()
    for tup in itertools.product(rankings, repeat=free):
        profile = Profile(fixed_ballots + tup, m)
        found.add(rules.winner(rule, profile, tiebreak))
        if len(found) == m:
            break
    return frozenset(found)
