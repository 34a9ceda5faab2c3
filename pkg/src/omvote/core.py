"""Core election types: rankings, profiles, tie-breaks, enumeration and sampling.

Outcomes are dense integer indices 0..m-1.  A ranking is a tuple holding a
permutation of those indices, most preferred first.  A tie-break order is the
same kind of tuple, highest priority first.  Everything here is immutable and
safe to share between threads.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import (
    DuplicateOutcomeError,
    InvalidParametersError,
    OutOfRangeIndexError,
    ProfileFormatError,
    TooLargeError,
    WrongLengthError,
)

Ranking = tuple  # permutation of range(m), most preferred first
TieBreak = tuple  # permutation of range(m), highest priority first

#: Hard cap on enumerate_rankings (8! = 40320 rankings).
MAX_ENUMERATED_OUTCOMES = 8

#: Default cap on the number of enumerated profiles / ballot tuples.
DEFAULT_BUDGET = 10**8


def make_ranking(order: Sequence[int], m: int | None = None) -> Ranking:
    """Validate *order* as a permutation of range(m) and return it as a tuple.

    If *m* is omitted it is inferred from the length of *order*.
    """
    order = tuple(int(o) for o in order)
    if m is None:
        m = len(order)
    elif len(order) != m:
        raise WrongLengthError(f"expected {m} entries, got {len(order)}")
    seen = [False] * m
    for o in order:
        if o < 0 or o >= m:
            raise OutOfRangeIndexError(f"outcome {o} not in [0, {m})")
        if seen[o]:
            raise DuplicateOutcomeError(f"outcome {o} listed twice")
        seen[o] = True
    return order


def make_tiebreak(priority: Sequence[int], m: int | None = None) -> TieBreak:
    """Validate a tie-break priority order (same shape as a ranking)."""
    return make_ranking(priority, m)


def identity_tiebreak(m: int) -> TieBreak:
    """Priority order 0 > 1 > ... > m-1."""
    return tuple(range(m))


def ranking_positions(ranking: Ranking) -> list:
    """Inverse permutation: positions[o] = rank of outcome o (0 = best)."""
    positions = [0] * len(ranking)
    for rank, o in enumerate(ranking):
        positions[o] = rank
    return positions


def prefers(ranking: Ranking, a: int, b: int) -> bool:
    """True iff outcome *a* comes before outcome *b* in *ranking*."""
    m = len(ranking)
    if not (0 <= a < m and 0 <= b < m):
        raise OutOfRangeIndexError(f"outcomes {a}, {b} must lie in [0, {m})")
    return ranking.index(a) < ranking.index(b)


@dataclass(frozen=True)
class Profile:
    """An ordered list of ballots over a common set of m outcomes."""

    ballots: tuple
    m: int

    @property
    def n(self) -> int:
        return len(self.ballots)

    def __iter__(self):
        return iter(self.ballots)


def make_profile(ballots: Sequence[Sequence[int]], m: int | None = None) -> Profile:
    """Validate every ballot and assemble a Profile (n >= 1)."""
    ballots = tuple(ballots)
    if not ballots:
        raise InvalidParametersError("a profile needs at least one ballot")
    if m is None:
        m = len(ballots[0])
    return Profile(tuple(make_ranking(b, m) for b in ballots), m)


def enumerate_rankings(m: int) -> Iterator:
    """Yield all m! rankings in lexicographic order."""
    if m < 1:
        raise InvalidParametersError("need at least one outcome")
    if m > MAX_ENUMERATED_OUTCOMES:
        raise TooLargeError(f"refusing to enumerate {m}! rankings (m > {MAX_ENUMERATED_OUTCOMES})")
    return itertools.permutations(range(m))


def enumerate_profiles(m: int, voters: int, budget: int | None = None) -> Iterator[Profile]:
    """Yield all (m!)^voters profiles, lexicographic in the ballot tuples.

    Guarded by *budget* (default 10^8 profiles); raises TooLargeError beyond it.
    """
    if voters < 1:
        raise InvalidParametersError("need at least one voter")
    count = math.factorial(m) ** voters
    if count > (DEFAULT_BUDGET if budget is None else budget):
        raise TooLargeError(f"{count} profiles exceed the enumeration budget")
    rankings = tuple(enumerate_rankings(m))
    for combo in itertools.product(rankings, repeat=voters):
        yield Profile(combo, m)


# ---------------------------------------------------------------------------
# Deterministic sampling
#
# Each (seed, index) pair keys its own SplitMix64 stream, so sample i is the
# same no matter how many samples were drawn before it or on which worker.

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def sample_ranking(m: int, seed: int, index: int) -> Ranking:
    """Uniformly random ranking, fully determined by (m, seed, index).

    Fisher-Yates driven by a SplitMix64 stream; bounded draws use rejection
    sampling so every permutation is exactly equally likely.
    """
    if m < 1:
        raise InvalidParametersError("need at least one outcome")
    state = _mix64((seed & _MASK64) ^ _GOLDEN)
    state = _mix64(state ^ (index & _MASK64))
    arr = list(range(m))
    for j in range(m - 1, 0, -1):
        bound = j + 1
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            state = (state + _GOLDEN) & _MASK64
            r = _mix64(state)
            if r < limit:
                break
        i = r % bound
        arr[j], arr[i] = arr[i], arr[j]
    return tuple(arr)


# ---------------------------------------------------------------------------
# Profile text format
#
#   line 1:        n m
#   lines 2..n+1:  comma-separated outcome indices, most preferred first
#   optional:      tiebreak: i1,i2,...,im
#
# '#' starts a comment line; blank lines are ignored; UTF-8 with \n endings.


def parse_profile(text: str) -> tuple:
    """Parse the profile text format; returns (Profile, TieBreak or None)."""
    lines = [ln.strip() for ln in text.split("\n")]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ProfileFormatError("empty profile text")
    head = lines[0].split()
    if len(head) != 2:
        raise ProfileFormatError(f"first line must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise ProfileFormatError(f"first line must be 'n m', got {lines[0]!r}") from None
    body = lines[1:]
    tiebreak = None
    if body and body[-1].lower().startswith("tiebreak:"):
        raw = body[-1].split(":", 1)[1]
        tiebreak = make_tiebreak(_parse_index_list(raw), m)
        body = body[:-1]
    if len(body) != n:
        raise ProfileFormatError(f"expected {n} ballot lines, found {len(body)}")
    ballots = [make_ranking(_parse_index_list(ln), m) for ln in body]
    return make_profile(ballots, m), tiebreak


def _parse_index_list(raw: str) -> list:
    try:
        return [int(tok) for tok in raw.split(",")]
    except ValueError:
        raise ProfileFormatError(f"malformed index list {raw!r}") from None


def format_profile(profile: Profile, tiebreak: TieBreak | None = None) -> str:
    """Render a profile (and optional tie-break) in the text format."""
    lines = [f"{profile.n} {profile.m}"]
    lines.extend(",".join(str(o) for o in ballot) for ballot in profile.ballots)
    if tiebreak is not None:
        lines.append("tiebreak: " + ",".join(str(o) for o in tiebreak))
    return "\n".join(lines) + "\n"


def read_profile_file(path) -> tuple:
    with open(path, encoding="utf-8") as fh:
        return parse_profile(fh.read())


def write_profile_file(path, profile: Profile, tiebreak: TieBreak | None = None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_profile(profile, tiebreak))
