"""GIT stability of n-point configurations on the line.

A linearization is a positive rational weight tuple normalized to sum 2
with every entry below 1.  A configuration is abstracted to the partition
recording which points coincide; stability depends on nothing else.  A
coincidence class is allowed exactly when its weight-sum stays below 1,
strictly semistable classes sum to exactly 1, and the linearization is
typical when no subset at all sums to 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import (AtypicalLinearization, DomainError, DomainViolation,
                     InternalInvariantError)
from .ratcore import rat, rat_str
from .weights import Granularity, Mode, WeightData, locate, validate

_ONE = Fraction(1)
_TWO = Fraction(2)


@dataclass(frozen=True)
class Linearization:
    t: tuple[Fraction, ...]

    def __post_init__(self):
        validate(0, self.t, Mode.BOUNDARY)

    @classmethod
    def make(cls, values: Iterable) -> "Linearization":
        return cls(tuple(rat(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.t)

    def subset_sum(self, subset: Iterable[int]) -> Fraction:
        return sum((self.t[i - 1] for i in subset), Fraction(0))

    def to_json_dict(self) -> dict:
        return {"t": [rat_str(v) for v in self.t]}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "Linearization":
        return cls.make(payload["t"])


@dataclass(frozen=True)
class ConfigType:
    """Set partition of {1..n} into coincidence classes."""

    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        seen: set[int] = set()
        for c in self.classes:
            if not c:
                raise DomainError("configuration classes must be nonempty")
            if seen & c:
                raise DomainError("configuration classes must be disjoint")
            seen.update(c)
        if seen != set(range(1, len(seen) + 1)):
            raise DomainError("configuration classes must cover 1..n")

    @classmethod
    def make(cls, classes: Iterable[Iterable[int]]) -> "ConfigType":
        normalized = sorted((frozenset(int(i) for i in c) for c in classes),
                            key=min)
        return cls(tuple(normalized))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.classes)

    def to_json_dict(self) -> dict:
        return {"classes": [sorted(c) for c in self.classes]}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "ConfigType":
        return cls.make(payload["classes"])


class GitVerdict(Enum):
    STABLE = "Stable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    UNSTABLE = "Unstable"


def stability(config: ConfigType, lin: Linearization) -> GitVerdict:
    """Stable iff every class sums below 1; unstable iff some class sums
    above 1; strictly semistable otherwise."""
    if config.n != lin.n:
        raise DomainError("configuration and linearization sizes differ")
    worst = max(lin.subset_sum(c) for c in config.classes)
    if worst < _ONE:
        return GitVerdict.STABLE
    if worst > _ONE:
        return GitVerdict.UNSTABLE
    return GitVerdict.STRICTLY_SEMISTABLE


def is_typical(lin: Linearization) -> bool:
    """True iff no nonempty subset of the weights sums to exactly 1."""
    return not _unit_subsets(lin)


def _unit_subsets(lin: Linearization) -> list[frozenset[int]]:
    hits = []
    for size in range(1, lin.n):
        for subset in combinations(range(1, lin.n + 1), size):
            if lin.subset_sum(subset) == _ONE:
                hits.append(frozenset(subset))
    return hits


def strictly_semistable_types(lin: Linearization) -> tuple[frozenset[int], ...]:
    """Subsets summing to exactly 1, one per complement pair; the canonical
    representative is the side containing index 1."""
    everything = frozenset(range(1, lin.n + 1))
    reps = {s if 1 in s else everything - s for s in _unit_subsets(lin)}
    return tuple(sorted(reps, key=lambda s: (len(s), tuple(sorted(s)))))


def tau(data: WeightData) -> Linearization:
    """Normalize weight data with sum >= 2 and entries below 1 onto the
    boundary: divide by half the total."""
    if data.genus != 0:
        raise DomainError("tau is defined for genus 0")
    total = data.total
    if total < _TWO or any(not (0 < w < _ONE) for w in data.weights):
        raise DomainViolation(
            "tau needs sum(b) >= 2 and 0 < b_i < 1 for every i")
    half = total / 2
    return Linearization.make(tuple(w / half for w in data.weights))


def tau_fine_preimage(lin: Linearization) -> WeightData:
    """A canonical interior weight datum mapping to the given typical
    boundary point under tau: scale by s = (1 + 1/M)/2 where M is the
    largest subset sum below 1.  The result lies in an open fine chamber."""
    if not is_typical(lin):
        raise AtypicalLinearization("the linearization admits a subset sum of 1")
    below = [lin.subset_sum(s)
             for size in range(1, lin.n + 1)
             for s in combinations(range(1, lin.n + 1), size)
             if lin.subset_sum(s) < _ONE]
    biggest = max(below)
    scale = (1 + 1 / biggest) / 2
    data = validate(0, tuple(scale * t for t in lin.t), Mode.STRICT)
    if locate(data, Granularity.FINE).has_on:
        raise InternalInvariantError("scaled weights landed on a fine wall")
    return data


@dataclass(frozen=True)
class QuotientMatch:
    matches: bool
    mismatched_subsets: tuple[frozenset[int], ...]
    ambiguous_subsets: tuple[frozenset[int], ...]  # subsets with sum(a) = 1

    def __bool__(self) -> bool:
        return self.matches


def chamber_matches_quotient(data: WeightData, lin: Linearization) -> QuotientMatch:
    """Compare the coincidence patterns allowed on an irreducible stable
    curve (sum(a_S) <= 1) with the stable configuration types
    (sum(t_S) < 1), over every subset of size >= 2.

    Subsets with sum(a_S) exactly 1 sit on a wall; they are reported as
    ambiguities rather than silently resolved.
    """
    data = validate(data.genus, data.weights, Mode.STRICT)
    if data.genus != 0:
        raise DomainError("quotient matching is defined for genus 0")
    if data.n != lin.n:
        raise DomainError("weight data and linearization sizes differ")
    if not is_typical(lin):
        raise AtypicalLinearization("the linearization admits a subset sum of 1")
    mismatched, ambiguous = [], []
    for size in range(2, data.n + 1):
        for subset in combinations(range(1, data.n + 1), size):
            a_sum = data.subset_sum(subset)
            allowed_curve = a_sum <= _ONE
            allowed_git = lin.subset_sum(subset) < _ONE
            if a_sum == _ONE:
                ambiguous.append(frozenset(subset))
            if allowed_curve != allowed_git:
                mismatched.append(frozenset(subset))
    return QuotientMatch(not mismatched, tuple(mismatched), tuple(ambiguous))
