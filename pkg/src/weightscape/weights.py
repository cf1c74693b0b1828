"""The weight domain, its coarse and fine wall sets, and chamber machinery.

The domain for (genus g, n points) is 0 < a_j <= 1 with a_1 + ... + a_n >
2 - 2g.  A wall is the hyperplane sum_{j in S} a_j = 1 for a marked subset
S; the fine decomposition uses 2 <= |S| <= n-2, the coarse one the strict
range 2 < |S| < n-2 (taken literally, so it is empty for n <= 5).  Open
chambers are the feasible all-strict sign assignments over the wall set.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from . import jsonio
from .errors import (BoundarySumMismatch, DegreeNotPositive, DomainError,
                     InternalInvariantError, LimitExceeded, OnWall,
                     WeightOutOfRange)
from .ratcore import (ConstraintSystem, LinearConstraint, Fraction, rat,
                      rat_str, is_feasible, _int_scaled, _solve_rows)

DEFAULT_ENUM_LIMIT = 8
CACHE_ENV_VAR = "WEIGHTSCAPE_CACHE"

_ZERO = Fraction(0)
_ONE = Fraction(1)
_TWO = Fraction(2)


class Mode(Enum):
    STRICT = "strict"        # 0 < a_j <= 1 and 2g-2+sum > 0
    ZERO_ALLOWED = "zero"    # 0 <= a_j <= 1 and 2g-2+sum > 0
    BOUNDARY = "boundary"    # g=0 only: 0 < a_j < 1 and sum = 2


@dataclass(frozen=True)
class WeightData:
    genus: int
    weights: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, _ZERO)

    def weight_map(self) -> dict[int, Fraction]:
        """1-based marking index -> weight."""
        return {i + 1: w for i, w in enumerate(self.weights)}

    def subset_sum(self, subset: Iterable[int]) -> Fraction:
        return sum((self.weights[i - 1] for i in subset), _ZERO)

    def to_json_dict(self) -> dict:
        return {"genus": self.genus, "weights": [rat_str(w) for w in self.weights]}

    @classmethod
    def from_json_dict(cls, payload: dict, mode: "Mode" = None) -> "WeightData":
        return validate(payload["genus"], payload["weights"],
                        mode or Mode.ZERO_ALLOWED)


def validate(genus, weights, mode: Mode = Mode.STRICT) -> WeightData:
    """Check the domain conditions for the given mode and build a WeightData.

    Raises WeightOutOfRange (with the offending index), DegreeNotPositive
    when 2g-2+sum <= 0, or BoundarySumMismatch in BOUNDARY mode.
    """
    if not isinstance(genus, int) or genus < 0:
        raise DomainError(f"genus must be a nonnegative integer, got {genus!r}")
    ws = tuple(rat(w) for w in weights)
    if not ws:
        raise DomainError("at least one weight is required")
    if mode == Mode.BOUNDARY and genus != 0:
        raise DomainError("BOUNDARY mode is defined for genus 0 only")
    for i, w in enumerate(ws, start=1):
        if mode == Mode.STRICT and not (_ZERO < w <= _ONE):
            raise WeightOutOfRange(i, w, f"need 0 < a_{i} <= 1, got {w}")
        if mode == Mode.ZERO_ALLOWED and not (_ZERO <= w <= _ONE):
            raise WeightOutOfRange(i, w, f"need 0 <= a_{i} <= 1, got {w}")
        if mode == Mode.BOUNDARY and not (_ZERO < w < _ONE):
            raise WeightOutOfRange(i, w, f"need 0 < a_{i} < 1, got {w}")
    total = sum(ws, _ZERO)
    if mode == Mode.BOUNDARY:
        if total != _TWO:
            raise BoundarySumMismatch(f"weights must sum to 2, got {total}")
    elif 2 * genus - 2 + total <= 0:
        raise DegreeNotPositive(f"2g-2+sum(a) = {2 * genus - 2 + total} <= 0")
    return WeightData(genus, ws)


class Granularity(Enum):
    COARSE = "coarse"
    FINE = "fine"


@dataclass(frozen=True)
class Wall:
    subset: frozenset[int]
    granularity: Granularity

    def sort_key(self):
        return (len(self.subset), tuple(sorted(self.subset)))


class Position(Enum):
    ABOVE = "A"   # sum_S a > 1
    BELOW = "B"   # sum_S a < 1
    ON = "O"      # sum_S a = 1


@dataclass(frozen=True)
class SignVector:
    genus: int
    n: int
    granularity: Granularity
    positions: tuple[Position, ...]  # aligned with walls(genus, n, granularity)

    @property
    def has_on(self) -> bool:
        return Position.ON in self.positions

    def codes(self) -> str:
        return "".join(p.value for p in self.positions)


@dataclass(frozen=True)
class Chamber:
    sign_vector: SignVector
    representative: WeightData


def _size_range(n: int, granularity: Granularity) -> range:
    if granularity == Granularity.FINE:
        return range(2, n - 1)       # 2 <= |S| <= n-2
    return range(3, n - 2)           # 2 < |S| < n-2, literally


def domain_constraints(genus: int, n: int) -> list[LinearConstraint]:
    """0 < a_j <= 1 for each j and sum(a) > 2-2g, in a fixed order."""
    rows = []
    for j in range(n):
        unit = tuple(Fraction(-1) if i == j else _ZERO for i in range(n))
        rows.append(LinearConstraint.less(unit, 0))          # -a_j < 0
    for j in range(n):
        unit = tuple(_ONE if i == j else _ZERO for i in range(n))
        rows.append(LinearConstraint.at_most(unit, 1))       # a_j <= 1
    rows.append(LinearConstraint.less(tuple(Fraction(-1) for _ in range(n)),
                                      2 * genus - 2))        # -sum < 2g-2
    return rows


def _wall_row(n: int, subset: frozenset[int], relation: str) -> LinearConstraint:
    coeffs = tuple(_ONE if (i + 1) in subset else _ZERO for i in range(n))
    return LinearConstraint.make(coeffs, 1, relation)


def _sign_row(n: int, subset: frozenset[int], position: Position) -> LinearConstraint:
    if position == Position.ON:
        return _wall_row(n, subset, "=")
    if position == Position.BELOW:
        return _wall_row(n, subset, "<")
    coeffs = tuple(Fraction(-1) if (i + 1) in subset else _ZERO for i in range(n))
    return LinearConstraint.make(coeffs, -1, "<")            # sum_S a > 1


@lru_cache(maxsize=None)
def walls(genus: int, n: int, granularity: Granularity) -> tuple[Wall, ...]:
    """All subsets in the granularity's size range whose hyperplane meets
    the domain, sorted by size then lexicographically.  Memoized: the wall
    set of a (genus, n, granularity) triple never changes."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if genus == 0 and n < 3:
        raise DomainError("genus 0 requires n >= 3")
    base = domain_constraints(genus, n)
    found = []
    for size in _size_range(n, granularity):
        for subset in combinations(range(1, n + 1), size):
            s = frozenset(subset)
            system = ConstraintSystem.make(n, base + [_wall_row(n, s, "=")])
            if is_feasible(system):
                found.append(Wall(s, granularity))
    found.sort(key=Wall.sort_key)
    return tuple(found)


def locate(data: WeightData, granularity: Granularity) -> SignVector:
    """Exact position of the weight datum against every wall."""
    validate(data.genus, data.weights, Mode.ZERO_ALLOWED)
    positions = []
    for wall in walls(data.genus, data.n, granularity):
        total = data.subset_sum(wall.subset)
        if total > 1:
            positions.append(Position.ABOVE)
        elif total < 1:
            positions.append(Position.BELOW)
        else:
            positions.append(Position.ON)
    return SignVector(data.genus, data.n, granularity, tuple(positions))


def same_chamber(a: WeightData, b: WeightData, granularity: Granularity) -> bool:
    """True iff both lie in the same open chamber.  Raises OnWall if either
    datum sits on a wall."""
    if (a.genus, a.n) != (b.genus, b.n):
        raise DomainError("weight data have different genus or length")
    loc_a = locate(a, granularity)
    loc_b = locate(b, granularity)
    if loc_a.has_on or loc_b.has_on:
        raise OnWall("weight datum lies on a wall")
    return loc_a == loc_b


def _chamber_cache_path(cache_dir: str, genus: int, n: int,
                        granularity: Granularity) -> str:
    name = f"chambers-g{genus}-n{n}-{granularity.value}.json"
    return os.path.join(cache_dir, name)


def _chambers_payload(genus, n, granularity, wall_list, chambers) -> dict:
    return {
        "genus": genus,
        "n": n,
        "granularity": granularity.value,
        "walls": [sorted(w.subset) for w in wall_list],
        "count": len(chambers),
        "chambers": [
            {"signs": ch.sign_vector.codes(),
             "representative": [rat_str(w) for w in ch.representative.weights]}
            for ch in chambers
        ],
    }


def _chambers_from_payload(payload, genus, n, granularity) -> tuple[Chamber, ...]:
    out = []
    for entry in payload["chambers"]:
        positions = tuple(Position(c) for c in entry["signs"])
        rep = validate(genus, entry["representative"], Mode.ZERO_ALLOWED)
        out.append(Chamber(SignVector(genus, n, granularity, positions), rep))
    return tuple(out)


def enumerate_chambers(genus: int, n: int, granularity: Granularity, *,
                       limit: Optional[int] = None,
                       cache_dir: Optional[str] = None) -> tuple[Chamber, ...]:
    """Every feasible On-free sign vector over the wall set, each with an
    interior representative; deterministic depth-first order.

    Results are cached as one JSON file per (genus, n, granularity) under
    `cache_dir` (or $WEIGHTSCAPE_CACHE); cache hits are byte-identical to
    recomputation.
    """
    cap = DEFAULT_ENUM_LIMIT if limit is None else limit
    if n > cap:
        raise LimitExceeded(f"n = {n} exceeds the enumeration limit {cap}")
    cache_dir = cache_dir or os.environ.get(CACHE_ENV_VAR)
    if cache_dir:
        path = _chamber_cache_path(cache_dir, genus, n, granularity)
        if os.path.exists(path):
            try:
                with open(path, "r", encoding="ascii") as fh:
                    payload = jsonio.loads(fh.read())
                expected = [sorted(w.subset)
                            for w in walls(genus, n, granularity)]
                if payload["walls"] == expected and \
                        payload["count"] == len(payload["chambers"]):
                    return _chambers_from_payload(payload, genus, n,
                                                  granularity)
            except (ValueError, KeyError):
                pass
            # unreadable or stale cache entry: recompute and overwrite

    wall_list = walls(genus, n, granularity)
    base = domain_constraints(genus, n)
    base_rows = [(*_int_scaled(c.coefficients, c.constant),
                  c.relation == "<") for c in base]
    sign_rows = {}
    for wall in wall_list:
        for position in (Position.ABOVE, Position.BELOW):
            c = _sign_row(n, wall.subset, position)
            sign_rows[(wall.subset, position)] = (
                *_int_scaled(c.coefficients, c.constant), True)
    chambers: list[Chamber] = []
    rows: list = list(base_rows)
    signs: list[Position] = []

    # Depth-first sign assignment with an inherited interior witness: the
    # branch containing the witness is feasible for free, only the other
    # side pays for an elimination run.
    def descend(index: int, witness: tuple[Fraction, ...]):
        if index == len(wall_list):
            feasible, point = _solve_rows(n, rows, [], True)
            if not feasible:
                raise InternalInvariantError("witnessed chamber is infeasible")
            rep = validate(genus, point, Mode.ZERO_ALLOWED)
            vec = SignVector(genus, n, granularity, tuple(signs))
            chambers.append(Chamber(vec, rep))
            return
        wall = wall_list[index]
        total = sum((witness[i - 1] for i in wall.subset), Fraction(0))
        for position in (Position.ABOVE, Position.BELOW):
            row = sign_rows[(wall.subset, position)]
            rows.append(row)
            signs.append(position)
            on_side = (total > 1 and position == Position.ABOVE) or \
                      (total < 1 and position == Position.BELOW)
            if on_side:
                descend(index + 1, witness)
            else:
                feasible, point = _solve_rows(n, rows, [], True)
                if feasible:
                    descend(index + 1, point)
            signs.pop()
            rows.pop()

    feasible, start = _solve_rows(n, list(base_rows), [], True)
    if feasible:
        descend(0, start)
    result = tuple(chambers)

    if cache_dir:
        os.makedirs(cache_dir, exist_ok=True)
        payload = _chambers_payload(genus, n, granularity, wall_list, result)
        with open(path, "w", encoding="ascii") as fh:
            fh.write(jsonio.canonical_dumps(payload))
    return result


def chambers_json(genus: int, n: int, granularity: Granularity,
                  chambers: tuple[Chamber, ...]) -> str:
    """Canonical serialization, byte-identical to the cache file."""
    wall_list = walls(genus, n, granularity)
    return jsonio.canonical_dumps(
        _chambers_payload(genus, n, granularity, wall_list, chambers))


def perturb_to_fine_chamber(data: WeightData) -> WeightData:
    """Shift every weight down by eps/n so the result lies in an open fine
    chamber with the same stable trees.

    eps is half the largest value keeping every strict condition strict:
    below-walls stay below with margin, above-walls above with margin, the
    degree condition keeps its margin, and every weight stays positive.
    """
    data = validate(data.genus, data.weights, Mode.STRICT)
    slacks = [data.total - (2 - 2 * data.genus), min(data.weights)]
    for wall in walls(data.genus, data.n, Granularity.FINE):
        total = data.subset_sum(wall.subset)
        if total != 1:
            slacks.append(abs(total - 1))
    eps = min(slacks) / 2
    step = eps / data.n
    shifted = validate(data.genus, tuple(w - step for w in data.weights),
                       Mode.STRICT)
    if locate(shifted, Granularity.FINE).has_on:
        raise InternalInvariantError("perturbation landed on a wall")
    return shifted


def universal_curve_weight(data: WeightData) -> WeightData:
    """Append a small weight eps realizing the universal curve: eps is half
    the minimum distance |sum_S a - 1| over the fine walls.  Raises OnWall
    when the input sits on a fine wall."""
    data = validate(data.genus, data.weights, Mode.STRICT)
    gaps = []
    for wall in walls(data.genus, data.n, Granularity.FINE):
        gap = abs(data.subset_sum(wall.subset) - 1)
        if gap == 0:
            raise OnWall(f"weight datum lies on the wall {sorted(wall.subset)}")
        gaps.append(gap)
    # A wall-free domain (e.g. n = 3, genus 0) leaves eps unconstrained;
    # 1/2 is the canonical choice.
    eps = min(gaps) / 2 if gaps else Fraction(1, 2)
    return validate(data.genus, data.weights + (eps,), Mode.STRICT)
