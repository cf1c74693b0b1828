"""Exact rational arithmetic and exact linear feasibility.

Rationals are `fractions.Fraction` values (always reduced, denominator
positive); every computation in the package stays exact, floats never
appear.  Rationals serialize as "p/q" in lowest terms, or "p" when the
denominator is 1 -- which is precisely `str(Fraction)`.

Feasibility of a system of strict/non-strict linear inequalities and
equalities is decided by Fourier-Motzkin elimination: equalities are
rewritten as substitutions first, then the remaining variables are
eliminated in index order, propagating a strictness flag (the sum of a
strict and a non-strict bound is strict).  Redundant rows are pruned by
pairwise dominance among parallel constraints only.  Interior points are
reconstructed deterministically by back-substitution through the
elimination order, taking the midpoint of each feasible interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import DimensionMismatch, InternalInvariantError

Rational = Fraction
RationalLike = Union[Fraction, int, str]

LESS = "<"
AT_MOST = "<="
EQUAL = "="
RELATIONS = (LESS, AT_MOST, EQUAL)


def rat(value: RationalLike) -> Fraction:
    """Parse a rational from an int, a Fraction, or a "p/q" string.

    Floats are rejected on purpose: exactness is the contract.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value: RationalLike) -> str:
    """Serialize as "p/q" in lowest terms ("p" when the denominator is 1)."""
    return str(rat(value))


@dataclass(frozen=True)
class LinearConstraint:
    """sum(coefficients[i] * x_i) REL constant, REL in {<, <=, =}."""

    coefficients: tuple[Fraction, ...]
    constant: Fraction
    relation: str

    def __post_init__(self):
        if self.relation not in RELATIONS:
            raise DimensionMismatch(f"unknown relation {self.relation!r}")

    @classmethod
    def make(cls, coefficients: Iterable[RationalLike], constant: RationalLike,
             relation: str) -> "LinearConstraint":
        return cls(tuple(rat(c) for c in coefficients), rat(constant), relation)

    @classmethod
    def less(cls, coefficients, constant) -> "LinearConstraint":
        return cls.make(coefficients, constant, LESS)

    @classmethod
    def at_most(cls, coefficients, constant) -> "LinearConstraint":
        return cls.make(coefficients, constant, AT_MOST)

    @classmethod
    def equal(cls, coefficients, constant) -> "LinearConstraint":
        return cls.make(coefficients, constant, EQUAL)

    def holds_at(self, point: Sequence[Fraction]) -> bool:
        value = sum((c * x for c, x in zip(self.coefficients, point)), Fraction(0))
        if self.relation == LESS:
            return value < self.constant
        if self.relation == AT_MOST:
            return value <= self.constant
        return value == self.constant


@dataclass(frozen=True)
class ConstraintSystem:
    dimension: int
    constraints: tuple[LinearConstraint, ...]

    def __post_init__(self):
        if self.dimension < 1:
            raise DimensionMismatch("dimension must be >= 1")
        for c in self.constraints:
            if len(c.coefficients) != self.dimension:
                raise DimensionMismatch(
                    f"constraint has {len(c.coefficients)} coefficients, "
                    f"system dimension is {self.dimension}")

    @classmethod
    def make(cls, dimension: int, constraints: Iterable[LinearConstraint]):
        return cls(dimension, tuple(constraints))

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        return all(c.holds_at(point) for c in self.constraints)


# Inequality rows are (coeffs, bound, strict) meaning coeffs . x < bound
# when strict, <= bound otherwise.  Rows are scaled to integer coefficients
# on entry (positive scaling preserves the solution set exactly), so the
# elimination loop runs on machine integers; Fractions reappear only for
# bounds of derived rows and during back-substitution.
_ZERO = Fraction(0)


def _int_scaled(coeffs, const):
    from math import lcm
    denoms = [c.denominator for c in coeffs] + [const.denominator]
    scale = lcm(*denoms)
    return tuple(int(c * scale) for c in coeffs), int(const * scale)


def _split_rows(system: ConstraintSystem):
    ineqs, eqs = [], []
    for c in system.constraints:
        coeffs, const = _int_scaled(c.coefficients, c.constant)
        if c.relation == EQUAL:
            eqs.append((coeffs, const))
        else:
            ineqs.append((coeffs, const, c.relation == LESS))
    return ineqs, eqs


def _substitute(coeffs, const, pivot, eq_coeffs, eq_const):
    # Eliminate x_p from sum(r_i x_i) REL b with the equality row e:
    # |e_p| * r - (r_p * sgn(e_p)) * e has zero p-coefficient, and the
    # positive multiplier |e_p| preserves the relation direction.
    f = coeffs[pivot]
    if f == 0:
        return coeffs, const
    ep = eq_coeffs[pivot]
    mult = abs(ep)
    factor = f if ep > 0 else -f
    new_coeffs = tuple(mult * r - factor * e
                       for r, e in zip(coeffs, eq_coeffs))
    return new_coeffs, mult * const - factor * eq_const


def _apply_equalities(ineqs, eqs):
    """Pivot out equalities; returns (ineqs, substitutions) or None if inconsistent."""
    subs = []  # (pivot, eq_coeffs, eq_const): x_p = (const - sum e_i x_i)/e_p
    pending = list(eqs)
    while pending:
        coeffs, const = pending.pop(0)
        pivot = next((i for i, c in enumerate(coeffs) if c != 0), None)
        if pivot is None:
            if const != 0:
                return None
            continue
        subs.append((pivot, coeffs, const))
        ineqs = [(*_substitute(rc, rb, pivot, coeffs, const), rs)
                 for rc, rb, rs in ineqs]
        pending = [_substitute(rc, rb, pivot, coeffs, const)
                   for rc, rb in pending]
    return ineqs, subs


def _prune(rows):
    """Drop satisfied variable-free rows, keep the tightest of parallel rows.

    Returns None when a variable-free row is violated (system infeasible).
    """
    from math import gcd
    kept: dict[tuple[int, ...], tuple] = {}
    for coeffs, bound, strict in rows:
        lead = next((i for i, c in enumerate(coeffs) if c != 0), None)
        if lead is None:
            if bound < 0 or (strict and bound == 0):
                return None
            continue
        scale = gcd(*(abs(c) for c in coeffs if c))
        key = tuple(c // scale for c in coeffs)
        nb = Fraction(bound, scale)
        prev = kept.get(key)
        if prev is None or nb < prev[0] or (nb == prev[0] and strict and not prev[1]):
            kept[key] = (nb, strict)
    return [(key, b, s) for key, (b, s) in kept.items()]


def _eliminate(rows, var):
    uppers, lowers, rest = [], [], []
    for row in rows:
        c = row[0][var]
        if c > 0:
            uppers.append(row)
        elif c < 0:
            lowers.append(row)
        else:
            rest.append(row)
    out = rest
    for uc, ub, us in uppers:
        for lc, lb, ls in lowers:
            mu = -lc[var]
            ml = uc[var]
            coeffs = tuple(mu * u + ml * lv for u, lv in zip(uc, lc))
            out.append((coeffs, mu * ub + ml * lb, us or ls))
    return out


def _solve_rows(dimension: int, ineqs, eqs, want_point: bool):
    """Row-level solver shared by the public API and internal hot paths.

    Rows must already be integer-scaled (see _int_scaled / _split_rows).
    """
    pivoted = _apply_equalities(ineqs, eqs)
    if pivoted is None:
        return False, None
    rows, subs = pivoted
    sub_vars = {p for p, _, _ in subs}
    order = [v for v in range(dimension) if v not in sub_vars]

    stages = []
    rows = _prune(rows)
    if rows is None:
        return False, None
    for v in order:
        stages.append((v, rows))
        rows = _prune(_eliminate(rows, v))
        if rows is None:
            return False, None
    if not want_point:
        return True, None

    values: list[Optional[Fraction]] = [None] * dimension
    for v, staged in reversed(stages):
        values[v] = _pick_value(v, staged, values)
    for pivot, eq_coeffs, eq_const in reversed(subs):
        acc = Fraction(eq_const)
        for i, e in enumerate(eq_coeffs):
            if i != pivot and e != 0:
                acc -= e * values[i]
        values[pivot] = acc / eq_coeffs[pivot]
    return True, tuple(values)


def _solve(system: ConstraintSystem, want_point: bool):
    ineqs, eqs = _split_rows(system)
    feasible, point = _solve_rows(system.dimension, ineqs, eqs, want_point)
    if point is not None and not system.satisfied_by(point):
        raise InternalInvariantError("reconstructed point violates the system")
    return feasible, point


def _pick_value(var, rows, values):
    lower = upper = None  # (bound, strict)
    for coeffs, bound, strict in rows:
        cv = coeffs[var]
        if cv == 0:
            continue
        acc = Fraction(bound)
        for i, c in enumerate(coeffs):
            if i != var and c != 0:
                acc -= c * values[i]
        limit = acc / cv
        if cv > 0:
            if upper is None or limit < upper[0] or (limit == upper[0] and strict):
                upper = (limit, strict)
        else:
            if lower is None or limit > lower[0] or (limit == lower[0] and strict):
                lower = (limit, strict)
    if lower is None and upper is None:
        return _ZERO
    if lower is None:
        return upper[0] - 1
    if upper is None:
        return lower[0] + 1
    if lower[0] < upper[0]:
        return (lower[0] + upper[0]) / 2
    if lower[0] == upper[0] and not lower[1] and not upper[1]:
        return lower[0]
    raise InternalInvariantError("empty interval during back-substitution")


def is_feasible(system: ConstraintSystem) -> bool:
    """Exact feasibility, strict inequalities included."""
    return _solve(system, want_point=False)[0]


def find_interior_point(system: ConstraintSystem) -> Optional[tuple[Fraction, ...]]:
    """A rational point satisfying every constraint, or None when infeasible.

    Deterministic for a fixed input: back-substitution through the
    elimination order, midpoint of each feasible interval.
    """
    return _solve(system, want_point=True)[1]
