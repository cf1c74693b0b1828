import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weightscape.errors import DimensionMismatch
from weightscape.ratcore import (ConstraintSystem, LinearConstraint,
                                 find_interior_point, is_feasible, rat,
                                 rat_str)


def system(dim, *constraints):
    return ConstraintSystem.make(dim, constraints)


def test_rat_parsing_and_serialization():
    assert rat("3/4") == Fraction(3, 4)
    assert rat("-7") == Fraction(-7)
    assert rat_str(Fraction(6, 8)) == "3/4"
    assert rat_str(Fraction(5, 1)) == "5"
    assert rat_str(Fraction(-2, 4)) == "-1/2"
    with pytest.raises(TypeError):
        rat(0.5)


def test_open_unit_interval_feasible():
    s = system(1, LinearConstraint.less((-1,), 0), LinearConstraint.less((1,), 1))
    assert is_feasible(s)
    (x,) = find_interior_point(s)
    assert 0 < x < 1


def test_strict_contradiction_infeasible():
    s = system(1, LinearConstraint.less((-1,), 0), LinearConstraint.at_most((1,), 0))
    assert not is_feasible(s)
    assert find_interior_point(s) is None


def test_equality_system_with_box_and_total():
    # 0 < a_i <= 1, sum > 2, a_1 + a_2 = 1; (1/2, 1/2, 3/4, 3/4) shows
    # feasibility, and the returned point must satisfy everything exactly
    rows = []
    for j in range(4):
        low = tuple(Fraction(-1) if i == j else Fraction(0) for i in range(4))
        high = tuple(Fraction(1) if i == j else Fraction(0) for i in range(4))
        rows.append(LinearConstraint.less(low, 0))
        rows.append(LinearConstraint.at_most(high, 1))
    rows.append(LinearConstraint.less((Fraction(-1),) * 4, -2))
    rows.append(LinearConstraint.equal((1, 1, 0, 0), 1))
    s = system(4, *rows)
    witness = (Fraction(1, 2), Fraction(1, 2), Fraction(3, 4), Fraction(3, 4))
    assert s.satisfied_by(witness)
    assert is_feasible(s)
    point = find_interior_point(s)
    assert s.satisfied_by(point)
    assert point[0] + point[1] == 1


def test_inconsistent_equalities():
    s = system(2, LinearConstraint.equal((1, 1), 1),
               LinearConstraint.equal((2, 2), 3))
    assert not is_feasible(s)


def test_degenerate_equality_point():
    s = system(1, LinearConstraint.at_most((1,), 2),
               LinearConstraint.at_most((-1,), -2))
    assert is_feasible(s)
    assert find_interior_point(s) == (Fraction(2),)


def test_strict_pinch_infeasible():
    s = system(1, LinearConstraint.less((1,), 2),
               LinearConstraint.at_most((-1,), -2))
    assert not is_feasible(s)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        system(2, LinearConstraint.less((1,), 0))


def test_present_iff_feasible_and_exact_membership(rng):
    for _ in range(200):
        dim = rng.randint(1, 3)
        rows = []
        for _ in range(rng.randint(1, 6)):
            coeffs = tuple(Fraction(rng.randint(-4, 4)) for _ in range(dim))
            const = Fraction(rng.randint(-6, 6))
            rel = rng.choice(["<", "<=", "="])
            rows.append(LinearConstraint.make(coeffs, const, rel))
        s = system(dim, *rows)
        feasible = is_feasible(s)
        point = find_interior_point(s)
        assert (point is not None) == feasible
        if point is not None:
            assert s.satisfied_by(point)


@st.composite
def small_systems(draw):
    dim = draw(st.integers(1, 3))
    count = draw(st.integers(1, 5))
    rows = []
    for _ in range(count):
        coeffs = tuple(Fraction(draw(st.integers(-3, 3))) for _ in range(dim))
        const = Fraction(draw(st.integers(-5, 5)))
        rel = draw(st.sampled_from(["<", "<=", "="]))
        rows.append(LinearConstraint.make(coeffs, const, rel))
    return ConstraintSystem.make(dim, tuple(rows))


@settings(max_examples=120, deadline=None)
@given(small_systems(), st.randoms(use_true_random=False))
def test_feasibility_invariant_under_permutation_and_scaling(s, rnd):
    base = is_feasible(s)
    shuffled = list(s.constraints)
    rnd.shuffle(shuffled)
    scaled = []
    for c in shuffled:
        factor = Fraction(rnd.randint(1, 5), rnd.randint(1, 5))
        scaled.append(LinearConstraint.make(
            tuple(factor * x for x in c.coefficients),
            factor * c.constant, c.relation))
    assert is_feasible(ConstraintSystem.make(s.dimension, tuple(scaled))) == base


def _grid_has_witness(constraints, dim, reach=2, denom=64):
    """Exact integer scan of the grid (i/denom) over [-reach, reach]^dim."""
    import numpy as np

    ticks = np.arange(-reach * denom, reach * denom + 1, dtype=np.int64)
    axes = np.meshgrid(*([ticks] * dim), indexing="ij", copy=False)
    ok = np.ones(axes[0].shape, dtype=bool)
    for c in constraints:
        # sum(coeff * x) REL const with x = i/denom is exact in integers
        value = sum(int(co) * ax for co, ax in zip(c.coefficients, axes))
        bound = int(c.constant) * denom
        if c.relation == "<":
            ok &= value < bound
        elif c.relation == "<=":
            ok &= value <= bound
        else:
            ok &= value == bound
    return bool(ok.any())


def test_grid_oracle_agreement(rng):
    # every feasibility the dense grid can witness must be confirmed;
    # integer data bounded by 10, grid step 1/64
    for trial in range(60):
        dim = rng.randint(1, 3)
        rows = []
        for _ in range(rng.randint(1, 4)):
            coeffs = tuple(Fraction(rng.randint(-10, 10)) for _ in range(dim))
            const = Fraction(rng.randint(-10, 10))
            rows.append(LinearConstraint.make(coeffs, const,
                                              rng.choice(["<", "<=", "="])))
        s = ConstraintSystem.make(dim, tuple(rows))
        # dim 3 scans the 1/8 sublattice of the 1/64 grid to bound runtime;
        # any witness found there is a 1/64-grid witness
        denom = 64 if dim <= 2 else 8
        if _grid_has_witness(rows, dim, denom=denom):
            assert is_feasible(s)


@pytest.fixture
def rng():
    return random.Random(7)
