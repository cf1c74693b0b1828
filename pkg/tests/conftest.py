"""Shared test helpers: random generators and independent oracles."""

import random
from fractions import Fraction
from itertools import combinations, permutations

import pytest

import weightscape as ws
from weightscape.curves import _degenerations


def rand_weight(rng, max_den=10):
    den = rng.randint(2, max_den)
    return Fraction(rng.randint(1, den), den)


def random_weight_data(rng, n, genus=0, attempts=500):
    """Random valid STRICT weight data (rejection sampling on the degree)."""
    for _ in range(attempts):
        ws_tuple = tuple(rand_weight(rng) for _ in range(n))
        if 2 * genus - 2 + sum(ws_tuple) > 0:
            return ws.validate(genus, ws_tuple)
    raise AssertionError("could not sample valid weight data")


def random_dominated(rng, data, attempts=500):
    """Random valid weight data componentwise <= data."""
    for _ in range(attempts):
        shrunk = tuple(w * Fraction(rng.randint(5, 10), 10)
                       for w in data.weights)
        if 2 * data.genus - 2 + sum(shrunk) > 0:
            return ws.validate(data.genus, shrunk)
    return data


def random_between(rng, low, high):
    """Random valid weight data with low <= B <= high componentwise."""
    mix = tuple(c + (a - c) * Fraction(rng.randint(0, 4), 4)
                for c, a in zip(low.weights, high.weights))
    return ws.validate(low.genus, mix)


def random_stable_tree(rng, data, max_steps=None):
    """Random data-stable marked tree built by random degenerations."""
    tree = ws.marked_tree(
        [(1, 0, [[m] for m in range(1, data.n + 1)])], [])
    steps = rng.randint(0, max_steps if max_steps is not None else data.n - 3)
    for _ in range(steps):
        options = [c for c in _degenerations(tree, data)
                   if ws.is_stable(c, data)]
        if not options:
            break
        tree = ws.canonical_form(rng.choice(options))
    return tree


def relabel_tree(tree, rng):
    """Isomorphic copy under a random permutation of the vertex ids."""
    ids = list(tree.vertex_ids)
    shuffled = ids[:]
    rng.shuffle(shuffled)
    mapping = dict(zip(ids, shuffled))
    vertices = [(mapping[v.id], v.genus, list(v.classes))
                for v in tree.vertices]
    edges = [(mapping[a], mapping[b]) for a, b in tree.edges]
    return ws.marked_tree(vertices, edges)


def brute_force_boundary(data):
    """Independent divisor scanner: every unordered partition and pair."""
    n = data.n
    nodal = set()
    for size in range(2, n - 1):
        for side in combinations(range(1, n + 1), size):
            other = tuple(sorted(set(range(1, n + 1)) - set(side)))
            if data.subset_sum(side) > 1 and data.subset_sum(other) > 1:
                nodal.add(frozenset((frozenset(side), frozenset(other))))
    pairs = {frozenset(p) for p in combinations(range(1, n + 1), 2)
             if data.subset_sum(p) <= 1}
    return nodal, pairs


def grid_sign_vectors(n, step_denom=64):
    """Distinct off-wall sign vectors of the 1/step grid over the open
    genus-0 domain, as Position-code strings aligned with the fine walls.

    Scans sorted tuples only (integer numerators, exact) and closes under
    the coordinate action of the symmetric group.
    """
    import numpy as np

    wall_list = ws.walls(0, n, ws.Granularity.FINE)
    subsets = [tuple(sorted(w.subset)) for w in wall_list]
    index_of = {frozenset(s): i for i, s in enumerate(subsets)}
    D = step_denom

    found = set()
    vals = np.arange(1, D + 1, dtype=np.int64)
    from itertools import combinations_with_replacement
    for prefix in combinations_with_replacement(range(1, D + 1), n - 2):
        lo = prefix[-1]
        a_second = vals[vals >= lo]
        A1, A2 = np.meshgrid(a_second, vals, indexing="ij")
        mask = A2 >= A1
        A1, A2 = A1[mask], A2[mask]
        total = sum(prefix) + A1 + A2
        ok = total > 2 * D
        if not ok.any():
            continue
        A1, A2 = A1[ok], A2[ok]
        coords = [np.full_like(A1, p) for p in prefix] + [A1, A2]
        code = np.zeros_like(A1)
        onwall = np.zeros_like(A1, dtype=bool)
        for s in subsets:
            ssum = sum(coords[j - 1] for j in s)
            sign = np.sign(ssum - D)
            onwall |= sign == 0
            code = code * 3 + (sign + 1)
        code = code[~onwall]
        found.update(np.unique(code).tolist())

    def decode(code):
        digits = []
        for _ in subsets:
            digits.append(int(code % 3) - 1)
            code //= 3
        return tuple(reversed(digits))

    closed = set()
    for code in found:
        signs = decode(code)
        for perm in permutations(range(1, n + 1)):
            mapped = tuple(
                signs[index_of[frozenset(perm[j - 1] for j in s)]]
                for s in subsets)
            closed.add(mapped)
    return {"".join("A" if v > 0 else "B" for v in vec) for vec in closed}


def permute_sign_vector(vec, perm, n):
    """Image of a fine sign vector under a coordinate permutation.

    perm maps old index -> new index (1-based); the wall S of the permuted
    point reads off the original wall perm^-1(S).
    """
    wall_list = ws.walls(0, n, ws.Granularity.FINE)
    subsets = [w.subset for w in wall_list]
    index_of = {s: i for i, s in enumerate(subsets)}
    inverse = {perm[i]: i + 1 for i in range(n)}
    out = []
    for s in subsets:
        pre = frozenset(inverse[j] for j in s)
        out.append(vec.positions[index_of[pre]])
    return tuple(out)


@pytest.fixture
def rng():
    return random.Random(20240811)
