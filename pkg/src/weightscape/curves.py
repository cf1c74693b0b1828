"""Dual graphs of weighted pointed nodal curves and their combinatorics.

A MarkedTree records one nodal pointed curve: vertices are irreducible
components (carrying a geometric genus), edges are nodes (self-loops
allowed), and the markings 1..n are partitioned into coincidence classes
attached to vertices.  A class flagged node_supported sits at a node of
its component and is legal only when every member has weight zero.

Stability of a tree against weight data asks that every coincidence class
has weight-sum <= 1 and every vertex has positive log degree
2g_v - 2 + valence + sum of its marking weights.  Lowering the weights is
realized combinatorially by `stabilize`, which repeatedly contracts the
offending vertices: a valence-1 vertex is deleted and its markings merge
into a single class at the attachment point, a valence-2 vertex is
squeezed out by contracting one incident edge and its (weight-zero)
markings land at the resulting node.  Marking labels are 1-based and are
never relabeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Optional, Union

from .errors import (DomainError, InternalInvariantError, LimitExceeded,
                     NonterminatingContraction, NotAStable,
                     ResidualDegreeNotPositive, UnequalWeightsInBlock,
                     WeightsNotDominated)
from .weights import DEFAULT_ENUM_LIMIT, Mode, WeightData, validate

_ZERO = Fraction(0)
WeightsLike = Union[WeightData, Mapping[int, Fraction]]


@dataclass(frozen=True)
class MarkClass:
    markings: frozenset[int]
    node_supported: bool = False

    def sort_key(self):
        return min(self.markings)


@dataclass(frozen=True)
class Vertex:
    id: int
    genus: int = 0
    classes: tuple[MarkClass, ...] = ()


@dataclass(frozen=True)
class MarkedTree:
    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...]

    def vertex(self, vid: int) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise DomainError(f"no vertex with id {vid}")

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(v.id for v in self.vertices)

    def valence(self, vid: int) -> int:
        return sum((a == vid) + (b == vid) for a, b in self.edges)

    @property
    def markings(self) -> frozenset[int]:
        out: set[int] = set()
        for v in self.vertices:
            for c in v.classes:
                out.update(c.markings)
        return frozenset(out)

    @property
    def betti(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @property
    def arithmetic_genus(self) -> int:
        return sum(v.genus for v in self.vertices) + self.betti

    @property
    def codimension(self) -> int:
        return len(self.edges) + sum(
            len(c.markings) - 1 for v in self.vertices for c in v.classes)

    def to_json_dict(self) -> dict:
        return {
            "vertices": [
                {"id": v.id, "genus": v.genus,
                 "classes": [sorted(c.markings) for c in v.classes],
                 "node_supported": [c.node_supported for c in v.classes]}
                for v in self.vertices
            ],
            "edges": [list(e) for e in self.edges],
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "MarkedTree":
        vertices = []
        for entry in payload["vertices"]:
            flags = entry.get("node_supported") or [False] * len(entry["classes"])
            classes = [MarkClass(frozenset(members), bool(flag))
                       for members, flag in zip(entry["classes"], flags)]
            vertices.append((entry["id"], entry["genus"], classes))
        return marked_tree(vertices, [tuple(e) for e in payload["edges"]])


def mark_class(markings: Iterable[int], node_supported: bool = False) -> MarkClass:
    return MarkClass(frozenset(int(m) for m in markings), node_supported)


def marked_tree(vertices, edges=()) -> MarkedTree:
    """Build and validate a MarkedTree in canonical order.

    `vertices` holds (id, genus, classes) triples where each class is a
    MarkClass or an iterable of marking indices; `edges` holds unordered
    id pairs (repeats allowed, self-loops allowed).
    """
    built = []
    for vid, genus, classes in vertices:
        normalized = []
        for c in classes:
            if not isinstance(c, MarkClass):
                c = mark_class(c)
            if not c.markings:
                raise DomainError("coincidence classes must be nonempty")
            normalized.append(c)
        normalized.sort(key=MarkClass.sort_key)
        built.append(Vertex(int(vid), int(genus), tuple(normalized)))
    built.sort(key=lambda v: v.id)
    norm_edges = tuple(sorted(tuple(sorted((int(a), int(b)))) for a, b in edges))
    tree = MarkedTree(tuple(built), norm_edges)
    _check_tree(tree)
    return tree


def _check_tree(tree: MarkedTree):
    ids = [v.id for v in tree.vertices]
    if not ids:
        raise DomainError("a tree needs at least one vertex")
    if len(set(ids)) != len(ids):
        raise DomainError("vertex ids must be unique")
    id_set = set(ids)
    for a, b in tree.edges:
        if a not in id_set or b not in id_set:
            raise DomainError(f"edge ({a},{b}) references a missing vertex")
    for v in tree.vertices:
        if v.genus < 0:
            raise DomainError("vertex genus must be nonnegative")
    seen: set[int] = set()
    for v in tree.vertices:
        for c in v.classes:
            if seen & c.markings:
                raise DomainError("marking assigned to more than one class")
            seen.update(c.markings)
    # connectivity
    adjacency: dict[int, set[int]] = {i: set() for i in ids}
    for a, b in tree.edges:
        adjacency[a].add(b)
        adjacency[b].add(a)
    stack, reached = [ids[0]], {ids[0]}
    while stack:
        for u in adjacency[stack.pop()]:
            if u not in reached:
                reached.add(u)
                stack.append(u)
    if reached != id_set:
        raise DomainError("the dual graph must be connected")


def _adjacency(tree: MarkedTree) -> dict[int, list[int]]:
    adj: dict[int, list[int]] = {v.id: [] for v in tree.vertices}
    for a, b in tree.edges:
        adj[a].append(b)
        if a != b:
            adj[b].append(a)
    return adj


def canonical_key(tree: MarkedTree):
    """Order-insensitive structure key for genus-0 marked trees.

    Marked trees with labeled markings have no nontrivial automorphisms,
    so rooting at the vertex holding the smallest marking and sorting
    child serializations gives a complete isomorphism invariant.
    """
    if tree.betti != 0 or any(a == b for a, b in tree.edges):
        raise DomainError("canonical keys are defined for trees only")
    root = _root_vertex(tree)
    adj = _adjacency(tree)
    by_id = {v.id: v for v in tree.vertices}

    def ser(vid, parent):
        v = by_id[vid]
        cls = tuple(sorted((tuple(sorted(c.markings)), c.node_supported)
                           for c in v.classes))
        kids = tuple(sorted(ser(u, vid) for u in adj[vid] if u != parent))
        return (v.genus, cls, kids)

    return ser(root, None)


def canonical_form(tree: MarkedTree) -> MarkedTree:
    """Isomorphic copy with vertex ids 1..k assigned in canonical order."""
    if tree.betti != 0 or any(a == b for a, b in tree.edges):
        raise DomainError("canonical forms are defined for trees only")
    root = _root_vertex(tree)
    adj = _adjacency(tree)
    by_id = {v.id: v for v in tree.vertices}

    def ser(vid, parent):
        v = by_id[vid]
        cls = tuple(sorted((tuple(sorted(c.markings)), c.node_supported)
                           for c in v.classes))
        kids = tuple(sorted(ser(u, vid) for u in adj[vid] if u != parent))
        return (v.genus, cls, kids)

    new_vertices, new_edges = [], []
    counter = [0]

    def walk(vid, parent):
        counter[0] += 1
        nid = counter[0]
        v = by_id[vid]
        new_vertices.append((nid, v.genus, v.classes))
        for _, u in sorted((ser(u, vid), u) for u in adj[vid] if u != parent):
            cid = walk(u, vid)
            new_edges.append((nid, cid))
        return nid

    walk(root, None)
    return marked_tree(new_vertices, new_edges)


def _root_vertex(tree: MarkedTree) -> int:
    marks = tree.markings
    if not marks:
        raise DomainError("canonical rooting needs at least one marking")
    lowest = min(marks)
    for v in tree.vertices:
        if any(lowest in c.markings for c in v.classes):
            return v.id
    raise InternalInvariantError("lowest marking not found on any vertex")


def _weight_map(weights: WeightsLike) -> dict[int, Fraction]:
    if isinstance(weights, WeightData):
        return weights.weight_map()
    return {int(k): Fraction(v) for k, v in weights.items()}


def _check_marking_agreement(tree: MarkedTree, wmap: Mapping[int, Fraction]):
    if tree.markings != frozenset(wmap):
        raise DomainError(
            f"tree markings {sorted(tree.markings)} do not match the weight "
            f"indices {sorted(wmap)}")


def vertex_log_degree(tree: MarkedTree, vertex_id: int,
                      weights: WeightsLike) -> Fraction:
    """Degree of the log divisor on one component:
    2g_v - 2 + valence (self-loops twice) + sum of marking weights there."""
    wmap = _weight_map(weights)
    v = tree.vertex(vertex_id)
    total = sum((wmap[m] for c in v.classes for m in c.markings), _ZERO)
    return Fraction(2 * v.genus - 2 + tree.valence(vertex_id)) + total


@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    class_violations: tuple[tuple[int, tuple[int, ...]], ...]
    degree_violations: tuple[tuple[int, Fraction], ...]
    node_support_violations: tuple[tuple[int, tuple[int, ...]], ...]

    def __bool__(self) -> bool:
        return self.stable


def is_stable(tree: MarkedTree, weights: WeightsLike,
              mode: Mode = Mode.STRICT) -> StabilityReport:
    """Stability check with a full violation report.

    Stable means: every coincidence class has weight-sum <= 1, every
    node-supported class consists of weight-zero markings only, and every
    vertex has positive log degree.  Trees built through `marked_tree` are
    already structurally validated.
    """
    if isinstance(weights, WeightData):
        validate(weights.genus, weights.weights, mode)
        if tree.arithmetic_genus != weights.genus:
            raise DomainError(
                f"tree has arithmetic genus {tree.arithmetic_genus}, "
                f"weight data has genus {weights.genus}")
    wmap = _weight_map(weights)
    _check_marking_agreement(tree, wmap)

    class_bad, node_bad, degree_bad = [], [], []
    for v in tree.vertices:
        for c in v.classes:
            members = tuple(sorted(c.markings))
            if sum((wmap[m] for m in c.markings), _ZERO) > 1:
                class_bad.append((v.id, members))
            if c.node_supported and any(wmap[m] > 0 for m in c.markings):
                node_bad.append((v.id, members))
        degree = vertex_log_degree(tree, v.id, wmap)
        if degree <= 0:
            degree_bad.append((v.id, degree))
    return StabilityReport(
        stable=not (class_bad or node_bad or degree_bad),
        class_violations=tuple(class_bad),
        degree_violations=tuple(degree_bad),
        node_support_violations=tuple(node_bad))


class _Graph:
    """Mutable scratch copy used by the contraction loop.

    Edges carry identity keys and node-supported classes remember which
    edge (node of the curve) they sit at, so that squeezing out a chain of
    weight-zero components merges everything landing on the resulting
    single node into one class, independent of contraction order.  Classes
    from the input tree carry no edge association (the serialized format
    has none) and are treated as sitting at a surviving node.
    """

    def __init__(self, tree: MarkedTree):
        self.genus = {v.id: v.genus for v in tree.vertices}
        # class records: (markings, node_supported, edge_key or None)
        self.classes = {v.id: [(set(c.markings), c.node_supported, None)
                               for c in v.classes] for v in tree.vertices}
        self.edges = {i: tuple(e) for i, e in enumerate(tree.edges)}
        self._next_edge = len(tree.edges)

    def valence(self, vid: int) -> int:
        return sum((a == vid) + (b == vid) for a, b in self.edges.values())

    def degree(self, vid: int, wmap) -> Fraction:
        marked = sum((wmap[m] for cls, _, _ in self.classes[vid]
                      for m in cls), _ZERO)
        return Fraction(2 * self.genus[vid] - 2 + self.valence(vid)) + marked

    def add_edge(self, a: int, b: int) -> int:
        key = self._next_edge
        self._next_edge += 1
        self.edges[key] = (a, b)
        return key

    def pop_node_classes_at(self, vid: int, edge_keys) -> set:
        """Remove and return the markings of vid's node-supported classes
        sitting at one of the given edges."""
        taken: set = set()
        remaining = []
        for cls, ns, key in self.classes[vid]:
            if ns and key is not None and key in edge_keys:
                taken.update(cls)
            else:
                remaining.append((cls, ns, key))
        self.classes[vid] = remaining
        return taken

    def freeze(self) -> MarkedTree:
        vertices = [(vid, self.genus[vid],
                     [MarkClass(frozenset(c), ns) for c, ns, _ in classes])
                    for vid, classes in self.classes.items()]
        return marked_tree(vertices, list(self.edges.values()))


def _contract_vertex(graph: _Graph, vid: int, wmap):
    valence = graph.valence(vid)
    incident = [k for k, (a, b) in graph.edges.items() if vid in (a, b)]
    moved = set()
    for cls, _, _ in graph.classes[vid]:
        moved.update(cls)
    if valence == 1:
        # type I: the component is deleted; its markings, together with
        # any markings sitting at the attachment node, land at what is now
        # a smooth point of the neighbor.
        a, b = graph.edges[incident[0]]
        target = b if a == vid else a
        del graph.edges[incident[0]]
        moved |= graph.pop_node_classes_at(target, set(incident))
        if moved:
            graph.classes[target].append((moved, False, None))
    elif valence == 2 and len(incident) == 2:
        # type II: squeeze the component out; its two nodes become one,
        # collecting the component's markings (all weight zero here) and
        # whatever already sat on either disappearing node.
        if graph.genus[vid] != 0:
            raise InternalInvariantError("contracting a positive-genus vertex")
        if any(wmap[m] > 0 for m in moved):
            raise InternalInvariantError(
                "type II contraction moving positive weight")
        ends = []
        for k in incident:
            a, b = graph.edges[k]
            ends.append(b if a == vid else a)
        target = min(ends)
        other = ends[0] if target == ends[1] else ends[1]
        for end in set(ends):
            moved |= graph.pop_node_classes_at(end, set(incident))
        for k in incident:
            del graph.edges[k]
        new_key = graph.add_edge(*sorted((target, other)))
        if moved:
            graph.classes[target].append((moved, True, new_key))
    else:
        raise InternalInvariantError(
            f"vertex {vid} has valence {valence} and nonpositive degree")
    del graph.classes[vid]
    del graph.genus[vid]


def _contract_until_stable(graph: _Graph, wmap) -> None:
    rounds = len(graph.genus) + 1
    for _ in range(rounds):
        bad = sorted(v for v in graph.genus if graph.degree(v, wmap) <= 0)
        if not bad:
            return
        _contract_vertex(graph, bad[0], wmap)
    raise NonterminatingContraction("contraction loop failed to terminate")


def stabilize(tree: MarkedTree, a: WeightData, b: WeightData) -> MarkedTree:
    """The unique b-stable tree obtained by contracting every vertex whose
    log degree under b is nonpositive, lowest vertex id first.

    `b` must be dominated by `a` componentwise and may contain zero
    weights as long as 2g-2+sum(b) stays positive; zero-weight markings
    are retained.
    """
    a = validate(a.genus, a.weights, Mode.ZERO_ALLOWED)
    b = validate(b.genus, b.weights, Mode.ZERO_ALLOWED)
    if (a.genus, a.n) != (b.genus, b.n):
        raise DomainError("weight data have different genus or length")
    if any(bw > aw for aw, bw in zip(a.weights, b.weights)):
        raise WeightsNotDominated("target weights exceed the source weights")
    report = is_stable(tree, a, Mode.ZERO_ALLOWED)
    if not report:
        raise NotAStable(f"input tree is not stable for the source weights: "
                         f"{report}")
    graph = _Graph(tree)
    wmap = b.weight_map()
    _contract_until_stable(graph, wmap)
    result = graph.freeze()
    if not is_stable(result, b, Mode.ZERO_ALLOWED):
        raise InternalInvariantError("contraction did not reach stability")
    return result


def forget(tree: MarkedTree, a: WeightData, keep: Iterable[int]) -> MarkedTree:
    """Delete the markings outside `keep`, then contract until stable for
    the kept weights.  Labels are preserved verbatim."""
    a = validate(a.genus, a.weights, Mode.ZERO_ALLOWED)
    kept = sorted(set(int(k) for k in keep))
    full = a.weight_map()
    if not kept or any(k not in full for k in kept):
        raise DomainError("keep must be a nonempty subset of the marking indices")
    if not is_stable(tree, a, Mode.ZERO_ALLOWED):
        raise NotAStable("input tree is not stable for the source weights")
    wmap = {k: full[k] for k in kept}
    residual = 2 * a.genus - 2 + sum(wmap.values(), _ZERO)
    if residual <= 0:
        raise ResidualDegreeNotPositive(
            f"2g-2+sum over kept weights = {residual} <= 0")
    graph = _Graph(tree)
    kept_set = set(kept)
    for vid in list(graph.classes):
        pruned = []
        for cls, ns, key in graph.classes[vid]:
            cls = cls & kept_set
            if cls:
                pruned.append((cls, ns, key))
        graph.classes[vid] = pruned
    _contract_until_stable(graph, wmap)
    result = graph.freeze()
    if not is_stable(result, wmap):
        raise InternalInvariantError("forgetting did not reach stability")
    return result


@dataclass(frozen=True)
class Stratum:
    tree: MarkedTree
    codimension: int


def _degenerations(tree: MarkedTree, data: WeightData):
    """One-step degenerations: merge two classes at a vertex, or split a
    vertex into two joined by a new edge."""
    by_id = {v.id: v for v in tree.vertices}
    # class merges
    for v in tree.vertices:
        for i, j in combinations(range(len(v.classes)), 2):
            merged_markings = v.classes[i].markings | v.classes[j].markings
            if data.subset_sum(merged_markings) > 1:
                continue
            classes = [c for k, c in enumerate(v.classes) if k not in (i, j)]
            classes.append(MarkClass(frozenset(merged_markings), False))
            vertices = [(u.id, u.genus,
                         classes if u.id == v.id else list(u.classes))
                        for u in tree.vertices]
            yield marked_tree(vertices, tree.edges)
    # vertex splits
    new_id = max(by_id) + 1
    for v in tree.vertices:
        incident = [i for i, (x, y) in enumerate(tree.edges) if v.id in (x, y)]
        parts = [("class", k) for k in range(len(v.classes))]
        parts += [("edge", i) for i in incident]
        if len(parts) < 2:
            continue
        # part 0 pinned to the surviving side; swapping sides is an
        # isomorphism, so this halves the enumeration without loss
        for mask in range(1, 1 << (len(parts) - 1)):
            side2 = {parts[k + 1] for k in range(len(parts) - 1)
                     if mask >> k & 1}
            classes1, classes2 = [], []
            for k, c in enumerate(v.classes):
                (classes2 if ("class", k) in side2 else classes1).append(c)
            edges = []
            for i, (x, y) in enumerate(tree.edges):
                if i in incident and ("edge", i) in side2:
                    edges.append((new_id, y if x == v.id else x))
                else:
                    edges.append((x, y))
            edges.append((v.id, new_id))
            vertices = [(u.id, u.genus,
                         classes1 if u.id == v.id else list(u.classes))
                        for u in tree.vertices]
            vertices.append((new_id, 0, classes2))
            yield marked_tree(vertices, edges)


def enumerate_strata(data: WeightData, max_codim: int, *,
                     limit: Optional[int] = None) -> tuple[Stratum, ...]:
    """All stable marked trees up to codimension `max_codim`, genus 0 only,
    in deterministic (codimension, canonical key) order."""
    data = validate(data.genus, data.weights, Mode.STRICT)
    if data.genus != 0:
        raise DomainError("stratum enumeration is implemented for genus 0")
    cap = DEFAULT_ENUM_LIMIT if limit is None else limit
    if data.n > cap:
        raise LimitExceeded(f"n = {data.n} exceeds the enumeration limit {cap}")
    root = marked_tree(
        [(1, 0, [mark_class([m]) for m in range(1, data.n + 1)])], [])
    if not is_stable(root, data):
        raise InternalInvariantError("the open stratum is always stable")
    strata = [Stratum(root, 0)]
    level = {canonical_key(root): root}
    for codim in range(1, max_codim + 1):
        nxt: dict = {}
        for tree in level.values():
            for candidate in _degenerations(tree, data):
                if not is_stable(candidate, data):
                    continue
                key = canonical_key(candidate)
                if key not in nxt:
                    nxt[key] = canonical_form(candidate)
        level = nxt
        strata.extend(Stratum(t, codim)
                      for _, t in sorted(level.items(), key=lambda kv: kv[0]))
        if not level:
            break
    return tuple(strata)


class DivisorKind(Enum):
    NODAL = "nodal"
    COINCIDENCE = "coincidence"


@dataclass(frozen=True)
class BoundaryDivisor:
    kind: DivisorKind
    members: frozenset[int]            # nodal: the side containing index 1
    complement: Optional[frozenset[int]] = None

    def sort_key(self):
        return (self.kind.value, len(self.members), tuple(sorted(self.members)))


def boundary_divisors(data: WeightData) -> tuple[BoundaryDivisor, ...]:
    """Codimension-1 boundary: unordered partitions with both weight-sums
    above 1 (nodal) and pairs with weight-sum at most 1 (coincidence)."""
    data = validate(data.genus, data.weights, Mode.STRICT)
    if data.genus != 0:
        raise DomainError("boundary divisors are implemented for genus 0")
    n = data.n
    everything = frozenset(range(1, n + 1))
    nodal = []
    for size in range(1, n):
        for rest in combinations(range(2, n + 1), size - 1):
            side = frozenset((1,) + rest)
            other = everything - side
            if data.subset_sum(side) > 1 and data.subset_sum(other) > 1:
                nodal.append(BoundaryDivisor(DivisorKind.NODAL, side, other))
    pairs = [BoundaryDivisor(DivisorKind.COINCIDENCE, frozenset(p))
             for p in combinations(range(1, n + 1), 2)
             if data.subset_sum(p) <= 1]
    return tuple(sorted(nodal + pairs, key=BoundaryDivisor.sort_key))


class DivisorStatus(Enum):
    PRESERVED = "preserved"
    CONTRACTED = "contracted"
    BECOMES_COINCIDENCE = "becomes_coincidence"


@dataclass(frozen=True)
class DivisorFate:
    divisor: BoundaryDivisor
    status: DivisorStatus
    collapsed_side: Optional[frozenset[int]] = None
    factor_weights: Optional[WeightData] = None


def contracted_divisors(a: WeightData, b: WeightData) -> tuple[DivisorFate, ...]:
    """Classify every boundary divisor of `a` under the reduction to `b`.

    A nodal divisor whose side I drops to sum <= 1 is contracted when
    |I| > 2 (with the factorization weights (b_j..., b_I) reported) and
    turns into the coincidence divisor of the pair when |I| = 2.
    """
    a = validate(a.genus, a.weights, Mode.STRICT)
    b = validate(b.genus, b.weights, Mode.ZERO_ALLOWED)
    if (a.genus, a.n) != (b.genus, b.n):
        raise DomainError("weight data have different genus or length")
    if any(bw > aw for aw, bw in zip(a.weights, b.weights)):
        raise WeightsNotDominated("target weights exceed the source weights")
    fates = []
    for divisor in boundary_divisors(a):
        if divisor.kind == DivisorKind.COINCIDENCE:
            fates.append(DivisorFate(divisor, DivisorStatus.PRESERVED))
            continue
        sum_i = b.subset_sum(divisor.members)
        sum_j = b.subset_sum(divisor.complement)
        if sum_i > 1 and sum_j > 1:
            fates.append(DivisorFate(divisor, DivisorStatus.PRESERVED))
            continue
        if sum_i <= 1 and sum_j <= 1:
            raise InternalInvariantError("both sides dropped to sum <= 1")
        side = divisor.members if sum_i <= 1 else divisor.complement
        other = divisor.complement if sum_i <= 1 else divisor.members
        if len(side) == 2:
            fates.append(DivisorFate(divisor, DivisorStatus.BECOMES_COINCIDENCE,
                                     collapsed_side=side))
            continue
        wmap = b.weight_map()
        factor = validate(
            0, tuple(wmap[j] for j in sorted(other)) + (b.subset_sum(side),),
            Mode.ZERO_ALLOWED)
        fates.append(DivisorFate(divisor, DivisorStatus.CONTRACTED,
                                 collapsed_side=side, factor_weights=factor))
    return tuple(fates)


def is_reduction_iso(a: WeightData, b: WeightData) -> bool:
    """True iff every subset crossing the sum-1 threshold has size 2."""
    a = validate(a.genus, a.weights, Mode.STRICT)
    b = validate(b.genus, b.weights, Mode.ZERO_ALLOWED)
    if (a.genus, a.n) != (b.genus, b.n):
        raise DomainError("weight data have different genus or length")
    if any(bw > aw for aw, bw in zip(a.weights, b.weights)):
        raise WeightsNotDominated("target weights exceed the source weights")
    for size in range(3, a.n + 1):
        for subset in combinations(range(1, a.n + 1), size):
            if a.subset_sum(subset) > 1 and b.subset_sum(subset) <= 1:
                return False
    return True


def is_blowup_profile(data: WeightData, subset: Iterable[int]) -> bool:
    """True iff the subset has weight-sum above 1 while every proper subset
    stays at or below 1 (the reduction is then a projective-space blow-up).

    Pure subset arithmetic: boundary-normalized tuples are accepted too.
    """
    members = sorted(set(int(i) for i in subset))
    if len(members) < 3:
        raise DomainError("blow-up profiles need |I| >= 3")
    if members[0] < 1 or members[-1] > data.n:
        raise DomainError("subset out of range")
    if data.subset_sum(members) <= 1:
        return False
    return all(data.subset_sum(sub) <= 1
               for sub in combinations(members, len(members) - 1))


class DegreeCase(Enum):
    VANISHES = "Vanishes"
    EXCEPTIONAL_1 = "Exceptional1"
    EXCEPTIONAL_2 = "Exceptional2"
    NONVANISHING = "Nonvanishing"


def degree_vanishing_case(g: int, b: int, d: int, k: int, sigma: int,
                          N: int) -> DegreeCase:
    """Case classification for sections of omega(B+Sigma) x M^(-N) on an
    irreducible curve, where M = omega^k(kB+D) is ample.

    The twist degree is (1-Nk)(2g-2+b) + sigma - Nd; a negative degree
    forces vanishing.  Degree >= 0 happens only at the two exceptional
    parameter tuples (d=0, k=1, g=0, b=3) and (d=0, k=1, g=1, b=1), or in
    the uncovered corner sigma = N = 2, reported as Nonvanishing.
    """
    for name, value in (("g", g), ("b", b), ("d", d)):
        if not isinstance(value, int) or value < 0:
            raise DomainError(f"{name} must be a nonnegative integer")
    if not isinstance(k, int) or k <= 0:
        raise DomainError("k must be a positive integer")
    if not isinstance(N, int) or N < 2:
        raise DomainError("N must be an integer >= 2")
    if sigma not in (0, 1, 2):
        raise DomainError("sigma must be 0, 1, or 2")
    if k * (2 * g - 2 + b) + d < 1:
        raise DomainError("M is not ample: k(2g-2+b)+d < 1")
    degree = (1 - N * k) * (2 * g - 2 + b) + sigma - N * d
    if degree < 0:
        return DegreeCase.VANISHES
    if (d, k, g, b) == (0, 1, 0, 3):
        return DegreeCase.EXCEPTIONAL_1
    if (d, k, g, b) == (0, 1, 1, 1):
        return DegreeCase.EXCEPTIONAL_2
    return DegreeCase.NONVANISHING


def symmetrized_boundary_count(data: WeightData,
                               blocks: Iterable[Iterable[int]]) -> int:
    """Number of boundary-divisor orbits under the product of symmetric
    groups permuting within the given equal-weight blocks."""
    data = validate(data.genus, data.weights, Mode.STRICT)
    block_list = [tuple(sorted(set(int(i) for i in blk))) for blk in blocks]
    block_list.sort(key=lambda blk: blk[0] if blk else 0)
    flattened = [i for blk in block_list for i in blk]
    if sorted(flattened) != list(range(1, data.n + 1)):
        raise DomainError("blocks must partition the marking indices")
    wmap = data.weight_map()
    for blk in block_list:
        if len({wmap[i] for i in blk}) > 1:
            raise UnequalWeightsInBlock(
                f"block {list(blk)} mixes distinct weights")
    block_of = {i: bi for bi, blk in enumerate(block_list) for i in blk}

    def signature(subset):
        counts = [0] * len(block_list)
        for i in subset:
            counts[block_of[i]] += 1
        return tuple(counts)

    orbits = set()
    for divisor in boundary_divisors(data):
        if divisor.kind == DivisorKind.NODAL:
            sig = tuple(sorted((signature(divisor.members),
                                signature(divisor.complement))))
            orbits.add((DivisorKind.NODAL.value, sig))
        else:
            i, j = sorted(divisor.members)
            orbits.add((DivisorKind.COINCIDENCE.value,
                        tuple(sorted((block_of[i], block_of[j])))))
    return len(orbits)
