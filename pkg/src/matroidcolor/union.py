"""Constructive matroid union: split a ground set into sets independent in
given matroids, or certify that no split exists.

`partition_ground_set` is the workhorse: it either produces a `Cover`
(one independent part per matroid, parts disjoint, union the whole ground
set) or a `Violator` (a set whose ranks sum to less than its size, which
makes a cover impossible).  `chromatic_number` and `find_proper_tight_set`
are built on top of it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from matroidcolor.matroids import Matroid, MatroidError, shared_ground_set


@dataclass(frozen=True)
class Cover:
    """Disjoint parts covering the ground set, part i independent in matroid i."""

    parts: tuple[frozenset[int], ...]

    def part_of(self, element: int) -> int:
        """1-based index of the part containing `element`."""
        for i, part in enumerate(self.parts):
            if element in part:
                return i + 1
        raise ValueError(f"element {element} is in no part")


@dataclass(frozen=True)
class Violator:
    """A set whose ranks sum below its size; no cover can exist."""

    elements: frozenset[int]
    surplus: int


def surplus(matroids: list[Matroid] | tuple[Matroid, ...], subset) -> int:
    """Sum of the ranks of `subset` minus its size.

    Nonnegative for every subset exactly when a cover exists.
    """
    ground = shared_ground_set(matroids)
    s = frozenset(subset)
    if not s <= ground:
        raise MatroidError(f"elements {sorted(s - ground)} not in the ground set")
    return sum(m.rank(s) for m in matroids) - len(s)


def partition_ground_set(matroids: list[Matroid] | tuple[Matroid, ...]) -> Cover | Violator:
    """Split the ground set into independent parts, or find a violator.

    Elements are inserted in ascending id order.  Each insertion searches the
    exchange digraph breadth-first: an arc y -> x for color i means x sits in
    the fundamental circuit of y with part i, so y can replace x there; a
    sink is a pair (y, i) where part i accepts y directly.  Augmenting along
    a shortest path keeps every part independent.  If no sink is reachable,
    the reachable set is a violator.
    """
    ground = shared_ground_set(matroids)
    k = len(matroids)
    parts: list[set[int]] = [set() for _ in range(k)]

    unplaced = [e for e in sorted(ground) if not _augment(matroids, parts, e)]
    if unplaced:
        # Unplaceable elements stay unplaceable as the assignment grows, so
        # their joint closure against the final parts certifies infeasibility
        # (each contributes -1 to the surplus).
        reached = _reachable_closure(matroids, parts, unplaced)
        extra = surplus(matroids, reached)
        assert extra == -len(unplaced) < 0, f"closure of unplaced elements has surplus {extra}"
        return Violator(reached, extra)

    return Cover(tuple(frozenset(p) for p in parts))


def _augment(matroids, parts: list[set[int]], element: int) -> bool:
    """Try to place `element` into the partial partition.

    Level-order search with ascending ids inside each level; the first sink
    in that order ends an augmenting path of minimum length.
    """
    k = len(matroids)
    parent: dict[int, tuple[int, int]] = {}  # y -> (predecessor, color moving pred into its part)
    reached = {element}
    level = [element]

    while level:
        frontier: set[int] = set()
        for y in level:
            for i in range(k):
                if y in parts[i]:
                    continue
                part = frozenset(parts[i])
                if matroids[i].is_independent(part | {y}):
                    _apply_path(parts, parent, y, i)
                    return True
                circuit = matroids[i].fundamental_circuit(part, y)
                for x in circuit - {y}:
                    if x not in reached:
                        reached.add(x)
                        parent[x] = (y, i)
                        frontier.add(x)
        level = sorted(frontier)

    return False


def _reachable_closure(matroids, parts: list[set[int]], seeds: list[int]) -> frozenset[int]:
    """Everything reachable from `seeds` through fundamental circuits."""
    k = len(matroids)
    reached = set(seeds)
    queue = deque(seeds)
    while queue:
        y = queue.popleft()
        for i in range(k):
            if y in parts[i]:
                continue
            part = frozenset(parts[i])
            assert not matroids[i].is_independent(part | {y}), \
                "supposedly unplaceable element has an accepting part"
            for x in matroids[i].fundamental_circuit(part, y) - {y}:
                if x not in reached:
                    reached.add(x)
                    queue.append(x)
    return frozenset(reached)


def _apply_path(parts: list[set[int]], parent, sink: int, sink_color: int) -> None:
    """Walk parent pointers back from the sink, shifting each element one
    step along the augmenting path."""
    parts[sink_color].add(sink)
    y = sink
    while y in parent:
        pred, color = parent[y]
        parts[color].discard(y)
        parts[color].add(pred)
        y = pred


def verify_cover(matroids: list[Matroid] | tuple[Matroid, ...], cover: Cover) -> bool:
    """Check the cover certificate: disjoint, covering, each part independent."""
    ground = shared_ground_set(matroids)
    if len(cover.parts) != len(matroids):
        return False
    total = 0
    union: set[int] = set()
    for m, part in zip(matroids, cover.parts):
        total += len(part)
        union |= part
        if not part <= ground or not m.is_independent(part):
            return False
    return total == len(union) and union == ground


def chromatic_number(matroid: Matroid) -> int:
    """Least number of colors in a proper coloring of the ground set.

    Searches k = 1, 2, ... until k copies of the matroid admit a cover.
    """
    if not matroid.ground_set:
        return 0
    loops = matroid.loops()
    if loops:
        raise MatroidError(
            f"chromatic number undefined for loopy matroid (loops: {sorted(loops)})")
    k = 1
    while True:
        if isinstance(partition_ground_set([matroid] * k), Cover):
            return k
        k += 1


def find_proper_tight_set(matroids: list[Matroid] | tuple[Matroid, ...],
                          cover: Cover) -> frozenset[int] | None:
    """A nonempty proper subset whose ranks sum exactly to its size, or None.

    Seeds each element in ascending id order and grows it to its forward
    closure in the exchange digraph induced by the cover: expanding y adds
    the fundamental circuit of y with every part that rejects y.  Reaching
    an element some part would accept kills the seed (the closure cannot be
    tight); otherwise the closure is the minimal tight set containing the
    seed, and it is returned as long as it is proper.
    """
    ground = shared_ground_set(matroids)
    if not verify_cover(matroids, cover):
        raise MatroidError("find_proper_tight_set requires a valid cover")
    k = len(matroids)

    for seed in sorted(ground):
        reached = {seed}
        queue = deque([seed])
        addable = False
        while queue and not addable:
            y = queue.popleft()
            grown: list[int] = []
            for i in range(k):
                if y in cover.parts[i]:
                    continue
                if matroids[i].is_independent(cover.parts[i] | {y}):
                    addable = True
                    break
                circuit = matroids[i].fundamental_circuit(cover.parts[i], y)
                for x in sorted(circuit - {y}):
                    if x not in reached:
                        reached.add(x)
                        grown.append(x)
            queue.extend(sorted(grown))
        if addable or reached == ground:
            continue
        tight = frozenset(reached)
        assert surplus(matroids, tight) == 0, "closure of seed is not tight"
        return tight

    return None
