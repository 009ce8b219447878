"""Exhaustive oracles, independent of the constructive machinery.

Cover existence is decided by trying every labeling (with pruning), the
games are solved by full minimax over the coloring state space, and
`best_response_winner` plays a fixed Alice strategy against a Bob who
explores every reply.  These exist to validate the engine, so none of
them call into the union algorithm or the strategy code.
"""

from __future__ import annotations

from itertools import combinations

from matroidcolor.game import (
    ALICE,
    BOB,
    CLASSIC,
    GameState,
    apply,
    legal_colors,
)
from matroidcolor.matroids import Matroid, MatroidError, shared_ground_set

# Hard size guards: these solvers are desk-scale tools, not production paths.
MAX_COVER_ELEMENTS = 12
MAX_CHROMATIC_ELEMENTS = 9
MAX_TIGHT_ELEMENTS = 12
MAX_INDICATED_ELEMENTS = 8
MAX_MODIFIED_ELEMENTS = 7
# Replaces a flat bound on the number of colors: caps the coloring state
# space (k+1)^n that the memoized solvers may touch.
MAX_SOLVE_STATES = 64_000_000


class GuardError(ValueError):
    """Instance exceeds the desk-scale size guard."""


def _guard_elements(n: int, limit: int, what: str) -> None:
    if n > limit:
        raise GuardError(f"{what} guard: {n} elements exceeds the limit of {limit}")


def _guard_states(n: int, k: int) -> None:
    if (k + 1) ** n > MAX_SOLVE_STATES:
        raise GuardError(
            f"solver guard: {k} colors over {n} elements exceeds "
            f"{MAX_SOLVE_STATES} coloring states")


def bf_cover_exists(matroids) -> bool:
    """Does any labeling make every color class independent?

    Depth-first over elements in ascending id order, trying colors in
    ascending order and pruning as soon as a class goes dependent.
    """
    ms = tuple(matroids)
    order = sorted(shared_ground_set(ms))
    _guard_elements(len(order), MAX_COVER_ELEMENTS, "cover search")
    classes: list[frozenset[int]] = [frozenset() for _ in ms]

    def place(idx: int) -> bool:
        if idx == len(order):
            return True
        e = order[idx]
        for i, m in enumerate(ms):
            extended = classes[i] | {e}
            if m.is_independent(extended):
                classes[i] = extended
                if place(idx + 1):
                    return True
                classes[i] = extended - {e}
        return False

    return place(0)


def bf_chromatic(matroid: Matroid) -> int:
    """Least k such that k copies admit a cover, by exhaustive search."""
    if not matroid.ground_set:
        return 0
    _guard_elements(matroid.ground_size, MAX_CHROMATIC_ELEMENTS, "chromatic search")
    loops = matroid.loops()
    if loops:
        raise MatroidError(
            f"chromatic number undefined for loopy matroid (loops: {sorted(loops)})")
    k = 1
    while not bf_cover_exists([matroid] * k):
        k += 1
    return k


def bf_tight_sets(matroids) -> list[frozenset[int]]:
    """All nonempty proper subsets with ranks summing exactly to their size,
    ascending by (size, lexicographic)."""
    ms = tuple(matroids)
    order = sorted(shared_ground_set(ms))
    _guard_elements(len(order), MAX_TIGHT_ELEMENTS, "tight-set enumeration")
    found = []
    for size in range(1, len(order)):
        for combo in combinations(order, size):
            subset = frozenset(combo)
            if sum(m.rank(subset) for m in ms) == size:
                found.append(subset)
    return found


# ---------------------------------------------------------------------------
# Exact game values (minimax over all of Alice's and Bob's options)


def solve_indicated(matroids) -> str:
    """Optimal-play winner of the indicated game: Alice picks indications,
    Bob picks colors.  Memoized on the coloring."""
    ms = tuple(matroids)
    ground = shared_ground_set(ms)
    _guard_elements(len(ground), MAX_INDICATED_ELEMENTS, "indicated-game solver")
    _guard_states(len(ground), len(ms))
    memo: dict[tuple[frozenset[int], ...], bool] = {}

    def alice_wins(classes: tuple[frozenset[int], ...], uncolored: frozenset[int]) -> bool:
        if not uncolored:
            return True
        cached = memo.get(classes)
        if cached is not None:
            return cached
        result = any(
            _bob_colors_and_alice_wins(ms, classes, uncolored, e, alice_wins)
            for e in uncolored
        )
        memo[classes] = result
        return result

    return ALICE if alice_wins(tuple(frozenset() for _ in ms), ground) else BOB


def _bob_colors_and_alice_wins(ms, classes, uncolored, element, continuation) -> bool:
    """True iff every admissible Bob color for `element` leaves a win."""
    any_legal = False
    for i, m in enumerate(ms):
        extended = classes[i] | {element}
        if not m.is_independent(extended):
            continue
        any_legal = True
        nxt = tuple(extended if j == i else part for j, part in enumerate(classes))
        if not continuation(nxt, uncolored - {element}):
            return False
    return any_legal


def solve_modified(matroids) -> str:
    """Optimal-play winner of the modified game, where Bob also chooses the
    move kind each round and may indicate instead of color."""
    ms = tuple(matroids)
    ground = shared_ground_set(ms)
    _guard_elements(len(ground), MAX_MODIFIED_ELEMENTS, "modified-game solver")
    _guard_states(len(ground), len(ms))
    memo: dict[tuple[frozenset[int], ...], bool] = {}

    def alice_wins(classes: tuple[frozenset[int], ...], uncolored: frozenset[int]) -> bool:
        if not uncolored:
            return True
        cached = memo.get(classes)
        if cached is not None:
            return cached
        kind1 = any(
            _bob_colors_and_alice_wins(ms, classes, uncolored, e, alice_wins)
            for e in uncolored
        )
        result = kind1 and all(
            _alice_colors_and_wins(ms, classes, uncolored, e, alice_wins)
            for e in uncolored
        )
        memo[classes] = result
        return result

    return ALICE if alice_wins(tuple(frozenset() for _ in ms), ground) else BOB


def _alice_colors_and_wins(ms, classes, uncolored, element, continuation) -> bool:
    """True iff some admissible Alice color for `element` leads to a win."""
    for i, m in enumerate(ms):
        extended = classes[i] | {element}
        if not m.is_independent(extended):
            continue
        nxt = tuple(extended if j == i else part for j, part in enumerate(classes))
        if continuation(nxt, uncolored - {element}):
            return True
    return False


# ---------------------------------------------------------------------------
# Playing a fixed Alice against an exhaustive Bob


def best_response_winner(game: GameState, alice) -> str:
    """Winner when `alice` (a deterministic strategy positioned at `game`)
    faces a Bob who searches all of his replies.

    Used both to verify that the engine never loses and to power the
    adversarial Bob.  Memoized on (coloring, Alice's internal state).
    """
    memo: dict[tuple, bool] = {}
    walker = _classic_walk if game.mode == CLASSIC else _modified_walk
    return ALICE if walker(game, alice.clone(), memo) else BOB


def _classic_walk(game: GameState, alice, memo: dict) -> bool:
    if not game.uncolored:
        return True
    key = (game.classes, alice.state_key())
    cached = memo.get(key)
    if cached is not None:
        return cached
    element = alice.next_indication(game)
    legal = sorted(legal_colors(game, element))
    result = bool(legal)
    for color in legal:
        after = apply(game, element, color)
        branch = alice.clone()
        branch.observe(after, element, color, BOB)
        if not _classic_walk(after, branch, memo):
            result = False
            break
    memo[key] = result
    return result


def _modified_walk(game: GameState, alice, memo: dict) -> bool:
    if not game.uncolored:
        return True
    key = (game.classes, alice.state_key())
    cached = memo.get(key)
    if cached is not None:
        return cached

    indicator = alice.clone()
    element = indicator.next_indication(game)
    legal = sorted(legal_colors(game, element))
    result = bool(legal)
    for color in legal:
        after = apply(game, element, color)
        branch = indicator.clone()
        branch.observe(after, element, color, BOB)
        if not _modified_walk(after, branch, memo):
            result = False
            break

    if result:
        for element in sorted(game.uncolored):
            if not legal_colors(game, element):
                result = False
                break
            branch = alice.clone()
            color = branch.choose_color(game, element)
            after = apply(game, element, color)
            branch.observe(after, element, color, ALICE)
            if not _modified_walk(after, branch, memo):
                result = False
                break

    memo[key] = result
    return result
