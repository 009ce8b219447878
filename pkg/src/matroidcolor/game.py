"""Referee and strategies for the indicated coloring games on matroids.

Classic mode: Alice indicates an uncolored element each round and Bob
colors it; color class i must stay independent in matroid i.  Alice wins
when everything is colored, Bob wins when an indicated element has no
admissible color.  Modified mode: Bob additionally picks, every round,
whether he colors Alice's indication (kind 1) or indicates an element
that Alice must color (kind 2).

Alice's engine keeps a stack of nested regions.  Whenever the current
minors restricted to the innermost region contain a proper tight set
(ranks summing exactly to its size), the subgame moves there first; with
no tight set, any element is safe to indicate and the minimum id is used.
In modified mode the engine additionally maintains a witness: a cover of
the uncolored elements in the current minors, whose part containing an
element is always an admissible color for it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from matroidcolor.matroids import Matroid, shared_ground_set
from matroidcolor.union import Cover, find_proper_tight_set, partition_ground_set

ALICE = "alice"
BOB = "bob"
CLASSIC = "classic"
MODIFIED = "modified"

ALICE_STRATEGIES = ("engine", "naive")
BOB_STRATEGIES = ("random", "first-fit", "adversarial")


class GameError(ValueError):
    """Invalid game configuration or move."""


class IllegalMoveError(GameError):
    """Rejected move; `legal` carries the admissible alternatives."""

    def __init__(self, message: str, legal: list[int]):
        super().__init__(message)
        self.legal = legal


class InfeasibleGameError(GameError):
    """No cover exists, so the engine's winning guarantee is void."""


class EngineInvariantError(RuntimeError):
    """A strategy invariant broke; indicates a bug, not bad input."""


@dataclass(frozen=True)
class GameState:
    """Immutable snapshot: fixed matroids plus the partial coloring."""

    matroids: tuple[Matroid, ...]
    mode: str
    classes: tuple[frozenset[int], ...]
    uncolored: frozenset[int]
    feasible: bool
    winner: str | None = None

    @property
    def colors(self) -> int:
        return len(self.matroids)

    @property
    def ground_set(self) -> frozenset[int]:
        return self.matroids[0].ground_set

    @property
    def coloring(self) -> dict[int, int]:
        return {e: i + 1 for i, part in enumerate(self.classes) for e in part}


def new_game(matroids, mode: str = CLASSIC) -> GameState:
    """Fresh game; precomputes whether a cover exists (`feasible`)."""
    if mode not in (CLASSIC, MODIFIED):
        raise GameError(f"unknown mode {mode!r}")
    ms = tuple(matroids)
    ground = shared_ground_set(ms)
    for e in sorted(ground):
        if all(m.rank(frozenset((e,))) == 0 for m in ms):
            raise GameError(f"uncolorable element {e}: a loop in every matroid")
    feasible = isinstance(partition_ground_set(ms), Cover)
    return GameState(
        matroids=ms,
        mode=mode,
        classes=tuple(frozenset() for _ in ms),
        uncolored=ground,
        feasible=feasible,
        winner=ALICE if not ground else None,
    )


def legal_colors(state: GameState, element: int) -> set[int]:
    """Colors whose class stays independent after adding `element`."""
    if element not in state.ground_set:
        raise GameError(f"element {element} not in the ground set")
    if element not in state.uncolored:
        raise GameError(f"element {element} is already colored")
    return {
        i + 1
        for i, m in enumerate(state.matroids)
        if m.is_independent(state.classes[i] | {element})
    }


def apply(state: GameState, element: int, color: int) -> GameState:
    """Color `element`; rejects illegal moves without touching the state."""
    if state.winner is not None:
        raise GameError("game is already over")
    legal = legal_colors(state, element)
    if color not in legal:
        raise IllegalMoveError(
            f"color {color} not admissible for element {element}", sorted(legal))
    classes = tuple(
        part | {element} if i + 1 == color else part
        for i, part in enumerate(state.classes)
    )
    uncolored = state.uncolored - {element}
    return replace(
        state,
        classes=classes,
        uncolored=uncolored,
        winner=ALICE if not uncolored else None,
    )


def declare_bob_win(state: GameState) -> GameState:
    """Terminal state for a stuck colorist."""
    return replace(state, winner=BOB)


def current_minors(state: GameState) -> list[Matroid]:
    """Matroid i contracted by its color class, restricted to the uncolored set.

    All k minors share the uncolored set as their ground set.
    """
    return [
        m.contract(state.classes[i]).restrict(state.uncolored)
        for i, m in enumerate(state.matroids)
    ]


# ---------------------------------------------------------------------------
# Transcripts


@dataclass(frozen=True)
class Round:
    number: int
    indicator: str
    element: int
    colorist: str
    color: int


@dataclass(frozen=True)
class Transcript:
    colors: int
    mode: str
    rounds: tuple[Round, ...]
    winner: str


def replay_transcript(matroids, transcript: Transcript) -> GameState:
    """Re-run a transcript through the referee, checking every invariant.

    Raises GameError if any round is malformed or illegal, or if the
    recorded winner is inconsistent with the final position.
    """
    state = new_game(matroids, transcript.mode)
    if transcript.colors != len(state.matroids):
        raise GameError("transcript color count does not match the matroids")
    for i, rnd in enumerate(transcript.rounds):
        if rnd.number != i + 1:
            raise GameError(f"round numbers must be consecutive from 1, got {rnd.number}")
        if transcript.mode == CLASSIC and (rnd.indicator, rnd.colorist) != (ALICE, BOB):
            raise GameError(f"round {rnd.number}: classic rounds are indicated by alice")
        if {rnd.indicator, rnd.colorist} != {ALICE, BOB}:
            raise GameError(f"round {rnd.number}: indicator and colorist must differ")
        state = apply(state, rnd.element, rnd.color)
    complete = not state.uncolored
    if (transcript.winner == ALICE) != complete:
        raise GameError("transcript winner inconsistent with the final coloring")
    if transcript.winner == BOB:
        if not any(not legal_colors(state, e) for e in state.uncolored):
            raise GameError("bob recorded as winner but every element is still colorable")
        state = declare_bob_win(state)
    return state


# ---------------------------------------------------------------------------
# Alice


class AliceEngine:
    """Winning strategy whenever a cover exists.

    Indications come from the region stack described in the module
    docstring; in modified mode a witness cover of the uncolored elements
    answers Bob's indications and is rebuilt after every round Bob colors.
    """

    def __init__(self, game: GameState):
        if not game.feasible:
            raise InfeasibleGameError(
                "no cover of the ground set exists; the engine cannot guarantee a win")
        self._mode = game.mode
        self._stack: list[frozenset[int]] = []
        self._witness: list[frozenset[int]] | None = None
        if game.mode == MODIFIED:
            self._witness = self._compute_witness(game)

    def clone(self) -> AliceEngine:
        other = object.__new__(AliceEngine)
        other._mode = self._mode
        other._stack = list(self._stack)
        other._witness = None if self._witness is None else list(self._witness)
        return other

    def state_key(self) -> tuple:
        witness = None if self._witness is None else tuple(self._witness)
        return (tuple(self._stack), witness)

    def next_indication(self, game: GameState) -> int:
        """Minimum id of the innermost region, after pushing every tight set
        found in the current minors restricted to that region."""
        if not game.uncolored:
            raise GameError("no uncolored element to indicate")
        self._prune(game)
        minors = current_minors(game)
        region = self._stack[-1] if self._stack else game.uncolored
        while True:
            restricted = [m.restrict(region) for m in minors]
            cover = partition_ground_set(restricted)
            if not isinstance(cover, Cover):
                raise InfeasibleGameError(
                    "current position admits no cover; cannot indicate safely")
            tight = find_proper_tight_set(restricted, cover)
            if tight is None:
                break
            self._stack.append(tight)
            region = tight
        return min(region)

    def choose_color(self, game: GameState, element: int) -> int:
        """Color of the witness part holding `element` (always admissible)."""
        if self._witness is None:
            raise EngineInvariantError("witness absent: colorist move outside modified mode")
        for i, part in enumerate(self._witness):
            if element in part:
                self._witness[i] = part - {element}
                return i + 1
        raise EngineInvariantError(f"witness stale: element {element} in no part")

    def observe(self, game_after: GameState, element: int, color: int, colorist: str) -> None:
        """Update internal state after the referee accepted a move."""
        self._prune(game_after)
        if self._mode == MODIFIED and colorist == BOB:
            self._witness = self._compute_witness(game_after)

    def _prune(self, game: GameState) -> None:
        # Colored elements leave every region; regions that became empty or
        # equal to their neighbor collapse, keeping the nesting strict.
        pruned: list[frozenset[int]] = []
        for region in self._stack:
            region &= game.uncolored
            if region and (not pruned or pruned[-1] != region):
                pruned.append(region)
        if pruned and pruned[0] == game.uncolored:
            pruned.pop(0)
        self._stack = pruned

    def _compute_witness(self, game: GameState) -> list[frozenset[int]]:
        result = partition_ground_set(current_minors(game))
        if not isinstance(result, Cover):
            raise EngineInvariantError(
                "witness refresh found no cover; the strategy invariant broke")
        return list(result.parts)


class NaiveAlice:
    """Ascending-order baseline: indicates the minimum uncolored id and
    colors with the minimum admissible color.  Not a winning strategy."""

    def clone(self) -> NaiveAlice:
        return self

    def state_key(self) -> tuple:
        return ()

    def next_indication(self, game: GameState) -> int:
        if not game.uncolored:
            raise GameError("no uncolored element to indicate")
        return min(game.uncolored)

    def choose_color(self, game: GameState, element: int) -> int | None:
        legal = legal_colors(game, element)
        return min(legal) if legal else None

    def observe(self, game_after: GameState, element: int, color: int, colorist: str) -> None:
        pass


# ---------------------------------------------------------------------------
# Bob


class RandomBob:
    """Uniform choices from a seeded generator; reproducible per seed."""

    def __init__(self, seed: int | None = None):
        self._rng = random.Random(seed)

    def choose_kind(self, game: GameState) -> int:
        return self._rng.choice((1, 2))

    def choose_indication(self, game: GameState) -> int:
        return self._rng.choice(sorted(game.uncolored))

    def choose_color(self, game: GameState, element: int) -> int | None:
        legal = sorted(legal_colors(game, element))
        return self._rng.choice(legal) if legal else None


class FirstFitBob:
    """Always kind 1, minimum admissible color, minimum-id indication."""

    def choose_kind(self, game: GameState) -> int:
        return 1

    def choose_indication(self, game: GameState) -> int:
        return min(game.uncolored)

    def choose_color(self, game: GameState, element: int) -> int | None:
        legal = legal_colors(game, element)
        return min(legal) if legal else None


class AdversarialBob:
    """Best response to the actual Alice opponent.

    Every option is scored by exhaustively playing out the rest of the game
    against a clone of Alice's (deterministic) strategy with Bob replying
    adversarially throughout; an option that reaches a Bob win is taken,
    with ties broken toward the smallest color / element / kind 1.
    """

    def __init__(self, alice):
        self._alice = alice

    def _subtree_winner(self, game: GameState, alice) -> str:
        from matroidcolor.bruteforce import best_response_winner

        return best_response_winner(game, alice)

    def choose_kind(self, game: GameState) -> int:
        alice = self._alice.clone()
        element = alice.next_indication(game)
        legal = sorted(legal_colors(game, element))
        if not legal:
            return 1
        kind1_alice_wins = True
        for color in legal:
            after = apply(game, element, color)
            branch = alice.clone()
            branch.observe(after, element, color, BOB)
            if self._subtree_winner(after, branch) == BOB:
                kind1_alice_wins = False
                break
        if not kind1_alice_wins:
            return 1
        for element in sorted(game.uncolored):
            if self._kind2_wins(game, element):
                return 2
        return 1

    def _kind2_wins(self, game: GameState, element: int) -> bool:
        if not legal_colors(game, element):
            return True
        alice = self._alice.clone()
        color = alice.choose_color(game, element)
        after = apply(game, element, color)
        alice.observe(after, element, color, ALICE)
        return self._subtree_winner(after, alice) == BOB

    def choose_indication(self, game: GameState) -> int:
        for element in sorted(game.uncolored):
            if self._kind2_wins(game, element):
                return element
        return min(game.uncolored)

    def choose_color(self, game: GameState, element: int) -> int | None:
        legal = sorted(legal_colors(game, element))
        if not legal:
            return None
        for color in legal:
            after = apply(game, element, color)
            alice = self._alice.clone()
            alice.observe(after, element, color, BOB)
            if self._subtree_winner(after, alice) == BOB:
                return color
        return legal[0]


def make_alice(name: str, game: GameState):
    if name == "engine":
        return AliceEngine(game)
    if name == "naive":
        return NaiveAlice()
    raise GameError(f"unknown alice strategy {name!r} (choose from {ALICE_STRATEGIES})")


def make_bob(name: str, alice, seed: int | None = None):
    if name == "random":
        return RandomBob(seed)
    if name == "first-fit":
        return FirstFitBob()
    if name == "adversarial":
        return AdversarialBob(alice)
    raise GameError(f"unknown bob strategy {name!r} (choose from {BOB_STRATEGIES})")


# ---------------------------------------------------------------------------
# Game loop


def run_game(matroids, mode: str = CLASSIC, alice="engine", bob="first-fit",
             seed: int | None = None) -> Transcript:
    """Play a full game and return its replay-validated transcript.

    `alice` and `bob` may be strategy names or ready strategy objects
    (the CLI passes a stdin-driven Bob for interactive play).
    """
    state = new_game(matroids, mode)
    alice_strategy = make_alice(alice, state) if isinstance(alice, str) else alice
    bob_strategy = make_bob(bob, alice_strategy, seed) if isinstance(bob, str) else bob

    rounds: list[Round] = []
    while state.winner is None:
        if mode == CLASSIC or bob_strategy.choose_kind(state) == 1:
            indicator, colorist = ALICE, BOB
            element = alice_strategy.next_indication(state)
            legal = legal_colors(state, element)
            if not legal:
                state = declare_bob_win(state)
                break
            color = bob_strategy.choose_color(state, element)
        else:
            indicator, colorist = BOB, ALICE
            element = bob_strategy.choose_indication(state)
            legal = legal_colors(state, element)
            if not legal:
                state = declare_bob_win(state)
                break
            color = alice_strategy.choose_color(state, element)
        state = apply(state, element, color)
        alice_strategy.observe(state, element, color, colorist)
        rounds.append(Round(len(rounds) + 1, indicator, element, colorist, color))

    transcript = Transcript(len(state.matroids), mode, tuple(rounds), state.winner)
    replay_transcript(matroids, transcript)
    return transcript
