"""Oracle tests: exhaustive cover search, game solvers, and the
best-response walker, plus theorem-level equivalences at small scale."""

from __future__ import annotations

import random

import pytest

from corpus import k4, random_matroid, two_block_partition
from matroidcolor.bruteforce import (
    GuardError,
    best_response_winner,
    bf_chromatic,
    bf_cover_exists,
    bf_tight_sets,
    solve_indicated,
    solve_modified,
)
from matroidcolor.game import ALICE, BOB, CLASSIC, MODIFIED, AliceEngine, new_game
from matroidcolor.matroids import MatroidError, UniformMatroid


def test_bf_cover_exists_examples():
    u12 = UniformMatroid(2, 1)
    assert bf_cover_exists([u12, u12])
    u13 = UniformMatroid(3, 1)
    assert not bf_cover_exists([u13, u13])
    assert bf_cover_exists([k4(), k4()])


def test_bf_chromatic_examples():
    assert bf_chromatic(UniformMatroid(4, 1)) == 4
    assert bf_chromatic(k4()) == 2
    assert bf_chromatic(UniformMatroid(5, 2)) == 3


def test_bf_chromatic_rejects_loops():
    from matroidcolor.matroids import GraphicMatroid

    with pytest.raises(MatroidError, match="loopy"):
        bf_chromatic(GraphicMatroid(2, [(0, 1), (1, 1)]))


def test_bf_tight_sets_examples():
    p = two_block_partition()
    assert bf_tight_sets([p, p]) == [frozenset({0, 1}), frozenset({2, 3})]
    assert bf_tight_sets([k4(), k4()]) == []
    free = UniformMatroid(3, 3)
    assert len(bf_tight_sets([free])) == 6


def test_bf_tight_sets_ordering():
    p = two_block_partition()
    tights = bf_tight_sets([p, p])
    keys = [(len(t), sorted(t)) for t in tights]
    assert keys == sorted(keys)


def test_solve_indicated_examples():
    u12 = UniformMatroid(2, 1)
    assert solve_indicated([u12]) == BOB
    assert solve_indicated([u12, u12]) == ALICE
    assert solve_indicated([k4(), k4()]) == ALICE


def test_solve_modified_examples():
    u12 = UniformMatroid(2, 1)
    assert solve_modified([u12, u12]) == ALICE
    u13 = UniformMatroid(3, 1)
    assert solve_modified([u13, u13]) == BOB
    assert solve_modified([k4(), k4()]) == ALICE


def test_guards_reject_oversized_instances():
    big = UniformMatroid(13, 5)
    with pytest.raises(GuardError):
        bf_cover_exists([big])
    with pytest.raises(GuardError):
        bf_chromatic(UniformMatroid(10, 5))
    with pytest.raises(GuardError):
        bf_tight_sets([big])
    with pytest.raises(GuardError):
        solve_indicated([UniformMatroid(9, 5)])
    with pytest.raises(GuardError):
        solve_modified([UniformMatroid(8, 5)])


def _small_loopless(rng, max_n):
    while True:
        m = random_matroid(rng, max_n=max_n)
        if m.ground_set and not m.loops():
            return m


def test_indicated_game_value_equals_cover_existence():
    # The headline equivalence at desk scale: Alice wins the indicated game
    # with k colors exactly when a cover with k parts exists.
    rng = random.Random(2024)
    for _ in range(25):
        m = _small_loopless(rng, max_n=6)
        k = rng.randint(1, 3)
        assert (solve_indicated([m] * k) == ALICE) == bf_cover_exists([m] * k)


def test_modified_game_value_equals_cover_existence():
    rng = random.Random(2025)
    for _ in range(15):
        m = _small_loopless(rng, max_n=5)
        k = rng.randint(1, 3)
        assert (solve_modified([m] * k) == ALICE) == bf_cover_exists([m] * k)


def test_winning_with_k_colors_implies_winning_with_more():
    rng = random.Random(2026)
    for _ in range(10):
        m = _small_loopless(rng, max_n=5)
        for k in (1, 2):
            if solve_indicated([m] * k) == ALICE:
                assert solve_indicated([m] * (k + 1)) == ALICE


def test_best_response_walker_agrees_with_adversarial_outcomes():
    state = new_game([k4(), k4()], CLASSIC)
    assert best_response_winner(state, AliceEngine(state)) == ALICE

    from matroidcolor.game import NaiveAlice

    assert best_response_winner(state, NaiveAlice()) == BOB

    modified = new_game([k4(), k4()], MODIFIED)
    assert best_response_winner(modified, AliceEngine(modified)) == ALICE
