"""JSON interchange for game transcripts.

One document shape serves the CLI, the HTTP server, and the tests:
{"colors": k, "mode": "classic"|"modified", "rounds": [...], "winner": ...}
with each round {"round", "indicator", "element", "colorist", "color"}.
"""

from __future__ import annotations

import json

from matroidcolor.game import ALICE, BOB, CLASSIC, MODIFIED, GameError, Round, Transcript


def round_to_json(rnd: Round) -> dict:
    return {
        "round": rnd.number,
        "indicator": rnd.indicator,
        "element": rnd.element,
        "colorist": rnd.colorist,
        "color": rnd.color,
    }


def transcript_to_json(transcript: Transcript) -> dict:
    return {
        "colors": transcript.colors,
        "mode": transcript.mode,
        "rounds": [round_to_json(r) for r in transcript.rounds],
        "winner": transcript.winner,
    }


def transcript_dumps(transcript: Transcript) -> str:
    return json.dumps(transcript_to_json(transcript), indent=2)


def _require(doc: dict, key: str, kind) -> object:
    if key not in doc:
        raise GameError(f"transcript document missing {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise GameError(f"transcript field {key!r} has the wrong type")
    return value


def transcript_from_json(doc: dict) -> Transcript:
    colors = _require(doc, "colors", int)
    mode = _require(doc, "mode", str)
    if mode not in (CLASSIC, MODIFIED):
        raise GameError(f"unknown mode {mode!r}")
    winner = _require(doc, "winner", str)
    if winner not in (ALICE, BOB):
        raise GameError(f"unknown winner {winner!r}")
    rounds = []
    for entry in _require(doc, "rounds", list):
        if not isinstance(entry, dict):
            raise GameError("transcript rounds must be objects")
        rounds.append(Round(
            number=_require(entry, "round", int),
            indicator=_require(entry, "indicator", str),
            element=_require(entry, "element", int),
            colorist=_require(entry, "colorist", str),
            color=_require(entry, "color", int),
        ))
    return Transcript(colors, mode, tuple(rounds), winner)
