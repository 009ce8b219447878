"""HTTP play server: a human plays Bob against the Alice engine.

In-memory game table, one lock per game; nothing persists across restarts.

    POST /games              {"matroid": <file text>, "colors": k,
                              "mode": "classic"|"modified", "human_role": "bob"}
                             -> 201 {"id": ...}
    GET  /games/{id}         -> full view (uncolored, coloring, indicated,
                              legal_colors, awaiting, winner, rounds)
    POST /games/{id}/move    {"color": c} | {"element": e} | {"kind": 1|2}
                             -> updated view

400 carries the admissible options for illegal moves, 404 unknown game,
409 for a move the current phase does not expect.
"""

from __future__ import annotations

import threading
import uuid

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from matroidcolor.files import MatroidParseError, parse_matroid
from matroidcolor.game import (
    ALICE,
    BOB,
    CLASSIC,
    MODIFIED,
    AliceEngine,
    GameError,
    InfeasibleGameError,
    Round,
    apply,
    declare_bob_win,
    legal_colors,
    new_game,
)
from matroidcolor.transcripts import round_to_json

AWAIT_COLOR = "human_color"
AWAIT_INDICATION = "human_indication"
AWAIT_KIND = "human_kind"
FINISHED = "finished"


class _ApiError(Exception):
    def __init__(self, status: int, payload: dict):
        self.status = status
        self.payload = payload


class _Session:
    """One running game; all mutation happens under `lock`."""

    def __init__(self, matroids, mode: str):
        self.lock = threading.Lock()
        self.state = new_game(matroids, mode)
        self.engine = AliceEngine(self.state)
        self.rounds: list[Round] = []
        self.indicated: int | None = None
        self.awaiting = AWAIT_KIND if mode == MODIFIED else AWAIT_COLOR
        if mode == CLASSIC:
            self._alice_indicates()

    # -- phase transitions ---------------------------------------------

    def _alice_indicates(self) -> None:
        self.indicated = self.engine.next_indication(self.state)
        if legal_colors(self.state, self.indicated):
            self.awaiting = AWAIT_COLOR
        else:
            self.state = declare_bob_win(self.state)
            self.awaiting = FINISHED

    def _record(self, indicator: str, element: int, colorist: str, color: int) -> None:
        self.rounds.append(Round(len(self.rounds) + 1, indicator, element, colorist, color))

    def _after_round(self) -> None:
        self.indicated = None
        if self.state.winner is not None:
            self.awaiting = FINISHED
        elif self.state.mode == CLASSIC:
            self._alice_indicates()
        else:
            self.awaiting = AWAIT_KIND

    # -- human moves -----------------------------------------------------

    def human_color(self, color: int) -> None:
        if self.awaiting != AWAIT_COLOR:
            raise _ApiError(409, {"error": "no color move expected now"})
        element = self.indicated
        legal = sorted(legal_colors(self.state, element))
        if color not in legal:
            raise _ApiError(400, {
                "error": f"color {color} not admissible for element {element}",
                "legal_colors": legal,
            })
        self.state = apply(self.state, element, color)
        self.engine.observe(self.state, element, color, BOB)
        self._record(ALICE, element, BOB, color)
        self._after_round()

    def human_kind(self, kind: int) -> None:
        if self.awaiting != AWAIT_KIND:
            raise _ApiError(409, {"error": "no kind move expected now"})
        if kind not in (1, 2):
            raise _ApiError(400, {"error": f"kind must be 1 or 2, got {kind}",
                                  "legal_kinds": [1, 2]})
        if kind == 1:
            self._alice_indicates()
        else:
            self.awaiting = AWAIT_INDICATION

    def human_indication(self, element: int) -> None:
        if self.awaiting != AWAIT_INDICATION:
            raise _ApiError(409, {"error": "no indication move expected now"})
        if element not in self.state.uncolored:
            raise _ApiError(400, {
                "error": f"element {element} is not uncolored",
                "legal_elements": sorted(self.state.uncolored),
            })
        if not legal_colors(self.state, element):
            self.state = declare_bob_win(self.state)
            self.awaiting = FINISHED
            return
        color = self.engine.choose_color(self.state, element)
        self.state = apply(self.state, element, color)
        self.engine.observe(self.state, element, color, ALICE)
        self._record(BOB, element, ALICE, color)
        self._after_round()

    # -- view -------------------------------------------------------------

    def view(self) -> dict:
        legal = (
            sorted(legal_colors(self.state, self.indicated))
            if self.indicated is not None and self.state.winner is None
            else []
        )
        return {
            "uncolored": sorted(self.state.uncolored),
            "coloring": {str(e): c for e, c in sorted(self.state.coloring.items())},
            "indicated": self.indicated,
            "legal_colors": legal,
            "awaiting": self.awaiting,
            "winner": self.state.winner,
            "rounds": [round_to_json(r) for r in self.rounds],
        }


def create_app() -> FastAPI:
    app = FastAPI(title="matroidcolor")
    # The browser client may be served from another origin (or file://).
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["GET", "POST"], allow_headers=["*"])
    sessions: dict[str, _Session] = {}
    registry_lock = threading.Lock()

    @app.exception_handler(_ApiError)
    async def api_error_handler(request: Request, exc: _ApiError):
        return JSONResponse(status_code=exc.status, content=exc.payload)

    def _session(game_id: str) -> _Session:
        with registry_lock:
            session = sessions.get(game_id)
        if session is None:
            raise _ApiError(404, {"error": f"unknown game {game_id!r}"})
        return session

    async def _json_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception:
            raise _ApiError(400, {"error": "request body must be a JSON object"}) from None
        if not isinstance(body, dict):
            raise _ApiError(400, {"error": "request body must be a JSON object"})
        return body

    @app.post("/games", status_code=201)
    async def create_game(request: Request):
        body = await _json_body(request)
        text = body.get("matroid")
        if not isinstance(text, str):
            raise _ApiError(400, {"error": "field 'matroid' must be the matroid file text"})
        colors = body.get("colors")
        if not isinstance(colors, int) or isinstance(colors, bool) or colors < 1:
            raise _ApiError(400, {"error": "field 'colors' must be a positive integer"})
        mode = body.get("mode", CLASSIC)
        if mode not in (CLASSIC, MODIFIED):
            raise _ApiError(400, {"error": f"mode must be 'classic' or 'modified', got {mode!r}"})
        if body.get("human_role", BOB) != BOB:
            raise _ApiError(400, {"error": "only human_role 'bob' is supported"})
        try:
            matroid = parse_matroid(text)
            session = _Session([matroid] * colors, mode)
        except (MatroidParseError, InfeasibleGameError, GameError) as exc:
            raise _ApiError(400, {"error": str(exc)}) from exc
        game_id = uuid.uuid4().hex[:12]
        with registry_lock:
            sessions[game_id] = session
        return {"id": game_id}

    @app.get("/games/{game_id}")
    def read_game(game_id: str):
        session = _session(game_id)
        with session.lock:
            return session.view()

    @app.post("/games/{game_id}/move")
    async def post_move(game_id: str, request: Request):
        session = _session(game_id)
        body = await _json_body(request)
        keys = {"color", "element", "kind"} & body.keys()
        if len(keys) != 1:
            raise _ApiError(400, {
                "error": "move body must contain exactly one of 'color', 'element', 'kind'"})
        key = keys.pop()
        value = body[key]
        if not isinstance(value, int) or isinstance(value, bool):
            raise _ApiError(400, {"error": f"field {key!r} must be an integer"})
        with session.lock:
            if session.awaiting == FINISHED:
                raise _ApiError(409, {"error": "game is finished"})
            if key == "color":
                session.human_color(value)
            elif key == "kind":
                session.human_kind(value)
            else:
                session.human_indication(value)
            return session.view()

    return app
