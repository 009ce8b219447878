"""Command-line entry point.

    matroidcolor chromatic FILE
    matroidcolor play  --matroid FILE --colors K [--modified] [--alice ...]
                       [--bob ...] [--seed N] [--transcript PATH]
    matroidcolor play  --matroids FILE [--matroids FILE ...] ...
    matroidcolor solve --matroid FILE --colors K [--modified]
    matroidcolor serve --port P

Exit codes: 0 success (play: Alice won), 2 usage or input error,
3 play ended with a Bob win.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from matroidcolor.bruteforce import GuardError, solve_indicated, solve_modified
from matroidcolor.files import MatroidParseError, parse_matroid
from matroidcolor.game import (
    ALICE,
    CLASSIC,
    MODIFIED,
    GameError,
    InfeasibleGameError,
    run_game,
)
from matroidcolor.matroids import MatroidError
from matroidcolor.transcripts import transcript_dumps
from matroidcolor.union import chromatic_number

EXIT_OK = 0
EXIT_ERROR = 2
EXIT_BOB_WON = 3


class HumanBob:
    """Stdin-driven Bob for interactive play; reprompts until valid."""

    def __init__(self, stdin=None, stdout=None):
        self._stdin = stdin if stdin is not None else sys.stdin
        self._stdout = stdout if stdout is not None else sys.stdout

    def _say(self, text: str) -> None:
        print(text, file=self._stdout)
        self._stdout.flush()

    def _ask(self, prompt: str) -> str:
        self._say(prompt)
        line = self._stdin.readline()
        if not line:
            raise GameError("standard input closed during interactive play")
        return line.strip()

    def _ask_int(self, prompt: str, admissible: list[int]) -> int:
        while True:
            answer = self._ask(f"{prompt} {admissible}")
            try:
                value = int(answer)
            except ValueError:
                self._say(f"not an integer: {answer!r}")
                continue
            if value in admissible:
                return value
            self._say(f"{value} is not admissible, choose from {admissible}")

    def _show_position(self, game) -> None:
        self._say(f"uncolored elements: {sorted(game.uncolored)}")
        coloring = game.coloring
        if coloring:
            self._say(f"coloring so far: {coloring}")

    def choose_kind(self, game) -> int:
        self._show_position(game)
        return self._ask_int(
            "move kind? 1 = Alice indicates and you color, 2 = you indicate and Alice colors",
            [1, 2])

    def choose_indication(self, game) -> int:
        return self._ask_int("indicate an element for Alice to color", sorted(game.uncolored))

    def choose_color(self, game, element: int) -> int:
        from matroidcolor.game import legal_colors

        self._show_position(game)
        self._say(f"indicated element: {element}")
        return self._ask_int("your color", sorted(legal_colors(game, element)))


def _read_matroid_file(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatroidParseError(f"cannot read {path!r}: {exc.strerror}", 0) from exc
    return parse_matroid(text)


def _load_game_matroids(args) -> list:
    if args.matroids:
        if args.matroid is not None or args.colors is not None:
            raise GameError("use either --matroid with --colors, or repeated --matroids")
        return [_read_matroid_file(path) for path in args.matroids]
    if args.matroid is None or args.colors is None:
        raise GameError("need --matroid together with --colors (or repeated --matroids)")
    if args.colors < 1:
        raise GameError("--colors must be at least 1")
    return [_read_matroid_file(args.matroid)] * args.colors


def cmd_chromatic(args) -> int:
    matroid = _read_matroid_file(args.file)
    print(chromatic_number(matroid))
    return EXIT_OK


def cmd_play(args) -> int:
    matroids = _load_game_matroids(args)
    mode = MODIFIED if args.modified else CLASSIC
    bob = HumanBob() if args.bob == "human" else args.bob
    transcript = run_game(matroids, mode=mode, alice=args.alice, bob=bob, seed=args.seed)
    text = transcript_dumps(transcript)
    print(text)
    if args.transcript:
        Path(args.transcript).write_text(text + "\n", encoding="utf-8")
    return EXIT_OK if transcript.winner == ALICE else EXIT_BOB_WON


def cmd_solve(args) -> int:
    matroid = _read_matroid_file(args.matroid)
    if args.colors < 1:
        raise GameError("--colors must be at least 1")
    matroids = [matroid] * args.colors
    winner = solve_modified(matroids) if args.modified else solve_indicated(matroids)
    print(winner)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from matroidcolor.server import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matroidcolor",
        description="Matroid coloring games: chromatic numbers, play, solve, serve.")
    sub = parser.add_subparsers(dest="command", required=True)

    chromatic = sub.add_parser("chromatic", help="print the chromatic number of a matroid file")
    chromatic.add_argument("file")
    chromatic.set_defaults(handler=cmd_chromatic)

    play = sub.add_parser("play", help="play one game and print its transcript")
    play.add_argument("--matroid", help="matroid file (used with --colors)")
    play.add_argument("--colors", type=int, help="number of colors (copies of --matroid)")
    play.add_argument("--matroids", action="append",
                      help="matroid file per color for the generalized game (repeatable)")
    play.add_argument("--modified", action="store_true", help="play the modified game")
    play.add_argument("--alice", choices=["engine", "naive"], default="engine")
    play.add_argument("--bob", choices=["random", "first-fit", "adversarial", "human"],
                      default="first-fit")
    play.add_argument("--seed", type=int, default=None, help="seed for --bob random")
    play.add_argument("--transcript", help="also write the transcript JSON to this path")
    play.set_defaults(handler=cmd_play)

    solve = sub.add_parser("solve", help="optimal-play winner by exhaustive search")
    solve.add_argument("--matroid", required=True)
    solve.add_argument("--colors", type=int, required=True)
    solve.add_argument("--modified", action="store_true")
    solve.set_defaults(handler=cmd_solve)

    serve = sub.add_parser("serve", help="HTTP play server for the browser client")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--host", default="127.0.0.1")
    serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (MatroidParseError, MatroidError, GameError, GuardError,
            InfeasibleGameError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
