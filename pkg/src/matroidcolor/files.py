"""The matroid file format: parsing and printing.

Plain text, `#` starts a comment, tokens are whitespace-separated within a
line.  Headers:

    uniform <n> <r>
    graphic <nv> <ne>      followed by ne lines "<u> <v>"
    linear <p> <rows> <cols>   followed by `rows` lines of `cols` entries
    partition <n> <nblocks>    followed by nblocks lines "<cap> <e> ..."
"""

from __future__ import annotations

from matroidcolor.matroids import (
    GraphicMatroid,
    LinearMatroid,
    Matroid,
    MatroidError,
    PartitionMatroid,
    UniformMatroid,
)

FAMILIES = ("uniform", "graphic", "linear", "partition")


class MatroidParseError(ValueError):
    """Parse failure; `line` is the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((number, body.split()))
    return lines


def _to_int(token: str, what: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise MatroidParseError(f"{what} must be an integer, got {token!r}", line) from None


def parse_matroid(text: str) -> Matroid:
    lines = _content_lines(text)
    if not lines:
        raise MatroidParseError("empty matroid description", 1)
    header_line, header = lines[0]
    family = header[0]
    if family not in FAMILIES:
        raise MatroidParseError(
            f"unknown family {family!r} (expected one of {', '.join(FAMILIES)})", header_line)
    try:
        matroid, consumed = _PARSERS[family](header_line, header, lines[1:])
    except MatroidError as exc:
        raise MatroidParseError(str(exc), header_line) from exc
    trailing = lines[1 + consumed:]
    if trailing:
        raise MatroidParseError("unexpected extra content", trailing[0][0])
    return matroid


def _parse_uniform(header_line, header, rest):
    if len(header) != 3:
        raise MatroidParseError("uniform takes exactly <n> <r>", header_line)
    n = _to_int(header[1], "ground size", header_line)
    r = _to_int(header[2], "rank", header_line)
    return UniformMatroid(n, r), 0


def _parse_graphic(header_line, header, rest):
    if len(header) != 3:
        raise MatroidParseError("graphic takes exactly <num_vertices> <num_edges>", header_line)
    nv = _to_int(header[1], "vertex count", header_line)
    ne = _to_int(header[2], "edge count", header_line)
    if len(rest) < ne:
        raise MatroidParseError(f"expected {ne} edge lines, found {len(rest)}", header_line)
    edges = []
    for number, tokens in rest[:ne]:
        if len(tokens) != 2:
            raise MatroidParseError("edge lines take exactly <u> <v>", number)
        u = _to_int(tokens[0], "endpoint", number)
        v = _to_int(tokens[1], "endpoint", number)
        if not (0 <= u < nv and 0 <= v < nv):
            raise MatroidParseError(f"endpoints {u},{v} out of range [0, {nv})", number)
        edges.append((u, v))
    return GraphicMatroid(nv, edges), ne


def _parse_linear(header_line, header, rest):
    if len(header) != 4:
        raise MatroidParseError("linear takes exactly <p> <rows> <cols>", header_line)
    p = _to_int(header[1], "field order", header_line)
    num_rows = _to_int(header[2], "row count", header_line)
    num_cols = _to_int(header[3], "column count", header_line)
    if len(rest) < num_rows:
        raise MatroidParseError(f"expected {num_rows} matrix rows, found {len(rest)}", header_line)
    rows = []
    for number, tokens in rest[:num_rows]:
        if len(tokens) != num_cols:
            raise MatroidParseError(
                f"matrix rows take exactly {num_cols} entries, got {len(tokens)}", number)
        entries = [_to_int(t, "matrix entry", number) for t in tokens]
        for entry in entries:
            if not 0 <= entry < p:
                raise MatroidParseError(f"entry {entry} outside [0, {p})", number)
        rows.append(entries)
    if num_rows == 0 and num_cols > 0:
        raise MatroidParseError("linear matroid with columns needs at least one row", header_line)
    return LinearMatroid(p, rows), num_rows


def _parse_partition(header_line, header, rest):
    if len(header) != 3:
        raise MatroidParseError("partition takes exactly <n> <num_blocks>", header_line)
    n = _to_int(header[1], "ground size", header_line)
    nblocks = _to_int(header[2], "block count", header_line)
    if len(rest) < nblocks:
        raise MatroidParseError(f"expected {nblocks} block lines, found {len(rest)}", header_line)
    blocks = []
    seen = 0
    for number, tokens in rest[:nblocks]:
        if not tokens:
            raise MatroidParseError("block lines take <capacity> <element> ...", number)
        cap = _to_int(tokens[0], "capacity", number)
        members = [_to_int(t, "element", number) for t in tokens[1:]]
        blocks.append((cap, members))
        seen += len(members)
    if seen != n:
        raise MatroidParseError(
            f"blocks list {seen} elements but the ground size is {n}", header_line)
    return PartitionMatroid(blocks), nblocks


_PARSERS = {
    "uniform": _parse_uniform,
    "graphic": _parse_graphic,
    "linear": _parse_linear,
    "partition": _parse_partition,
}


def format_matroid(m: Matroid) -> str:
    """Canonical file text; inverse of `parse_matroid` up to rank equality."""
    if isinstance(m, UniformMatroid):
        return f"uniform {m.size} {m.r}\n"
    if isinstance(m, GraphicMatroid):
        lines = [f"graphic {m.num_vertices} {len(m.edges)}"]
        lines += [f"{u} {v}" for u, v in m.edges]
        return "\n".join(lines) + "\n"
    if isinstance(m, LinearMatroid):
        lines = [f"linear {m.prime} {len(m.rows)} {len(m.rows[0]) if m.rows else 0}"]
        lines += [" ".join(str(x) for x in row) for row in m.rows]
        return "\n".join(lines) + "\n"
    if isinstance(m, PartitionMatroid):
        lines = [f"partition {m.ground_size} {len(m.blocks)}"]
        lines += [
            " ".join([str(cap)] + [str(e) for e in sorted(members)])
            for cap, members in m.blocks
        ]
        return "\n".join(lines) + "\n"
    raise MatroidError(f"{type(m).__name__} has no file form")
