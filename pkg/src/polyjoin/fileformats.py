"""Text formats for complexes, stochastic polytopes and halfspace systems.

Complex file::

    # comments run to end of line
    vertices: 5
    faces: 1 2; 2 3; 3 4; 4 5; 5 1

An empty ``faces:`` list is the ghost complex ``o^m``.  Long face lists may
continue on following lines that do not start a new ``key:``.

Polytope file (one positive row per line, entries ``p`` or ``p/q``)::

    ambient: 3
    relations:
    1 1 1
    1 1/2 2

Halfspace file (each line ``a_1 .. a_n b`` meaning ``a . y + b >= 0``)::

    dimension: 2
    halfspaces:
    1 0 0
    0 1 0
    -1 -1 1
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .betti import BettiTable
from .complex_core import SimplicialComplex, build, members
from .errors import MalformedInputError
from .polyring import MultiPoly
from .polytope import StochasticPolytope

_KEY = re.compile(r"^\s*([A-Za-z_]+)\s*:(.*)$")


def _sections(text: str) -> dict[str, list[tuple[int, int, str]]]:
    """Group content by ``key:`` headers, keeping (line, column, text) for errors."""
    out: dict[str, list[tuple[int, int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _KEY.match(line)
        if m:
            current = m.group(1).lower()
            if current in out:
                raise MalformedInputError(f"duplicate key {current!r}", lineno, 1)
            col = m.start(2) + 1
            out[current] = [(lineno, col, m.group(2))] if m.group(2).strip() else []
        elif current is None:
            raise MalformedInputError("content before the first 'key:' line", lineno, 1)
        else:
            out[current].append((lineno, 1, line))
    return out


def _tokens(chunks: list[tuple[int, int, str]]):
    for lineno, col, text in chunks:
        for m in re.finditer(r"[^\s;]+|;", text):
            yield lineno, col + m.start(), m.group()


def _single_int(sections, key: str) -> int:
    if key not in sections:
        raise MalformedInputError(f"missing '{key}:' line")
    toks = list(_tokens(sections[key]))
    if len(toks) != 1:
        line = toks[0][0] if toks else None
        raise MalformedInputError(f"'{key}:' takes exactly one integer", line, toks[1][1] if len(toks) > 1 else None)
    lineno, col, tok = toks[0]
    try:
        value = int(tok)
    except ValueError:
        raise MalformedInputError(f"expected an integer, got {tok!r}", lineno, col) from None
    if value < 0:
        raise MalformedInputError(f"expected a nonnegative integer, got {value}", lineno, col)
    return value


def _check_keys(sections, allowed) -> None:
    for key, chunks in sections.items():
        if key not in allowed:
            line = chunks[0][0] if chunks else None
            raise MalformedInputError(f"unknown key {key!r}", line)


def parse_complex(text: str) -> SimplicialComplex:
    sections = _sections(text)
    _check_keys(sections, ("vertices", "faces"))
    m = _single_int(sections, "vertices")
    if "faces" not in sections:
        raise MalformedInputError("missing 'faces:' line")
    faces: list[list[int]] = []
    current: list[int] = []
    for lineno, col, tok in _tokens(sections["faces"]):
        if tok == ";":
            if current:
                faces.append(current)
            current = []
            continue
        try:
            v = int(tok)
        except ValueError:
            raise MalformedInputError(f"expected a vertex number, got {tok!r}", lineno, col) from None
        if not 1 <= v <= m:
            raise MalformedInputError(f"vertex {v} outside 1..{m}", lineno, col)
        current.append(v)
    if current:
        faces.append(current)
    return build(m, faces)


def format_complex(K: SimplicialComplex) -> str:
    faces = sorted((list(members(f)) for f in K.maximal if f), key=lambda f: (len(f), f))
    body = "; ".join(" ".join(map(str, f)) for f in faces)
    return f"vertices: {K.m}\nfaces: {body}\n".replace("faces: \n", "faces:\n")


def _fraction(tok: str, lineno: int, col: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise MalformedInputError(f"expected a rational number, got {tok!r}", lineno, col) from None


def _rows(chunks, width: int, what: str) -> list[list[Fraction]]:
    rows = []
    for lineno, col, text in chunks:
        row = [_fraction(m.group(), lineno, col + m.start()) for m in re.finditer(r"\S+", text)]
        if len(row) != width:
            raise MalformedInputError(f"{what} row has {len(row)} entries, expected {width}", lineno, col)
        rows.append(row)
    return rows


def parse_polytope(text: str) -> StochasticPolytope:
    sections = _sections(text)
    _check_keys(sections, ("ambient", "relations", "dimension"))
    m = _single_int(sections, "ambient")
    rows = _rows(sections.get("relations", []), m, "relation")
    if not rows:
        raise MalformedInputError("a polytope file needs at least one relation row")
    for (lineno, col, _), row in zip(sections["relations"], rows):
        if any(v <= 0 for v in row):
            raise MalformedInputError("relation coefficients must be strictly positive", lineno, col)
    dim = _single_int(sections, "dimension") if "dimension" in sections else None
    return StochasticPolytope(tuple(tuple(r) for r in rows), dim)


def format_polytope(P: StochasticPolytope) -> str:
    lines = [f"ambient: {P.m}"]
    if P.claimed_dim is not None:
        lines.append(f"dimension: {P.claimed_dim}")
    lines.append("relations:")
    lines.extend(" ".join(str(v) for v in row) for row in P.relations)
    return "\n".join(lines) + "\n"


def parse_halfspaces(text: str) -> tuple[list[list[Fraction]], list[Fraction]]:
    sections = _sections(text)
    _check_keys(sections, ("dimension", "halfspaces"))
    n = _single_int(sections, "dimension")
    rows = _rows(sections.get("halfspaces", []), n + 1, "halfspace")
    if not rows:
        raise MalformedInputError("a halfspace file needs at least one row")
    return [r[:n] for r in rows], [r[n] for r in rows]


def read(path, parser):
    """Parse a file, tagging errors with its name."""
    try:
        return parser(Path(path).read_text())
    except MalformedInputError as exc:
        raise MalformedInputError(f"{path}: {exc}") from None


def table_json(T: BettiTable) -> list[dict]:
    return [
        {"i": i, "A": list(members(A)), "dim": d}
        for (i, A), d in sorted(T.entries.items(), key=lambda e: (e[0][1].bit_count(), members(e[0][1]), e[0][0]))
        if d
    ]


def to_json(*, table: BettiTable | None = None, poly: MultiPoly | None = None,
            m: int | None = None, n: int | None = None, field: str | None = None) -> str:
    doc: dict = {}
    if table is not None:
        doc["table"] = table_json(table)
    if poly is not None:
        doc["poly"] = poly.render()
    doc["meta"] = {"m": m, "n": n, "field": field}
    return json.dumps(doc, sort_keys=True)
