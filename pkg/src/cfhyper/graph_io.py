"""Text formats for hypergraphs, colorings, and factors.

All three formats are UTF-8 text with '#' comment lines:

* hypergraph: header ``hypergraph <n> <m>`` followed by m lines, each the
  space-separated 1-based vertex ids of one edge (2-vertex edges for graphs);
* coloring: header ``coloring <n>`` followed by n whitespace-separated
  positive integers, the i-th being the color of vertex i;
* factor: header ``factor <m>`` (m is the host graph's edge count) followed
  by the whitespace-separated 1-based indices of selected edges.

Saving is canonical: ``load(save(x)) == x`` at field level.
"""

from __future__ import annotations

from .model import Hypergraph, HypergraphError
from .verify import Coloring


class ParseError(ValueError):
    """Malformed input file; carries the 1-based line (and column when known)."""

    def __init__(self, message: str, line: int, column: int | None = None):
        at = f"line {line}" if column is None else f"line {line}, column {column}"
        super().__init__(f"{at}: {message}")
        self.line = line
        self.column = column


def _as_text(data: str | bytes) -> str:
    return data.decode("utf-8") if isinstance(data, bytes) else data


def _content_lines(text: str) -> list[tuple[int, str]]:
    """Non-comment, as (1-based line number, raw line) pairs; blanks kept."""
    out = []
    for num, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            continue
        out.append((num, raw))
    return out


def _int_token(token: str, line: int, column: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line, column) from None


def _parse_header(lines: list[tuple[int, str]], keyword: str, nfields: int) -> tuple[list[int], int]:
    """Return the header's integer fields and the index of the next line."""
    for i, (num, raw) in enumerate(lines):
        tokens = raw.split()
        if not tokens:
            continue
        if tokens[0] != keyword:
            raise ParseError(f"expected header {keyword!r}, got {tokens[0]!r}", num, 1)
        if len(tokens) != 1 + nfields:
            raise ParseError(
                f"header needs {nfields} integers after {keyword!r}", num)
        fields = [_int_token(t, num, k + 2) for k, t in enumerate(tokens[1:])]
        for f in fields:
            if f < 0:
                raise ParseError(f"negative header field {f}", num)
        return fields, i + 1
    raise ParseError(f"missing {keyword!r} header", len(lines) + 1)


def load_hypergraph(data: str | bytes) -> Hypergraph:
    """Parse the hypergraph format; edge order is preserved, edges sorted."""
    lines = _content_lines(_as_text(data))
    (n, m), start = _parse_header(lines, "hypergraph", 2)
    edges: list[tuple[int, ...]] = []
    pos = start
    while len(edges) < m:
        if pos >= len(lines):
            raise ParseError(
                f"expected {m} edge lines, found {len(edges)}",
                (lines[-1][0] + 1) if lines else 2)
        num, raw = lines[pos]
        pos += 1
        tokens = raw.split()
        if not tokens:
            raise ParseError(f"edge {len(edges) + 1} is empty", num)
        verts = []
        for col, tok in enumerate(tokens, start=1):
            v = _int_token(tok, num, col)
            if not 1 <= v <= n:
                raise ParseError(f"vertex {v} outside 1..{n}", num, col)
            if v in verts:
                raise ParseError(f"vertex {v} repeated inside the edge", num, col)
            verts.append(v)
        edges.append(tuple(sorted(verts)))
    for num, raw in lines[pos:]:
        if raw.split():
            raise ParseError("trailing content after the last edge", num)
    return Hypergraph(n, tuple(edges))


def save_hypergraph(h: Hypergraph) -> str:
    """Canonical text form: header plus one sorted edge per line."""
    out = [f"hypergraph {h.n} {h.m}"]
    out.extend(" ".join(str(v) for v in edge) for edge in h.edges)
    return "\n".join(out) + "\n"


def load_coloring(data: str | bytes) -> Coloring:
    lines = _content_lines(_as_text(data))
    (n,), start = _parse_header(lines, "coloring", 1)
    colors: list[int] = []
    for num, raw in lines[start:]:
        for col, tok in enumerate(raw.split(), start=1):
            c = _int_token(tok, num, col)
            if c < 1:
                raise ParseError(f"colors must be positive, got {c}", num, col)
            colors.append(c)
    if len(colors) != n:
        raise ParseError(
            f"expected {n} colors, found {len(colors)}",
            lines[-1][0] if lines else 1)
    return Coloring(tuple(colors))


def save_coloring(c: Coloring) -> str:
    body = " ".join(str(x) for x in c.colors)
    return f"coloring {len(c.colors)}\n{body}\n" if c.colors else "coloring 0\n"


def load_factor(data: str | bytes) -> tuple[int, frozenset[int]]:
    """Parse a factor file; returns (host edge count, selected edge indices)."""
    lines = _content_lines(_as_text(data))
    (m,), start = _parse_header(lines, "factor", 1)
    selected: set[int] = set()
    for num, raw in lines[start:]:
        for col, tok in enumerate(raw.split(), start=1):
            idx = _int_token(tok, num, col)
            if not 1 <= idx <= m:
                raise ParseError(f"edge index {idx} outside 1..{m}", num, col)
            if idx in selected:
                raise ParseError(f"edge index {idx} repeated", num, col)
            selected.add(idx)
    return m, frozenset(selected)


def save_factor(m: int, selected: frozenset[int] | set[int]) -> str:
    bad = [i for i in selected if not 1 <= i <= m]
    if bad:
        raise HypergraphError(f"edge index {bad[0]} outside 1..{m}")
    body = " ".join(str(i) for i in sorted(selected))
    return f"factor {m}\n{body}\n" if selected else f"factor {m}\n"
