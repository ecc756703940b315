"""Text formats for matrices, automorphism groups and seeds.

Matrix files:
    # optional comments
    n = 3
    0 -1 0
    1 0 1
    0 -1 0
    group: (1 3)(2)

Vertices are 1-based in files.  `group:` lines are optional; each line
holds one generator in cycle notation.  A seed file is a matrix block
followed by a `cluster:` line and one rendered Laurent polynomial per
line.
"""

from __future__ import annotations

import re

from .exchange import ExchangeMatrix
from .laurent import LaurentPolynomial, parse_polynomial

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> tuple[int, ...]:
    """Parse cycle notation like ``(1 3)(2)`` into a 0-based mapping tuple.

    Accepts whitespace- or comma-separated entries; fixed points may be
    omitted.  Returns g with g[i] = image of i (0-based).
    """
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty permutation")
    if _CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    mapping = list(range(n))
    seen: set[int] = set()
    for cycle_text in _CYCLE_RE.findall(stripped):
        entries = [int(tok) for tok in re.split(r"[,\s]+", cycle_text.strip()) if tok]
        if not entries:
            continue
        cycle = [e - 1 for e in entries]
        for v in cycle:
            if not 0 <= v < n:
                raise ValueError(f"vertex {v + 1} out of range in {text!r}")
            if v in seen:
                raise ValueError(f"vertex {v + 1} repeated in {text!r}")
            seen.add(v)
        for a, b in zip(cycle, cycle[1:] + cycle[:1]):
            mapping[a] = b
    return tuple(mapping)


def render_permutation(g: tuple[int, ...]) -> str:
    """Cycle notation (1-based) for a 0-based mapping tuple; fixed points omitted."""
    seen: set[int] = set()
    parts = []
    for start in range(len(g)):
        if start in seen or g[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        v = g[start]
        while v != start:
            cycle.append(v)
            seen.add(v)
            v = g[v]
        parts.append("(" + " ".join(str(x + 1) for x in cycle) + ")")
    return "".join(parts) if parts else "()"


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_matrix_text(text: str):
    """Parse a matrix file; returns (ExchangeMatrix, list of generator tuples).

    The generator list is empty when no ``group:`` lines are present.
    """
    lines = _content_lines(text)
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise ValueError("matrix file must start with a line 'n = <int>'")
    n = int(lines[0].split("=", 1)[1])
    if n <= 0:
        raise ValueError("vertex count must be positive")
    if len(lines) < 1 + n:
        raise ValueError(f"expected {n} matrix rows")
    rows = []
    for line in lines[1 : 1 + n]:
        row = [int(tok) for tok in line.split()]
        if len(row) != n:
            raise ValueError(f"expected {n} entries per row, got {len(row)}")
        rows.append(row)
    generators = []
    rest = lines[1 + n :]
    for line in rest:
        if line.startswith("group:"):
            generators.append(parse_permutation(line[len("group:"):], n))
        elif line.startswith("cluster:"):
            break
        else:
            raise ValueError(f"unexpected line in matrix file: {line!r}")
    return ExchangeMatrix(rows), generators


def render_matrix_text(matrix: ExchangeMatrix, generators=()) -> str:
    lines = [f"n = {matrix.n}"]
    width = max(len(str(x)) for row in matrix.entries for x in row)
    for row in matrix.entries:
        lines.append(" ".join(str(x).rjust(width) for x in row))
    for g in generators:
        lines.append(f"group: {render_permutation(tuple(g))}")
    return "\n".join(lines) + "\n"


def parse_seed_text(text: str):
    """Parse a seed file; returns (Seed, generator list).

    The cluster block is parsed with variable names u1..un.
    """
    from .seeds import Seed

    matrix, generators = parse_matrix_text(text)
    lines = _content_lines(text)
    try:
        start = lines.index("cluster:")
    except ValueError:
        raise ValueError("seed file must contain a 'cluster:' line") from None
    poly_lines = lines[start + 1 :]
    if len(poly_lines) != matrix.n:
        raise ValueError(f"expected {matrix.n} cluster entries, got {len(poly_lines)}")
    names = [f"u{i + 1}" for i in range(matrix.n)]
    cluster = tuple(parse_polynomial(line, names) for line in poly_lines)
    return Seed(matrix, cluster), generators


def render_seed_text(seed, generators=()) -> str:
    lines = [render_matrix_text(seed.matrix, generators).rstrip("\n"), "cluster:"]
    for poly in seed.cluster:
        lines.append(poly.render())
    return "\n".join(lines) + "\n"
