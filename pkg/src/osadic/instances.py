"""Built-in instances and text file parsers.

Built-ins:
  fig1    seven points, rank 3, with exactly the five 3-point lines
          123, 145, 167, 246, 357; the remaining circuits are all 4-subsets
          containing no line
  K<k>    complete graph on k >= 2 vertices, edges labeled in lexicographic
          vertex-pair order
  C<k>    cycle on k >= 3 vertices, edge i joining vertices i and i+1 (edge
          k closing back to 1)
  W<k>    wheel with rim C<k> (edges 1..k as above) and spokes k+1..2k, spoke
          k+i joining rim vertex i to the hub
  fano    the seven nonzero GF(2) column vectors of height 3, column j being
          the binary digits of j

File formats (labels are 1-based integers, blank lines and #-comments skipped):
  circuits  one circuit per line, space-separated element labels
  matrix    header "r n", then r rows of n characters over 0/1
  graph     header "d n", then n lines "u v", one per edge in label order
"""

from __future__ import annotations

import re
from itertools import combinations

from .bitsets import is_subset, word_of
from .errors import InputError, ParseError
from .matroid import (BinaryMatrix, DEFAULT_MAX_ELEMENTS, GraphInput,
                      GroundSet, circuits_of_binary_matrix, circuits_of_graph,
                      validate_circuit_family)

FIG1_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (3, 5, 7))


def fig1(max_n=DEFAULT_MAX_ELEMENTS):
    """The rank-3 seven-point instance with five 3-point lines."""
    lines = [word_of(t) for t in FIG1_LINES]
    circuits = list(lines)
    for combo in combinations(range(1, 8), 4):
        w = word_of(combo)
        if not any(is_subset(l, w) for l in lines):
            circuits.append(w)
    return validate_circuit_family(circuits, GroundSet(7, max_n))


def complete_graph(k):
    if k < 2:
        raise InputError(f"complete graph needs at least 2 vertices, got {k}")
    return GraphInput(k, tuple(combinations(range(1, k + 1), 2)))


def cycle_graph(k):
    if k < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {k}")
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    return GraphInput(k, tuple(edges))


def wheel_graph(k):
    if k < 3:
        raise InputError(f"wheel needs a rim of at least 3 vertices, got {k}")
    hub = k + 1
    edges = [(i, i + 1) for i in range(1, k)] + [(1, k)]
    edges += [(i, hub) for i in range(1, k + 1)]
    return GraphInput(k + 1, tuple(edges))


def fano_matrix():
    return BinaryMatrix(3, 7, tuple(range(1, 8)))


_BUILTIN_GRAPH = {"K": (complete_graph, 2), "C": (cycle_graph, 3),
                  "W": (wheel_graph, 3)}


def resolve_instance(spec, max_n=DEFAULT_MAX_ELEMENTS):
    """Turn a command-line instance spec into (label, CircuitFamily).

    Accepts the built-in names (fig1, fano, K4, C5, W6, also K_4 style) and
    file references circuits:PATH, matrix:PATH, graph:PATH.
    """
    if spec == "fig1":
        return "fig1", fig1(max_n)
    if spec == "fano":
        return "fano", circuits_of_binary_matrix(fano_matrix(), max_n)
    m = re.fullmatch(r"([KCW])_?(\d+)", spec)
    if m:
        maker, least = _BUILTIN_GRAPH[m.group(1)]
        k = int(m.group(2))
        if k < least:
            raise InputError(f"{m.group(1)}{k} needs a parameter of at least {least}")
        label = f"{m.group(1)}{k}"
        return label, circuits_of_graph(maker(k), max_n)
    kind, sep, path = spec.partition(":")
    if sep and kind in ("circuits", "matrix", "graph"):
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
        if kind == "circuits":
            return path, parse_circuit_file(text, max_n)
        if kind == "matrix":
            return path, circuits_of_binary_matrix(parse_matrix_file(text), max_n)
        return path, circuits_of_graph(parse_graph_file(text), max_n)
    raise InputError(
        f"unknown instance {spec!r}: expected fig1, fano, K<k>, C<k>, W<k>, "
        f"circuits:PATH, matrix:PATH or graph:PATH")


def _content_lines(text):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _ints(no, line, expect=None):
    try:
        vals = [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError(no, f"expected integers, got {line!r}")
    if expect is not None and len(vals) != expect:
        raise ParseError(no, f"expected {expect} integers, got {len(vals)}")
    return vals


def parse_circuit_file(text, max_n=DEFAULT_MAX_ELEMENTS):
    """Circuit list; the ground size is the largest label mentioned."""
    circuits = []
    top = 0
    for no, line in _content_lines(text):
        labels = _ints(no, line)
        if any(v < 1 for v in labels):
            raise ParseError(no, "element labels must be positive")
        if len(set(labels)) != len(labels):
            raise ParseError(no, "repeated element in circuit")
        top = max(top, max(labels))
        circuits.append(word_of(labels))
    if not circuits:
        raise ParseError(1, "no circuits in file")
    return validate_circuit_family(circuits, GroundSet(top, max_n))


def parse_matrix_file(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty matrix file")
    no, header = lines[0]
    r, n = _ints(no, header, expect=2)
    if len(lines) != r + 1:
        raise ParseError(no, f"expected {r} matrix rows, got {len(lines) - 1}")
    rows = []
    for no, line in lines[1:]:
        row = line.replace(" ", "")
        if len(row) != n or any(ch not in "01" for ch in row):
            raise ParseError(no, f"expected {n} characters over 0/1")
        rows.append(row)
    return BinaryMatrix.from_rows(rows)


def parse_graph_file(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty graph file")
    no, header = lines[0]
    d, n = _ints(no, header, expect=2)
    if len(lines) != n + 1:
        raise ParseError(no, f"expected {n} edge lines, got {len(lines) - 1}")
    edges = []
    for no, line in lines[1:]:
        u, v = _ints(no, line, expect=2)
        edges.append((u, v))
    try:
        return GraphInput(d, tuple(edges))
    except InputError as exc:
        raise ParseError(lines[0][0], str(exc))
