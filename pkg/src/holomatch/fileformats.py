"""Text formats for signatures, graphs, matchgates, bases and manifests.

All formats are line based; ``#`` starts a comment and blank lines are
ignored.  Vertex ids and edge indices are 0-based, slot and label numbers
are 1-based.

signature   ``signature k=2 n=3 role=generator`` then k^n scalars.  A
            transducer header reads ``role=transducer[out=2,in=1]``.
graph       ``vertices n``, ``edge u v w`` (edge index = order of edge
            lines), ``rot v e1 e2 ...`` counterclockwise, ``outer v1 v2 ...``
            (one line per component, optional).  ``outer-dart e d`` names the
            unbounded face by one of its darts (edge e traversed from its
            first endpoint when d=0) where a vertex walk is ambiguous.
matchgate   a graph plus ``inputs ...`` and ``outputs ...`` in label order.
basis       ``basis l=2 k=4`` then 2^l rows of k scalars.
matchgrid   ``generator <id> <file>``, ``recognizer <id> <file>`` and
            ``connect <gen-id>.<out#> <rec-id>.<in#>``.
collapse    ``basis <file>``, ``generator <file> [standard <file>]``,
            ``recognizer <file> [standard <file>]`` and optional
            ``connect <gen#>.<slot> <rec#>.<slot>`` (0-based tensor index).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from .errors import HolomatchError, ParseError
from .holant_engine import Matchgrid
from .holo_transform import Basis
from .matchgate_fkt import Matchgate, PlanarGraph
from .scalar_linalg import format_scalar, parse_scalar
from .signature_core import Signature

_ROLE_RE = re.compile(r"^transducer\[out=(\d+),in=(\d+)\]$")


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _header_fields(words, number):
    fields = {}
    for word in words:
        if "=" not in word:
            raise ParseError(f"line {number}: expected key=value, got {word!r}")
        key, value = word.split("=", 1)
        fields[key] = value
    return fields


def _int(text, number, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"line {number}: {what} must be an integer, got {text!r}") from None


def _scalars(words, number):
    try:
        return [parse_scalar(w) for w in words]
    except ParseError as exc:
        raise ParseError(f"line {number}: {exc}") from None


# signatures -------------------------------------------------------------------

def parse_signature(text: str) -> Signature:
    lines = list(_lines(text))
    if not lines or lines[0][1].split()[0] != "signature":
        raise ParseError("line 1: expected a 'signature' header")
    number, header = lines[0]
    fields = _header_fields(header.split()[1:], number)
    for key in ("k", "n", "role"):
        if key not in fields:
            raise ParseError(f"line {number}: header lacks {key}=")
    k, n = _int(fields["k"], number, "k"), _int(fields["n"], number, "n")
    role, outputs, inputs = fields["role"], None, None
    match = _ROLE_RE.match(role)
    if match:
        role, outputs, inputs = "transducer", int(match.group(1)), int(match.group(2))
        if outputs + inputs != n or k != 2:
            raise ParseError(f"line {number}: transducer needs k=2 and out+in = n")
    elif role not in ("generator", "recognizer"):
        raise ParseError(f"line {number}: unknown role {role!r}")
    entries = []
    for number, line in lines[1:]:
        entries += _scalars(line.split(), number)
    if len(entries) != k ** n:
        raise ParseError(f"expected {k ** n} entries, found {len(entries)}")
    return Signature(entries, k, n, role, outputs, inputs)


def format_signature(sig: Signature, per_line: int = 8) -> str:
    role = sig.role if sig.role != "transducer" else f"transducer[out={sig.outputs},in={sig.inputs}]"
    out = [f"signature k={sig.k} n={sig.arity} role={role}"]
    values = [format_scalar(x) for x in sig.vector]
    for i in range(0, len(values), per_line):
        out.append(" ".join(values[i:i + per_line]))
    return "\n".join(out) + "\n"


# graphs and matchgates ----------------------------------------------------------

def parse_graph(text: str):
    """Returns (graph, inputs, outputs); the last two are None when absent."""
    n = None
    edges, rotation, outer, darts = [], {}, [], []
    inputs = outputs = None
    for number, line in _lines(text):
        word, *rest = line.split()
        if word == "vertices":
            if len(rest) != 1:
                raise ParseError(f"line {number}: 'vertices' takes one count")
            n = _int(rest[0], number, "vertex count")
        elif word == "edge":
            if len(rest) != 3:
                raise ParseError(f"line {number}: 'edge' takes u v weight")
            edges.append((_int(rest[0], number, "u"), _int(rest[1], number, "v"), _scalars(rest[2:], number)[0]))
        elif word == "rot":
            if not rest:
                raise ParseError(f"line {number}: 'rot' needs a vertex")
            v = _int(rest[0], number, "vertex")
            if v in rotation:
                raise ParseError(f"line {number}: second rotation for vertex {v}")
            rotation[v] = [_int(e, number, "edge index") for e in rest[1:]]
        elif word == "outer":
            outer.append([_int(v, number, "vertex") for v in rest])
        elif word == "outer-dart":
            if len(rest) != 2 or rest[1] not in ("0", "1"):
                raise ParseError(f"line {number}: 'outer-dart' takes an edge index and a direction 0|1")
            darts.append((_int(rest[0], number, "edge index"), int(rest[1])))
        elif word == "inputs":
            inputs = [_int(v, number, "vertex") for v in rest]
        elif word == "outputs":
            outputs = [_int(v, number, "vertex") for v in rest]
        else:
            raise ParseError(f"line {number}: unknown keyword {word!r}")
    if n is None:
        raise ParseError("missing 'vertices' line")
    for u, v, _ in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) names a vertex outside 0..{n - 1}")
    rot = [rotation.get(v, []) for v in range(n)]
    for e, _ in darts:
        if not 0 <= e < len(edges):
            raise ParseError(f"outer-dart names a missing edge {e}")
    try:
        graph = PlanarGraph(n, edges, rot, outer=darts or outer or None)
        graph.outer_faces()
    except HolomatchError as exc:
        raise ParseError(f"invalid embedding: {exc}") from exc
    return graph, inputs, outputs


def parse_planar_graph(text: str) -> PlanarGraph:
    return parse_graph(text)[0]


def parse_matchgate(text: str) -> Matchgate:
    graph, inputs, outputs = parse_graph(text)
    try:
        return Matchgate(graph, inputs or [], outputs or [])
    except HolomatchError as exc:
        raise ParseError(f"invalid external nodes: {exc}") from exc


def format_graph(g: PlanarGraph) -> str:
    out = [f"vertices {g.n}"]
    out += [f"edge {u} {v} {format_scalar(w)}" for u, v, w in g.edges]
    out += [f"rot {v} {' '.join(map(str, g.rotation[v]))}".rstrip() for v in range(g.n)]
    faces = g.faces()
    chosen = [f for f in g.outer_faces().values() if f is not None]
    walks = [[g.tail(d) for d in faces[f]] for f in chosen]
    if all(g.faces_matching(w) == [f] for w, f in zip(walks, chosen)):
        out += ["outer " + " ".join(map(str, w)) for w in walks]
    else:
        # a vertex walk shared by several faces (digons, trees) needs an exact dart
        out += [f"outer-dart {faces[f][0][0]} {faces[f][0][1]}" for f in chosen]
    return "\n".join(out) + "\n"


def format_matchgate(m: Matchgate) -> str:
    text = format_graph(m.graph)
    return text + f"inputs {' '.join(map(str, m.inputs))}".rstrip() + "\n" \
        + f"outputs {' '.join(map(str, m.outputs))}".rstrip() + "\n"


# bases ----------------------------------------------------------------------------

def parse_basis(text: str) -> Basis:
    lines = list(_lines(text))
    if not lines or lines[0][1].split()[0] != "basis":
        raise ParseError("line 1: expected a 'basis' header")
    number, header = lines[0]
    fields = _header_fields(header.split()[1:], number)
    ell, k = _int(fields.get("l", ""), number, "l"), _int(fields.get("k", ""), number, "k")
    rows = [_scalars(line.split(), number) for number, line in lines[1:]]
    if len(rows) != 2 ** ell or any(len(r) != k for r in rows):
        raise ParseError(f"a basis with l={ell}, k={k} needs {2 ** ell} rows of {k} scalars")
    return Basis(rows, ell)


def format_basis(basis: Basis) -> str:
    out = [f"basis l={basis.block_len} k={basis.k}"]
    out += [" ".join(format_scalar(x) for x in row) for row in basis.matrix]
    return "\n".join(out) + "\n"


# manifests ----------------------------------------------------------------------------

def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc


def _slot(text, number):
    left, sep, right = text.partition(".")
    if not sep:
        raise ParseError(f"line {number}: expected <id>.<number>, got {text!r}")
    return left, _int(right, number, "slot")


def load_matchgrid(path) -> Matchgrid:
    path = Path(path)
    gens, recs, connectors = {}, {}, []
    for number, line in _lines(_read(path)):
        word, *rest = line.split()
        if word in ("generator", "recognizer"):
            if len(rest) != 2:
                raise ParseError(f"line {number}: '{word}' takes an id and a file")
            table = gens if word == "generator" else recs
            if rest[0] in gens or rest[0] in recs:
                raise ParseError(f"line {number}: duplicate id {rest[0]!r}")
            table[rest[0]] = parse_matchgate(_read(path.parent / rest[1]))
        elif word == "connect":
            if len(rest) != 2:
                raise ParseError(f"line {number}: 'connect' takes two endpoints")
            connectors.append((_slot(rest[0], number), _slot(rest[1], number), number))
        else:
            raise ParseError(f"line {number}: unknown keyword {word!r}")
    gen_ids, rec_ids = list(gens), list(recs)
    resolved = []
    for (g, a), (r, b), number in connectors:
        if g not in gens or r not in recs:
            raise ParseError(f"line {number}: unknown generator {g!r} or recognizer {r!r}")
        resolved.append(((gen_ids.index(g), a), (rec_ids.index(r), b)))
    return Matchgrid(list(gens.values()), list(recs.values()), resolved)


@dataclass
class CollapseManifest:
    basis: Basis
    generators: list = field(default_factory=list)    # (G, underG or None)
    recognizers: list = field(default_factory=list)   # (R, underR or None)
    wiring: list = None


def load_collapse_manifest(path) -> CollapseManifest:
    path = Path(path)
    basis, gens, recs, wiring = None, [], [], []
    for number, line in _lines(_read(path)):
        word, *rest = line.split()
        if word == "basis":
            basis = parse_basis(_read(path.parent / rest[0]))
        elif word in ("generator", "recognizer"):
            if len(rest) not in (1, 3) or (len(rest) == 3 and rest[1] != "standard"):
                raise ParseError(f"line {number}: '{word} <file> [standard <file>]'")
            sig = parse_signature(_read(path.parent / rest[0])).with_role(word)
            std = parse_signature(_read(path.parent / rest[2])).with_role(word) if len(rest) == 3 else None
            (gens if word == "generator" else recs).append((sig, std))
        elif word == "connect":
            (g, a), (r, b) = _slot(rest[0], number), _slot(rest[1], number)
            wiring.append(((_int(g, number, "generator"), a), (_int(r, number, "recognizer"), b)))
        else:
            raise ParseError(f"line {number}: unknown keyword {word!r}")
    if basis is None:
        raise ParseError("collapse manifest lacks a 'basis' line")
    return CollapseManifest(basis, gens, recs, wiring or None)
