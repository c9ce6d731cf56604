"""Edge colorings of planar cubic graphs with a Doppler-shift vertex constraint.

Colors are two-bit patterns: red 00, yellow 01, green 10, blue 11.  At each
vertex the three incident colors must fit a red shift (no blue) or a blue
shift (no red).  The default ``semantics="or"`` counts a coloring once when
every vertex satisfies at least one shift.  ``semantics="sum"`` weights each
vertex by the number of shifts it satisfies (0, 1 or 2).

The holographic route transforms the edge and vertex tensors with the
4x4 basis with entries (-1)^(x1 y2 + x2 y1) and contracts the resulting
Boolean signatures.  Only tensors that pass the matchgate test are
accepted; see ``transformed_signatures``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import BoundExceeded, NotCubic, RealizabilityFailed
from .holant_engine import holant_network
from .holo_transform import Basis, generator_to_standard
from .matchgate_fkt import PlanarGraph
from .scalar_linalg import inverse, kronecker_power
from .signature_core import Signature, verify_standard

RED, YELLOW, GREEN, BLUE = 0b00, 0b01, 0b10, 0b11
COLORS = {"R": RED, "Y": YELLOW, "G": GREEN, "B": BLUE}
SEMANTICS = ("or", "sum")
BRUTE_FORCE_EDGES = 14


def _color(c):
    return COLORS[c] if isinstance(c, str) else int(c)


def red_shift(*colors):
    return all(_color(c) != BLUE for c in colors)


def blue_shift(*colors):
    return all(_color(c) != RED for c in colors)


def vertex_constraint(c1, c2, c3) -> int:
    """1 when the three colors fit a red shift or a blue shift, else 0."""
    return int(red_shift(c1, c2, c3) or blue_shift(c1, c2, c3))


def shift_multiplicity(c1, c2, c3) -> int:
    """How many of the two shifts the three colors fit."""
    return int(red_shift(c1, c2, c3)) + int(blue_shift(c1, c2, c3))


def _vertex_function(semantics):
    if semantics not in SEMANTICS:
        raise ValueError(f"semantics must be one of {SEMANTICS}")
    return vertex_constraint if semantics == "or" else shift_multiplicity


def vertex_table(semantics="or") -> np.ndarray:
    """The 4x4x4 vertex tensor as plain ints."""
    f = _vertex_function(semantics)
    table = np.zeros((4, 4, 4), dtype=np.int64)
    for a, b, c in product(range(4), repeat=3):
        table[a, b, c] = f(a, b, c)
    return table


def check_cubic(g: PlanarGraph):
    bad = [v for v in range(g.n) if len(g.rotation[v]) != 3]
    if bad:
        raise NotCubic(f"vertices {bad[:5]} do not have degree 3")


def doppler_bruteforce(g: PlanarGraph, semantics="or", bound=BRUTE_FORCE_EDGES, chunk=1 << 20) -> int:
    """Sum over all 4^|E| edge colorings of the product of vertex values."""
    check_cubic(g)
    m = len(g.edges)
    if m > bound:
        raise BoundExceeded(f"{m} edges exceed the enumeration bound {bound}")
    flat = vertex_table(semantics).ravel()
    incident = [list(g.rotation[v]) for v in range(g.n)]
    total = 0
    for start in range(0, 4 ** m, chunk):
        codes = np.arange(start, min(start + chunk, 4 ** m), dtype=np.int64)
        colors = [(codes >> (2 * (m - 1 - e))) & 3 for e in range(m)]
        weight = np.ones(len(codes), dtype=np.int64)
        for a, b, c in incident:
            weight *= flat[colors[a] * 16 + colors[b] * 4 + colors[c]]
            if not weight.any():
                break
        total += int(weight.sum())
    return total


# per-vertex choice: allowed color set and inclusion-exclusion sign
_CHOICES = {
    "red": ({RED, YELLOW, GREEN}, 1),
    "blue": ({BLUE, GREEN, YELLOW}, 1),
    "both": ({YELLOW, GREEN}, -1),
}


def inclusion_exclusion(g: PlanarGraph, semantics="or") -> int:
    """Count by choosing a shift at every vertex.

    With the OR reading the indicator of "red or blue" is red + blue - both;
    with the SUM reading it is red + blue.  For fixed choices every edge
    contributes the size of the intersection of its endpoints' color sets.
    """
    check_cubic(g)
    names = ["red", "blue", "both"] if semantics == "or" else ["red", "blue"]
    _vertex_function(semantics)
    total = 0
    for choice in product(names, repeat=g.n):
        term = 1
        for c in choice:
            term *= _CHOICES[c][1]
        for u, v, _ in g.edges:
            term *= len(_CHOICES[choice[u]][0] & _CHOICES[choice[v]][0])
            if not term:
                break
        total += term
    return total


# holographic route -----------------------------------------------------------

def appendix_basis() -> Basis:
    """4x4 basis with entry (-1)^(x1 y2 + x2 y1) at row x1x2, column y1y2."""
    rows = [[(-1) ** (((x >> 1) & (y & 1)) ^ ((x & 1) & (y >> 1))) for y in range(4)] for x in range(4)]
    return Basis(rows, 2)


def swap_bits(c: int) -> int:
    return ((c & 1) << 1) | (c >> 1)


def edge_equality(twisted=True) -> Signature:
    """Arity-2 domain-4 edge tensor.

    The plain equality fails the matchgate test after the transform.  The
    twisted one pairs c with its bit swap; it gives the same count because
    the vertex constraint only looks at red and blue, which the swap fixes.
    """
    entries = [int(b == (swap_bits(a) if twisted else a)) for a in range(4) for b in range(4)]
    return Signature(entries, 4, 2, "generator")


def vertex_signature(semantics="or") -> Signature:
    return Signature(vertex_table(semantics).ravel().tolist(), 4, 3, "recognizer")


@dataclass
class TransformedTensors:
    edge: Signature      # Boolean arity 4
    vertex: Signature    # Boolean arity 6
    edge_failure: object = None
    vertex_failure: object = None

    @property
    def realizable(self):
        return self.edge_failure is None and self.vertex_failure is None


def _failure(sig):
    parity, failure = verify_standard(sig)
    if not parity:
        return f"parity violation: {parity.even_witness} and {parity.odd_witness} are both nonzero"
    return failure


def transformed_signatures(semantics="or", twisted=True) -> TransformedTensors:
    """Edge tensor through M and vertex tensor through M^-1, with their matchgate-test outcome."""
    basis = appendix_basis()
    edge = generator_to_standard(edge_equality(twisted), basis)
    inv = inverse(basis.matrix)
    vertex_vec = vertex_signature(semantics).vector @ kronecker_power(inv, 3)
    vertex = Signature(vertex_vec, 2, 6, "recognizer")
    return TransformedTensors(edge, vertex, _failure(edge), _failure(vertex))


def doppler_holographic(g: PlanarGraph, semantics="or", twisted=True, verify=True):
    """Count through the transformed signatures, contracted over two-bit wire pairs.

    Raises RealizabilityFailed when a transformed tensor fails the matchgate
    test, unless ``verify`` is False.
    """
    check_cubic(g)
    tensors = transformed_signatures(semantics, twisted)
    if verify and not tensors.realizable:
        which, failure = (("vertex", tensors.vertex_failure) if tensors.vertex_failure is not None
                          else ("edge", tensors.edge_failure))
        detail = failure if isinstance(failure, str) else failure.describe()
        raise RealizabilityFailed(f"transformed {which} tensor is not a matchgate signature: {detail}",
                                  failure)
    edge = tensors.edge.blocks(2).tensor
    vertex = tensors.vertex.blocks(2).tensor
    wiring = []
    for e, (u, v, _) in enumerate(g.edges):
        wiring.append(((e, 1), (u, g.rotation[u].index(e) + 1)))
        wiring.append(((e, 2), (v, g.rotation[v].index(e) + 1)))
    value = holant_network([edge] * len(g.edges), [vertex] * g.n, wiring)
    return int(value.re) if value.im == 0 and value.re.denominator == 1 else value


def doppler_graphs():
    """Small planar cubic (multi)graphs with at most 12 edges."""
    from .graph_families import add_parallel_edge, complete4, cube, cycle, prism, theta
    double_digon = add_parallel_edge(add_parallel_edge(cycle(4), 0), 2)
    return {"theta": theta(), "double_digon": double_digon, "K4": complete4(), "prism": prism(), "cube": cube()}
