"""Matchgrids, Holant values and planar composition of matchgates."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import (BoundExceeded, NotPlanarEmbedding, PairingMismatch, PlanarityViolation,
                     WiringMismatch)
from .matchgate_fkt import Matchgate, PlanarGraph, perfmatch, standard_signature
from .scalar_linalg import ONE, ZERO, as_scalar
from .signature_core import Signature

DEFAULT_WIRE_BOUND = 16


def _tensor(sig):
    return sig.tensor if isinstance(sig, Signature) else np.asarray(sig, dtype=object)


def _check_wiring(gen_tensors, rec_tensors, wiring):
    gen_slots = {(i, s) for i, t in enumerate(gen_tensors) for s in range(1, t.ndim + 1)}
    rec_slots = {(j, s) for j, t in enumerate(rec_tensors) for s in range(1, t.ndim + 1)}
    used_gen = [tuple(a) for a, _ in wiring]
    used_rec = [tuple(b) for _, b in wiring]
    if sorted(used_gen) != sorted(gen_slots) or sorted(used_rec) != sorted(rec_slots):
        raise WiringMismatch("wiring must pair every generator slot with exactly one recognizer slot")
    sizes = {t.shape[0] for t in gen_tensors + rec_tensors if t.ndim}
    if len(sizes) > 1:
        raise WiringMismatch(f"mixed domain sizes {sorted(sizes)}")
    return sizes.pop() if sizes else 1


def holant_contract(generators, recognizers, wiring, bound: int = DEFAULT_WIRE_BOUND):
    """Sum over all wire assignments of the product of every tensor entry.

    ``wiring`` lists ((generator index, slot), (recognizer index, slot))
    with 1-based slots.  This is the brute-force reference: k^f terms.
    """
    gens = [_tensor(g) for g in generators]
    recs = [_tensor(r) for r in recognizers]
    k = _check_wiring(gens, recs, wiring)
    wires = len(wiring)
    if wires > bound:
        raise BoundExceeded(f"{wires} wires exceed the bound {bound}")
    gen_index = [[0] * g.ndim for g in gens]
    rec_index = [[0] * r.ndim for r in recs]
    for w, ((i, s), (j, t)) in enumerate(wiring):
        gen_index[i][s - 1] = w
        rec_index[j][t - 1] = w
    total = ZERO
    for assignment in product(range(k), repeat=wires):
        term = ONE
        for tensor, slots in zip(gens + recs, gen_index + rec_index):
            value = tensor[tuple(assignment[w] for w in slots)]
            if not value:
                term = ZERO
                break
            term = term * value
        if term:
            total = total + term
    return total


def contract_network(tensors, labels):
    """Exact contraction of a closed network.

    ``labels[i]`` names the wire on each axis of ``tensors[i]``; every wire
    name occurs exactly twice overall.  Pairs are contracted greedily by
    smallest intermediate size.
    """
    work = [(np.asarray(t, dtype=object), list(l)) for t, l in zip(tensors, labels)]
    counts = {}
    for _, ls in work:
        for w in ls:
            counts[w] = counts.get(w, 0) + 1
    if any(c != 2 for c in counts.values()):
        raise WiringMismatch("every wire must join exactly two tensor slots")
    while len(work) > 1:
        best = None
        for a in range(len(work)):
            for b in range(a + 1, len(work)):
                shared = set(work[a][1]) & set(work[b][1])
                size = 1
                for w in set(work[a][1]) ^ set(work[b][1]):
                    size *= (work[a][0].shape[work[a][1].index(w)] if w in work[a][1]
                             else work[b][0].shape[work[b][1].index(w)])
                key = (0 if shared else 1, size, a, b)
                if best is None or key < best[0]:
                    best = (key, a, b)
        _, a, b = best
        (ta, la), (tb, lb) = work[a], work[b]
        shared = [w for w in la if w in lb]
        result = np.tensordot(ta, tb, axes=([la.index(w) for w in shared], [lb.index(w) for w in shared]))
        merged = [w for w in la if w not in shared] + [w for w in lb if w not in shared]
        work = [item for i, item in enumerate(work) if i not in (a, b)] + [(np.asarray(result, dtype=object), merged)]
    tensor, remaining = work[0]
    # a wire joining two slots of the same tensor is a trace
    while remaining:
        w = remaining[0]
        i, j = [p for p, x in enumerate(remaining) if x == w]
        tensor = np.trace(tensor, axis1=i, axis2=j)
        remaining = [x for p, x in enumerate(remaining) if p not in (i, j)]
    return as_scalar(tensor.item() if isinstance(tensor, np.ndarray) else tensor)


def holant_network(generators, recognizers, wiring):
    """Holant by pairwise tensor contraction; exact and fast for larger instances."""
    gens = [_tensor(g) for g in generators]
    recs = [_tensor(r) for r in recognizers]
    _check_wiring(gens, recs, wiring)
    gen_labels = [[None] * g.ndim for g in gens]
    rec_labels = [[None] * r.ndim for r in recs]
    for w, ((i, s), (j, t)) in enumerate(wiring):
        gen_labels[i][s - 1] = w
        rec_labels[j][t - 1] = w
    return contract_network(gens + recs, gen_labels + rec_labels)


# matchgrids -----------------------------------------------------------------

@dataclass
class Matchgrid:
    """Generators and recognizers joined by weight-1 connectors.

    A connector ((i, a), (j, b)) joins output label a of generator i to input
    label b of recognizer j.
    """

    generators: list
    recognizers: list
    connectors: list = field(default_factory=list)

    def signatures(self):
        return ([standard_signature(g) for g in self.generators],
                [standard_signature(r) for r in self.recognizers])


def join(gates, links):
    """Disjoint union of gates plus one weight-1 edge per link.

    ``links`` holds ((gate, vertex), (gate, vertex)) with gate-local vertex
    ids.  Each new edge enters both endpoints at their corner on their gate's
    unbounded face.  Returns (graph, vertex offsets, first connector edge).
    """
    offsets, edges, edge_offsets, n = [], [], [], 0
    for gate in gates:
        offsets.append(n)
        edge_offsets.append(len(edges))
        edges += [(u + n, v + n, w) for u, v, w in gate.graph.edges]
        n += gate.graph.n
    rotation = []
    for gate, e0 in zip(gates, edge_offsets):
        rotation += [[e + e0 for e in rot] for rot in gate.graph.rotation]
    placements = []
    seen = set()
    for (gi, a), (gj, b) in links:
        for g, v in ((gi, a), (gj, b)):
            if (g, v) in seen:
                raise PairingMismatch(f"vertex {v} of gate {g} has two connectors")
            seen.add((g, v))
        placements.append([(gi, a), (gj, b)])
    first = len(edges)
    inserts = {}
    for c, ((gi, a), (gj, b)) in enumerate(placements):
        edges.append((a + offsets[gi], b + offsets[gj], ONE))
        for g, v in ((gi, a), (gj, b)):
            inserts[(g, v)] = (gates[g].insertion_index(v), first + c)
    for (g, v), (index, e) in inserts.items():
        rotation[v + offsets[g]].insert(index, e)
    graph = PlanarGraph(n, edges, rotation)
    try:
        graph.check_euler()
    except NotPlanarEmbedding as exc:
        raise PlanarityViolation(f"connectors cross: {exc}") from exc
    return graph, offsets, edge_offsets, first


def holant_via_perfmatch(grid: Matchgrid):
    gates = list(grid.generators) + list(grid.recognizers)
    shift = len(grid.generators)
    links = []
    for (i, a), (j, b) in grid.connectors:
        links.append(((i, grid.generators[i].outputs[a - 1]), (shift + j, grid.recognizers[j].inputs[b - 1])))
    needed = sum(len(g.outputs) for g in grid.generators)
    if len(links) != needed or needed != sum(len(r.inputs) for r in grid.recognizers):
        raise WiringMismatch("every external node needs exactly one connector")
    graph, *_ = join(gates, links)
    return perfmatch(graph)


def holant_of_grid(grid: Matchgrid, method: str = "contract"):
    """Holant of a matchgrid from the gates' standard signatures."""
    gens, recs = grid.signatures()
    run = holant_contract if method == "contract" else holant_network
    return run(gens, recs, grid.connectors)


# composition ----------------------------------------------------------------

def compose(first: Matchgate, second: Matchgate, pairing) -> Matchgate:
    """Join outputs of ``first`` to inputs of ``second``.

    ``pairing`` lists (output label of first, input label of second).  The
    composite keeps the vertex ids of ``first`` and shifts those of
    ``second`` by ``first.graph.n``.  Its labels follow the new unbounded
    face; when only one role survives, label 1 goes to the surviving node
    with the least (gate, label) key, inputs preferring ``first`` and
    outputs preferring ``second``.
    """
    pairing = [(int(a), int(b)) for a, b in pairing]
    if len({a for a, _ in pairing}) != len(pairing) or len({b for _, b in pairing}) != len(pairing):
        raise PairingMismatch("each label may be paired once")
    for a, b in pairing:
        if not 1 <= a <= len(first.outputs) or not 1 <= b <= len(second.inputs):
            raise PairingMismatch(f"pair ({a}, {b}) names a missing label")
    links = [((0, first.outputs[a - 1]), (1, second.inputs[b - 1])) for a, b in pairing]
    graph, offsets, edge_offsets, _ = join([first, second], links)
    paired_out = {first.outputs[a - 1] for a, _ in pairing}
    paired_in = {second.inputs[b - 1] for _, b in pairing}
    survivors = []  # (global vertex, role, key, corner dart in the union)
    for gate_index, gate in enumerate((first, second)):
        for role, nodes in (("in", gate.inputs), ("out", gate.outputs)):
            for label, v in enumerate(nodes, start=1):
                if (gate_index == 0 and v in paired_out) or (gate_index == 1 and v in paired_in):
                    continue
                dart = gate.corners[v]
                if dart is not None:
                    dart = (dart[0] + edge_offsets[gate_index], dart[1])
                preferred = gate_index if role == "in" else 1 - gate_index
                survivors.append((v + offsets[gate_index], role, (preferred, label), dart))
    faces = graph.faces()
    face_of = {d: f for f, face in enumerate(faces) for d in face}
    homes = {face_of[d] for *_, d in survivors if d is not None}
    if len(homes) > 1:
        raise PlanarityViolation("remaining external nodes do not share one face")
    if homes:
        outer = homes.pop()
    else:
        start = first.graph.outer_darts() or [(e - edge_offsets[1], d) for e, d in second.graph.outer_darts()]
        outer = face_of[start[0]] if start else None
    hint = [faces[outer][0]] if outer is not None else None
    composite_graph = PlanarGraph(graph.n, graph.edges, graph.rotation, outer=hint)
    if outer is not None:
        position = {d: i for i, d in enumerate(faces[outer])}
        survivors.sort(key=lambda s: -position[s[3]] if s[3] is not None else 0)
    inputs, outputs = _assign_labels(survivors)
    return Matchgate(composite_graph, inputs, outputs)


def _assign_labels(ccw):
    """Rotate a counterclockwise cyclic list so that inputs come first, outputs last."""
    if not ccw:
        return [], []
    roles = [s[1] for s in ccw]
    size = len(ccw)
    if len(set(roles)) == 2:
        starts = [i for i in range(size) if roles[i] == "in" and roles[i - 1] == "out"]
        if len(starts) != 1:
            raise PlanarityViolation("inputs and outputs interleave on the new boundary")
        s = starts[0]
        rotated = ccw[s:] + ccw[:s]
        inputs = [x[0] for x in rotated if x[1] == "in"]
        outputs = [x[0] for x in rotated if x[1] == "out"][::-1]
        return inputs, outputs
    s = min(range(size), key=lambda i: ccw[i][2])
    if roles[0] == "in":
        rotated = ccw[s:] + ccw[:s]
        return [x[0] for x in rotated], []
    # outputs are labelled clockwise
    clockwise = ccw[::-1]
    s = size - 1 - s
    rotated = clockwise[s:] + clockwise[:s]
    return [], [x[0] for x in rotated]


def compose_signature(first: Matchgate, second: Matchgate, pairing, composite: Matchgate) -> Signature:
    """Signature the composite must have: sum over the paired bits of the product of both signatures."""
    sig1, sig2 = standard_signature(first), standard_signature(second)
    order1 = list(first.outputs) + list(first.inputs)
    order2 = list(second.outputs) + list(second.inputs)
    shift = first.graph.n
    link = {first.outputs[a - 1]: second.inputs[b - 1] for a, b in pairing}
    hidden = list(link)
    order = list(composite.outputs) + list(composite.inputs)
    entries = []
    for pattern in product((0, 1), repeat=len(order)):
        bit = {v: x for v, x in zip(order, pattern)}
        total = ZERO
        for inner in product((0, 1), repeat=len(hidden)):
            b1 = {**{v: bit.get(v) for v in order1 if v in bit}, **dict(zip(hidden, inner))}
            b2 = {v: bit[v + shift] for v in order2 if v + shift in bit}
            b2.update({link[h]: x for h, x in zip(hidden, inner)})
            i1 = int("".join(str(b1[v]) for v in order1) or "0", 2)
            i2 = int("".join(str(b2[v]) for v in order2) or "0", 2)
            total = total + sig1.vector[i1] * sig2.vector[i2]
        entries.append(total)
    role = composite.role
    if role == "transducer":
        return Signature(entries, 2, len(order), role, len(composite.outputs), len(composite.inputs))
    return Signature(entries, 2, len(order), role)
