"""Random realizable instances for the collapse procedures, and random matchgrids.

Every instance is built by composition, so it is realizable by construction:
a small invertible basis M0 (k x k), a transducer matchgate T0 with l
outputs and log2(k) inputs, and the large basis M = T0 M0.  A generator
matchgate with signature underG0 gives G = (M0^-1)^(x)n underG0, so that
M^(x)n G = T0^(x)n underG0 is again a matchgate signature.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .graph_families import random_matchgate, random_weight
from .holant_engine import Matchgrid
from .holo_transform import Basis, generator_to_standard
from .matchgate_fkt import standard_signature
from .scalar_linalg import determinant, inverse, kronecker_power, matrix, rank
from .signature_core import Signature, full_rank_slot


@dataclass
class CollapseInstance:
    basis: Basis
    generators: list                   # (G, underG) pairs
    recognizers: list = field(default_factory=list)   # (R, underR) pairs
    wiring: list = field(default_factory=list)
    small_basis: object = None
    transducer: object = None


def _weights(rng, complex_rate):
    return lambda: random_weight(rng, complex_rate)


def random_invertible(rng: random.Random, k: int):
    while True:
        mat = matrix([[rng.choice([-2, -1, 0, 1, 1, 2, 3]) for _ in range(k)] for _ in range(k)])
        if determinant(mat) != 0:
            return mat


def random_transducer_matrix(rng: random.Random, outputs: int, inputs: int, complex_rate=0.0, attempts=400):
    """Transducer matrix (2^outputs x 2^inputs) of a random matchgate, of full column rank."""
    for _ in range(attempts):
        nv = rng.randint(outputs + inputs, outputs + inputs + 3)
        try:
            gate = random_matchgate(rng, nv, inputs, outputs, rng.uniform(0.3, 0.8), _weights(rng, complex_rate))
        except RuntimeError:
            continue
        mat = standard_signature(gate).transducer_matrix()
        if rank(mat) == 2 ** inputs:
            return mat
    raise RuntimeError("no full-column-rank transducer found")


def random_standard(rng: random.Random, arity: int, role: str, complex_rate=0.0, attempts=400,
                    require=None) -> Signature:
    """Signature of a random matchgate with ``arity`` external nodes of one role."""
    for _ in range(attempts):
        nv = rng.randint(max(arity, 2), arity + 3)
        try:
            if role == "generator":
                gate = random_matchgate(rng, nv, 0, arity, rng.uniform(0.3, 0.8), _weights(rng, complex_rate))
            else:
                gate = random_matchgate(rng, nv, arity, 0, rng.uniform(0.3, 0.8), _weights(rng, complex_rate))
        except RuntimeError:
            continue
        sig = standard_signature(gate)
        if any(sig.vector) and (require is None or require(sig)):
            return sig
    raise RuntimeError("no suitable random matchgate found")


def random_collapse_instance(rng: random.Random, k: int, block_len: int, arity: int = 2,
                             recognizer_arities=None, complex_rate=0.0) -> CollapseInstance:
    """One full-rank generator of the given arity, plus recognizers that consume its slots."""
    small_bits = (k - 1).bit_length()
    M0 = random_invertible(rng, k)
    T0 = random_transducer_matrix(rng, block_len, small_bits, complex_rate)
    basis = Basis(T0 @ M0, block_len)
    M0_inv = inverse(M0)

    def full_rank(sig):
        return full_rank_slot(sig.blocks(small_bits)) is not None

    underG0 = random_standard(rng, arity * small_bits, "generator", complex_rate, require=full_rank)
    G = Signature(kronecker_power(M0_inv, arity) @ underG0.vector, k, arity, "generator")
    underG = generator_to_standard(G, basis)
    recognizer_arities = recognizer_arities or [arity]
    if sum(recognizer_arities) != arity:
        raise ValueError("recognizer arities must add up to the generator arity")
    recognizers, wiring, slot = [], [], 1
    for j, m in enumerate(recognizer_arities):
        underR = random_standard(rng, m * block_len, "recognizer", complex_rate)
        R = Signature(underR.vector @ kronecker_power(basis.matrix, m), k, m, "recognizer")
        recognizers.append((R, underR))
        for s in range(1, m + 1):
            wiring.append(((0, slot), (j, s)))
            slot += 1
    return CollapseInstance(basis, [(G, underG)], recognizers, wiring, M0, T0)


def random_matchgrid(rng: random.Random, max_gates: int = 6, max_wires: int = 10, complex_rate=0.3):
    """Random planar matchgrid.

    Each generator's outputs are cut into consecutive runs and every run
    feeds its own recognizer, label for label, so the grid stays planar.
    """
    weight = _weights(rng, complex_rate)
    gens, recs, connectors = [], [], []
    wires = 0
    while len(gens) + len(recs) + 2 <= max_gates and wires < max_wires:
        room = min(4, max_wires - wires, 2 * (max_gates - len(gens) - len(recs) - 1))
        arity = rng.randint(1, max(1, room))
        runs = []
        left = arity
        while left:
            size = rng.randint(1, left)
            runs.append(size)
            left -= size
        if len(gens) + len(recs) + 1 + len(runs) > max_gates:
            runs = [arity]
        gi = len(gens)
        gens.append(random_matchgate(rng, rng.randint(max(arity, 2), arity + 3), 0, arity, rng.random(), weight))
        label = 1
        for size in runs:
            rj = len(recs)
            recs.append(random_matchgate(rng, rng.randint(max(size, 2), size + 3), size, 0, rng.random(), weight))
            connectors += [((gi, label + b), (rj, b + 1)) for b in range(size)]
            label += size
        wires += arity
        if rng.random() < 0.3:
            break
    return Matchgrid(gens, recs, connectors)
