import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from holomatch.errors import PairingMismatch, PlanarityViolation, WiringMismatch
from holomatch.graph_families import path, random_matchgate, random_weight
from holomatch.holant_engine import (Matchgrid, compose, compose_signature, holant_contract, holant_network,
                                     holant_of_grid, holant_via_perfmatch)
from holomatch.instances import random_matchgrid
from holomatch.matchgate_fkt import Matchgate, PlanarGraph, standard_signature
from holomatch.scalar_linalg import Scalar, inverse, kronecker_power, matrix
from holomatch.signature_core import Signature


def edge_gate(w, inputs=(), outputs=(0, 1)):
    return Matchgate(PlanarGraph(2, [(0, 1, w)], [[0], [0]]), inputs, outputs)


def test_contract_examples():
    assert holant_contract([Signature([1, 0])], [Signature([1, 0], role="recognizer")], [((0, 1), (0, 1))]) == 1
    eq = Signature([1, 0, 0, 1])
    rec = Signature([2, 3, 5, 7], role="recognizer")
    wiring = [((0, 1), (0, 1)), ((0, 2), (0, 2))]
    assert holant_contract([eq], [rec], wiring) == 2 + 7
    assert holant_network([eq], [rec], wiring) == 9


def test_wiring_must_cover_every_slot():
    with pytest.raises(WiringMismatch):
        holant_contract([Signature([1, 0, 0, 1])], [Signature([1, 0, 0, 1], role="recognizer")], [((0, 1), (0, 1))])


def test_two_edges_make_a_four_cycle():
    w1, w2 = Scalar(2, 1), 3
    grid = Matchgrid([edge_gate(w1)], [edge_gate(w2, inputs=(0, 1), outputs=())], [((0, 1), (0, 1)), ((0, 2), (0, 2))])
    assert holant_via_perfmatch(grid) == w1 * w2 + 1
    assert holant_of_grid(grid) == w1 * w2 + 1


def test_zero_gate_gives_zero():
    # the isolated internal vertex 3 can never be matched
    zero_gen = Matchgate(PlanarGraph(4, [(0, 1, 1)], [[0], [0], [], []]), [], [2])
    grid = Matchgrid([zero_gen], [edge_gate(1, inputs=(0,), outputs=())], [((0, 1), (0, 1))])
    assert standard_signature(zero_gen).vector.tolist() == [0, 0]
    assert holant_via_perfmatch(grid) == holant_of_grid(grid) == 0


@given(st.integers(0, 10 ** 6))
def test_holant_theorem(seed):
    grid = random_matchgrid(random.Random(seed))
    assert holant_of_grid(grid) == holant_via_perfmatch(grid) == holant_of_grid(grid, "network")


@given(st.integers(0, 10 ** 6))
def test_basis_invariance(seed):
    rng = random.Random(seed)
    arity = rng.randint(1, 3)
    G = Signature([rng.randint(-3, 3) for _ in range(2 ** arity)], 2, arity)
    R = Signature([rng.randint(-3, 3) for _ in range(2 ** arity)], 2, arity, "recognizer")
    wiring = [((0, a), (0, a)) for a in range(1, arity + 1)]
    while True:
        N = matrix([[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        if N[0, 0] * N[1, 1] != N[0, 1] * N[1, 0]:
            break
    G2 = Signature(kronecker_power(N, arity) @ G.vector, 2, arity)
    R2 = Signature(R.vector @ kronecker_power(inverse(N), arity), 2, arity, "recognizer")
    assert holant_contract([G], [R], wiring) == holant_contract([G2], [R2], wiring)


def test_compose_with_wire_is_identity():
    rng = random.Random(2)
    gate = random_matchgate(rng, 5, 0, 2, 0.6, lambda: random_weight(rng))
    # a path of three edges: input at one end, output at the other, identity signature
    wire = Matchgate(path(4), [0], [3])
    assert list(standard_signature(wire).vector) == [1, 0, 0, 1]
    composed = compose(gate, wire, [(1, 1)])
    expected = compose_signature(gate, wire, [(1, 1)], composed)
    assert standard_signature(composed) == expected
    assert sorted(expected.vector, key=str) == sorted(standard_signature(gate).vector, key=str)


def test_chained_edges():
    a, b = edge_gate(2, inputs=(0,), outputs=(1,)), edge_gate(5, inputs=(0,), outputs=(1,))
    composed = compose(a, b, [(1, 1)])
    sig = standard_signature(composed)
    # the second gate's matrix acts after the first: [[5,0],[0,1]] [[2,0],[0,1]]
    assert sig.transducer_matrix().tolist() == (matrix([[5, 0], [0, 1]]) @ matrix([[2, 0], [0, 1]])).tolist()


def test_pairing_errors():
    a = edge_gate(2, inputs=(0,), outputs=(1,))
    with pytest.raises(PairingMismatch):
        compose(a, a, [(2, 1)])
    with pytest.raises(PairingMismatch):
        compose(a, a, [(1, 1), (1, 1)])


def test_crossing_pairing_is_rejected():
    rng = random.Random(1)
    first = random_matchgate(rng, 6, 0, 3, 0.5)
    second = random_matchgate(rng, 6, 3, 0, 0.5)
    compose(first, second, [(1, 1), (2, 2), (3, 3)])
    with pytest.raises(PlanarityViolation):
        compose(first, second, [(1, 1), (2, 3), (3, 2)])


@given(st.integers(0, 10 ** 6))
def test_recognizer_after_transducers(seed):
    rng = random.Random(seed)
    weight = lambda: random_weight(rng, 0.2)
    T = random_matchgate(rng, 4, 1, 2, 0.6, weight)
    R = random_matchgate(rng, 5, 2, 0, 0.6, weight)
    composed = compose(T, R, [(1, 1), (2, 2)])
    sig = standard_signature(composed)
    expected = standard_signature(R).vector @ standard_signature(T).transducer_matrix()
    assert list(sig.vector) == list(expected)
