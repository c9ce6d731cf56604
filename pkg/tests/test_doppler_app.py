from itertools import permutations, product

import pytest

from holomatch.doppler_app import (BLUE, GREEN, RED, YELLOW, appendix_basis, doppler_bruteforce, doppler_graphs,
                                   doppler_holographic, edge_equality, inclusion_exclusion, shift_multiplicity,
                                   swap_bits, transformed_signatures, vertex_constraint)
from holomatch.errors import BoundExceeded, NotCubic, RealizabilityFailed
from holomatch.graph_families import cycle, grid
from holomatch.scalar_linalg import identity, inverse, matrices_equal
from holomatch.signature_core import is_standard_signature

GRAPHS = doppler_graphs()


def test_vertex_constraint_examples():
    assert vertex_constraint("R", "R", "R") == 1
    assert vertex_constraint("R", "B", "G") == 0
    assert vertex_constraint("Y", "G", "Y") == 1
    assert shift_multiplicity("Y", "G", "Y") == 2


def test_vertex_constraint_is_symmetric():
    for colors in product(range(4), repeat=3):
        assert len({vertex_constraint(*p) for p in permutations(colors)}) == 1


def test_appendix_basis():
    M = appendix_basis().matrix
    assert M[0, 0] == 1 and M[0b01, 0b10] == -1
    assert matrices_equal(M, M.T)
    assert matrices_equal(M @ M, 4 * identity(4))
    assert matrices_equal(inverse(M), M / 4)


def test_bruteforce_known_value():
    assert doppler_bruteforce(GRAPHS["K4"]) == 1490


@pytest.mark.parametrize("name", sorted(GRAPHS))
@pytest.mark.parametrize("semantics", ["or", "sum"])
def test_inclusion_exclusion_matches_bruteforce(name, semantics):
    if name == "cube" and semantics == "sum":
        pytest.skip("covered by the acceptance run")
    g = GRAPHS[name]
    assert inclusion_exclusion(g, semantics) == doppler_bruteforce(g, semantics)


def test_not_cubic_and_bound():
    with pytest.raises(NotCubic):
        doppler_bruteforce(cycle(4))
    with pytest.raises(BoundExceeded):
        doppler_bruteforce(GRAPHS["cube"], bound=10)
    with pytest.raises(NotCubic):
        doppler_holographic(grid(2, 3))


def test_twist_preserves_red_and_blue():
    assert swap_bits(RED) == RED and swap_bits(BLUE) == BLUE
    assert swap_bits(YELLOW) == GREEN


def test_transformed_edge_tensor_is_standard():
    assert is_standard_signature(transformed_signatures("or").edge)
    assert not is_standard_signature(transformed_signatures("or", twisted=False).edge)


def test_transformed_or_vertex_tensor_fails_the_matchgate_test():
    tensors = transformed_signatures("or")
    assert tensors.vertex_failure is not None
    with pytest.raises(RealizabilityFailed) as info:
        doppler_holographic(GRAPHS["K4"])
    assert info.value.witness is tensors.vertex_failure or info.value.witness == tensors.vertex_failure


def test_sum_reading_is_realizable():
    tensors = transformed_signatures("sum")
    assert tensors.realizable
    assert is_standard_signature(tensors.vertex)


@pytest.mark.parametrize("name", ["theta", "double_digon", "K4", "prism"])
@pytest.mark.parametrize("semantics", ["or", "sum"])
def test_transformed_contraction_keeps_the_count(name, semantics):
    g = GRAPHS[name]
    assert doppler_holographic(g, semantics, verify=False) == doppler_bruteforce(g, semantics)


def test_twisted_edge_keeps_the_count():
    g = GRAPHS["K4"]
    twisted = doppler_holographic(g, twisted=True, verify=False)
    plain = doppler_holographic(g, twisted=False, verify=False)
    assert twisted == plain == 1490
    assert list(edge_equality(False).vector) != list(edge_equality(True).vector)
