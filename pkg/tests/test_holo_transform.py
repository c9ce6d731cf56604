import random

import hypothesis.strategies as st
import pytest
from hypothesis import given

from holomatch.errors import DegenerateBasis, ShapeMismatch
from holomatch.holo_transform import (Basis, block_matrix_form, generator_to_standard,
                                      generator_to_standard_modewise, realizable_on, recognizer_from_standard,
                                      recognizer_from_standard_modewise, recognizer_solution_dimension,
                                      standard_from_recognizer, transported_matrix_form)
from holomatch.instances import random_collapse_instance
from holomatch.scalar_linalg import identity, matrices_equal
from holomatch.signature_core import Signature, matrix_form

H = Basis([[1, 1], [1, -1]])


def test_identity_basis_leaves_signatures_alone():
    G = Signature([3, 0, 0, 1])
    assert generator_to_standard(G, Basis(identity(2))) == G
    R = Signature([1, 2, 3, 4], role="recognizer")
    assert recognizer_from_standard(R, Basis(identity(2))) == R


def test_small_transforms():
    assert list(generator_to_standard(Signature([1, 0]), H).vector) == [1, 1]
    assert list(recognizer_from_standard(Signature([1, 1], role="recognizer"), H).vector) == [2, 0]


def test_degenerate_basis_rejected():
    basis = Basis([[1, 2], [2, 4]])
    assert not basis.full_rank
    with pytest.raises(DegenerateBasis):
        generator_to_standard(Signature([1, 0]), basis)


def test_shape_checks():
    with pytest.raises(ShapeMismatch):
        Basis([[1, 0], [0, 1], [1, 1]], 2)
    with pytest.raises(ShapeMismatch):
        generator_to_standard(Signature([1, 0, 0]), H)


def rational_matrix(rows, cols):
    return st.lists(st.lists(st.integers(-3, 3), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@given(rational_matrix(4, 2), st.integers(1, 3), st.data())
def test_kron_and_modewise_agree(rows, n, data):
    basis = Basis(rows, 2)
    if not basis.full_rank:
        return
    entries = data.draw(st.lists(st.integers(-3, 3), min_size=2 ** n, max_size=2 ** n))
    G = Signature(entries, 2, n)
    assert generator_to_standard(G, basis) == generator_to_standard_modewise(G, basis)
    R = Signature(data.draw(st.lists(st.integers(-3, 3), min_size=4 ** n, max_size=4 ** n)), 2, 2 * n, "recognizer")
    assert recognizer_from_standard(R, basis) == recognizer_from_standard_modewise(R, basis)


@given(rational_matrix(4, 2), st.integers(1, 3), st.data())
def test_transported_form_is_block_form(rows, n, data):
    basis = Basis(rows, 2)
    if not basis.full_rank:
        return
    G = Signature(data.draw(st.lists(st.integers(-3, 3), min_size=2 ** n, max_size=2 ** n)), 2, n)
    t = data.draw(st.integers(1, n))
    underG = generator_to_standard(G, basis)
    assert matrices_equal(transported_matrix_form(G, basis, t), block_matrix_form(underG, 2, t))


def test_square_recognizer_inverse():
    R = Signature([1, 2, 3, 4], role="recognizer")
    underR = standard_from_recognizer(R, H)
    assert recognizer_from_standard(underR, H) == R


def test_generator_realizability():
    assert realizable_on(Signature([3, 0, 0, 1]), Basis(identity(2)))
    assert not realizable_on(Signature([1, 1, 1, 1]), Basis(identity(2)))


def test_recognizer_realizability_square():
    assert realizable_on(Signature([1, 0, 0, 1], role="recognizer"), Basis(identity(2))).status == "realizable"
    assert realizable_on(Signature([1, 1, 0, 0], role="recognizer"), Basis(identity(2))).status == "unrealizable"


def test_recognizer_realizability_nonsquare_finds_witness():
    rng = random.Random(4)
    found = 0
    for _ in range(6):
        inst = random_collapse_instance(rng, 2, 2, 2)
        R, _ = inst.recognizers[0]
        result = realizable_on(R, inst.basis)
        assert result.status in ("realizable", "unknown")
        if result:
            found += 1
            assert recognizer_from_standard(result.witness, inst.basis) == R
    assert found
    assert recognizer_solution_dimension(R, inst.basis) == 16 - 4


def test_realizable_generator_forms_match_paper_layout():
    G = Signature(range(4), 2, 2)
    basis = Basis([[1, 0], [0, 1], [1, 1], [0, 2]], 2)
    underG = generator_to_standard(G, basis)
    assert matrix_form(underG.blocks(2), 1).shape == (4, 4)
