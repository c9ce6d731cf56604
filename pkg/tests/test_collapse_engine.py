import random
from fractions import Fraction
from itertools import product

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from holomatch.collapse_engine import (MinimalPairCertificate, build_transducer, classify_domain3,
                                       collapse_domain2, collapse_domain4, dual_recognizer, expected_sign,
                                       extract_subbasis_d2, extract_subbasis_d4, find_minimal_pairs,
                                       group_inverse_arity4, rank4_submatrix, vanishing_violations)
from holomatch.errors import (InvalidInstance, NoFullRankGenerator, RankDeficient, SignRelationViolation,
                              SingularSubbasis)
from holomatch.holo_transform import Basis, generator_to_standard
from holomatch.instances import random_collapse_instance, random_invertible
from holomatch.scalar_linalg import identity, inverse, kronecker_power, matrices_equal, matrix
from holomatch.signature_core import Signature, full_rank_slot, is_standard_signature, matrix_form

EQ4 = Signature([int(a == b) for a, b in product(range(4), repeat=2)], 4, 2)


def test_minimal_pair_identity_case():
    cert = find_minimal_pairs(Signature([1, 0, 0, 1]), 1, 1, same_parity=False)
    assert (cert.sigma, cert.tau, cert.d) == ("0", "1", 1)


@pytest.mark.parametrize("k, ell, expected", [(2, 2, 1), (2, 3, 1), (4, 3, 2)])
def test_minimal_pair_distances_on_composed_instances(k, ell, expected):
    rng = random.Random(ell * 10 + k)
    for _ in range(3):
        inst = random_collapse_instance(rng, k, ell)
        (G, underG), = inst.generators
        t = full_rank_slot(G)
        cert = find_minimal_pairs(underG, ell, t, same_parity=(k == 4))
        assert cert.d == cert.d_prime == expected
        assert vanishing_violations(underG, cert, k == 4) == []


def test_subbasis_identity_cases():
    cert2 = MinimalPairCertificate(1, 1, 2, "0", "1", "0", "1")
    assert matrices_equal(extract_subbasis_d2(Basis(identity(2)), cert2), identity(2))
    cert4 = MinimalPairCertificate(1, 2, 2, "00", "11", "00", "11")
    assert matrices_equal(extract_subbasis_d4(Basis(identity(4), 2), cert4), identity(4))


def test_subbasis_duplicate_rows():
    rows = [[1, 2], [1, 2], [3, 5], [0, 1]]
    cert = MinimalPairCertificate(1, 2, 2, "00", "01", "00", "01")
    with pytest.raises(SingularSubbasis):
        extract_subbasis_d2(Basis(rows, 2), cert)


def test_rank4_block_of_equality():
    underG = generator_to_standard(EQ4, Basis(identity(4), 2))
    cert = find_minimal_pairs(underG, 2, 1, same_parity=True)
    block = rank4_submatrix(underG, 1, cert)
    assert matrices_equal(block.matrix, identity(4)) and block.form == "even" and block.sign == 1


def test_rank4_zero_signature():
    cert = MinimalPairCertificate(1, 2, 2, "00", "11", "00", "11")
    with pytest.raises(RankDeficient):
        rank4_submatrix(Signature([0] * 16), 1, cert)


def test_transducer_of_square_basis_is_identity():
    M = matrix([[1, 2], [3, 5]])
    T = build_transducer(Basis(M), M)
    assert matrices_equal(T.transducer_matrix(), identity(2))


def test_dual_recognizer_of_diagonal():
    a, b = 3, Fraction(-1, 2)
    underR, _ = dual_recognizer(Signature([a, 0, 0, b]), 1, 1)
    assert list(underR.vector) == [Fraction(1, 3), 0, 0, -2]


def test_group_inverse_examples():
    assert matrices_equal(group_inverse_arity4(identity(4), 1), identity(4))
    A = matrix([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    inv = group_inverse_arity4(A, -1)
    assert matrices_equal(A @ inv, identity(4))
    with pytest.raises(SignRelationViolation):
        group_inverse_arity4(A, 1)


@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8), st.booleans())
def test_group_inverse_round_trip(values, odd):
    a, b, c, d, e, f, g, h = values
    if odd:
        A = matrix([[0, a, b, 0], [e, 0, 0, f], [g, 0, 0, h], [0, c, d, 0]])
        form = "odd"
    else:
        A = matrix([[a, 0, 0, b], [0, e, f, 0], [0, g, h, 0], [c, 0, 0, d]])
        form = "even"
    left, right = a * d - b * c, e * h - f * g
    if left == 0 or right == 0 or abs(left) != abs(right):
        return
    sign = 1 if left == right else -1
    inv = group_inverse_arity4(A, sign, form)
    assert matrices_equal(A @ inv, identity(4))
    assert matrices_equal(group_inverse_arity4(inv, sign, form), A)


def degenerate_call():
    rng = random.Random(2)
    M = random_invertible(rng, 2)
    G = Signature(kronecker_power(inverse(M), 2) @ Signature([1, 0, 0, 1]).vector, 2, 2)
    return Basis(M, 1), G


def test_degenerate_call_domain2():
    basis, G = degenerate_call()
    result = collapse_domain2(basis, [G])
    assert matrices_equal(result.sub_basis, basis.matrix)
    assert matrices_equal(result.transducer.transducer_matrix(), identity(2))
    assert result.generators[0] == generator_to_standard(G, basis)


def test_degenerate_call_domain4():
    rng = random.Random(6)
    inst = random_collapse_instance(rng, 4, 2)
    (G, underG), = inst.generators
    result = collapse_domain4(inst.basis, [G])
    assert matrices_equal(result.sub_basis, inst.basis.matrix)
    assert matrices_equal(result.transducer.transducer_matrix(), identity(4))
    assert result.generators[0] == underG


@settings(max_examples=12)
@given(st.integers(0, 10 ** 6), st.sampled_from([(2, 2, 2), (2, 3, 2), (2, 2, 3), (4, 3, 2), (4, 2, 2)]))
def test_pipeline_on_composed_instances(seed, shape):
    k, ell, n = shape
    rng = random.Random(seed)
    inst = random_collapse_instance(rng, k, ell, n, complex_rate=0.2)
    run = collapse_domain2 if k == 2 else collapse_domain4
    result = run(inst.basis, inst.generators, inst.recognizers, inst.wiring)
    assert result.passed
    assert matrices_equal(result.transducer.transducer_matrix() @ result.sub_basis, inst.basis.matrix)
    if k == 4:
        assert result.rank4.sign == expected_sign(result.certificate)


def test_pipeline_rejects_false_realization():
    rng = random.Random(3)
    inst = random_collapse_instance(rng, 2, 2)
    (G, underG), = inst.generators
    vec = list(underG.vector)
    vec[0] = vec[0] + 1
    with pytest.raises(InvalidInstance):
        collapse_domain2(inst.basis, [(G, Signature(vec, 2, underG.arity))])


def test_no_full_rank_generator():
    basis = Basis([[1, 0], [0, 1], [1, 1], [1, 2]], 2)
    G = Signature([1, 2, 2, 4])
    with pytest.raises(NoFullRankGenerator):
        collapse_domain2(basis, [G], verify_inputs=False)


@pytest.mark.parametrize("k, ell", [(2, 2), (4, 3)])
def test_tampered_standard_entry_is_rejected(k, ell):
    rng = random.Random(k + ell)
    for _ in range(10):
        inst = random_collapse_instance(rng, k, ell)
        (G, underG), = inst.generators
        vec = list(underG.vector)
        i = rng.randrange(len(vec))
        vec[i] = vec[i] + rng.choice([1, -1, 2])
        tampered = Signature(vec, 2, underG.arity)
        run = collapse_domain2 if k == 2 else collapse_domain4
        with pytest.raises(InvalidInstance):
            run(inst.basis, [(G, tampered)], verify_inputs=False)


def test_tampered_basis_is_rejected_or_genuine():
    """A perturbed basis either breaks a check or still realizes G (then every check passes)."""
    rng = random.Random(21)
    for _ in range(10):
        inst = random_collapse_instance(rng, 2, 2)
        (G, _), = inst.generators
        rows = inst.basis.matrix.copy()
        rows[rng.randrange(4), rng.randrange(2)] += 1
        basis = Basis(rows, 2)
        if not basis.full_rank:
            continue
        underG = generator_to_standard(G, basis)
        try:
            result = collapse_domain2(basis, [(G, underG)], verify_inputs=False)
        except InvalidInstance:
            continue
        assert is_standard_signature(underG) and result.passed


def rank3_basis(rng):
    while True:
        M = matrix([[rng.randint(-2, 2) for _ in range(3)] for _ in range(4)])
        basis = Basis(M, 2)
        if basis.full_rank:
            return basis


def test_domain3_outcomes():
    rng = random.Random(9)
    eq3 = Signature([int(a == b) for a, b in product(range(3), repeat=2)], 3, 2)
    outcome = classify_domain3(rank3_basis(rng), [eq3])
    assert outcome.outcome == "FullRankImpossible"
    assert "identity failure" in outcome.witness or "parity violation" in outcome.witness
    rank2 = Basis([[1, 0, 1], [0, 1, 1], [1, 1, 2], [2, 1, 3]], 2)
    assert classify_domain3(rank2, [eq3]).outcome == "ExternalRank2Reduction"
    product_sig = Signature([a * b for a, b in product([1, 2, 3], repeat=2)], 3, 2)
    assert classify_domain3(rank3_basis(rng), [product_sig]).outcome == "TrivialDegenerate"


def test_dual_recognizer_on_composed_instance():
    rng = random.Random(17)
    for k, bits in ((2, 1), (4, 2)):
        inst = random_collapse_instance(rng, k, bits)
        (G, underG), = inst.generators
        t = full_rank_slot(G)
        underR, _ = dual_recognizer(underG, t, bits)
        assert is_standard_signature(underR)
        product_ = matrix_form(underG.blocks(bits), t) @ matrix_form(underR.blocks(bits).with_role("recognizer"), t)
        assert matrices_equal(product_, identity(k))
