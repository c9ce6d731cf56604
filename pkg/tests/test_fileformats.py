import random

import pytest

from holomatch.errors import ParseError
from holomatch.fileformats import (format_basis, format_graph, format_matchgate, format_signature,
                                   load_collapse_manifest, load_matchgrid, parse_basis, parse_graph,
                                   parse_matchgate, parse_signature)
from holomatch.graph_families import cycle, random_matchgate, random_planar_graph, random_weight, theta
from holomatch.holo_transform import Basis
from holomatch.matchgate_fkt import perfmatch, standard_signature
from holomatch.scalar_linalg import I, matrices_equal
from holomatch.signature_core import Signature


def test_signature_round_trip():
    sig = Signature([1, I, -2, 0, 3, 0, 0, 1], role="recognizer")
    assert parse_signature(format_signature(sig)) == sig
    T = Signature.from_transducer_matrix(Basis([[1, 0], [0, 2], [1, 1], [0, 1]]).matrix, 2, 1)
    text = format_signature(T)
    assert "role=transducer[out=2,in=1]" in text
    assert parse_signature(text) == T


@pytest.mark.parametrize("text", [
    "signature k=2 n=2 role=generator\n1 0 0\n",
    "signature k=2 role=generator\n1 0\n",
    "signature k=2 n=1 role=sideways\n1 0\n",
    "sig k=2 n=1 role=generator\n1 0\n",
    "signature k=2 n=1 role=generator\n1 x\n",
])
def test_signature_parse_errors(text):
    with pytest.raises(ParseError):
        parse_signature(text)


def test_graph_round_trip_keeps_embedding():
    rng = random.Random(5)
    for _ in range(20):
        g = random_planar_graph(rng, rng.randint(2, 8), rng.random(), lambda: random_weight(rng, 0.3), 0.2)
        back, _, _ = parse_graph(format_graph(g))
        assert back.rotation == g.rotation and back.edges == g.edges
        assert back.outer_faces() == g.outer_faces()
        assert perfmatch(back) == perfmatch(g)


def test_cycle_outer_face_direction_is_kept():
    g = cycle(5)
    back = parse_graph(format_graph(g))[0]
    assert back.faces()[back.outer_faces()[0]] == g.faces()[g.outer_faces()[0]]


def test_theta_round_trip():
    back = parse_graph(format_graph(theta()))[0]
    assert perfmatch(back) == 3


def test_matchgate_round_trip():
    rng = random.Random(6)
    for _ in range(10):
        gate = random_matchgate(rng, 6, 1, 2, 0.5, lambda: random_weight(rng))
        back = parse_matchgate(format_matchgate(gate))
        assert (back.inputs, back.outputs) == (gate.inputs, gate.outputs)
        assert standard_signature(back) == standard_signature(gate)


@pytest.mark.parametrize("text", [
    "edge 0 1 1\n",
    "vertices 2\nedge 0 5 1\nrot 0 0\nrot 1 0\n",
    "vertices 2\nedge 0 1 1\nrot 0 0\n",
    "vertices 2\nedge 0 1 1\nrot 0 0\nrot 1 0\nfoo 1\n",
])
def test_graph_parse_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_basis_round_trip():
    basis = Basis([[1, 0, I], [0, 1, 2], [1, 1, 0], [2, 3, 5]], 2)
    back = parse_basis(format_basis(basis))
    assert matrices_equal(back.matrix, basis.matrix) and back.block_len == 2
    with pytest.raises(ParseError):
        parse_basis("basis l=1 k=2\n1 0\n")


def test_matchgrid_manifest(tmp_path):
    edge = "vertices 2\nedge 0 1 3\nrot 0 0\nrot 1 0\n"
    (tmp_path / "gen.txt").write_text(edge + "outputs 0 1\n")
    (tmp_path / "rec.txt").write_text(edge.replace(" 3\n", " 2\n", 1) + "inputs 0 1\n")
    (tmp_path / "grid.txt").write_text("generator g gen.txt\nrecognizer r rec.txt\nconnect g.1 r.1\nconnect g.2 r.2\n")
    grid = load_matchgrid(tmp_path / "grid.txt")
    assert grid.connectors == [((0, 1), (0, 1)), ((0, 2), (0, 2))]
    (tmp_path / "bad.txt").write_text("generator g gen.txt\nconnect g.1 q.1\n")
    with pytest.raises(ParseError):
        load_matchgrid(tmp_path / "bad.txt")


def test_collapse_manifest(tmp_path):
    (tmp_path / "m.txt").write_text("basis l=1 k=2\n1 1\n1 -1\n")
    (tmp_path / "g.txt").write_text("signature k=2 n=2 role=generator\n1 0 0 1\n")
    (tmp_path / "c.txt").write_text("basis m.txt\ngenerator g.txt\n")
    manifest = load_collapse_manifest(tmp_path / "c.txt")
    assert manifest.basis.k == 2 and len(manifest.generators) == 1 and manifest.wiring is None
    (tmp_path / "d.txt").write_text("generator g.txt\n")
    with pytest.raises(ParseError):
        load_collapse_manifest(tmp_path / "d.txt")
