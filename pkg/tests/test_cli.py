import io
import json
import random

import pytest

from holomatch.cli import run
from holomatch.doppler_app import doppler_graphs
from holomatch.fileformats import format_basis, format_graph, format_matchgate, format_signature
from holomatch.graph_families import cycle, random_matchgate, random_weight
from holomatch.instances import random_collapse_instance
from holomatch.signature_core import Signature

EVEN4 = ["0000", "0011", "0101", "0110", "1001", "1010", "1100", "1111"]


def call(*argv):
    out = io.StringIO()
    code = run([str(a) for a in argv], stdout=out)
    return code, out.getvalue()


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    return write


def failing_arity4():
    entries = [0] * 16
    for pattern, v in zip(EVEN4, [1, 1, 1, 1, 1, 1, 1, 2]):
        entries[int(pattern, 2)] = v
    return Signature(entries)


def test_verify_pass(files):
    code, out = call("verify", files("ok.sig", "signature k=2 n=2 role=generator\n5 0 0 1\n"))
    assert code == 0 and out.strip() == "PASS"


def test_verify_fail_names_witness(files):
    path = files("bad.sig", format_signature(failing_arity4()))
    code, out = call("verify", path)
    assert code == 1 and "P={1,2,3,4}" in out
    code, out = call("verify", path, "--report", "json")
    report = json.loads(out)
    assert report["result"] == "FAIL" and "P={1,2,3,4}" in report["witness"] and report["exit"] == 1


def test_parity_failure(files):
    code, out = call("verify", files("p.sig", "signature k=2 n=2 role=generator\n1 1 0 0\n"))
    assert code == 1 and "parity" in out


def test_usage_and_parse_errors(files):
    assert call("verify", files("x.sig", "signature k=2\n"))[0] == 2
    assert call("verify", "missing.sig")[0] == 2
    assert call("nonsense")[0] == 2
    assert call("holant", files("g.txt", ""))[0] == 2


def test_perfmatch(files):
    code, out = call("perfmatch", files("c4.txt", format_graph(cycle(4))))
    assert (code, out.strip()) == (0, "2")


def test_signature(files):
    rng = random.Random(3)
    gate = random_matchgate(rng, 5, 1, 2, 0.6, lambda: random_weight(rng))
    path = files("gate.txt", format_matchgate(gate))
    code, fkt = call("signature", path)
    code2, brute = call("signature", path, "--method", "brute")
    assert code == code2 == 0 and fkt == brute
    assert fkt.startswith("signature k=2 n=3 role=transducer[out=2,in=1]")


def test_transform(files):
    basis = files("m.txt", "basis l=1 k=2\n1 1\n1 -1\n")
    code, out = call("transform", "--basis", basis, "--generator", files("g.sig", "signature k=2 n=1 role=generator\n1 1\n"))
    assert code == 0 and out.splitlines()[1] == "2 0"
    code, out = call("transform", "--basis", basis, "--recognizer", files("r.sig", "signature k=2 n=1 role=recognizer\n1 1\n"))
    assert code == 0 and out.splitlines()[1] == "1 0"
    # (1, 0) maps to (1, 1), which is nonzero on both parities
    code, out = call("transform", "--basis", basis, "--generator", files("b.sig", "signature k=2 n=1 role=generator\n1 0\n"))
    assert code == 1 and "parity" in out
    code, out = call("transform", "--basis", basis, "--recognizer", files("s.sig", "signature k=2 n=1 role=recognizer\n2 0\n"))
    assert code == 1 and "unrealizable" in out


def test_holant(files):
    edge = "vertices 2\nedge 0 1 3\nrot 0 0\nrot 1 0\n"
    files("gen.txt", edge + "outputs 0 1\n")
    files("rec.txt", edge + "inputs 0 1\n")
    grid = files("grid.txt", "generator g gen.txt\nrecognizer r rec.txt\nconnect g.1 r.1\nconnect g.2 r.2\n")
    code, out = call("holant", grid, "--contract", "--perfmatch")
    assert code == 0 and out.split() == ["contract", "10", "perfmatch", "10"]


def test_collapse(files, tmp_path):
    inst = random_collapse_instance(random.Random(4), 2, 2, 2)
    (G, _), = inst.generators
    (R, underR), = inst.recognizers
    files("m.txt", format_basis(inst.basis))
    files("g.sig", format_signature(G))
    files("r.sig", format_signature(R))
    files("ru.sig", format_signature(underR))
    manifest = files("c.txt", "basis m.txt\ngenerator g.sig\nrecognizer r.sig standard ru.sig\n"
                              "connect 0.1 0.1\nconnect 0.2 0.2\n")
    code, out = call("collapse", "--domain", 2, manifest, "--out", tmp_path / "out")
    assert code == 0 and out.strip().endswith("PASS")
    assert (tmp_path / "out" / "result.manifest").exists()
    assert call("collapse", "--domain", 4, manifest)[0] == 2


def test_collapse_domain3(files):
    files("m.txt", "basis l=2 k=3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n")
    files("g.sig", "signature k=3 n=2 role=generator\n1 0 0 0 1 0 0 0 1\n")
    code, out = call("collapse", "--domain", 3, files("c.txt", "basis m.txt\ngenerator g.sig\n"))
    assert code == 0 and out.startswith("outcome FullRankImpossible")


def test_doppler(files):
    path = files("k4.txt", format_graph(doppler_graphs()["K4"]))
    code, out = call("doppler", "--graph", path, "--method", "brute")
    assert (code, out.strip()) == (0, "brute 1490")
    code, out = call("doppler", "--graph", path, "--method", "both", "--semantics", "sum")
    assert code == 0 and out.split() == ["brute", "4050", "holo", "4050"]
    # under the OR reading the transformed vertex tensor fails the matchgate test
    code, out = call("doppler", "--graph", path, "--method", "both")
    assert code == 1 and "RealizabilityFailed" in out
    assert call("doppler", "--graph", files("c.txt", format_graph(cycle(4))))[0] == 1


def test_output_is_deterministic(files):
    path = files("k4.txt", format_graph(doppler_graphs()["K4"]))
    assert call("doppler", "--graph", path, "--report", "json") == call("doppler", "--graph", path, "--report", "json")
