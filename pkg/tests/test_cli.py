import io
import json
import random

import pytest

from wrag.cli import run
from wrag.formats import read_dot, read_edge_list


def invoke(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_generate_json():
    code, out, _ = invoke("generate", "--seed-order", "4", "--order", "7", "--rng-seed", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["n"] == 7 and len(doc["edges"]) == 15


def test_generate_is_byte_stable():
    args = ("generate", "--seed-order", "6", "--order", "40", "--rng-seed", "0xdeadbeef", "--mode", "planar-faces")
    assert invoke(*args)[1] == invoke(*args)[1]


def test_generate_zero_steps_warns():
    code, out, err = invoke("generate", "--seed-order", "6", "--order", "6")
    assert code == 0 and err.startswith("warning:")
    assert json.loads(out)["history"] == []


def test_count():
    code, out, _ = invoke("count", "--seed-order", "5", "--order", "6")
    assert code == 0
    assert out == "paper_formula 24\nclosed_form 24\nhistories 4\n"


def test_count_planar_k4():
    _, out, _ = invoke("count", "--seed-order", "4", "--order", "5", "--mode", "planar-faces")
    assert out.splitlines()[-1] == "histories 3"


def test_enumerate():
    code, out, _ = invoke("enumerate", "--seed-order", "5", "--steps", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 24
    assert json.loads(lines[0]) == [[0, 1, 2], [0, 1, 4]]
    assert invoke("enumerate", "--seed-order", "4", "--steps", "1", "--mode", "planar-faces", "--count-only")[1] == "3\n"


def test_enumerate_cap_exit_3():
    code, _, err = invoke("enumerate", "--seed-order", "6", "--steps", "4", "--max-enum", "10")
    assert code == 3
    assert len(err.strip().splitlines()) == 1


def test_verify_pipe_roundtrip():
    _, state, _ = invoke("generate", "--seed-order", "5", "--order", "14", "--rng-seed", "3")
    code, out, _ = invoke("verify", stdin=state)
    assert code == 0
    assert all(line.startswith("CHECK ") and " PASS " in line for line in out.splitlines())


def test_verify_corrupted_file(tmp_path):
    _, state, _ = invoke("generate", "--seed-order", "5", "--order", "10", "--rng-seed", "8")
    doc = json.loads(state)
    doc["edges"].pop()
    path = tmp_path / "state.json"
    path.write_text(json.dumps(doc))
    code, out, _ = invoke("verify", "--in", str(path))
    assert code == 1
    assert "CHECK edge_count FAIL 22 23" in out.splitlines()


def test_verify_claims():
    code, out, _ = invoke("verify", "--claims")
    assert code == 0
    assert "CHECK goldner_harary_hamiltonian_cycle PASS none none" in out
    assert "FAIL" not in out


def test_generate_verify_many_draws():
    rng = random.Random(20240917)
    for _ in range(1000):
        m = rng.randint(4, 10)
        n = rng.randint(m, m + 25)
        seed = rng.getrandbits(64)
        mode = rng.choice(["all", "planar-faces"])
        code, state, _ = invoke(
            "generate", "--seed-order", str(m), "--order", str(n), "--rng-seed", str(seed), "--mode", mode
        )
        assert code == 0
        assert invoke("verify", stdin=state)[0] == 0


@pytest.mark.parametrize("fmt,reader", [("dot", read_dot), ("edges", read_edge_list)])
def test_export_roundtrip(tmp_path, fmt, reader):
    _, state, _ = invoke("generate", "--seed-order", "7", "--order", "25", "--rng-seed", "5")
    path = tmp_path / "s.json"
    path.write_text(state)
    code, text, _ = invoke("export", "--in", str(path), "--format", fmt)
    assert code == 0
    _, edges, _ = invoke("export", "--in", str(path), "--format", "edges")
    assert reader(text) == read_edge_list(edges)
    assert invoke("export", "--in", str(path), "--format", "json")[1] == state


def test_export_to_file(tmp_path):
    _, state, _ = invoke("generate", "--seed-order", "5", "--order", "9")
    out = tmp_path / "g.dot"
    assert invoke("export", "--format", "dot", "--out", str(out), stdin=state)[0] == 0
    assert read_dot(out.read_text()).edge_count == 20


def test_analyze_default_is_stats_only():
    _, state, _ = invoke("generate", "--seed-order", "5", "--order", "9", "--rng-seed", "2")
    code, out, _ = invoke("analyze", stdin=state)
    report = json.loads(out)
    assert code == 0 and list(report) == ["stats"]
    assert report["stats"]["edges"] == 20


def test_analyze_oracles():
    _, state, _ = invoke("generate", "--seed-order", "4", "--order", "10", "--rng-seed", "2")
    code, out, _ = invoke("analyze", "--spectrum", "--chromatic", "--cycles", "--hamiltonian", stdin=state)
    report = json.loads(out)
    assert code == 0
    assert report["chromatic_number"] == 4
    assert len(report["spectrum"]["eigenvalues"]) == 10
    assert report["chromatic_polynomial"][-1] == "1"
    assert report["simple_cycles"] > 0


def test_analyze_cap_exit_3():
    _, state, _ = invoke("generate", "--seed-order", "5", "--order", "30")
    code, _, err = invoke("analyze", "--hamiltonian", stdin=state)
    assert code == 3 and "resource limit" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("generate", "--seed-order", "3", "--order", "5"),
        ("generate", "--seed-order", "5", "--order", "4"),
        ("generate", "--seed-order", "5", "--order", "9", "--rng-seed", "-1"),
        ("generate", "--seed-order", "5", "--order", "9", "--unknown"),
        ("generate", "--seed-order", "5", "--order", "9", "--mode", "faces"),
        ("count", "--seed-order", "5"),
        ("frobnicate",),
        (),
    ],
)
def test_usage_errors(argv):
    code, out, err = invoke(*argv)
    assert code == 2
    assert out == ""
    assert len(err.strip().splitlines()) == 1


def test_verify_garbage_input():
    code, _, err = invoke("verify", stdin="{not json")
    assert code == 2 and err.startswith("error:")
