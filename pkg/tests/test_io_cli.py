import json

import pytest

from ambrel import crisp, fuzzy, io
from ambrel.catalog import lukasiewicz
from ambrel.cli import main
from ambrel.errors import MalformedInput
from ambrel.generators import random_capacity, random_fuzzy_rep, random_rep
from ambrel.hyperencoding import encode
from ambrel.lattice import meet_tnorm


def test_lattice_roundtrip(chain3, square):
    for lat, tn in ((chain3, lukasiewicz(chain3)), (square, meet_tnorm(square))):
        payload = io.lattice_payload(lat, tn)
        lat2, tn2 = io.lattice_from(payload)
        assert lat2 == lat and tn2 == tn
    lat2, tn2 = io.lattice_from(io.lattice_payload(chain3))
    assert tn2 is None


def test_crisp_rep_roundtrip(x3, y2):
    for seed in range(10):
        rep = random_rep(x3, y2, seed, 0.35)
        assert io.crisp_rep_from(io.crisp_rep_payload(rep)) == rep


def test_seeded_payload_expands(x2, y2):
    payload = {
        "source": ["x1", "x2"],
        "target": ["y1", "y2"],
        "pairs": [[["x1", "x2"], ["y1"]]],
        "seed": True,
    }
    assert io.crisp_rep_from(payload) == crisp.from_seed(x2, y2, [(3, 1)])


def test_fuzzy_rep_roundtrip(x2, y3, chain3, square):
    for lat in (chain3, square):
        for seed in range(10):
            rep = random_fuzzy_rep(x2, y3, lat, seed, 0.5)
            got, _ = io.fuzzy_rep_from(io.fuzzy_rep_payload(rep))
            assert got == rep


def test_capacity_roundtrip(y3, square):
    cap = random_capacity(y3, square, 4)
    assert io.capacity_from(io.capacity_payload(cap)) == cap


def test_hyper_roundtrip(x2, y2, chain3):
    rep = random_fuzzy_rep(x2, y2, chain3, 8, 0.5)
    t = encode(rep)
    assert io.hyper_from(io.hyper_payload(t)) == t


def test_canonical_text_fixpoint(x3, y2, chain3):
    # parse-and-reemit is the identity on canonical output
    rep = random_rep(x3, y2, 6, 0.4)
    text = io.dumps(io.crisp_rep_payload(rep))
    again = io.dumps(io.crisp_rep_payload(io.crisp_rep_from(io.loads(text))))
    assert again == text
    rf = random_fuzzy_rep(x3, y2, chain3, 6, 0.4)
    text = io.dumps(io.fuzzy_rep_payload(rf))
    again = io.dumps(io.fuzzy_rep_payload(io.fuzzy_rep_from(io.loads(text))[0]))
    assert again == text


def test_malformed_payloads_rejected():
    with pytest.raises(MalformedInput):
        io.crisp_rep_from({"nope": 1})
    with pytest.raises(MalformedInput):
        io.space_from("not-a-list")
    with pytest.raises(MalformedInput):
        io.loads("{broken")


# -- command line -----------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_cli_identity_fixpoint(tmp_path, capsys):
    path = tmp_path / "id.json"
    code, out = run_cli(capsys, "gen", "--kind", "identity", "--sizes", "2", "--out", str(path))
    assert code == 0
    code, out2 = run_cli(capsys, "sms", "--rep", str(path))
    assert code == 0
    assert out2 == out  # the identity is its own pseudo-inverse, canonically


def test_cli_gen_determinism(tmp_path, capsys):
    args = ("gen", "--kind", "random-fuzzy", "--sizes", "3,2", "--seed", "42",
            "--density", "0.4", "--lattice", "square")
    code1, out1 = run_cli(capsys, *args)
    code2, out2 = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2


def test_cli_validate_and_report(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "source": ["x1"], "target": ["y1", "y2"],
        "pairs": [[["x1"], ["y1"]]],
    }))
    code, out = run_cli(capsys, "validate", "--rep", str(bad))
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] == "invalid" and report["error"] == "MissingFullTarget"


def test_cli_compose_cut_capacity_unavoidable(tmp_path, capsys):
    rf = tmp_path / "rf.json"
    run_cli(capsys, "gen", "--kind", "random-fuzzy", "--sizes", "2,2", "--seed", "7",
            "--density", "0.5", "--lattice", "chain3", "--out", str(rf))
    code, out = run_cli(capsys, "compose", "--rep", str(rf), "--rep2", str(rf))
    assert code == 3  # middle spaces differ (y vs x labels)

    sq = tmp_path / "sq.json"
    run_cli(capsys, "gen", "--kind", "random-fuzzy", "--sizes", "2,2", "--seed", "9",
            "--density", "0.5", "--lattice", "chain3", "--out", str(sq))
    code, out = run_cli(capsys, "cut", "--rep", str(sq), "--alpha", "m")
    assert code == 0
    cut_payload = json.loads(out)
    assert {"source", "target", "pairs"} <= cut_payload.keys()

    code, out = run_cli(capsys, "capacity", "--rep", str(sq), "--set", "x1")
    assert code == 0
    assert json.loads(out)["values"][0] == [[], "0"]

    ident = tmp_path / "id.json"
    run_cli(capsys, "gen", "--kind", "identity", "--sizes", "2", "--out", str(ident))
    code, out = run_cli(capsys, "unavoidable", "--rep", str(ident), "--set", "x1")
    assert code == 0
    assert json.loads(out) == [["x1"], ["x1", "x2"]]


def test_cli_encode(tmp_path, capsys):
    rf = tmp_path / "rf.json"
    run_cli(capsys, "gen", "--kind", "random-fuzzy", "--sizes", "2,2", "--seed", "3",
            "--density", "0.6", "--lattice", "square", "--out", str(rf))
    code, out = run_cli(capsys, "encode", "--rep", str(rf))
    assert code == 0
    assert "triples" in json.loads(out)


def test_cli_laws_exit_zero(capsys):
    code, out = run_cli(capsys, "laws", "--suite", "crisp", "--sizes", "2,2,2",
                        "--trials", "15", "--seed", "2")
    assert code == 0
    report = json.loads(out)
    assert report["asserted_violations"] == []
    names = {entry["law"] for entry in report["laws"]}
    assert "modular" in names and "associativity" in names


def test_cli_laws_fuzzy(capsys):
    code, out = run_cli(capsys, "laws", "--suite", "fuzzy", "--sizes", "2,2,2",
                        "--trials", "6", "--seed", "2", "--lattice", "square")
    assert code == 0
    report = json.loads(out)
    assert report["suite"] == "fuzzy"


def test_cli_search_exit_codes(tmp_path, capsys):
    out_path = tmp_path / "verdict.json"
    code, out = run_cli(capsys, "search", "--law", "modular", "--sizes", "2,2,2",
                        "--exhaustive", "--out", str(out_path))
    verdict = json.loads(out_path.read_text())
    assert verdict["verdict"] in ("counterexample", "no_counterexample")
    assert code == (2 if verdict["verdict"] == "counterexample" else 0)


def test_cli_malformed_exits_three(tmp_path, capsys):
    bad = tmp_path / "junk.json"
    bad.write_text("{]")
    assert run_cli(capsys, "validate", "--rep", str(bad))[0] == 3
    assert run_cli(capsys, "frobnicate")[0] == 3
    assert run_cli(capsys, "gen", "--kind", "nope")[0] == 3


def test_cli_gen_geometry(capsys):
    code, out = run_cli(capsys, "gen", "--kind", "projection", "--sizes", "2,2,2,2")
    assert code == 0
    code, out = run_cli(capsys, "gen", "--kind", "translation", "--sizes", "1,1,3,1")
    assert code == 0
    code, out = run_cli(capsys, "gen", "--kind", "metric", "--sizes", "3", "--lattice", "chain4")
    assert code == 0
    code, out = run_cli(capsys, "gen", "--kind", "counterexample", "--sizes", "2,2",
                        "--lattice", "square")
    assert code == 0
    payload = json.loads(out)
    assert payload["witness"]["missing_grade"] == "1"


def test_cli_counterexample_on_chain_reports(capsys):
    code, out = run_cli(capsys, "gen", "--kind", "counterexample", "--sizes", "2,2",
                        "--lattice", "chain3")
    assert code == 1
    assert json.loads(out)["verdict"] == "no_counterexample"
