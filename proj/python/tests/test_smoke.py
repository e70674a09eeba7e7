import json

import pytest

import l0tensor

DOC = {
    "version": "1",
    "spaces": [{"id": "X", "atoms": [{"id": "a", "mass": "1"}, {"id": "b", "mass": "1/2"}]}],
    "norms": [
        {"id": "n1", "kind": "l1", "dim": 2},
        {"id": "n2", "kind": "linf", "dim": 2, "weights": ["2", "1/3"]},
    ],
    "modules": [{"id": "M", "space": "X", "fibers": ["n1", "n2"]}],
    "elements": [{"id": "v", "module": "M", "vectors": [["1", "2"], ["-3", "0"]]}],
    "tensors": [{"id": "t", "left": "M", "right": "M", "pairs": [["v", "v"]]}],
    "assertions": [
        {"name": "norm of v", "type": "norm", "element": "v", "expected": ["3/1", "6/1"]},
        {
            "name": "pi of t",
            "type": "tensor_norm",
            "tensor": "t",
            "flavor": "pi",
            "expected": ["9/1", "36/1"],
        },
    ],
}


def text():
    return json.dumps(DOC)


def test_element_norm_is_exact():
    assert l0tensor.element_norm(text(), "v") == {"a": "3/1", "b": "6/1"}


def test_tensor_norms_match_by_flavor():
    assert l0tensor.tensor_norm(text(), "t", "pi") == {"a": "9/1", "b": "36/1"}
    assert l0tensor.tensor_norm(text(), "t", "eps") == {"a": "9/1", "b": "36/1"}


def test_check_document_runs_every_assertion():
    rows = l0tensor.check_document(text())
    assert [name for name, _, _ in rows] == ["norm of v", "pi of t"]
    assert all(ok for _, ok, _ in rows)


def test_failed_assertion_reports_detail():
    doc = json.loads(text())
    doc["assertions"][0]["expected"] = ["3/1", "5/1"]
    name, ok, detail = l0tensor.check_document(json.dumps(doc))[0]
    assert name == "norm of v"
    assert not ok
    assert "atom b" in detail


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        l0tensor.check_document("{")
    with pytest.raises(ValueError):
        l0tensor.element_norm(text(), "ghost")
    with pytest.raises(ValueError):
        l0tensor.tensor_norm(text(), "t", "spectral")
    with pytest.raises(ValueError):
        l0tensor.verify("TH-UNKNOWN")


def test_verify_is_seeded_and_deterministic():
    passed, total, rows = l0tensor.verify("TH-PI-ELEM", seed=7, cases=5)
    assert (passed, total) == (5, 5)
    assert l0tensor.verify("TH-PI-ELEM", seed=7, cases=5) == (passed, total, rows)


def test_theorem_ids_cover_the_suites():
    ids = l0tensor.theorem_ids()
    assert len(ids) == 19
    assert "TH-SANDWICH" in ids
    assert all(id.startswith("TH-") for id in ids)


def test_cli_entry_round_trips(tmp_path):
    p = tmp_path / "doc.json"
    p.write_text(text())
    code, out, err = l0tensor.cli(["check", str(p)])
    assert code == 0
    assert "2/2 assertions passed" in out
    assert err == ""
    code, _, err = l0tensor.cli(["check", str(tmp_path / "missing.json")])
    assert code == 2
    assert "cannot read" in err
