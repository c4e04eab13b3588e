import os
import subprocess

import pytest

import gradedlie


def test_build_so_q_dims():
    doc = gradedlie.build("so_q", [3, 1])
    assert doc["dims"] == {"00": 7, "01": 2, "10": 4, "11": 8}
    assert doc["dimension"] == 21
    assert list(doc) == ["algebra", "convention", "matrix_size", "partition", "dimension",
                         "dims", "basis"]


def test_osp_dimension_and_roots():
    assert gradedlie.build("osp", [0, 0, 1, 1])["dimension"] == 14
    doc = gradedlie.roots("osp", [0, 0, 1, 1])
    assert doc["coordinates"] == "delta"
    assert doc["simple"] == [{"root": [1, -1], "degree": "11"}, {"root": [0, 1], "degree": "01"}]


def test_verify_flags_dimension_formula():
    rep = gradedlie.verify("so_q", [3, 1])
    assert rep["passed"]
    assert any("reference formula" in f for f in rep["flags"])


def test_relations_and_closure():
    rep = gradedlie.relations("parafermion", 2, 1, "pf_same")
    assert rep["checked"] == 16 and rep["failures"] == []
    rep = gradedlie.relations("paraboson", 1, 2, "rel_cross_osp")
    assert rep["failures"] == []
    assert gradedlie.generate("paraboson", 1, 1)["dimension"] == 14


def test_structure_constants_are_sorted():
    doc = gradedlie.structure_constants("so_q", [2, 1])
    keys = [(c["a"], c["b"], c["c"]) for c in doc["constants"]]
    assert keys == sorted(keys)
    assert doc["dimension"] == 10


def test_errors_are_translated():
    with pytest.raises(gradedlie.GradedLieError, match="invalid_parameter"):
        gradedlie.build("so_q", [3, 3])
    with pytest.raises(gradedlie.GradedLieError, match="no_realization"):
        gradedlie.relations("parafermion", 2, 1, "mixed_rel_pf")


def test_cli_agrees_with_module():
    binary = os.environ.get("GRADEDLIE_BIN")
    if not binary:
        pytest.skip("GRADEDLIE_BIN not set")
    out = subprocess.run([binary, "build", "--family", "so_q", "--n", "2", "--q", "1"],
                         check=True, capture_output=True, text=True).stdout
    assert out == gradedlie._core.build("so_q", [2, 1], None)
