import json

import pytest

from orthoview import zoo
from orthoview.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    records = [json.loads(line) for line in out.out.splitlines() if line.startswith("{")]
    return code, records, out


def test_validate_whole_zoo(capsys):
    for name in zoo():
        code, records, _ = run(capsys, "validate", f"zoo:{name}")
        assert code == 0, name
        assert all(r["verdict"] for r in records)


def test_classify_hexagon_exits_one_with_witness(capsys):
    code, records, _ = run(capsys, "classify", "zoo:O6")
    assert code == 1
    omp = next(r for r in records if r["check"] == "orthomodular_poset")
    assert omp["verdict"] is False
    assert omp["witness"] == ["a", "b"]


def test_classify_boolean_exits_zero(capsys):
    code, records, _ = run(capsys, "classify", "zoo:boolean_8")
    assert code == 0
    assert all(r["verdict"] for r in records)


def test_classify_flags_follow_zoo_metadata(capsys):
    names = {
        "boolean_algebra": "is_boolean",
        "ortholattice": "is_ortholattice",
        "orthomodular_poset": "is_omp",
        "orthomodular_lattice": "is_oml",
    }
    for m in zoo().values():
        if m.kind != "orthoposet":
            continue
        code, records, _ = run(capsys, "classify", f"zoo:{m.name}")
        got = {names[r["check"]]: r["verdict"] for r in records}
        assert got == m.expected
        assert code == (0 if all(m.expected.values()) else 1)


def test_roundtrip_mo2(capsys):
    code, records, _ = run(capsys, "roundtrip", "zoo:MO2")
    assert code == 0
    iso = records[0]["data"]["isomorphism"]
    assert len(iso) == 6
    assert records[0]["counts"]["elements"] == 6


def test_roundtrip_whole_zoo(capsys):
    for m in zoo().values():
        if m.kind != "orthoposet":
            continue
        code, _, _ = run(capsys, "roundtrip", f"zoo:{m.name}")
        assert code == 0, m.name


def test_check_firefly_rs(capsys):
    code, records, _ = run(capsys, "check", "zoo:firefly", "--property", "rs")
    assert code == 0
    assert records[0]["check"] == "rs_axioms"


def test_check_firefly_boolean_rs_fails(capsys):
    code, records, _ = run(capsys, "check", "zoo:firefly", "--property", "boolean-rs")
    assert code == 1
    assert records[0]["code"] == "view-not-boolean"
    assert records[0]["witness"][0] == "X"


def test_check_firefly_closure(capsys):
    code, records, _ = run(capsys, "check", "zoo:firefly", "--property", "closure")
    assert code == 0


def test_check_conditions_on_zoo(capsys):
    code, _, _ = run(capsys, "check", "zoo:MO2", "--property", "eq6")
    assert code == 0
    code, _, _ = run(capsys, "check", "zoo:MO2", "--property", "eq11")
    assert code == 0
    code, records, _ = run(capsys, "check", "zoo:O6", "--property", "eq6")
    assert code == 1
    assert records[0]["code"] == "no-shared-view"
    code, records, _ = run(capsys, "check", "zoo:greechie_cycle_4", "--property", "eq11")
    assert code == 1
    assert records[0]["code"] == "no-preferred-view"


def test_sum_firefly(capsys):
    code, records, _ = run(capsys, "sum", "zoo:firefly")
    assert code == 0
    assert records[0]["counts"] == {"pairs": 10, "classes": 9}


def test_sum_emit_model_reparses_and_revalidates(capsys, tmp_path):
    for name in ("firefly", "MO2", "boolean_4"):
        code, records, out = run(capsys, "sum", f"zoo:{name}", "--emit-model")
        assert code == 0
        assert not records
        path = tmp_path / f"{name}_sum.oml-model"
        path.write_text(out.out)
        code, records, _ = run(capsys, "validate", str(path))
        assert code == 0
        assert all(r["verdict"] for r in records)


def test_decompose_list(capsys):
    code, records, _ = run(capsys, "decompose", "zoo:MO2", "--list")
    assert code == 0
    assert records[0]["counts"]["subalgebras"] == 3
    assert records[1]["data"]["carrier"] == ["0", "1"]


def test_amp_with_sasaki(capsys):
    code, records, _ = run(capsys, "amp", "zoo:MO2", "--vs-sasaki")
    assert code == 0
    by_check = {r["check"]: r for r in records}
    assert by_check["amp_axioms"]["verdict"] is True
    assert by_check["amp_vs_sasaki"]["data"]["agreement"] == 1.0


def test_amp_on_hexagon_reports_condition_failure(capsys):
    code, records, _ = run(capsys, "amp", "zoo:O6")
    assert code == 1
    assert records[0]["check"] == "condition_omp"
    assert records[0]["verdict"] is False


def test_zoo_listing_and_print(capsys):
    code, records, _ = run(capsys, "zoo")
    assert code == 0
    assert len(records) == len(zoo())
    code, _, out = run(capsys, "zoo", "MO2")
    assert code == 0
    assert out.out == zoo()["MO2"].text


def test_parse_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.oml-model"
    path.write_text("posett p { elements x }")
    assert main(["validate", str(path)]) == 2
    capsys.readouterr()


def test_invalid_model_exit_code(capsys, tmp_path):
    path = tmp_path / "cycle.oml-model"
    path.write_text("poset p { elements x y ; covers x<y y<x }")
    code, records, _ = run(capsys, "validate", str(path))
    assert code == 1
    assert records[0]["verdict"] is False
    assert records[0]["code"] == "antisymmetry"


def test_usage_errors(capsys):
    assert main(["classify", "zoo:firefly"]) == 2
    capsys.readouterr()
    assert main(["validate", "zoo:nonesuch"]) == 2
    capsys.readouterr()
    assert main(["validate", "/no/such/file.oml-model"]) == 2
    capsys.readouterr()
    assert main(["classify", "zoo:MO2", "--bogus"]) == 2
    capsys.readouterr()
    assert main(["decompose", "zoo:greechie_cycle_5", "--cap", "12"]) == 2
    capsys.readouterr()


def test_record_stream_is_stable_across_runs(capsys):
    _, _, out1 = run(capsys, "classify", "zoo:O6")
    _, _, out2 = run(capsys, "classify", "zoo:O6")
    assert out1.out == out2.out
