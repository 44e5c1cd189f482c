import json

import pytest

from kronvpf.cli import main, run
from kronvpf.models import JobConfig

WORKED_2X4 = ["--m", "2", "--n", "4", "--lambda", "6,4,4,1", "--mu", "12,3", "--nu", "5,4,3,3"]
ATOMIC_2X2 = ["--lambda", "12,7,4,1", "--mu", "12,12", "--nu", "12,12"]


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def _exit_code(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    return info.value.code


def test_compute_json(capsys):
    main(["compute"] + WORKED_2X4)
    payload = _json(capsys)
    assert payload["command"] == "compute"
    assert payload["g"] == "4"
    assert payload["terms_evaluated"] + payload["terms_skipped"] == 40320
    assert payload["lambda"] == "6,4,4,1"


def test_compute_writes_trace(tmp_path, capsys):
    path = tmp_path / "trace.jsonl"
    main(["compute", "--trace", str(path)] + ATOMIC_2X2)
    assert _json(capsys)["g"]
    lines = path.read_text().splitlines()
    header = json.loads(lines[0])
    assert "trace_id" in header
    assert len(lines) == 25


def test_atomic_table(capsys):
    main(["atomic", "--format", "table"] + ATOMIC_2X2)
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["atomic", "32"]
    assert "b(Id)" in out


def test_no_command_prints_help():
    assert _exit_code([]) == 1


def test_size_mismatch_goes_to_stderr(capsys):
    assert _exit_code(["compute", "--lambda", "3,1", "--mu", "2", "--nu", "2,2"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err.startswith("Error computing Kronecker coefficient")


def test_bad_partition(capsys):
    assert _exit_code(["atomic", "--lambda", "1,2", "--mu", "3", "--nu", "3"]) == 1
    assert "parts increase" in capsys.readouterr().err


def test_invalid_flag_value_names_the_flag(capsys):
    assert _exit_code(["compute", "--threads", "0"] + ATOMIC_2X2) == 1
    assert "--threads" in capsys.readouterr().err


def test_resource_guard_exit_code(capsys):
    assert _exit_code(["poset", "--m", "2", "--n", "4"]) == 2
    assert capsys.readouterr().err.startswith("Error building poset")


def test_run_job_config(capsys):
    job = JobConfig(command="atomic", lam="12,7,4,1", mu="12,12", nu="12,12")
    assert run(job) == 0
    assert _json(capsys)["atomic"] == "32"


def test_run_reports_failure_status(capsys):
    job = JobConfig(command="compute", lam="3,1", mu="2", nu="2,2")
    assert run(job) == 1
    assert "Error" in capsys.readouterr().err


def test_job_config_rejects_unknown_values():
    with pytest.raises(ValueError):
        JobConfig(command="frobnicate")
    with pytest.raises(ValueError):
        JobConfig(command="compute", output_format="xml")


def test_matrix_writes_file(tmp_path, capsys):
    path = tmp_path / "out" / "A23.txt"
    main(["matrix", "--m", "2", "--n", "3", "-o", str(path)])
    report = _json(capsys)["report"]
    assert path.exists()
    assert report["path"] == str(path)
    assert report["polynomial_degree"] == 8
    assert all(report["properties"].values())


def test_vanish(capsys):
    main(["vanish", "--lambda", "1,1,1,1", "--mu", "2,2", "--nu", "4"])
    report = _json(capsys)["report"]
    assert report["conclusion"] == "ForcedZero"
    assert report["atomic_forced_zero"] is True


def test_bounds(capsys):
    main(["bounds", "--m", "3", "--n", "3", "--lambda", "15,15,15,10,10,10,10,10,5", "--mu", "35,35,30", "--nu", "40,30,30"])
    report = _json(capsys)["bounds"]
    sources = [e["source"] for e in report["entries"]]
    assert report["best"] in sources
    assert "kron_atomic" not in sources
    assert report["b_identity"] == [5, 5, 5, 15]


def test_stable_triple(capsys):
    main(["stable-triple", "--m", "2", "--n", "3", "--lambda", "10,8,5,3,2,2"])
    report = _json(capsys)["report"]
    assert report["mu"] == [18, 12]
    assert report["nu"] == [18, 7, 5]
    assert report["kronecker"] == "1"


def test_stability_seq(capsys):
    main(["stability-seq", "--m", "2", "--n", "3", "--lambda", "10,8,5,3,2,2", "--mu", "18,12", "--nu", "18,7,5", "--k-max", "3"])
    assert _json(capsys)["report"]["values"] == ["1", "1", "1", "1"]


def test_feasible_set_list(capsys):
    main(["feasible-set", "--list"])
    report = _json(capsys)["report"]
    assert report["size_equality"] is True
    assert report["count"] == len(report["sigmas"])
    assert "1234" in report["sigmas"]


def test_poset(capsys):
    main(["poset", "--format", "table"])
    out = capsys.readouterr().out
    assert out.splitlines()[0].split() == ["elements", "24"]
    assert "1234" in out


def test_ressayre_demonstrations(capsys):
    main(["ressayre", "--format", "table"])
    out = capsys.readouterr().out
    assert out.count("violated") == 2
    assert "g = 1" in out


def test_ressayre_with_partitions(capsys):
    main(["ressayre", "--lambda", "4", "--mu", "2,2", "--nu", "2,2"])
    checks = _json(capsys)["report"]["inequalities"]
    assert [c["label"] for c in checks] == ["j=2", "j=3", "j=4"]


def test_reproduce_custom_catalogue(tmp_path, capsys):
    catalogue = tmp_path / "examples.toml"
    catalogue.write_text(
        '[[example]]\nname = "shape"\nkind = "matrix_shape"\nm = 2\nn = 3\nexpected = "3x11"\n'
    )
    main(["reproduce", "--catalogue", str(catalogue)])
    payload = _json(capsys)
    assert payload["failed"] == 0
    assert payload["report"][0]["passed"] is True


def test_reproduce_fails_on_undocumented_mismatch(tmp_path, capsys):
    catalogue = tmp_path / "examples.toml"
    catalogue.write_text(
        '[[example]]\nname = "shape"\nkind = "matrix_shape"\nm = 2\nn = 3\nexpected = "3x12"\n'
    )
    assert _exit_code(["reproduce", "--catalogue", str(catalogue), "--format", "table"]) == 1
    assert "0/1 examples reproduced" in capsys.readouterr().out


def test_reproduce_paper_alias(tmp_path, capsys):
    catalogue = tmp_path / "examples.toml"
    catalogue.write_text(
        '[[example]]\nname = "shape"\nkind = "matrix_shape"\nm = 2\nn = 3\nexpected = "3x11"\n'
    )
    main(["reproduce-paper", "--catalogue", str(catalogue)])
    assert _json(capsys)["failed"] == 0
    job = JobConfig(command="reproduce-paper")
    assert run(job, catalogue=str(catalogue)) == 0
    assert _json(capsys)["report"][0]["passed"] is True
