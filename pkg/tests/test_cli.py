import json

from semifd.cli import main


def write_config(tmp_path, config):
    path = tmp_path / "config.json"
    path.write_text(json.dumps(config))
    return str(path)


def run(tmp_path, capsys, config, extra=()):
    status = main(["--config", write_config(tmp_path, config), *extra])
    captured = capsys.readouterr()
    return status, (json.loads(captured.out) if captured.out else None), captured.err


def test_enumerate_braid3(tmp_path, capsys):
    status, report, _ = run(
        tmp_path, capsys, {"command": "enumerate", "presentation": {"builtin": "braid", "n": 3}, "L": 4}
    )
    assert status == 0
    assert report["tables"]["counts"] == [1, 2, 4, 7, 12]
    assert all(c["status"] == "pass" for c in report["checks"])


def test_fdapprox_naturals_kernel_set(tmp_path, capsys):
    status, report, _ = run(
        tmp_path,
        capsys,
        {"command": "fdapprox", "presentation": {"builtin": "nat", "d": 1}, "F": [2], "L": 5},
    )
    assert status == 0
    assert report["tables"]["dim_Y_F"] == 3
    ks = report["tables"]["kernel_set"]
    assert {s.count("x") for s in ks} == {3, 4, 5}


def test_funcalg_hardy_one_plus_z(tmp_path, capsys):
    status, report, _ = run(
        tmp_path,
        capsys,
        {
            "command": "funcalg",
            "kernel": "hardy",
            "phi": [{"exponents": [0], "re": 1.0}, {"exponents": [1], "re": 1.0}],
            "D": 200,
        },
    )
    assert status == 0
    (norm_check,) = [c for c in report["checks"] if c["name"] == "norm-monotone"]
    assert 1.99 <= norm_check["witness"]["norm_lower"] <= 2.0


def test_coaction_qf_spanning(tmp_path, capsys):
    status, report, _ = run(
        tmp_path,
        capsys,
        {
            "command": "coaction",
            "presentation": {"builtin": "braid", "n": 3},
            "map": "length",
            "L_P": 3,
            "L_Q": 4,
            "F": [2],
        },
    )
    assert status == 0
    assert report["tables"]["qf_spanning_cardinality"] == 7


def test_divisors_command(tmp_path, capsys):
    status, report, _ = run(
        tmp_path, capsys, {"command": "divisors", "presentation": {"builtin": "free", "n": 2}, "L": 3}
    )
    assert status == 0
    by_word = {w: r for w, r, _ in report["tables"]["sizes"]}
    assert by_word["a.b"] == 3 and by_word["e"] == 1


def test_unknown_command_is_config_error(tmp_path, capsys):
    status, _, err = run(tmp_path, capsys, {"command": "frobnicate"})
    assert status == 2
    assert "config error" in err


def test_failed_invariant_is_status_1(tmp_path, capsys):
    # a.b = a.a kills left cancellation, so the cancellation check must fail
    config = {
        "command": "enumerate",
        "presentation": {"generators": ["a", "b"], "relations": [["a.b", "a.a"]]},
        "L": 3,
    }
    status, report, _ = run(tmp_path, capsys, config)
    assert status == 1
    (check,) = [c for c in report["checks"] if c["status"] == "fail"]
    assert check["name"] == "cancellation"


def test_bad_presentation_is_config_error(tmp_path, capsys):
    status, _, _ = run(tmp_path, capsys, {"command": "enumerate", "presentation": {"builtin": "nope"}})
    assert status == 2


def test_malformed_json_is_config_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{ not json")
    assert main(["--config", str(path)]) == 2
    capsys.readouterr()


def test_missing_file_is_config_error(capsys):
    assert main(["--config", "/nonexistent/config.json"]) == 2
    capsys.readouterr()


def test_resource_limit_is_status_3(tmp_path, capsys):
    status, _, err = run(
        tmp_path,
        capsys,
        {"command": "enumerate", "presentation": {"builtin": "free", "n": 2}, "L": 10},
        extra=("--max-words", "50"),
    )
    assert status == 3
    assert "resource limit" in err


def test_reports_are_byte_identical(tmp_path, capsys):
    config = {
        "command": "fdapprox",
        "presentation": {"builtin": "braid", "n": 3},
        "F": ["s1.s2", 2],
        "L": 4,
    }
    outputs = []
    path = write_config(tmp_path, config)
    for i in range(2):
        out = tmp_path / ("r%d.json" % i)
        assert main(["--config", path, "--out", str(out)]) == 0
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]


def test_timing_flag_populates_ms(tmp_path, capsys):
    config = {"command": "enumerate", "presentation": {"builtin": "nat", "d": 1}, "L": 3}
    _, quiet, _ = run(tmp_path, capsys, config)
    assert quiet["ms"] == 0.0
    _, timed, _ = run(tmp_path, capsys, config, extra=("--timing",))
    assert timed["ms"] >= 0.0


def test_stdin_config(tmp_path, capsys, monkeypatch):
    import io

    config = {"command": "enumerate", "presentation": {"builtin": "free", "n": 1}, "L": 3}
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(config)))
    assert main(["--config", "-"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["tables"]["counts"] == [1, 1, 1, 1]


def test_out_file_and_echoed_config(tmp_path, capsys):
    config = {"command": "enumerate", "presentation": {"builtin": "nat", "d": 2}, "L": 4}
    out = tmp_path / "report.json"
    assert main(["--config", write_config(tmp_path, config), "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    report = json.loads(out.read_text())
    assert report["config"] == config
    assert report["tables"]["counts"] == [1, 2, 3, 4, 5]


def test_inline_presentation_document(tmp_path, capsys):
    config = {
        "command": "enumerate",
        "presentation": {"generators": ["a", "b"], "relations": [["a.b.a", "b.a.b"]]},
        "L": 4,
    }
    status, report, _ = run(tmp_path, capsys, config)
    assert status == 0
    assert report["tables"]["counts"] == [1, 2, 4, 7, 12]
