"""CLI spec handling and exit codes."""

import json

from aggplot.cli import main as cli_main


def test_cli_flags(artifact_dir, tmp_path, capsys):
    out = tmp_path / "fig.png"
    code = cli_main(
        [
            "--kind",
            "profile_panel",
            "--input",
            str(artifact_dir / "validation" / "profiles.csv"),
            "--output",
            str(out),
            "--label",
            "h=0.04",
        ]
    )
    assert code == 0 and out.exists()
    assert "wrote" in capsys.readouterr().out


def test_cli_json_spec(artifact_dir, tmp_path):
    spec = {
        "kind": "loglog",
        "inputs": [
            str(artifact_dir / "study" / "errors.csv"),
            str(artifact_dir / "study" / "rates.csv"),
        ],
        "output": str(tmp_path / "conv.png"),
        "title": "quadratic study",
    }
    spec_path = tmp_path / "spec.json"
    spec_path.write_text(json.dumps(spec))
    assert cli_main([str(spec_path)]) == 0
    assert (tmp_path / "conv.png").exists()


def test_cli_bad_inputs(tmp_path, capsys):
    missing = tmp_path / "nope.csv"
    code = cli_main(
        ["--kind", "surface", "--input", str(missing), "--output", str(tmp_path / "o.png")]
    )
    assert code == 2
    assert "aggplot error" in capsys.readouterr().err
    bad_spec = tmp_path / "bad.json"
    bad_spec.write_text("{\"kind\": \"loglog\"}")
    assert cli_main([str(bad_spec)]) == 2
