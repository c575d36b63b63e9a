"""Figure-pipeline fixtures: real simulator CSVs produced through the CLI.

The frontend consumes the simulator only through its external interfaces,
so these fixtures shell out to ``aggsim`` and hand back the CSV paths.
"""

import subprocess

import pytest


def _run(args):
    proc = subprocess.run(args, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc


@pytest.fixture(scope="session")
def artifact_dir(tmp_path_factory):
    root = tmp_path_factory.mktemp("aggsim_artifacts")
    cfg = root / "base.cfg"
    cfg.write_text(
        "potential.kind = quadratic\n"
        "density = rhoini1\n"
        "h = 0.04\n"
        "dt = 1e-3\n"
        "T = 0.1\n"
        "shape = b3\n"
        "snapshots = 8\n"
        "grid_points = 1024\n"
    )
    _run(["aggsim", "validate", "--config", str(cfg), "--set", f"output_dir={root / 'validation'}"])
    _run(
        [
            "aggsim",
            "converge",
            "--config",
            str(cfg),
            "--h",
            "0.16,0.08,0.04",
            "--mode",
            "vs_exact",
            "--set",
            f"output_dir={root / 'study'}",
        ]
    )
    _run(
        [
            "aggsim",
            "run",
            "--config",
            str(cfg),
            "--set",
            "potential.kind=power_rep_attr",
            "--set",
            "potential.a=3.0",
            "--set",
            "potential.b=2.5",
            "--set",
            "density=rhoini2",
            "--set",
            "T=0.3",
            "--set",
            "dt=5e-3",
            "--set",
            f"output_dir={root / 'evolution'}",
        ]
    )
    return root
