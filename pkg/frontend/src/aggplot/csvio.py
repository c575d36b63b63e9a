"""Typed readers for the simulator's CSV artifacts.

Pure file-to-file tooling: values are parsed and validated, never
recomputed.  A missing column raises SchemaError listing the expected
header so producer/consumer drift is caught immediately.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

PROFILE_COLUMNS = ["step", "t", "x", "rho", "u", "size"]
ERROR_COLUMNS = ["h", "dt", "l1", "lp", "linf", "dbl"]
RATE_COLUMNS = ["norm", "slope", "intercept", "residual"]


class SchemaError(ValueError):
    """CSV header does not match the documented schema."""

    def __init__(self, path, expected, found):
        super().__init__(
            f"{path}: expected columns {expected} (in any order, extras allowed), "
            f"found {found}"
        )
        self.expected = expected
        self.found = found


def _read_table(path, required: list[str]) -> dict[str, list[str]]:
    path = Path(path)
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [c for c in required if c not in header]
        if missing:
            raise SchemaError(path, required, header)
        columns: dict[str, list[str]] = {c: [] for c in header}
        for row in reader:
            for c in header:
                columns[c].append(row[c])
    return columns


def _floats(values: list[str]) -> np.ndarray:
    return np.array([float(v) for v in values])


def read_profiles(path) -> list[dict]:
    """Snapshot records sorted by time: {step, t, x, rho, u, size[, rho_exact]}."""
    cols = _read_table(path, PROFILE_COLUMNS)
    steps = _floats(cols["step"]).astype(int)
    out = []
    for step in sorted(set(steps.tolist())):
        sel = steps == step
        snap = {
            "step": int(step),
            "t": float(_floats(cols["t"])[sel][0]),
            "x": _floats(cols["x"])[sel],
            "rho": _floats(cols["rho"])[sel],
            "u": _floats(cols["u"])[sel],
            "size": _floats(cols["size"])[sel],
        }
        if "rho_exact" in cols:
            snap["rho_exact"] = _floats(cols["rho_exact"])[sel]
        out.append(snap)
    return out


def read_error_table(path) -> dict[str, np.ndarray]:
    cols = _read_table(path, ERROR_COLUMNS)
    return {c: _floats(cols[c]) for c in ERROR_COLUMNS}


def read_rates(path) -> dict[str, dict[str, float]]:
    """Fitted rates keyed by norm; slopes are used as-is, never refit."""
    cols = _read_table(path, RATE_COLUMNS)
    out: dict[str, dict[str, float]] = {}
    for i, norm in enumerate(cols["norm"]):
        out[norm] = {
            "slope": float(cols["slope"][i]),
            "intercept": float(cols["intercept"][i]),
            "residual": float(cols["residual"][i]),
        }
    return out
