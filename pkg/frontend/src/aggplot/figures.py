"""Figure builders for the three supported kinds.

profile_panel  density / velocity / particle-size panels at the final
               snapshot of each input profiles.csv, with the exact density
               overlaid when the column is present
loglog         error norms against h on log-log axes, slope annotations
               taken verbatim from the rates table
surface        space-time density surface from the snapshots of one
               profiles.csv

Each builder writes one raster image and returns the metadata actually
rendered (for tests and the CLI summary).  Nothing is recomputed from
simulation quantities; the CSVs are the only inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import read_error_table, read_profiles, read_rates

KINDS = ("profile_panel", "loglog", "surface")


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple[str, ...]
    output: str
    labels: tuple[str, ...] = ()
    title: str = ""
    dpi: int = 130

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; choose one of {KINDS}")
        if not self.inputs:
            raise ValueError("at least one input CSV is required")


def make_figure(spec: FigureSpec) -> dict:
    """Render one figure; returns {'output': path, ...kind-specific metadata}."""
    builder = {
        "profile_panel": _profile_panel,
        "loglog": _loglog,
        "surface": _surface,
    }[spec.kind]
    out = Path(spec.output)
    out.parent.mkdir(parents=True, exist_ok=True)
    meta = builder(spec, out)
    meta["output"] = str(out)
    return meta


def _label(spec: FigureSpec, i: int) -> str:
    if i < len(spec.labels):
        return spec.labels[i]
    return Path(spec.inputs[i]).parent.name or Path(spec.inputs[i]).stem


def _profile_panel(spec: FigureSpec, out: Path) -> dict:
    fig, axes = plt.subplots(1, 3, figsize=(12.5, 3.6))
    ax_rho, ax_u, ax_size = axes
    exact_drawn = False
    times = []
    for i, path in enumerate(spec.inputs):
        snap = read_profiles(path)[-1]
        times.append(snap["t"])
        label = _label(spec, i)
        ax_rho.plot(snap["x"], snap["rho"], lw=1.2, label=label)
        ax_u.plot(snap["x"], snap["u"], lw=1.2, label=label)
        ax_size.plot(snap["x"], snap["size"], lw=1.2, label=label)
        if not exact_drawn and "rho_exact" in snap:
            ax_rho.plot(snap["x"], snap["rho_exact"], "k--", lw=1.0, label="exact")
            exact_drawn = True
    ax_rho.set_xlabel("x")
    ax_rho.set_ylabel("density")
    ax_u.set_xlabel("x")
    ax_u.set_ylabel("velocity")
    ax_size.set_xlabel("x")
    ax_size.set_ylabel("particle size")
    ax_rho.legend(fontsize=8)
    fig.suptitle(spec.title or f"profiles at t = {times[0]:g}")
    fig.tight_layout()
    fig.savefig(out, dpi=spec.dpi)
    plt.close(fig)
    return {"kind": "profile_panel", "times": times, "exact_overlay": exact_drawn}


def _loglog(spec: FigureSpec, out: Path) -> dict:
    errors = read_error_table(spec.inputs[0])
    rates = read_rates(spec.inputs[1]) if len(spec.inputs) > 1 else {}
    fig, ax = plt.subplots(figsize=(5.2, 4.2))
    annotations: dict[str, float] = {}
    for norm, marker in (("l1", "o"), ("linf", "s"), ("dbl", "^")):
        ys = errors[norm]
        if np.any(ys <= 0):
            continue
        label = norm
        if norm in rates:
            slope = rates[norm]["slope"]
            annotations[norm] = slope  # read from CSV, never refit
            label = f"{norm} (slope {slope:.3f})"
        ax.loglog(errors["h"], ys, marker=marker, lw=1.2, label=label)
    ax.set_xlabel("h")
    ax.set_ylabel("error")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend(fontsize=8)
    fig.suptitle(spec.title or "convergence")
    fig.tight_layout()
    fig.savefig(out, dpi=spec.dpi)
    plt.close(fig)
    return {"kind": "loglog", "slopes": annotations}


def _surface(spec: FigureSpec, out: Path) -> dict:
    snaps = read_profiles(spec.inputs[0])
    if len(snaps) < 2:
        raise ValueError("surface figure needs at least two snapshots")
    xs = snaps[0]["x"]
    stride = max(1, xs.size // 400)
    xs = xs[::stride]
    ts = np.array([s["t"] for s in snaps])
    zs = np.stack([s["rho"][::stride] for s in snaps])
    tg, xg = np.meshgrid(ts, xs, indexing="ij")
    fig = plt.figure(figsize=(6.4, 4.8))
    ax = fig.add_subplot(projection="3d")
    ax.plot_surface(xg, tg, zs, cmap="viridis", linewidth=0, antialiased=True)
    ax.set_xlabel("x")
    ax.set_ylabel("t")
    ax.set_zlabel("density")
    fig.suptitle(spec.title or "density evolution")
    fig.savefig(out, dpi=spec.dpi)
    plt.close(fig)
    return {"kind": "surface", "snapshots": len(snaps)}
