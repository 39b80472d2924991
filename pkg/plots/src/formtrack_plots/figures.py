"""The four run-directory figures, written as SVG.

Outputs are deterministic: fixed styles, no timestamps in the file content.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
matplotlib.rcParams["svg.hashsalt"] = "formtrack-plots"  # deterministic element ids

import matplotlib.pyplot as plt
import numpy as np

from .bundle import PlotBundle, RunData

_SAVE_KW = dict(format="svg", metadata={"Date": None})
AGENT_COLOR = "#1b6b43"
CENTROID_COLOR = "#7fd12f"
SNAPSHOT_CMAP = ["#2c43c8", "#5a2ca0", "#8a1f8f", "#c01f45"]


@dataclass
class FigureResult:
    path: Path
    extras: dict


def _load(bundle: PlotBundle) -> RunData:
    bundle.outdir.mkdir(parents=True, exist_ok=True)
    return bundle.load()


def _save(fig, path: Path) -> None:
    fig.savefig(path, **_SAVE_KW)
    plt.close(fig)


def plot_trajectories(bundle: PlotBundle, snapshots: int = 4) -> FigureResult:
    """3D agent paths, centroid vs reference, and formation snapshots."""
    data = _load(bundle)
    if data.dimension != 3:
        raise ValueError("trajectory figure expects three-dimensional runs")
    fig = plt.figure(figsize=(7, 6))
    ax = fig.add_subplot(projection="3d")
    n = data.n_agents
    paths = [data.agent_positions(i) for i in range(1, n + 1)]
    for p in paths:
        ax.plot(p[:, 0], p[:, 1], p[:, 2], color=AGENT_COLOR, lw=0.7, alpha=0.8)
    pc = data.centroid("pc")
    ref = data.centroid("pc_des")
    ax.plot(pc[:, 0], pc[:, 1], pc[:, 2], color=CENTROID_COLOR, lw=1.6, label="centroid")
    ax.plot(ref[:, 0], ref[:, 1], ref[:, 2], color="black", lw=1.2, ls="--", label="reference")

    k1 = data.t.size
    snap_idx = np.linspace(0, k1 - 1, snapshots, dtype=int)
    for s, k in enumerate(snap_idx):
        color = SNAPSHOT_CMAP[s % len(SNAPSHOT_CMAP)]
        pts = np.array([p[k] for p in paths])
        ax.scatter(pts[:, 0], pts[:, 1], pts[:, 2], color=color, s=14,
                   label=f"t = {data.t[k]:.1f} s")
    ax.set_xlabel("x [m]")
    ax.set_ylabel("y [m]")
    ax.set_zlabel("z [m]")
    ax.legend(loc="upper left", fontsize=7)
    out = bundle.outdir / "trajectories.svg"
    _save(fig, out)
    return FigureResult(out, {"snapshots": [float(data.t[k]) for k in snap_idx]})


def plot_energy(bundle: PlotBundle) -> FigureResult:
    """Instantaneous input energy and its weighted average, with the
    time-averaged levels dashed."""
    data = _load(bundle)
    t = data.t
    l_in = data.metric("l_in")
    l_in_avg = data.metric("l_in_avg")
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(t, l_in, color="magenta", lw=0.9, label="input energy")
    ax.plot(t, l_in_avg, color="#1b8b43", lw=0.9, label="average input energy")
    means = {"l_in_mean": float(l_in.mean()), "l_in_avg_mean": float(l_in_avg.mean())}
    ax.axhline(means["l_in_mean"], color="magenta", ls="--", lw=0.8)
    ax.axhline(means["l_in_avg_mean"], color="#1b8b43", ls="--", lw=0.8)
    ax.set_xlabel("t [s]")
    ax.set_ylabel("instantaneous input cost")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    out = bundle.outdir / "energy.svg"
    _save(fig, out)
    return FigureResult(out, means)


def plot_settling(bundle: PlotBundle) -> FigureResult:
    """Stacked tracking/formation cost shares with settling-time markers."""
    data = _load(bundle)
    t = data.t
    l_tr = data.metric("l_tr")
    l_fo = data.metric("l_fo1") + data.metric("l_fo2")
    total = l_tr + l_fo
    safe = np.where(total > 0, total, 1.0)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.stackplot(t, l_tr / safe, l_fo / safe,
                 colors=["#3a66c2", "#cf8c2a"], labels=["tracking share", "formation share"])
    markers = {}
    settling = data.summary.get("settling_times", {})
    for key, value in sorted(settling.items()):
        if value is None:
            continue
        markers[key] = float(value)
        ax.axvline(value, color="black", lw=1.0)
        ax.text(value, 1.02, key, rotation=90, fontsize=7, ha="center", va="bottom")
    ax.set_xlabel("t [s]")
    ax.set_ylabel("cost share")
    ax.set_ylim(0, 1.12)
    ax.legend(loc="lower right", fontsize=8)
    out = bundle.outdir / "settling.svg"
    _save(fig, out)
    return FigureResult(out, {"markers": markers})


def plot_consensus(bundle: PlotBundle) -> FigureResult:
    """Per-edge potential value/derivative panels, velocity mismatches, and
    centroid components against the reference."""
    data = _load(bundle)
    t = data.t
    edges = data.edge_labels()
    fig, axes = plt.subplots(3, 2, figsize=(10, 9), sharex=True)
    panels = [
        ("sigma", "potential value", axes[0, 0]),
        ("dsigma", "potential slope", axes[1, 0]),
        ("d2sigma", "potential curvature", axes[2, 0]),
        ("velmis", "neighbor velocity mismatch", axes[0, 1]),
    ]
    for prefix, title, ax in panels:
        for lbl in edges:
            ax.plot(t, data.metric(f"{prefix}_e{lbl}"), lw=0.6)
        ax.set_title(f"{title} ({len(edges)} edges)", fontsize=9)
    comp_colors = ["#3a66c2", "#d97b29", "#c8b41f"]
    ax_pc = axes[1, 1]
    ax_vc = axes[2, 1]
    pc, pdes = data.centroid("pc"), data.centroid("pc_des")
    vc, vdes = data.centroid("vc"), data.centroid("vc_des")
    for k in range(data.dimension):
        ax_pc.plot(t, pc[:, k], color=comp_colors[k], lw=0.9)
        ax_pc.plot(t, pdes[:, k], color=comp_colors[k], lw=0.8, ls="--")
        ax_vc.plot(t, vc[:, k], color=comp_colors[k], lw=0.9)
        ax_vc.plot(t, vdes[:, k], color=comp_colors[k], lw=0.8, ls="--")
    ax_pc.set_title("centroid position vs reference", fontsize=9)
    ax_vc.set_title("centroid velocity vs reference", fontsize=9)
    for ax in axes[-1]:
        ax.set_xlabel("t [s]")
    fig.tight_layout()
    out = bundle.outdir / "consensus.svg"
    _save(fig, out)
    return FigureResult(out, {"edges": len(edges)})


ALL_FIGURES = {
    "trajectories": plot_trajectories,
    "energy": plot_energy,
    "settling": plot_settling,
    "consensus": plot_consensus,
}
