"""Run-directory loading: trajectory CSV, metrics CSV, summary JSON.

The file schemas are the simulator's export format: a trajectory table
``t, p_1x.., v_1x.., u_1x..`` with 1-based agent labels, a metrics table
keyed by column header (core series plus per-edge and centroid columns),
and a JSON summary carrying the edge list and settling times.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class BundleError(ValueError):
    """Run directory is missing files or the files disagree."""


@dataclass
class PlotBundle:
    trajectory_csv: Path
    metrics_csv: Path
    summary_json: Path
    outdir: Path

    @classmethod
    def from_run_dir(cls, run_dir: str | Path, outdir: str | Path) -> "PlotBundle":
        run_dir = Path(run_dir)
        bundle = cls(
            trajectory_csv=run_dir / "trajectory.csv",
            metrics_csv=run_dir / "metrics.csv",
            summary_json=run_dir / "summary.json",
            outdir=Path(outdir),
        )
        bundle.validate()
        return bundle

    def validate(self) -> None:
        for path in (self.trajectory_csv, self.metrics_csv, self.summary_json):
            if not path.exists():
                raise BundleError(f"missing input file: {path}")
            if path.stat().st_size == 0:
                raise BundleError(f"empty input file: {path}")

    def load(self) -> "RunData":
        traj_cols, traj = read_table(self.trajectory_csv)
        met_cols, met = read_table(self.metrics_csv)
        summary = json.loads(self.summary_json.read_text())
        if traj.shape[0] != met.shape[0]:
            raise BundleError("trajectory and metrics tables disagree on sample count")
        if not np.allclose(traj[:, traj_cols["t"]], met[:, met_cols["t"]]):
            raise BundleError("trajectory and metrics time grids differ")
        return RunData(traj_cols, traj, met_cols, met, summary)


def read_table(path: Path):
    with open(path, newline="") as fh:
        header = next(csv.reader(fh))
    data = np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)
    if data.size == 0:
        raise BundleError(f"no data rows in {path}")
    if data.shape[1] != len(header):
        raise BundleError(f"header/data width mismatch in {path}")
    return {name: k for k, name in enumerate(header)}, data


@dataclass
class RunData:
    traj_cols: dict[str, int]
    traj: np.ndarray
    met_cols: dict[str, int]
    met: np.ndarray
    summary: dict

    @property
    def t(self) -> np.ndarray:
        return self.traj[:, self.traj_cols["t"]]

    @property
    def n_agents(self) -> int:
        return int(self.summary["agents"])

    @property
    def dimension(self) -> int:
        return int(self.summary["dimension"])

    def agent_positions(self, i: int) -> np.ndarray:
        """(K+1, M) positions of 1-based agent i."""
        axes = "xyz"[: self.dimension]
        cols = [self.traj_cols[f"p_{i}{a}"] for a in axes]
        return self.traj[:, cols]

    def metric(self, name: str) -> np.ndarray:
        try:
            return self.met[:, self.met_cols[name]]
        except KeyError:
            raise BundleError(f"metrics table has no column {name!r}") from None

    def edge_labels(self) -> list[str]:
        return [lbl.replace("-", "_") for lbl in self.summary["edges"]]

    def centroid(self, kind: str) -> np.ndarray:
        """kind 'pc', 'pc_des', 'vc' or 'vc_des', shape (K+1, M)."""
        axes = "xyz"[: self.dimension]
        return np.column_stack([self.metric(f"{kind}_{a}") for a in axes])
