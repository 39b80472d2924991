import json
from pathlib import Path

import numpy as np
import pytest

AXES = "xyz"


def write_table(path: Path, header: list[str], columns: list[np.ndarray]) -> None:
    data = np.column_stack(columns)
    np.savetxt(path, data, delimiter=",", header=",".join(header), comments="",
               fmt="%.17g")


@pytest.fixture()
def synthetic_run_dir(tmp_path) -> Path:
    """Minimal but schema-complete run directory: three agents, two edges."""
    run = tmp_path / "run"
    run.mkdir()
    k1 = 40
    t = np.linspace(0.0, 2.0, k1)
    n, m = 3, 3
    rng = np.random.default_rng(0)

    header = ["t"]
    cols = [t]
    for prefix in ("p", "v", "u"):
        for i in range(1, n + 1):
            for a in AXES[:m]:
                header.append(f"{prefix}_{i}{a}")
                cols.append(np.cumsum(rng.normal(0, 0.1, k1)) + rng.normal(0, 3))
    write_table(run / "trajectory.csv", header, cols)

    edges = ["1-2", "2-3"]
    met_header = ["t", "l_tr", "l_fo1", "l_fo2", "l_in", "l_tf", "l_in_avg", "cum_energy"]
    decays = np.exp(-t)
    met_cols = [t, 3.0 * decays, 2.0 * decays, 0.5 * decays, decays,
                np.tanh(t - 1.0), decays / 3.0, 1.0 - decays]
    for a in AXES[:m]:
        met_header += [f"pc_{a}", f"pc_des_{a}"]
        met_cols += [np.sin(t), np.sin(t) + 0.05 * decays]
    for a in AXES[:m]:
        met_header += [f"vc_{a}", f"vc_des_{a}"]
        met_cols += [np.cos(t), np.cos(t) - 0.02 * decays]
    for lbl in edges:
        tag = f"e{lbl.replace('-', '_')}"
        met_header += [f"sigma_{tag}", f"dsigma_{tag}", f"d2sigma_{tag}",
                       f"disterr_{tag}", f"velmis_{tag}"]
        met_cols += [decays, -0.5 * decays, 0.1 * decays, 2.0 * decays, 0.3 * decays]
    write_table(run / "metrics.csv", met_header, met_cols)

    summary = {
        "agents": n,
        "dimension": m,
        "edges": edges,
        "mode": "distributed",
        "settling_times": {"t_0.1": 0.8, "t_0.01": 1.4, "t_0.001": None},
        "total_input_energy": 1.0,
    }
    (run / "summary.json").write_text(json.dumps(summary, indent=2))
    return run
