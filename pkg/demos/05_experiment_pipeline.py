#!/usr/bin/env python3
"""The full experiment pipeline: a config file in, CSV tables out.

Writes a small (topology x attack) grid config, runs it, and shows the
resulting ranking and cost-aware tradeoff tables.  Identical configs and
seeds always reproduce identical CSV bodies.
"""

import tempfile
from pathlib import Path

from netelast.experiment import load_config, run_experiment

CONFIG = """
[experiment]
output_dir = out
global_seed = 2718
model = dijkstra_homogeneous
attacks = random, highest_degree, highest_betweenness
stop_fraction = 1.0
batch = 1

[topology:mesh]
family = mesh
n = 20

[topology:small-world]
family = watts_strogatz
n = 60
k = 4
p = 0.3

[topology:scale-free]
family = preferential_attachment
n = 60
m = 2

[topology:random]
family = gilbert
n = 60
p = 0.08

[topology:grid]
family = near_regular
rows = 6
cols = 10
diagonals = true
"""

workdir = Path(tempfile.mkdtemp(prefix="netelast-demo-"))
(workdir / "grid.ini").write_text(CONFIG)
report = run_experiment(load_config(workdir / "grid.ini"))

print(f"report bundle: {report.output_dir}\n")
for name in ("metrics.csv", "ranking.csv", "tradeoff.csv", "correlations.csv"):
    print(f"--- {name}")
    print((report.output_dir / name).read_text())

print("--- run.log")
print((report.output_dir / "run.log").read_text())
print("Note: a NaN tradeoff score marks a cell whose elasticity left the")
print("score's domain - here the diagonal grid, whose normalized throughput")
print("rises above 1 when the betweenness attack slices it into fragments")
print("that are less congested than the intact grid.  The run.log records")
print("the reason; every other table keeps its shape.")
