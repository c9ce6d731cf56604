"""Write sample input files for the command-line tool into demos/data/."""
import random
from pathlib import Path

from holomatch.doppler_app import doppler_graphs
from holomatch.fileformats import format_basis, format_graph, format_matchgate, format_signature
from holomatch.collapse_engine import collapse_domain2
from holomatch.graph_families import random_matchgate, random_weight, wheel
from holomatch.holant_engine import holant_of_grid
from holomatch.instances import random_collapse_instance, random_matchgrid

out = Path(__file__).with_name("data")
out.mkdir(exist_ok=True)
rng = random.Random(5)

(out / "wheel5.graph").write_text(format_graph(wheel(5)))
(out / "k4.graph").write_text(format_graph(doppler_graphs()["K4"]))
(out / "gate.mg").write_text(format_matchgate(random_matchgate(rng, 6, 0, 4, 0.8, lambda: random_weight(rng))))

grid = random_matchgrid(rng)
while holant_of_grid(grid) == 0:
    grid = random_matchgrid(rng)
lines = []
for i, g in enumerate(grid.generators):
    (out / f"grid_g{i}.mg").write_text(format_matchgate(g))
    lines.append(f"generator g{i} grid_g{i}.mg")
for j, r in enumerate(grid.recognizers):
    (out / f"grid_r{j}.mg").write_text(format_matchgate(r))
    lines.append(f"recognizer r{j} grid_r{j}.mg")
lines += [f"connect g{i}.{a} r{j}.{b}" for (i, a), (j, b) in grid.connectors]
(out / "grid.manifest").write_text("\n".join(lines) + "\n")

def holant(inst):
    result = collapse_domain2(inst.basis, inst.generators, inst.recognizers, inst.wiring)
    return next(c.detail for c in result.report if c.name == "Holant invariant")


inst = random_collapse_instance(rng, 2, 3)
while holant(inst).startswith("0 "):
    inst = random_collapse_instance(rng, 2, 3)
(out / "collapse_basis.txt").write_text(format_basis(inst.basis))
(G, underG), = inst.generators
(out / "collapse_G.txt").write_text(format_signature(G))
(out / "collapse_R.txt").write_text(format_signature(inst.recognizers[0][0]))
wires = "\n".join(f"connect {i}.{a} {j}.{b}" for (i, a), (j, b) in inst.wiring)
(out / "collapse.manifest").write_text(
    f"basis collapse_basis.txt\ngenerator collapse_G.txt\nrecognizer collapse_R.txt\n{wires}\n")
print("wrote", ", ".join(sorted(p.name for p in out.iterdir())))
