"""A matchgrid evaluated two ways: tensor contraction and one big PerfMatch."""
import random

from holomatch.holant_engine import holant_of_grid, holant_via_perfmatch
from holomatch.instances import random_matchgrid

rng = random.Random(7)
for _ in range(5):
    grid = random_matchgrid(rng)
    print(f"{len(grid.generators)} generators, {len(grid.recognizers)} recognizers, {len(grid.connectors)} wires: "
          f"contraction {holant_of_grid(grid)}, PerfMatch {holant_via_perfmatch(grid)}")
