"""Counting perfect matchings of planar graphs with a Pfaffian orientation."""
import random

from holomatch.graph_families import cycle, grid, random_planar_graph, random_weight, wheel
from holomatch.matchgate_fkt import clockwise_counts, kasteleyn_orient, perfmatch, perfmatch_bruteforce

for name, g in [("6-cycle", cycle(6)), ("wheel with 5 spokes", wheel(5)), ("3x4 grid", grid(3, 4))]:
    orientation = kasteleyn_orient(g)
    counts = clockwise_counts(g, orientation)
    print(f"{name}: {g.n} vertices, {len(g.edges)} edges, clockwise counts per face {counts}")
    print(f"  PerfMatch = {perfmatch(g)}   brute force = {perfmatch_bruteforce(g)}")

# weighted, with complex entries and a few parallel edges
rng = random.Random(4)
g = random_planar_graph(rng, 10, 0.7, lambda: random_weight(rng, 0.4), parallel_rate=0.2)
print(f"random graph with {len(g.edges)} edges: {perfmatch(g)} (brute force {perfmatch_bruteforce(g)})")
