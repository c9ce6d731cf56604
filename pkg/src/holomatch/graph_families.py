"""Named planar graphs and random planar graphs / matchgates with embeddings."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .matchgate_fkt import Matchgate, PlanarGraph
from .scalar_linalg import Scalar


def _polygon(n, radius=1.0, phase=0.0):
    return [(radius * math.cos(phase + 2 * math.pi * i / n), radius * math.sin(phase + 2 * math.pi * i / n))
            for i in range(n)]


def cycle(n, weights=None):
    edges = [(i, (i + 1) % n) for i in range(n)]
    if n == 2:
        return path(2, weights)
    return PlanarGraph.from_coordinates(_polygon(n), _weighted(edges, weights))


def path(n, weights=None):
    edges = [(i, i + 1) for i in range(n - 1)]
    return PlanarGraph.from_coordinates([(i, (i % 2) * 0.1) for i in range(n)], _weighted(edges, weights))


def wheel(rim, weights=None):
    """Hub 0 joined to a rim cycle 1..rim."""
    points = [(0.0, 0.0)] + _polygon(rim)
    edges = [(0, i + 1) for i in range(rim)] + [(i + 1, (i + 1) % rim + 1) for i in range(rim)]
    return PlanarGraph.from_coordinates(points, _weighted(edges, weights))


def grid(rows, cols, weights=None):
    points = [(c, r) for r in range(rows) for c in range(cols)]
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    return PlanarGraph.from_coordinates(points, _weighted(edges, weights))


def complete4(weights=None):
    points = [(0.0, 0.0)] + _polygon(3, phase=math.pi / 2)
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]
    return PlanarGraph.from_coordinates(points, _weighted(edges, weights))


def prism(weights=None):
    """Triangular prism: two nested triangles joined by spokes."""
    points = _polygon(3, 2.0, math.pi / 2) + _polygon(3, 1.0, math.pi / 2)
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return PlanarGraph.from_coordinates(points, _weighted(edges, weights))


def cube(weights=None):
    points = _polygon(4, 2.0, math.pi / 4) + _polygon(4, 1.0, math.pi / 4)
    edges = [(i, (i + 1) % 4) for i in range(4)] + [(4 + i, 4 + (i + 1) % 4) for i in range(4)] \
        + [(i, i + 4) for i in range(4)]
    return PlanarGraph.from_coordinates(points, _weighted(edges, weights))


def theta():
    """Two vertices joined by three parallel edges (the smallest cubic multigraph)."""
    return PlanarGraph(2, [(0, 1, 1), (0, 1, 1), (0, 1, 1)], [[0, 1, 2], [2, 1, 0]])


def _weighted(edges, weights):
    if weights is None:
        return [(u, v, 1) for u, v in edges]
    if callable(weights):
        return [(u, v, weights()) for u, v in edges]
    return [(u, v, w) for (u, v), w in zip(edges, weights)]


def add_parallel_edge(g: PlanarGraph, e: int, weight=1) -> PlanarGraph:
    """Duplicate edge e so that the two copies bound a new digon face.

    The digon is placed away from the unbounded face when possible, so the
    outer face keeps its identity.
    """
    u, v, _ = g.edges[e]
    outer = {d for f in g.outer_faces().values() if f is not None for d in g.faces()[f]}
    new = len(g.edges)
    rotation = [list(r) for r in g.rotation]
    if (e, 0) in outer and (e, 1) not in outer:
        # the digon goes on the left of v->u
        rotation[u].insert(rotation[u].index(e), new)
        rotation[v].insert(rotation[v].index(e) + 1, new)
        changed = (e, 1)
    else:
        rotation[u].insert(rotation[u].index(e) + 1, new)
        rotation[v].insert(rotation[v].index(e), new)
        changed = (e, 0)
    hints = []
    for f in g.outer_faces().values():
        if f is not None:
            hints.append(next(d for d in g.faces()[f] if d != changed))
    return PlanarGraph(g.n, list(g.edges) + [(u, v, weight)], rotation, outer=hints)


# random generation ----------------------------------------------------------

def random_weight(rng: random.Random, complex_rate=0.0):
    value = rng.choice([1, 1, 2, 3, -1, -2, Fraction(1, 2), Fraction(-3, 2)])
    if complex_rate and rng.random() < complex_rate:
        return Scalar(value, rng.choice([1, -1, 2]))
    return value


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _segments_cross(p1, p2, q1, q2):
    if len({p1, p2, q1, q2}) < 4:
        return False
    d1, d2 = _cross(q1, q2, p1), _cross(q1, q2, p2)
    d3, d4 = _cross(p1, p2, q1), _cross(p1, p2, q2)
    return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)


def random_points(rng: random.Random, n: int, size: int = 30):
    """n integer points with distinct x coordinates and no three collinear."""
    while True:
        xs = rng.sample(range(size), n)
        points = [(x, rng.randrange(size)) for x in xs]
        ok = all(_cross(points[i], points[j], points[k]) != 0
                 for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))
        if ok:
            return points


def random_planar_graph(rng: random.Random, n: int, density: float = 0.5, weight=None,
                        parallel_rate: float = 0.0):
    """Connected straight-line planar graph on n random points.

    An x-monotone spanning path keeps it connected; other chords are added
    in random order when they cross nothing and a coin with ``density``
    comes up.
    """
    weight = weight or (lambda: 1)
    points = random_points(rng, n)
    order = sorted(range(n), key=lambda v: points[v][0])
    edges = [(order[i], order[i + 1]) for i in range(n - 1)]
    candidates = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(candidates)
    present = {tuple(sorted(e)) for e in edges}
    for i, j in candidates:
        if (i, j) in present or rng.random() > density:
            continue
        if any(_segments_cross(points[i], points[j], points[a], points[b]) for a, b in edges):
            continue
        edges.append((i, j))
        present.add((i, j))
    g = PlanarGraph.from_coordinates(points, [(u, v, weight()) for u, v in edges])
    for e in range(len(edges)):
        if parallel_rate and rng.random() < parallel_rate:
            g = add_parallel_edge(g, e, weight())
    return g


def random_matchgate(rng: random.Random, n_vertices: int, n_inputs: int, n_outputs: int,
                     density: float = 0.5, weight=None, parallel_rate: float = 0.0, attempts=200):
    """Random connected matchgate whose external nodes sit on the unbounded face."""
    arity = n_inputs + n_outputs
    for _ in range(attempts):
        g = random_planar_graph(rng, n_vertices, density, weight, parallel_rate)
        walk = []
        for v in g.outer_walk(0):
            if v not in walk:
                walk.append(v)
        if len(walk) < arity:
            continue
        start = rng.randrange(len(walk))
        walk = walk[start:] + walk[:start]
        chosen = sorted(rng.sample(range(len(walk)), arity))
        nodes = [walk[i] for i in chosen]
        inputs = nodes[:n_inputs]
        outputs = list(reversed(nodes[n_inputs:]))
        return Matchgate(g, inputs, outputs)
    raise RuntimeError("could not place the requested external nodes")
