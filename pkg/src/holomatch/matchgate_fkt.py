"""Embedded planar graphs, Pfaffian orientations and perfect-matching sums.

A graph carries a rotation system: for every vertex the counterclockwise
cyclic order of its incident edge indices.  Faces are traced with the face
on the left of each dart, so bounded faces come out counterclockwise and the
unbounded face clockwise.  A dart is a pair ``(edge, direction)`` where
direction 0 runs from ``edges[e][0]`` to ``edges[e][1]``.
"""
from __future__ import annotations

import math
from collections import deque
from itertools import product

import networkx as nx

from .errors import BoundExceeded, NotExternal, NotPlanarEmbedding, OrderViolation
from .scalar_linalg import ONE, ZERO, Scalar, as_scalar, pfaffian, zeros
from .signature_core import Signature

DEFAULT_BRUTE_EDGE_BOUND = 24


class PlanarGraph:
    """Weighted multigraph with a counterclockwise rotation system.

    ``outer`` optionally names the unbounded face of each component, either
    as a vertex list (matched against traced faces in either direction) or
    as a list of darts lying on it.  Without a hint the longest face of a
    component is taken.
    """

    def __init__(self, n, edges, rotation, outer=None):
        self.n = int(n)
        self.edges = tuple((int(u), int(v), as_scalar(w)) for u, v, w in edges)
        self.rotation = tuple(tuple(int(e) for e in rot) for rot in rotation)
        self.outer_hint = outer
        if len(self.rotation) != self.n:
            raise NotPlanarEmbedding(f"{len(self.rotation)} rotation lists for {self.n} vertices")
        incident = [[] for _ in range(self.n)]
        for index, (u, v, _) in enumerate(self.edges):
            if u == v:
                raise NotPlanarEmbedding(f"self-loop on vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise NotPlanarEmbedding(f"edge {index} leaves the vertex range")
            incident[u].append(index)
            incident[v].append(index)
        for v in range(self.n):
            if sorted(self.rotation[v]) != sorted(incident[v]):
                raise NotPlanarEmbedding(f"rotation at vertex {v} does not list its incident edges")
        self._position = [{e: i for i, e in enumerate(rot)} for rot in self.rotation]
        self._faces = None
        self._outer = None
        self._components = None

    # construction helpers -------------------------------------------------
    @classmethod
    def from_coordinates(cls, points, edges):
        """Rotation by angle around straight-line vertex positions; outer face by signed area."""
        points = [tuple(map(float, p)) for p in points]
        edges = [(e[0], e[1], e[2] if len(e) > 2 else 1) for e in edges]
        rotation = []
        for v, (x, y) in enumerate(points):
            around = []
            for index, (a, b, _) in enumerate(edges):
                if v in (a, b):
                    other = b if a == v else a
                    ox, oy = points[other]
                    around.append((math.atan2(oy - y, ox - x), index))
            rotation.append([index for _, index in sorted(around)])
        graph = cls(len(points), edges, rotation)
        outer = []
        for comp, face_ids in graph._faces_by_component().items():
            if not face_ids:
                continue
            areas = [(graph._signed_area(graph.faces()[f], points), f) for f in face_ids]
            outer.append(graph.faces()[min(areas)[1]][0])
        return cls(len(points), edges, rotation, outer=outer)

    def _signed_area(self, face, points):
        total = 0.0
        for dart in face:
            (x1, y1), (x2, y2) = points[self.tail(dart)], points[self.head(dart)]
            total += x1 * y2 - x2 * y1
        return total / 2

    # darts ----------------------------------------------------------------
    def tail(self, dart):
        e, d = dart
        return self.edges[e][d]

    def head(self, dart):
        e, d = dart
        return self.edges[e][1 - d]

    def dart_from(self, v, e):
        return (e, 0 if self.edges[e][0] == v else 1)

    def next_dart(self, dart):
        """Successor along the face on the left of ``dart``."""
        e = dart[0]
        v = self.head(dart)
        rot = self.rotation[v]
        nxt = rot[(self._position[v][e] - 1) % len(rot)]
        return self.dart_from(v, nxt)

    # faces ----------------------------------------------------------------
    def faces(self):
        if self._faces is None:
            faces, seen = [], set()
            for e in range(len(self.edges)):
                for d in (0, 1):
                    start = (e, d)
                    if start in seen:
                        continue
                    face, dart = [], start
                    while dart not in seen:
                        seen.add(dart)
                        face.append(dart)
                        dart = self.next_dart(dart)
                    faces.append(face)
            self._faces = faces
        return self._faces

    def components(self):
        """List of vertex lists, each sorted, in order of smallest vertex."""
        if self._components is not None:
            return self._components
        seen = [False] * self.n
        adjacency = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        comps = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue, comp = deque([start]), []
            while queue:
                x = queue.popleft()
                comp.append(x)
                for y in adjacency[x]:
                    if not seen[y]:
                        seen[y] = True
                        queue.append(y)
            comps.append(sorted(comp))
        self._components = comps
        self._component_of = [0] * self.n
        for c, comp in enumerate(comps):
            for v in comp:
                self._component_of[v] = c
        return comps

    def component_index(self):
        self.components()
        return self._component_of

    def _faces_by_component(self):
        comp_of = self.component_index()
        grouped = {c: [] for c in range(len(self.components()))}
        for f, face in enumerate(self.faces()):
            grouped[comp_of[self.tail(face[0])]].append(f)
        return grouped

    def check_euler(self):
        comp_of = self.component_index()
        grouped = self._faces_by_component()
        for c, comp in enumerate(self.components()):
            n_edges = sum(1 for u, _, _ in self.edges if comp_of[u] == c)
            n_faces = max(len(grouped[c]), 1)
            if len(comp) - n_edges + n_faces != 2:
                raise NotPlanarEmbedding(
                    f"component containing vertex {comp[0]}: V-E+F = {len(comp)}-{n_edges}+{n_faces} != 2")

    def outer_faces(self):
        """Map component index -> index of its unbounded face (None for isolated vertices)."""
        if self._outer is None:
            self.check_euler()
            faces = self.faces()
            grouped = self._faces_by_component()
            chosen = {}
            hint = self.outer_hint
            face_of = {dart: f for f, face in enumerate(faces) for dart in face}
            if hint:
                if all(isinstance(h, tuple) for h in hint):
                    for dart in hint:
                        f = face_of[tuple(dart)]
                        chosen[self.component_index()[self.tail(faces[f][0])]] = f
                else:
                    walks = hint if all(isinstance(h, (list, tuple)) for h in hint) else [hint]
                    for walk in walks:
                        f = self._match_vertex_hint([int(v) for v in walk])
                        chosen[self.component_index()[self.tail(faces[f][0])]] = f
            for c, face_ids in grouped.items():
                if c not in chosen:
                    chosen[c] = max(face_ids, key=lambda f: (len(faces[f]), -f)) if face_ids else None
            self._outer = chosen
        return self._outer

    def faces_matching(self, hint, reverse=False):
        """Faces whose vertex walk (reversed if asked) is a cyclic rotation of ``hint``."""
        found = []
        for f, face in enumerate(self.faces()):
            walk = [self.tail(d) for d in face]
            if len(walk) != len(hint):
                continue
            candidate = walk[::-1] if reverse else walk
            doubled = candidate + candidate
            if any(doubled[i:i + len(hint)] == hint for i in range(len(candidate))):
                found.append(f)
        return found

    def _match_vertex_hint(self, hint):
        """Face whose vertex walk is a rotation of ``hint``, traced direction first."""
        for reverse in (False, True):
            found = self.faces_matching(hint, reverse)
            if found:
                return found[0]
        raise NotPlanarEmbedding(f"outer face hint {hint} matches no traced face")

    def outer_walk(self, component):
        """Vertices met walking the unbounded face counterclockwise around the graph."""
        darts = self.outer_walk_darts(component)
        if not darts:
            return [self.components()[component][0]]
        return [self.head(d) for d in darts]

    def outer_walk_darts(self, component):
        """Darts of the unbounded face in counterclockwise order; each names the corner at its head."""
        f = self.outer_faces()[component]
        return [] if f is None else self.faces()[f][::-1]

    def outer_corner_dart(self, v):
        """First dart on the unbounded face ending at v, or None for an isolated vertex."""
        comp = self.component_index()[v]
        for dart in self.outer_walk_darts(comp):
            if self.head(dart) == v:
                return dart
        if self.outer_faces()[comp] is None:
            return None
        raise NotExternal(f"vertex {v} is not on the unbounded face")

    def outer_darts(self):
        return [self.faces()[f][0] for f in self.outer_faces().values() if f is not None]

    def insertion_index(self, v, corner=None):
        """Rotation index at v for a new edge placed in the corner named by ``corner``.

        ``corner`` is a dart ending at v; by default the first such dart on
        the unbounded face.
        """
        dart = corner if corner is not None else self.outer_corner_dart(v)
        if dart is None:
            return 0
        following = self.next_dart(dart)
        return self._position[v][following[0]] + 1

    def remove_vertices(self, removed):
        removed = set(removed)
        keep = [v for v in range(self.n) if v not in removed]
        new_id = {v: i for i, v in enumerate(keep)}
        new_edge = {}
        edges = []
        for e, (u, v, w) in enumerate(self.edges):
            if u in new_id and v in new_id:
                new_edge[e] = len(edges)
                edges.append((new_id[u], new_id[v], w))
        rotation = [[new_edge[e] for e in self.rotation[v] if e in new_edge] for v in keep]
        return PlanarGraph(len(keep), edges, rotation)

    def to_networkx(self):
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for e, (u, v, w) in enumerate(self.edges):
            g.add_edge(u, v, key=e, weight=w)
        return g

    def __repr__(self):
        return f"PlanarGraph(n={self.n}, edges={len(self.edges)})"


def trace_faces(g: PlanarGraph):
    """Faces as dart cycles after checking Euler's formula on every component."""
    g.check_euler()
    return g.faces()


# Pfaffian orientation --------------------------------------------------------

def kasteleyn_orient(g: PlanarGraph):
    """Per-edge direction (+1 means u->v) with an odd number of clockwise edges on every bounded face."""
    faces = trace_faces(g)
    outer = g.outer_faces()
    orientation = [0] * len(g.edges)
    face_of = {dart: f for f, face in enumerate(faces) for dart in face}
    for c, comp in enumerate(g.components()):
        if len(comp) < 2:
            continue
        # spanning tree by breadth-first search, oriented arbitrarily
        in_tree = set()
        seen = {comp[0]}
        queue = deque([comp[0]])
        while queue:
            v = queue.popleft()
            for e in g.rotation[v]:
                u, w, _ = g.edges[e]
                other = w if u == v else u
                if other not in seen:
                    seen.add(other)
                    in_tree.add(e)
                    orientation[e] = 1
                    queue.append(other)
        # the remaining edges form a spanning tree of the dual, rooted at the outer face
        root = outer[c]
        parent_edge = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for dart in faces[f]:
                e = dart[0]
                if e in in_tree:
                    continue
                other = face_of[(e, 1 - dart[1])]
                if other not in parent_edge:
                    parent_edge[other] = e
                    order.append(other)
                    queue.append(other)
        for f in reversed(order[1:]):
            e = parent_edge[f]
            clockwise = 0
            for dart in faces[f]:
                if dart[0] != e and not _along(orientation, dart):
                    clockwise += 1
            dart = next(d for d in faces[f] if d[0] == e)
            along = 1 if dart[1] == 0 else -1
            orientation[e] = -along if clockwise % 2 == 0 else along
    return orientation


def _along(orientation, dart):
    e, d = dart
    return orientation[e] == (1 if d == 0 else -1)


def clockwise_counts(g: PlanarGraph, orientation):
    """Number of clockwise-oriented edges on each bounded face."""
    outer = set(g.outer_faces().values())
    return {f: sum(1 for dart in face if not _along(orientation, dart))
            for f, face in enumerate(g.faces()) if f not in outer}


def skew_matrix(g: PlanarGraph, orientation, vertices=None):
    vertices = list(range(g.n)) if vertices is None else list(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    a = zeros(len(vertices), len(vertices))
    for e, (u, v, w) in enumerate(g.edges):
        if u not in index:
            continue
        if orientation[e] < 0:
            u, v = v, u
        a[index[u], index[v]] += w
        a[index[v], index[u]] -= w
    return a


def _permutation_sign(sequence):
    sequence = list(sequence)
    sign = 1
    seen = [False] * len(sequence)
    position = {v: i for i, v in enumerate(sorted(sequence))}
    perm = [position[v] for v in sequence]
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perfmatch(g: PlanarGraph) -> Scalar:
    """Weighted perfect-matching sum via the Pfaffian of a Kasteleyn-oriented matrix."""
    orientation = kasteleyn_orient(g)
    result = ONE
    for comp in g.components():
        if len(comp) % 2:
            return ZERO
        a = skew_matrix(g, orientation, comp)
        pf = pfaffian(a)
        if not pf:
            return ZERO
        result = result * pf * _matching_sign(g, orientation, comp)
    return result


def _matching_sign(g, orientation, comp):
    """Sign of one perfect matching's term in the Pfaffian expansion."""
    simple = nx.Graph()
    simple.add_nodes_from(comp)
    direction = {}
    members = set(comp)
    for e, (u, v, _) in enumerate(g.edges):
        if u in members:
            simple.add_edge(u, v)
            direction[(u, v)] = orientation[e]
            direction[(v, u)] = -orientation[e]
    matching = nx.max_weight_matching(simple, maxcardinality=True)
    if 2 * len(matching) != len(comp):
        raise AssertionError("nonzero Pfaffian but no perfect matching found")
    sequence, sign = [], 1
    for u, v in sorted(tuple(sorted(pair)) for pair in matching):
        sequence += [u, v]
        sign *= direction[(u, v)]
    return sign * _permutation_sign(sequence)


def perfmatch_bruteforce(g: PlanarGraph, bound: int = DEFAULT_BRUTE_EDGE_BOUND) -> Scalar:
    """Reference matching sum by exhaustive recursion."""
    if len(g.edges) > bound:
        raise BoundExceeded(f"{len(g.edges)} edges exceed the brute-force bound {bound}")
    incident = [[] for _ in range(g.n)]
    for u, v, w in g.edges:
        incident[u].append((v, w))
        incident[v].append((u, w))

    def count(unmatched):
        if not unmatched:
            return ONE
        v = min(unmatched)
        rest = unmatched - {v}
        total = ZERO
        for u, w in incident[v]:
            if u in rest:
                total = total + w * count(rest - {u})
        return total

    return count(frozenset(range(g.n)))


# matchgates ----------------------------------------------------------------

class Matchgate:
    """Planar graph with input and output nodes listed in label order.

    Walking the unbounded face counterclockwise meets inputs 1..|X| and then
    outputs |Y|..1 (cyclically).
    """

    def __init__(self, graph: PlanarGraph, inputs=(), outputs=(), validate=True):
        self.graph = graph
        self.inputs = tuple(int(v) for v in inputs)
        self.outputs = tuple(int(v) for v in outputs)
        if validate:
            self.check_boundary()

    @property
    def externals(self):
        return self.inputs + self.outputs

    @property
    def role(self):
        if self.inputs and self.outputs:
            return "transducer"
        return "recognizer" if self.inputs else "generator"

    def boundary_sequence(self):
        return list(self.inputs) + list(reversed(self.outputs))

    def check_boundary(self):
        """Validate the boundary order and record the outer corner used by each external node."""
        ext = self.externals
        if len(set(ext)) != len(ext):
            raise OrderViolation("inputs and outputs must be distinct vertices")
        for v in ext:
            if not 0 <= v < self.graph.n:
                raise NotExternal(f"external node {v} is not a vertex")
        self.corners = {}
        sequence = self.boundary_sequence()
        if not sequence:
            return
        comp_of = self.graph.component_index()
        comps = [comp_of[v] for v in sequence]
        for c in set(comps):
            starts = sum(1 for i in range(len(comps)) if comps[i] == c and comps[i - 1] != c)
            if starts > 1:
                raise OrderViolation(f"external nodes of component {c} are interleaved with others")
            mine = [v for v in sequence if comp_of[v] == c]
            darts = self.graph.outer_walk_darts(c)
            if not darts:
                self.corners.update({v: None for v in mine})
                continue
            chosen = _cyclic_subsequence(mine, [self.graph.head(d) for d in darts])
            if chosen is None:
                raise OrderViolation(
                    f"nodes {mine} are not met in this order around the unbounded face")
            self.corners.update({v: darts[i] for v, i in zip(mine, chosen)})

    def insertion_index(self, v):
        return self.graph.insertion_index(v, self.corners[v])

    def relabeled(self, inputs, outputs):
        return Matchgate(self.graph, inputs, outputs)

    def __repr__(self):
        return f"Matchgate({self.graph!r}, inputs={list(self.inputs)}, outputs={list(self.outputs)})"


def _cyclic_subsequence(sequence, walk):
    """Walk positions meeting ``sequence`` in cyclic order, or None."""
    if not sequence:
        return []
    if any(v not in walk for v in sequence):
        return None
    size = len(walk)
    doubled = walk + walk
    for start in (i for i, v in enumerate(walk) if v == sequence[0]):
        chosen = [start]
        for v in sequence[1:]:
            nxt = next((j for j in range(chosen[-1] + 1, start + size) if doubled[j] == v), None)
            if nxt is None:
                break
            chosen.append(nxt)
        else:
            return [j % size for j in chosen]
    return None


def standard_signature(m: Matchgate, method: str = "fkt") -> Signature:
    """Entry at pattern chi_Z is PerfMatch(G - Z); output label bits come first for transducers."""
    order = list(m.outputs) + list(m.inputs)
    count = perfmatch if method == "fkt" else perfmatch_bruteforce
    entries = []
    for pattern in product((0, 1), repeat=len(order)):
        removed = [v for v, bit in zip(order, pattern) if bit]
        entries.append(count(m.graph.remove_vertices(removed)))
    arity = len(order)
    role = m.role
    if role == "transducer":
        return Signature(entries, 2, arity, role, len(m.outputs), len(m.inputs))
    return Signature(entries, 2, arity, role)


def attach_pendant(m: Matchgate, v: int) -> Matchgate:
    """Hang a weight-1 edge off external node v; the new leaf replaces v as external."""
    if v not in m.externals:
        raise NotExternal(f"vertex {v} is not an external node")
    g = m.graph
    outer = g.outer_darts()
    at = m.insertion_index(v)
    leaf = g.n
    e = len(g.edges)
    rotation = [list(r) for r in g.rotation]
    rotation[v].insert(at, e)
    rotation.append([e])
    graph = PlanarGraph(g.n + 1, list(g.edges) + [(v, leaf, ONE)], rotation, outer=outer)
    swap = lambda nodes: [leaf if x == v else x for x in nodes]
    return Matchgate(graph, swap(m.inputs), swap(m.outputs))


def project_externals(m: Matchgate, keep) -> Matchgate:
    """Demote every external node outside ``keep`` to an internal node.

    ``keep`` lists the surviving nodes in their new label order (inputs then
    outputs); a set keeps the original relative order.
    """
    if isinstance(keep, (set, frozenset)):
        keep = [v for v in m.externals if v in keep]
    keep = list(keep)
    if not keep:
        raise ValueError("keep at least one external node")
    for v in keep:
        if v not in m.externals:
            raise NotExternal(f"vertex {v} is not an external node")
    inputs = [v for v in keep if v in m.inputs]
    outputs = [v for v in keep if v in m.outputs]
    if keep != inputs + outputs:
        raise OrderViolation("kept inputs must precede kept outputs")
    return Matchgate(m.graph, inputs, outputs)
