"""Finite simplicial graphs with a fixed vertex order, and the structural
predicates the rest of the package is built on.

The listed vertex order is canonical: word normal forms, fiber products and
every deterministic search order downstream derive from it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GraphParseError


class SimplicialGraph:
    """Finite undirected loop-free graph.

    Vertices are short string labels; ``vertices`` fixes the canonical
    total order. Edges are stored as index-sorted pairs.
    """

    __slots__ = ("vertices", "edges", "_index", "_nbrs")

    def __init__(self, vertices, edges=()):
        vertices = tuple(vertices)
        if len(set(vertices)) != len(vertices):
            raise ValueError("duplicate vertex labels")
        if any((not v) or not isinstance(v, str) for v in vertices):
            raise ValueError("vertex labels must be nonempty strings")
        index = {v: i for i, v in enumerate(vertices)}
        norm = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop edge at {u!r}")
            if u not in index or v not in index:
                raise ValueError(f"edge {u!r}-{v!r} mentions an unknown vertex")
            if index[u] > index[v]:
                u, v = v, u
            norm.add((u, v))
        self.vertices = vertices
        self.edges = frozenset(norm)
        self._index = index
        nbrs = {v: set() for v in vertices}
        for u, v in norm:
            nbrs[u].add(v)
            nbrs[v].add(u)
        self._nbrs = {v: frozenset(s) for v, s in nbrs.items()}

    def __contains__(self, v):
        return v in self._index

    def __len__(self):
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"SimplicialGraph({list(self.vertices)!r}, {sorted(self.edges)!r})"

    def index(self, v):
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def adjacent(self, u, v):
        if u not in self._index or v not in self._index:
            raise ValueError(f"unknown vertex in pair ({u!r}, {v!r})")
        return v in self._nbrs[u]

    def neighbors(self, v):
        try:
            return self._nbrs[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def degree(self, v):
        return len(self.neighbors(v))


def make_path(n):
    """Path graph on n vertices x1..xn."""
    if n < 1:
        raise ValueError("a path graph needs at least one vertex")
    vs = [f"x{i}" for i in range(1, n + 1)]
    return SimplicialGraph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def make_cycle(n):
    """Cycle graph on n vertices x1..xn."""
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    vs = [f"x{i}" for i in range(1, n + 1)]
    edges = [(vs[i], vs[(i + 1) % n]) for i in range(n)]
    return SimplicialGraph(vs, edges)


def make_tripod(p, q, r):
    """Tripod: a degree-3 center x with three legs of p, q and r vertices.

    Leg vertices are a1..ap, b1..bq, c1..cr, with a1, b1, c1 adjacent to x.
    """
    if min(p, q, r) < 1:
        raise ValueError("each leg needs at least one vertex")
    vs = ["x"]
    edges = []
    for stem, length in (("a", p), ("b", q), ("c", r)):
        prev = "x"
        for i in range(1, length + 1):
            v = f"{stem}{i}"
            vs.append(v)
            edges.append((prev, v))
            prev = v
    return SimplicialGraph(vs, edges)


def complement(g):
    """Same vertices; edge exactly where g has a non-edge."""
    vs = g.vertices
    edges = [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if not g.adjacent(vs[i], vs[j])
    ]
    return SimplicialGraph(vs, edges)


def link(g, v):
    """Neighbor set of v."""
    return g.neighbors(v)


def induced(g, keep):
    """Induced subgraph on ``keep``, preserving the canonical vertex order."""
    keep = set(keep)
    for v in keep:
        if v not in g:
            raise ValueError(f"unknown vertex {v!r}")
    vs = [v for v in g.vertices if v in keep]
    edges = [(u, v) for u, v in g.edges if u in keep and v in keep]
    return SimplicialGraph(vs, edges)


def remove(g, drop):
    """Induced subgraph on the complement of ``drop``."""
    drop = set(drop)
    for v in drop:
        if v not in g:
            raise ValueError(f"unknown vertex {v!r}")
    return induced(g, [v for v in g.vertices if v not in drop])


def is_independent(g, vs):
    vs = list(vs)
    return not any(
        g.adjacent(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))
    )


def components(g):
    """Connected components as frozensets, ordered by least vertex index."""
    seen = set()
    out = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g):
    return len(g) > 0 and len(components(g)) == 1


def is_tree(g):
    return is_connected(g) and len(g.edges) == len(g) - 1


def find_induced_embeddings(pattern, target, max_results=None):
    """Injective vertex maps pattern -> target preserving adjacency and
    non-adjacency.

    Pattern vertices are processed in descending-degree order (ties by
    canonical order); target candidates are tried in canonical order, so
    the result list is deterministic. ``max_results=None`` means all.
    """
    order = sorted(
        pattern.vertices, key=lambda v: (-pattern.degree(v), pattern.index(v))
    )
    results = []
    assignment = {}
    used = set()

    def extend(k):
        if max_results is not None and len(results) >= max_results:
            return
        if k == len(order):
            results.append(dict(assignment))
            return
        v = order[k]
        for w in target.vertices:
            if w in used:
                continue
            if all(
                pattern.adjacent(u, v) == target.adjacent(wu, w)
                for u, wu in assignment.items()
            ):
                assignment[v] = w
                used.add(w)
                extend(k + 1)
                del assignment[v]
                used.discard(w)

    extend(0)
    return results


def is_isomorphic(g, h):
    """Graph isomorphism by exhaustive search; fine at this package's sizes."""
    if len(g) != len(h) or len(g.edges) != len(h.edges):
        return False
    degs = sorted(g.degree(v) for v in g.vertices)
    if degs != sorted(h.degree(v) for v in h.vertices):
        return False
    return bool(find_induced_embeddings(g, h, max_results=1))


@dataclass(frozen=True)
class HairyDecomposition:
    """A longest induced path (the spine) plus the leaves hanging off its
    interior vertices."""

    spine: tuple
    hairs: dict  # interior spine vertex -> tuple of leaf vertices

    @property
    def m(self):
        return len(self.spine)

    @property
    def hair_counts(self):
        return {v: len(hs) for v, hs in self.hairs.items()}

    @property
    def total_hairs(self):
        return sum(len(hs) for hs in self.hairs.values())


def _farthest(g, start):
    """BFS; farthest vertex from start (ties by canonical order) and parents."""
    dist = {start: 0}
    parent = {start: None}
    frontier = [start]
    while frontier:
        nxt = []
        for v in frontier:
            for u in sorted(g.neighbors(v), key=g.index):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    nxt.append(u)
        frontier = nxt
    far = max(dist, key=lambda v: (dist[v], -g.index(v)))
    return far, parent


def _diameter_path(g):
    """A longest path of a tree via double BFS; in a tree it is induced."""
    first = g.vertices[0]
    a, _ = _farthest(g, first)
    b, parent = _farthest(g, a)
    path = [b]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    if g.index(path[0]) > g.index(path[-1]):
        path.reverse()
    return path


def is_hairy_path(t):
    """Decompose a tree as spine-plus-hairs, or return None.

    Succeeds exactly when the tree has no induced tripod with all three
    legs of length two: every vertex off a longest path must then be a
    leaf hanging from an interior spine vertex.
    """
    if not is_tree(t):
        raise ValueError("input graph is not a tree")
    spine = _diameter_path(t)
    on_spine = set(spine)
    interior = set(spine[1:-1])
    hairs = {v: [] for v in spine}
    for v in t.vertices:
        if v in on_spine:
            continue
        if t.degree(v) != 1:
            return None
        attach = next(iter(t.neighbors(v)))
        if attach not in interior:
            return None
        hairs[attach].append(v)
    return HairyDecomposition(
        spine=tuple(spine),
        hairs={v: tuple(hs) for v, hs in hairs.items() if hs},
    )


#: Roles of the 7-tuple certificate, in emission order.
OBSTRUCTION_ROLES = ("x", "p", "q", "r", "a", "b", "c")


def find_tripod_obstruction(g):
    """Search for seven distinct vertices x,p,q,r,a,b,c with {x,p,q,r}
    independent, a adjacent to exactly x,p among them, b to exactly x,q,
    c to exactly x,r. Adjacency among a,b,c is unconstrained.

    Returns the role map of the first tuple in canonical scan order, or
    None. A graph admitting such a tuple embeds into no path graph's
    extension graph.
    """
    vs = g.vertices
    adj = g.adjacent
    for x in vs:
        nx = sorted(g.neighbors(x), key=g.index)
        for a in nx:
            for p in sorted(g.neighbors(a), key=g.index):
                if p == x or adj(p, x):
                    continue
                for b in nx:
                    if b == a or adj(b, p):
                        continue
                    for q in sorted(g.neighbors(b), key=g.index):
                        if q in (x, p, a) or adj(q, x) or adj(q, p) or adj(q, a):
                            continue
                        for c in nx:
                            if c in (a, b) or adj(c, p) or adj(c, q):
                                continue
                            for r in sorted(g.neighbors(c), key=g.index):
                                if r in (x, p, q, a, b):
                                    continue
                                if adj(r, x) or adj(r, p) or adj(r, q):
                                    continue
                                if adj(r, a) or adj(r, b):
                                    continue
                                return {
                                    "x": x, "p": p, "q": q, "r": r,
                                    "a": a, "b": b, "c": c,
                                }
    return None


def all_trees(n):
    """All trees on n vertices, one per isomorphism class, labeled v1..vn.

    Grown by leaf attachment with canonical-code deduplication.
    """
    if n < 1:
        raise ValueError("n must be positive")
    level = [()]  # edge tuples over integer vertices 0..k-1
    for k in range(2, n + 1):
        seen = {}
        for edges in level:
            for attach in range(k - 1):
                cand = edges + ((attach, k - 1),)
                code = _tree_code(k, cand)
                if code not in seen:
                    seen[code] = cand
        level = [seen[c] for c in sorted(seen)]
    out = []
    for edges in level:
        labels = [f"v{i + 1}" for i in range(n)]
        out.append(
            SimplicialGraph(labels, [(labels[a], labels[b]) for a, b in edges])
        )
    return out


def _tree_code(k, edges):
    """Canonical string of a free tree on vertices 0..k-1 (AHU at the center)."""
    nbrs = {i: set() for i in range(k)}
    for a, b in edges:
        nbrs[a].add(b)
        nbrs[b].add(a)
    alive = set(range(k))
    deg = {i: len(nbrs[i]) for i in range(k)}
    layer = [i for i in alive if deg[i] <= 1]
    while len(alive) > 2:
        nxt = []
        for leaf in layer:
            alive.discard(leaf)
            for m in nbrs[leaf]:
                if m in alive:
                    deg[m] -= 1
                    if deg[m] == 1:
                        nxt.append(m)
        layer = nxt

    def enc(v, parent):
        return "(" + "".join(sorted(enc(c, v) for c in nbrs[v] if c != parent)) + ")"

    return min(enc(c, None) for c in alive)


# ---------------------------------------------------------------------------
# Text and JSON formats


def format_graph(g):
    lines = ["vertices: " + " ".join(g.vertices)]
    for u, v in sorted(g.edges, key=lambda e: (g.index(e[0]), g.index(e[1]))):
        lines.append(f"edge: {u} {v}")
    return "\n".join(lines) + "\n"


def graph_to_json(g):
    return {
        "vertices": list(g.vertices),
        "edges": [
            [u, v]
            for u, v in sorted(g.edges, key=lambda e: (g.index(e[0]), g.index(e[1])))
        ],
    }


def parse_graph(text, name="<graph>"):
    """Parse either the line-oriented text format or the JSON form."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphParseError(f"{name}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
        if not isinstance(data, dict) or "vertices" not in data:
            raise GraphParseError(f"{name}: JSON graph needs a 'vertices' array")
        try:
            return SimplicialGraph(data["vertices"], data.get("edges", []))
        except (ValueError, TypeError) as exc:
            raise GraphParseError(f"{name}: {exc}") from None

    vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("vertices:"):
            if vertices is not None:
                raise GraphParseError(f"{name}:{lineno}: repeated 'vertices:' line")
            vertices = line[len("vertices:"):].split()
        elif line.startswith("edge:"):
            parts = line[len("edge:"):].split()
            if len(parts) != 2:
                raise GraphParseError(
                    f"{name}:{lineno}: an edge line needs exactly two labels"
                )
            edges.append(tuple(parts))
        else:
            raise GraphParseError(f"{name}:{lineno}: unrecognized line {line!r}")
    if vertices is None:
        raise GraphParseError(f"{name}: missing 'vertices:' line")
    try:
        return SimplicialGraph(vertices, edges)
    except ValueError as exc:
        raise GraphParseError(f"{name}: {exc}") from None


def load_graph(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read(), name=str(path))
