"""Simple undirected graphs and the specific families the limit constructions use.

Vertices are contiguous 0-based integers. Constructors that have a designated
root vertex (pendant path attachments and the like) document or return it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus a set of unordered edges."""

    n_vertices: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n_vertices < 1:
            raise ValueError("graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"edge {e} out of range for {self.n_vertices} vertices")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n_vertices, dtype=int)
        for u, v in self.edges:
            d[u] += 1
            d[v] += 1
        return d

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n_vertices, self.n_vertices))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def neighbors(self, u: int) -> list:
        out = []
        for a, b in self.edges:
            if a == u:
                out.append(b)
            elif b == u:
                out.append(a)
        return sorted(out)

    def adjacency_lists(self) -> list:
        adj = [[] for _ in range(self.n_vertices)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def is_connected(self) -> bool:
        if self.n_vertices == 1:
            return True
        adj = self.adjacency_lists()
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n_vertices


@dataclass(frozen=True)
class InternalPath:
    """Walk v0..vk whose interior has degree 2 and whose ends have degree > 2.

    TypeI closes on itself (v0 = vk, a cycle hanging from one branch vertex);
    TypeII joins two distinct branch vertices.
    """

    vertices: tuple
    kind: str

    def __post_init__(self):
        if self.kind not in ("TypeI", "TypeII"):
            raise ValueError(f"unknown internal path kind {self.kind!r}")

    @property
    def k(self) -> int:
        return len(self.vertices) - 1


# ---------------------------------------------------------------------------
# family constructors
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path P_n on vertices 0..n-1."""
    if n < 1:
        raise ValueError("path order must be at least 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle C_n, n >= 3."""
    if n < 3:
        raise ValueError("cycle order must be at least 3")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def star(k: int) -> Graph:
    """Star K_{1,k} with the center at index 0 and k leaves."""
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Graph(k + 1, frozenset((0, i) for i in range(1, k + 1)))


def wheel5() -> Graph:
    """The 5-vertex wheel: hub 0 joined to a 4-cycle 1-2-3-4-1."""
    edges = {(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)}
    return Graph(5, frozenset(edges))


def lollipop(n: int) -> Graph:
    """Cycle C_{n-1} with one pendant vertex attached; n vertices, n >= 4.

    Cycle vertices are 0..n-2, the pendant n-1 hangs from vertex 0.
    """
    if n < 4:
        raise ValueError("lollipop order must be at least 4")
    g = cycle(n - 1)
    return Graph(n, g.edges | {(0, n - 1)})


def double_snake(n: int) -> Graph:
    """Path v0..v_{n-5} with two pendant vertices at each end; n >= 6.

    Both path ends get degree 3, giving the unique tree with spectral
    radius exactly 2 at alpha = 0 among these orders.
    """
    if n < 6:
        raise ValueError("double snake order must be at least 6")
    m = n - 4  # path vertices 0..n-5
    edges = set((i, i + 1) for i in range(m - 1))
    edges |= {(0, m), (0, m + 1), (m - 1, m + 2), (m - 1, m + 3)}
    return Graph(n, frozenset(edges))


def p2_two_paths(m: int, n: int) -> tuple:
    """An edge u-w with pendant paths of orders m and n hung from u.

    Returns (graph, u). Vertices: u = 0, w = 1, then the m-path, then the
    n-path; m + n + 2 vertices in total. Orders 0 are allowed and drop the
    corresponding path.
    """
    if m < 0 or n < 0:
        raise ValueError("path orders must be non-negative")
    edges = {(0, 1)}
    if m >= 1:
        edges.add((0, 2))
        edges |= {(2 + i, 3 + i) for i in range(m - 1)}
    if n >= 1:
        edges.add((0, 2 + m))
        edges |= {(2 + m + i, 3 + m + i) for i in range(n - 1)}
    return Graph(m + n + 2, frozenset(edges)), 0


def attach_pendant_path(g: Graph, u: int, n: int) -> Graph:
    """Hang a path of n new vertices from vertex u of g; n = 0 returns g."""
    if not (0 <= u < g.n_vertices):
        raise ValueError(f"vertex {u} not in graph")
    if n < 0:
        raise ValueError("pendant path order must be non-negative")
    if n == 0:
        return g
    base = g.n_vertices
    edges = set(g.edges)
    edges.add((u, base))
    edges |= {(base + i, base + i + 1) for i in range(n - 1)}
    return Graph(base + n, frozenset(edges))


def join_by_path(x: Graph, xv: int, y: Graph, yv: int, n: int) -> Graph:
    """Disjoint union of x and y joined by a path with n interior vertices.

    The connecting walk from xv to yv has length n + 1; n = 0 is a direct
    edge. y's vertices are shifted by x.n_vertices, interior vertices come
    last.
    """
    if not (0 <= xv < x.n_vertices):
        raise ValueError(f"vertex {xv} not in first graph")
    if not (0 <= yv < y.n_vertices):
        raise ValueError(f"vertex {yv} not in second graph")
    if n < 0:
        raise ValueError("interior vertex count must be non-negative")
    off = x.n_vertices
    edges = set(x.edges)
    edges |= {(u + off, v + off) for u, v in y.edges}
    if n == 0:
        edges.add((xv, yv + off))
    else:
        base = off + y.n_vertices
        edges.add((xv, base))
        edges |= {(base + i, base + i + 1) for i in range(n - 1)}
        edges.add((base + n - 1, yv + off))
    return Graph(off + y.n_vertices + n, frozenset(edges))


def subdivide_edge(g: Graph, e: tuple) -> Graph:
    """Replace edge e by a length-2 path through one new vertex."""
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise ValueError(f"edge {e} not in graph")
    w = g.n_vertices
    edges = set(g.edges)
    edges.remove((u, v))
    edges |= {(u, w), (w, v)}
    return Graph(g.n_vertices + 1, frozenset(edges))


# ---------------------------------------------------------------------------
# structure classification
# ---------------------------------------------------------------------------


def internal_paths(g: Graph) -> list:
    """All maximal internal paths of g.

    Walks v0..vk with d(v0) > 2, d(vk) > 2 and every interior degree
    exactly 2. Each maximal degree-2 arc between branch vertices is
    reported once; an edge joining two branch vertices is a k = 1 path.
    TypeI paths close a cycle on a single branch vertex.
    """
    deg = g.degrees()
    adj = g.adjacency_lists()
    found = []
    seen_keys = set()
    for v0 in range(g.n_vertices):
        if deg[v0] <= 2:
            continue
        for first in adj[v0]:
            walk = [v0, first]
            prev, cur = v0, first
            while deg[cur] == 2:
                a, b = adj[cur]
                nxt = b if a == prev else a
                walk.append(nxt)
                prev, cur = cur, nxt
            if deg[cur] <= 2:
                continue  # dead-ends at a leaf chain, not internal
            interior = frozenset(walk[1:-1])
            key = (frozenset((walk[0], walk[-1])), interior)
            if key in seen_keys:
                continue
            seen_keys.add(key)
            kind = "TypeI" if walk[0] == walk[-1] else "TypeII"
            found.append(InternalPath(tuple(walk), kind))
    return found


def edge_in_internal_path(g: Graph, e: tuple, paths: list | None = None) -> bool:
    """Whether edge e lies on some internal path of g."""
    if paths is None:
        paths = internal_paths(g)
    u, v = min(e), max(e)
    for p in paths:
        for a, b in zip(p.vertices, p.vertices[1:]):
            if (min(a, b), max(a, b)) == (u, v):
                return True
    return False


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring test."""
    adj = g.adjacency_lists()
    color = [-1] * g.n_vertices
    for s in range(g.n_vertices):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = [s]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_regular(g: Graph) -> bool:
    d = g.degrees()
    return bool(np.all(d == d[0]))


def is_double_snake(g: Graph) -> bool:
    """Structural test: a path with exactly two pendant vertices at each end."""
    n = g.n_vertices
    if n < 6 or g.n_edges != n - 1 or not g.is_connected():
        return False
    deg = g.degrees()
    counts = np.bincount(deg, minlength=4)
    if counts[1] != 4 or counts[3] != 2 or counts[1] + counts[2] + counts[3] != n:
        return False
    branch = [v for v in range(n) if deg[v] == 3]
    for b in branch:
        leaves = [w for w in g.neighbors(b) if deg[w] == 1]
        if len(leaves) != 2:
            return False
    return True


# ---------------------------------------------------------------------------
# one-line edge-list serialization
# ---------------------------------------------------------------------------


def format_graph(g: Graph) -> str:
    """Serialize as `n_vertices; u1-v1,u2-v2,...` with edges sorted."""
    es = ",".join(f"{u}-{v}" for u, v in sorted(g.edges))
    return f"{g.n_vertices}; {es}" if es else f"{g.n_vertices};"


def parse_graph(text: str) -> Graph:
    """Inverse of format_graph. Raises ValueError with a position on bad input."""
    head, sep, tail = text.partition(";")
    if not sep:
        raise ValueError(f"missing ';' in graph literal at position {len(text)}")
    try:
        n = int(head.strip())
    except ValueError:
        raise ValueError(f"bad vertex count {head.strip()!r} at position 0") from None
    edges = set()
    tail = tail.strip()
    if tail:
        pos = len(head) + 1
        for part in tail.split(","):
            piece = part.strip()
            if piece.count("-") != 1:
                raise ValueError(f"bad edge {piece!r} at position {pos}")
            a, b = piece.split("-")
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise ValueError(f"bad edge {piece!r} at position {pos}") from None
            edges.add((u, v))
            pos += len(part) + 1
    return Graph(n, frozenset(edges))
