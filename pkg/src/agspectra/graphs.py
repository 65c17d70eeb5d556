"""Simple undirected graphs and the named families used by the verification suite.

Vertices are the integers ``0..n-1``.  Graphs are immutable and hashable so
that derived data (degrees, adjacency bitmasks, canonical forms) can be
cached against them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: vertex count plus sorted edge tuple.

    Edges are normalised to ``(i, j)`` with ``i < j`` and sorted, so two
    structurally equal graphs compare and hash equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"graph needs at least one vertex, got n={self.n}")
        seen = set()
        norm = []
        for e in self.edges:
            i, j = int(e[0]), int(e[1])
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if i > j:
                i, j = j, i
            if i < 0 or j >= self.n:
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")
            if (i, j) in seen:
                raise ValueError(f"duplicate edge ({i},{j})")
            seen.add((i, j))
            norm.append((i, j))
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def m(self) -> int:
        """Number of edges."""
        return len(self.edges)


@dataclass(frozen=True)
class NamedGraph:
    """A graph together with its family id and, for the two pruned proof
    trees, the degree vector of the larger host tree they stand in for."""

    id: str
    graph: Graph
    degree_override: tuple[int, ...] | None = None


@lru_cache(maxsize=None)
def degrees(g: Graph) -> tuple[int, ...]:
    """Degree of every vertex, indexed by vertex."""
    d = [0] * g.n
    for i, j in g.edges:
        d[i] += 1
        d[j] += 1
    return tuple(d)


@lru_cache(maxsize=None)
def adjacency_masks(g: Graph) -> tuple[int, ...]:
    """Neighbourhood of every vertex as an integer bitmask."""
    masks = [0] * g.n
    for i, j in g.edges:
        masks[i] |= 1 << j
        masks[j] |= 1 << i
    return tuple(masks)


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single connected component."""
    masks = adjacency_masks(g)
    seen = 1  # vertex 0
    frontier = [0]
    while frontier:
        v = frontier.pop()
        mask = masks[v]
        while mask:
            low = mask & -mask
            mask ^= low
            w = low.bit_length() - 1
            if not seen >> w & 1:
                seen |= 1 << w
                frontier.append(w)
    return seen == (1 << g.n) - 1


def is_tree(g: Graph) -> bool:
    """True iff connected with m = n - 1."""
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    """True iff connected with m = n (exactly one cycle)."""
    return g.m == g.n and is_connected(g)


def max_adjacent_degree_sum(g: Graph) -> int:
    """max over edges uv of d(u) + d(v); needs at least one edge."""
    if g.m == 0:
        raise ValueError("graph has no edges")
    d = degrees(g)
    return max(d[i] + d[j] for i, j in g.edges)


def make_path(n: int) -> Graph:
    """Path on n >= 1 vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def make_star(n: int) -> Graph:
    """Star on n >= 2 vertices, centre 0."""
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return Graph(n, tuple((0, i) for i in range(1, n)))


def make_cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def make_star_plus_edge(n: int) -> Graph:
    """Star on n >= 3 vertices with one extra edge joining two leaves."""
    if n < 3:
        raise ValueError(f"star-plus-edge needs n >= 3, got {n}")
    return Graph(n, tuple((0, i) for i in range(1, n)) + ((1, 2),))


def make_double_star(p: int, q: int) -> Graph:
    """Double star: adjacent centres with p and q pendant leaves (p >= q >= 1).

    Vertex 0 carries p leaves (degree p + 1), vertex 1 carries q leaves
    (degree q + 1); n = p + q + 2.
    """
    if not p >= q >= 1:
        raise ValueError(f"double star needs p >= q >= 1, got p={p}, q={q}")
    n = p + q + 2
    edges = [(0, 1)]
    edges += [(0, k) for k in range(2, 2 + p)]
    edges += [(1, k) for k in range(2 + p, n)]
    return Graph(n, tuple(edges))


# Proof trees quoted with explicit structure.  T4 and T7 are shown pruned:
# the matrix entries use degrees of the host tree, so leaves that continue
# into the host keep degree 2 via degree_override.
_T2_EDGES = ((0, 1), (0, 2), (0, 3), (3, 4))
_T4_EDGES = ((0, 1), (0, 2), (0, 3), (3, 4), (2, 5))
_T7_EDGES = ((0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (2, 6))


def make_named(name: str) -> NamedGraph:
    """Build one of the named graphs: T1, T2, T4, T7, P(n), S(n), C(n),
    S_plus_e(n), DT(p,q), G1(n)."""
    spec = name.strip()
    base, args = spec, ()
    if "(" in spec:
        if not spec.endswith(")"):
            raise ValueError(f"malformed graph name {name!r}")
        base, rest = spec.split("(", 1)
        try:
            args = tuple(int(t) for t in rest[:-1].split(","))
        except ValueError:
            raise ValueError(f"malformed graph name {name!r}") from None
    if base == "T1" and not args:
        return NamedGraph("T1", make_star(5))
    if base == "T2" and not args:
        return NamedGraph("T2", Graph(5, _T2_EDGES))
    if base == "T4" and not args:
        return NamedGraph("T4", Graph(6, _T4_EDGES), (3, 1, 2, 2, 2, 2))
    if base == "T7" and not args:
        return NamedGraph("T7", Graph(7, _T7_EDGES), (3, 1, 2, 2, 2, 2, 2))
    if base == "P" and len(args) == 1:
        return NamedGraph(spec, make_path(args[0]))
    if base == "S" and len(args) == 1:
        return NamedGraph(spec, make_star(args[0]))
    if base == "C" and len(args) == 1:
        return NamedGraph(spec, make_cycle(args[0]))
    if base == "S_plus_e" and len(args) == 1:
        return NamedGraph(spec, make_star_plus_edge(args[0]))
    if base == "G1" and len(args) == 1:
        return NamedGraph(spec, make_star_plus_edge(args[0]))
    if base == "DT" and len(args) == 2:
        return NamedGraph(spec, make_double_star(args[0], args[1]))
    raise ValueError(f"unknown graph name {name!r}")
