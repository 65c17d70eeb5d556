"""Canonical forms and exhaustive enumeration of small trees and unicyclic graphs.

The canonical form of a graph is the lexicographically largest upper-triangle
adjacency bit string over all vertex orderings, serialised as the graph6
encoding of the relabelled graph.  The search places vertices one position at
a time; the bits contributed by position k are exactly the adjacencies to the
k vertices already placed, so orderings can be compared column by column and
pruned as soon as a column falls below the running best.  Two refinements
keep the search small on the tree-like graphs handled here:

* at each position only candidates attaining the maximal next column are
  explored (anything else is already lexicographically beaten), and
* among those, candidates that differ by a swap automorphism (equal
  neighbourhoods off the pair) collapse to one representative.

Families are generated bottom-up: trees of order n by attaching a leaf to
every vertex of every tree of order n - 1, unicyclic graphs by adding one
missing edge to every tree of the same order, deduplicating by canonical
form both times.
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import Graph, adjacency_masks, degrees
from .graphio import write_graph6

CANONICAL_MAX_N = 16
ENUMERATION_MAX_N = 12

TREE_MIN_N = 1
UNICYCLIC_MIN_N = 3


@lru_cache(maxsize=None)
def _canonical(g: Graph) -> tuple[tuple[int, ...], Graph, bytes]:
    """(ordering, relabelled graph, graph6 bytes) for the canonical labelling."""
    n = g.n
    if n > CANONICAL_MAX_N:
        raise ValueError(f"exact canonical form is limited to n <= {CANONICAL_MAX_N}")
    masks = adjacency_masks(g)
    if n == 1:
        order: tuple[int, ...] = (0,)
    else:
        # swap automorphisms: equal neighbourhoods once the pair is masked out
        twin = [
            [
                (masks[u] & ~(1 << u) & ~(1 << v)) == (masks[v] & ~(1 << u) & ~(1 << v))
                for v in range(n)
            ]
            for u in range(n)
        ]
        deg = degrees(g)
        best_cols: list[int] | None = None
        best_order: list[int] | None = None

        def rec(placed: list[int], rem: list[int], cols: list[int], prefix: list[int]) -> None:
            nonlocal best_cols, best_order
            k = len(placed)
            if not rem:
                if best_cols is None or prefix > best_cols:
                    best_cols = list(prefix)
                    best_order = list(placed)
                return
            cmax = max(cols[v] for v in rem)
            prefix.append(cmax)
            if best_cols is None or prefix >= best_cols[: k + 1]:
                reps: list[int] = []
                for v in rem:
                    if cols[v] != cmax:
                        continue
                    if any(twin[v][r] for r in reps):
                        continue
                    reps.append(v)
                for v in reps:
                    mv = masks[v]
                    ncols = [cols[u] << 1 | mv >> u & 1 for u in range(n)]
                    placed.append(v)
                    rec(placed, [u for u in rem if u != v], ncols, prefix)
                    placed.pop()
            prefix.pop()

        # high-degree roots first: finds a strong incumbent early
        roots = sorted(range(n), key=lambda v: (-deg[v], v))
        rec([], roots, [0] * n, [])
        assert best_order is not None
        order = tuple(best_order)
    pos = {v: k for k, v in enumerate(order)}
    edges = tuple(
        (pos[i], pos[j]) if pos[i] < pos[j] else (pos[j], pos[i]) for i, j in g.edges
    )
    canon = Graph(n, edges)
    return order, canon, write_graph6(canon).encode("ascii")


def canonical_form(g: Graph) -> bytes:
    """Order-invariant certificate: equal bytes iff isomorphic graphs."""
    return _canonical(g)[2]


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled representative of g's isomorphism class."""
    return _canonical(g)[1]


@lru_cache(maxsize=None)
def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic trees of order n, sorted by canonical form bytes."""
    if not TREE_MIN_N <= n <= ENUMERATION_MAX_N:
        raise ValueError(f"tree enumeration supports {TREE_MIN_N} <= n <= {ENUMERATION_MAX_N}")
    if n == 1:
        return (Graph(1),)
    out: dict[bytes, Graph] = {}
    for t in enumerate_trees(n - 1):
        for v in range(t.n):
            g = Graph(n, t.edges + ((v, n - 1),))
            f = canonical_form(g)
            if f not in out:
                out[f] = canonical_graph(g)
    return tuple(out[f] for f in sorted(out))


@lru_cache(maxsize=None)
def enumerate_unicyclic(n: int) -> tuple[Graph, ...]:
    """All non-isomorphic connected unicyclic graphs of order n, sorted by
    canonical form bytes."""
    if not UNICYCLIC_MIN_N <= n <= ENUMERATION_MAX_N:
        raise ValueError(
            f"unicyclic enumeration supports {UNICYCLIC_MIN_N} <= n <= {ENUMERATION_MAX_N}"
        )
    out: dict[bytes, Graph] = {}
    for t in enumerate_trees(n):
        present = set(t.edges)
        for j in range(1, n):
            for i in range(j):
                if (i, j) in present:
                    continue
                g = Graph(n, t.edges + ((i, j),))
                f = canonical_form(g)
                if f not in out:
                    out[f] = canonical_graph(g)
    return tuple(out[f] for f in sorted(out))


def family_counts(family: str, n_max: int) -> list[int]:
    """Isomorphism-class counts per order: trees from n=1, unicyclic from n=3."""
    if family == "tree":
        return [len(enumerate_trees(k)) for k in range(TREE_MIN_N, n_max + 1)]
    if family == "unicyclic":
        return [len(enumerate_unicyclic(k)) for k in range(UNICYCLIC_MIN_N, n_max + 1)]
    raise ValueError(f"unknown family {family!r}")
