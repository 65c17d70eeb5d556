"""Reference implementations used to cross-check the package, written
independently of it: a Prufer-sequence decoder and an AHU tree certificate."""

import heapq

from agspectra.graphs import Graph


def prufer_decode(n, seq):
    """The labelled tree of a Prufer sequence (bijective for n >= 3)."""
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, tuple(edges))


def ahu_certificate(g):
    """Rooted-at-centre certificate string; equal iff trees are isomorphic."""
    n = g.n
    if n == 1:
        return "()"
    adj = [set() for _ in range(n)]
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    deg = [len(a) for a in adj]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] <= 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for u in adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    centres = [v for v in range(n) if not removed[v]]

    def encode(v, parent):
        subs = sorted(encode(u, v) for u in adj[v] if u != parent)
        return "(" + "".join(subs) + ")"

    return min(encode(c, None) for c in centres)
