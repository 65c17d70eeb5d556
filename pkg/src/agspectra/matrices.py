"""Degree-weighted adjacency matrices and the matching edge-sum indices.

Every scheme weights edge uv by a symmetric function h(d_u, d_v) of the two
endpoint degrees; non-edges and the diagonal are zero.  The arithmetic-
geometric weight (d_u + d_v) / (2 sqrt(d_u d_v)) is the main object of
study; it is >= 1 with equality exactly when the degrees agree, so on
regular graphs the AG matrix collapses to the plain adjacency matrix.

The Randic scheme follows the source's printed form 1/(d_u d_v); the square
root form 1/sqrt(d_u d_v) that is common elsewhere is available separately.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .graphs import Graph, degrees


class WeightScheme(Enum):
    ADJACENCY = "adjacency"
    AG = "ag"
    RANDIC_PRINTED = "randic"
    RANDIC_SQRT = "randic-sqrt"
    EXTENDED = "extended"
    ABC = "abc"

    def weight(self, x: float, y: float) -> float:
        """Edge weight h(x, y) for endpoint degrees x and y."""
        return _RULES[self](x, y)

    @property
    def needs_degrees(self) -> bool:
        return self is not WeightScheme.ADJACENCY


_RULES = {
    WeightScheme.ADJACENCY: lambda x, y: 1.0,
    WeightScheme.AG: lambda x, y: (x + y) / (2.0 * math.sqrt(x * y)),
    WeightScheme.RANDIC_PRINTED: lambda x, y: 1.0 / (x * y),
    WeightScheme.RANDIC_SQRT: lambda x, y: 1.0 / math.sqrt(x * y),
    WeightScheme.EXTENDED: lambda x, y: (x / y + y / x) / 2.0,
    WeightScheme.ABC: lambda x, y: math.sqrt((x + y - 2.0) / (x * y)),
}


class IndexKind(Enum):
    AG_INDEX = "ag"
    R_MINUS1 = "r-1"
    SDD = "sdd"
    ABC_INDEX = "abc"
    M1 = "m1"


_INDEX_TERMS = {
    IndexKind.AG_INDEX: lambda x, y: (x + y) / (2.0 * math.sqrt(x * y)),
    IndexKind.R_MINUS1: lambda x, y: 1.0 / (x * y),
    IndexKind.SDD: lambda x, y: x / y + y / x,
    IndexKind.ABC_INDEX: lambda x, y: math.sqrt((x + y - 2.0) / (x * y)),
    IndexKind.M1: lambda x, y: float(x + y),
}


def build_weighted(
    g: Graph, scheme: WeightScheme, override: tuple[int, ...] | None = None
) -> np.ndarray:
    """Dense symmetric weighted adjacency matrix of g under the scheme.

    ``override`` replaces the degree vector used for the weights (the graph
    structure is unchanged); entries must cover every vertex and be >= 1.
    """
    if override is not None:
        if len(override) != g.n:
            raise ValueError(f"override length {len(override)} != n={g.n}")
        if any(d < 1 for d in override):
            raise ValueError("override degrees must be >= 1")
        deg = tuple(override)
    else:
        deg = degrees(g)
    if scheme.needs_degrees and any(d == 0 for d in deg):
        isolated = [v for v, d in enumerate(deg) if d == 0]
        raise ValueError(f"scheme {scheme.value} undefined with isolated vertices {isolated}")
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        w = scheme.weight(deg[i], deg[j])
        a[i, j] = w
        a[j, i] = w
    return a


def topological_index(g: Graph, kind: IndexKind) -> float:
    """Edge sum of the index term over endpoint degrees."""
    if g.m == 0:
        raise ValueError("indices are edge sums; graph has no edges")
    d = degrees(g)
    term = _INDEX_TERMS[kind]
    return math.fsum(term(d[i], d[j]) for i, j in g.edges)


def matrix_dominates(a: np.ndarray, b: np.ndarray) -> bool:
    """True iff a >= b >= 0 entrywise (same shape required)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return bool(np.all(b >= 0.0) and np.all(a >= b))


def matrix_to_csv(m: np.ndarray) -> str:
    """CSV dump with 17 significant digits (lossless for doubles)."""
    m = np.asarray(m, dtype=float)
    return "".join(",".join(f"{v:.17g}" for v in row) + "\n" for row in m)
