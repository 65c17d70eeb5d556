"""Executable verification of the extremal bounds, closed forms, certificates,
polynomial identities, and reference tables for AG spectra of trees and
unicyclic graphs.

Checks that a claim *should* satisfy by theorem are recorded in reports
(``bounds_ok`` / ``failures``) so callers can surface counterexamples;
internal soundness violations (a certificate contradicting the directly
computed radius) raise :class:`VerificationError` because they indicate a
bug in this library rather than in the claims.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .enumeration import canonical_graph, enumerate_trees, enumerate_unicyclic
from .graphio import Report, write_graph6
from .graphs import (
    Graph,
    degrees,
    make_cycle,
    make_named,
    make_path,
    make_star,
    make_star_plus_edge,
    max_adjacent_degree_sum,
)
from .matrices import WeightScheme, build_weighted
from .spectra import char_poly, largest_root, spectral_radius

WORKERS_ENV = "AGSPECTRA_WORKERS"

# Reference radius tables for unicyclic graphs of order 4..7, kept as printed
# strings: the decimal count of each entry sets its matching tolerance.
TABLE_RADII: dict[int, tuple[str, ...]] = {
    4: ("2", "2.2536"),
    5: ("2", "2.2066", "2.2543", "2.4149", "2.6035"),
    6: (
        "2", "2.1785", "2.2096", "2.2632", "2.3439", "2.3452", "2.3551",
        "2.4095", "2.5275", "2.5295", "2.5695", "2.6879", "3.0113",
    ),
    7: (
        "2", "2.1602", "2.1827", "2.2188", "2.2661", "2.2942", "2.3041",
        "2.3094", "2.316", "2.3413", "2.3428", "2.3528", "2.4044", "2.4135",
        "2.4473", "2.4732", "2.4908", "2.499", "2.5202", "2.5376", "2.5727",
        "2.5962", "2.5992", "2.6023", "2.6209", "2.6564", "2.6795", "2.75",
        "2.8717", "2.9314", "2.9516", "3.0453", "3.4526",
    ),
}

# Quoted radii for the fully specified proof trees, at 4 printed decimals.
PROOF_DEVICE_RADII: dict[str, str] = {
    "T2": "2.0253",
    "T4": "2.0226",
    "T7": "2.0523",
}

# Quoted values whose graphs are only shown in unavailable figures; matched
# by search, never asserted.
UNVERIFIABLE_CLAIMS: tuple[dict, ...] = (
    {"id": "T3", "kind": "adjacency-radius", "value": "2", "orders": (6, 7, 8)},
    {"id": "T5", "kind": "adjacency-radius", "value": "2", "orders": (6, 7, 8)},
    {"id": "T6", "kind": "adjacency-radius", "value": "2.0285", "orders": (6, 7, 8)},
    {"id": "T8", "kind": "ag-radius-with-override", "value": "2.0457", "orders": (6, 7)},
)


class VerificationError(Exception):
    """An internal consistency check failed (library bug, not a claim failure)."""


def printed_tolerance(printed: str) -> float:
    """Half a unit in the last printed decimal place."""
    d = len(printed.split(".")[1]) if "." in printed else 0
    return 0.5 * 10.0 ** (-d)


def ag_matrix(g: Graph, override: tuple[int, ...] | None = None) -> np.ndarray:
    return build_weighted(g, WeightScheme.AG, override)


def ag_radius(g: Graph, tol: float = 1e-10) -> float:
    return spectral_radius(ag_matrix(g), tol=tol).radius


def _radius_job(args) -> float:
    g, scheme_value = args
    return spectral_radius(build_weighted(g, WeightScheme(scheme_value))).radius


def family_radii(graphs, scheme: WeightScheme = WeightScheme.AG) -> list[float]:
    """Spectral radius per graph, in input order; honours AGSPECTRA_WORKERS."""
    workers = int(os.environ.get(WORKERS_ENV, "1"))
    jobs = [(g, scheme.value) for g in graphs]
    if workers > 1 and len(jobs) >= 4 * workers:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_radius_job, jobs, chunksize=8))
    return [_radius_job(j) for j in jobs]


# ---------------------------------------------------------------------------
# proof polynomials, as printed


def t1(rho, n: int):
    """Cubic factor of the AG characteristic polynomial of the star plus edge."""
    one = rho**0  # keeps Fraction/array inputs exact/vectorised
    return (
        rho**3
        - rho**2
        - (n**3 - 2 * n**2 + 2 * n + 1) * rho / (4 * (n - 1))
        + (n - 3) * n**2 * one / (4 * (n - 1))
    )


def g1(rho, n: int):
    """Full AG characteristic polynomial of the star plus edge: rho^(n-4) (rho+1) t1."""
    return rho ** (n - 4) * (rho + 1) * t1(rho, n)


def g2(rho, n: int):
    one = rho**0
    return (
        rho ** (n - 4)
        / (4 * (n - 2))
        * (
            4 * (n - 2) * rho**4
            - (6 * n**3 - 31 * n**2 + 115 * n - 136) * rho**2 / 6
            - (5 * n**2 + 5 * n) * rho / 6
            + 2 * n**2 * one / 3
            + 19 * (n - 4) * (n - 1) ** 2 * one / 8
        )
    )


def g3(rho, n: int):
    one = rho**0
    return (
        rho ** (n - 6)
        / (8 * (n - 2))
        * (
            8 * (n - 2) * rho**6
            - (2 * n**3 - 11 * n**2 + 39 * n - 44) * rho**4
            - 2 * n**2 * rho**3
            + (13 * n**2 / 4 + 9 * (n - 2) + 17 * (n - 5) * (n - 1) ** 2 / 4) * rho**2
            + 9 * n**2 * rho / 4
            - 9 * (n - 5) * (n - 1) ** 2 * one / 4
        )
    )


def g4(rho, n: int):
    one = rho**0
    return (
        rho ** (n - 4)
        / (8 * (n - 2))
        * (
            8 * (n - 2) * rho**4
            - (2 * n**3 - 10 * n**2 + 34 * n - 40) * rho**2
            + 4 * (n - 4) * (n - 1) ** 2 * one
        )
    )


def path_det(rho, n: int):
    """det(rho I - AG(P_n)) by the tridiagonal three-term recurrence.

    The two end edges of the path carry squared weight 9/8 (degrees 1 and 2),
    interior edges weight 1; for n = 2 the single edge joins two leaves and
    has weight 1.  Exact for Fraction input, vectorised for arrays.
    """
    if n < 1:
        raise ValueError(f"path order must be >= 1, got {n}")
    one = rho**0
    if n == 1:
        return rho
    d_prev, d_cur = one, rho
    for k in range(2, n + 1):
        w2 = 9 * one / 8 if (n >= 3 and (k - 1 == 1 or k - 1 == n - 1)) else one
        d_prev, d_cur = d_cur, rho * d_cur - w2 * d_prev
    return d_cur


def path_g(rho, n: int):
    """The auxiliary form 2^(n-3) sqrt(rho^2-4) det(rho I - AG(P_n)), rho > 2."""
    s = np.sqrt(rho * rho - 4.0)
    return (
        (rho / 2) ** 2 * ((rho + s) ** (n - 1) - (rho - s) ** (n - 1))
        - 9 * rho / 8 * ((rho + s) ** (n - 2) - (rho - s) ** (n - 2))
        + (9 / 8) ** 2 * ((rho + s) ** (n - 3) - (rho - s) ** (n - 3))
    )


# ---------------------------------------------------------------------------
# reports


@dataclass
class ExtremalReport:
    family: str
    order: int
    values: list[float]  # ascending
    min_value: float
    max_value: float
    min_graphs: list[str]  # canonical graph6 of graphs within margin of the min
    max_graphs: list[str]
    min_unique: bool
    max_unique: bool
    bounds_ok: bool
    failures: list[str] = field(default_factory=list)

    def payload(self) -> dict:
        return {
            "family": self.family,
            "order": self.order,
            "count": len(self.values),
            "values": list(self.values),
            "min_value": self.min_value,
            "max_value": self.max_value,
            "min_graphs": list(self.min_graphs),
            "max_graphs": list(self.max_graphs),
            "min_unique": self.min_unique,
            "max_unique": self.max_unique,
            "bounds_ok": self.bounds_ok,
            "failures": list(self.failures),
        }


@dataclass
class CertificateReport:
    graph6: str
    k: float
    x: list[float]
    slacks: list[float]
    certified: bool
    radius: float | None = None
    consistent: bool | None = None

    def payload(self) -> dict:
        return {
            "graph6": self.graph6,
            "k": self.k,
            "x": list(self.x),
            "slacks": list(self.slacks),
            "min_slack": min(self.slacks),
            "certified": self.certified,
            "radius": self.radius,
            "consistent": self.consistent,
        }


def _extremal_report(
    family: str, n: int, graphs, values: list[float], margin: float
) -> ExtremalReport:
    order = sorted(zip(values, (write_graph6(g) for g in graphs)))
    vals = [v for v, _ in order]
    vmin, vmax = vals[0], vals[-1]
    min_graphs = [g6 for v, g6 in order if v <= vmin + margin]
    max_graphs = [g6 for v, g6 in order if v >= vmax - margin]
    return ExtremalReport(
        family=family,
        order=n,
        values=vals,
        min_value=vmin,
        max_value=vmax,
        min_graphs=min_graphs,
        max_graphs=max_graphs,
        min_unique=len(min_graphs) == 1,
        max_unique=len(max_graphs) == 1,
        bounds_ok=True,
    )


def verify_tree_extremes(n: int, tol: float = 1e-9, margin: float = 1e-6) -> ExtremalReport:
    """Tree extremes: minimum at the path, maximum at the star with value n/2,
    and the strict path bounds 2cos(pi/(n+1)) < AG radius < 2."""
    if not 2 <= n <= 10:
        raise ValueError(f"verify_tree_extremes supports 2 <= n <= 10, got {n}")
    trees = enumerate_trees(n)
    values = family_radii(trees)
    rep = _extremal_report("tree", n, trees, values, margin)
    path6 = write_graph6(canonical_graph(make_path(n)))
    star6 = write_graph6(canonical_graph(make_star(n)))
    if rep.min_graphs != [path6]:
        rep.failures.append(f"minimum not attained uniquely by the path: {rep.min_graphs}")
    if rep.max_graphs != [star6]:
        rep.failures.append(f"maximum not attained uniquely by the star: {rep.max_graphs}")
    if abs(rep.max_value - n / 2) > tol:
        rep.failures.append(f"star value {rep.max_value!r} != n/2 = {n / 2}")
    lo = 2.0 * math.cos(math.pi / (n + 1))
    vpath = rep.min_value
    # strict-at-tolerance: at n = 2 the AG and adjacency matrices of the path
    # coincide and the lower bound is attained exactly
    if not vpath > lo - tol:
        rep.failures.append(f"path radius {vpath} below 2cos(pi/(n+1)) = {lo}")
    if not vpath < 2.0 - tol:
        rep.failures.append(f"path radius {vpath} not strictly below 2")
    rep.bounds_ok = not rep.failures
    return rep


def verify_unicyclic_extremes(n: int, tol: float = 1e-9, margin: float = 1e-6) -> ExtremalReport:
    """Unicyclic extremes: minimum at the cycle at exactly 2, maximum at the
    star plus edge; for n >= 7 the maximum stays below n/2."""
    if not 3 <= n <= 9:
        raise ValueError(f"verify_unicyclic_extremes supports 3 <= n <= 9, got {n}")
    graphs = enumerate_unicyclic(n)
    values = family_radii(graphs)
    rep = _extremal_report("unicyclic", n, graphs, values, margin)
    cycle6 = write_graph6(canonical_graph(make_cycle(n)))
    plus6 = write_graph6(canonical_graph(make_star_plus_edge(n)))
    if rep.min_graphs != [cycle6]:
        rep.failures.append(f"minimum not attained uniquely by the cycle: {rep.min_graphs}")
    if abs(rep.min_value - 2.0) > 1e-10:
        rep.failures.append(f"cycle value {rep.min_value!r} != 2")
    if rep.max_graphs != [plus6]:
        rep.failures.append(
            f"maximum not attained uniquely by the star plus edge: {rep.max_graphs}"
        )
    if n >= 7 and not rep.max_value < n / 2 - tol:
        rep.failures.append(f"max value {rep.max_value} not strictly below n/2 = {n / 2}")
    rep.bounds_ok = not rep.failures
    return rep


def reproduce_table(n: int, fmt: str = "json") -> Report:
    """Match computed unicyclic AG radii against the printed reference table,
    entry by entry at each entry's printed precision."""
    if n not in TABLE_RADII:
        raise ValueError(f"reference tables cover n = 4..7, got {n}")
    printed = TABLE_RADII[n]
    graphs = enumerate_unicyclic(n)
    computed = sorted(family_radii(graphs))
    rows = []
    all_matched = len(printed) == len(computed)
    max_delta = 0.0
    for i, p in enumerate(printed):
        tol = printed_tolerance(p)
        target = float(p)
        if i < len(computed):
            got = computed[i]
            delta = abs(got - target)
            matched = delta <= tol
        else:
            got, delta, matched = None, None, False
        if delta is not None:
            max_delta = max(max_delta, delta)
        all_matched = all_matched and matched
        rows.append(
            {
                "printed": p,
                "tolerance": tol,
                "computed": got,
                "delta": delta,
                "matched": matched,
            }
        )
    return Report(
        kind="table-check",
        payload={
            "order": n,
            "printed_count": len(printed),
            "computed_count": len(computed),
            "rows": rows,
            "max_delta": max_delta,
            "all_matched": all_matched,
        },
        fmt=fmt,
    )


def radius_table(n_lo: int, n_hi: int, fmt: str = "json") -> Report:
    """Computed AG radii of all unicyclic graphs per order, sorted ascending."""
    if not 4 <= n_lo <= n_hi <= 9:
        raise ValueError(f"radius tables cover 4 <= n_lo <= n_hi <= 9, got {n_lo}..{n_hi}")
    rows = []
    for n in range(n_lo, n_hi + 1):
        graphs = enumerate_unicyclic(n)
        values = family_radii(graphs)
        ids = {}
        for idx, g in enumerate(graphs):
            d = degrees(g)
            if all(x == 2 for x in d):
                ids[g] = f"cycle:{n}"
            elif max(d) == n - 1:
                ids[g] = f"starplus:{n}"
            else:
                ids[g] = f"u{n}.{idx}"
        for v, g in sorted(zip(values, graphs), key=lambda t: (t[0], write_graph6(t[1]))):
            rows.append({"n": n, "id": ids[g], "graph6": write_graph6(g), "radius": v})
    return Report(kind="radius-table", payload={"rows": rows}, fmt=fmt)


def lemma27_bound(g: Graph, tol: float = 1e-9) -> tuple[float, bool]:
    """Edge-count bound on the AG radius; returns (bound, tight)."""
    n, m = g.n, g.m
    if n < 2:
        raise ValueError("bound needs n >= 2")
    if any(d == 0 for d in degrees(g)):
        raise ValueError("bound needs minimum degree >= 1")
    root = math.sqrt(n - 1)
    bound = 0.5 * (root + 1.0 / root) * math.sqrt(2 * m - n + 1)
    rho = ag_radius(g)
    if rho > bound + tol:
        raise VerificationError(f"radius {rho} exceeds bound {bound} on {write_graph6(g)}")
    return bound, abs(rho - bound) <= tol


def case1_value(dp: int, dq: int) -> float:
    """sqrt((dp+dq-1+sqrt((dp+dq-1)^2-4(dp-1)(dq-1)))/2), the double-star
    radius expressed in the centre degrees dp = p+1, dq = q+1."""
    if not dp >= dq >= 3:
        raise ValueError(f"need dp >= dq >= 3, got dp={dp}, dq={dq}")
    s = dp + dq - 1
    return math.sqrt((s + math.sqrt(s * s - 4.0 * (dp - 1) * (dq - 1))) / 2.0)


def case1_inequality(dp: int, dq: int) -> bool:
    """True iff the double-star radius in centre degrees is at least 2."""
    return case1_value(dp, dq) >= 2.0 - 1e-12


def verify_g_positive(n_max: int = 50, tol: float = 1e-9, fmt: str = "json") -> Report:
    """Positivity of the path determinant forms on rho in (2, 6], the exact
    rational identity at rho = 2, and the resulting strict path bounds."""
    if not 3 <= n_max <= 60:
        raise ValueError(f"verify_g_positive supports 3 <= n_max <= 60, got {n_max}")
    rhos = np.array([k / 100.0 for k in range(201, 601)])
    failures: list[str] = []
    min_g = math.inf
    min_f = math.inf
    for n in range(3, n_max + 1):
        gv = path_g(rhos, n)
        fv = path_det(rhos, n)
        min_g = min(min_g, float(gv.min()))
        min_f = min(min_f, float(fv.min()))
        if not (gv > 0.0).all():
            k = int(np.argmin(gv))
            failures.append(f"g(rho,n) <= 0 at rho={rhos[k]}, n={n}")
        if not (fv > 0.0).all():
            k = int(np.argmin(fv))
            failures.append(f"f(rho,n) <= 0 at rho={rhos[k]}, n={n}")
    identity_exact = all(
        path_det(Fraction(2), n) == Fraction(49 * n + 77, 64) for n in range(3, n_max + 1)
    )
    if not identity_exact:
        failures.append("f(2,n) != (49n+77)/64 for some n")
    path_bounds_ok = True
    for n in range(2, min(n_max, 50) + 1):
        rho = ag_radius(make_path(n))
        lo = 2.0 * math.cos(math.pi / (n + 1))
        if not (rho > lo - tol and rho < 2.0 - tol):
            path_bounds_ok = False
            failures.append(f"path bounds fail at n={n}: rho={rho}, lo={lo}")
    return Report(
        kind="g-positivity",
        payload={
            "n_max": n_max,
            "grid": {"lo": 2.01, "hi": 6.0, "step": 0.01},
            "min_g": min_g,
            "min_f": min_f,
            "identity_exact": identity_exact,
            "path_bounds_ok": path_bounds_ok,
            "failures": failures,
            "all_ok": not failures,
        },
        fmt=fmt,
    )


@dataclass
class T1Bracket:
    order: int
    root: float
    lo_ok: bool
    hi_ok: bool
    radius: float
    matches_radius: bool


def t1_root_bracket(n: int) -> T1Bracket:
    """Largest root of t1 against the star-plus-edge radius, plus the exact
    rational sign checks at (n-1)/2 and n/2 (valid brackets for n >= 7)."""
    if n < 4:
        raise ValueError(f"t1_root_bracket needs n >= 4, got {n}")
    lo_val = t1(Fraction(n - 1, 2), n)
    hi_val = t1(Fraction(n, 2), n)
    lo_ok = lo_val == Fraction(-(n**3) + 2 * n**2 - 9 * n + 4, 8 * (n - 1)) and lo_val < 0
    hi_ok = hi_val == Fraction(n**3 - 6 * n**2 - n, 8 * (n - 1)) and hi_val > 0
    if n >= 7:
        root = largest_root(lambda r: t1(r, n), (n - 1) / 2.0, n / 2.0, tol=1e-12)
    else:
        root = largest_root(lambda r: t1(r, n), 1.0, float(n), tol=1e-12)
    radius = ag_radius(make_star_plus_edge(n))
    return T1Bracket(
        order=n,
        root=root,
        lo_ok=lo_ok,
        hi_ok=hi_ok,
        radius=radius,
        matches_radius=abs(root - radius) <= 1e-8,
    )


def verify_g234_positive(n_lo: int = 8, n_hi: int = 20, fmt: str = "json") -> Report:
    """Positivity of the printed quartic/sextic forms on [(n-1)/2, n] and, for
    n >= 14, the printed sufficient inequalities on the same grid."""
    if not 8 <= n_lo <= n_hi <= 20:
        raise ValueError(
            f"verify_g234_positive supports 8 <= n_lo <= n_hi <= 20, got {n_lo}..{n_hi}"
        )
    rows = []
    failures: list[str] = []
    for n in range(n_lo, n_hi + 1):
        rhos = np.array([k / 100.0 for k in range(50 * (n - 1), 100 * n + 1)])
        mins = {
            "g2": float(g2(rhos, n).min()),
            "g3": float(g3(rhos, n).min()),
            "g4": float(g4(rhos, n).min()),
        }
        positive = all(v > 0.0 for v in mins.values())
        if not positive:
            failures.append(f"non-positive sample at n={n}: {mins}")
        sufficient = None
        if n >= 14:
            r = rhos
            i1 = ((4 * n - 9) * r**4 > (6 * n**3 - 31 * n**2 + 115 * n - 136) * r**2 / 6) & (
                r**4 > (5 * n**2 + 5 * n) * r / 6
            )
            i2 = (
                ((8 * n - 18) * r**6 > (2 * n**3 - 11 * n**2 + 39 * n - 44) * r**4)
                & (9 * (n - 2) * r**2 + 9 * n**2 * r / 4 > 9 * (n - 5) * (n - 1) ** 2 / 4)
                & (r**6 > n**2 * r**3)
            )
            i3 = 8 * (n - 2) * r**4 > (2 * n**3 - 10 * n**2 + 34 * n - 40) * r**2
            sufficient = bool(i1.all() and i2.all() and i3.all())
            if not sufficient:
                failures.append(f"sufficient inequalities fail at n={n}")
        rows.append(
            {
                "n": n,
                "min_g2": mins["g2"],
                "min_g3": mins["g3"],
                "min_g4": mins["g4"],
                "positive": positive,
                "sufficient_ok": sufficient,
            }
        )
    return Report(
        kind="g234-positivity",
        payload={"rows": rows, "failures": failures, "all_ok": not failures},
        fmt=fmt,
    )


def perron_certificate(g: Graph, k: float) -> CertificateReport:
    """Certificate that the AG radius is at most k, using the test vector
    x_i = sqrt(d_i).

    slack_i = k sqrt(d_i) - sum over neighbours j of (d_i + d_j)/(2 sqrt(d_i)),
    evaluated with the integer numerator 2 k d_i - sum (d_i + d_j) so that the
    all-integer cases come out exact.  Certification requires every slack
    >= -1e-12; a certificate is cross-checked against the computed radius.
    """
    if k <= 0:
        raise ValueError("k must be positive")
    d = degrees(g)
    if any(x == 0 for x in d):
        raise ValueError("certificate needs minimum degree >= 1")
    nbr_degree_sums = [0] * g.n
    for i, j in g.edges:
        nbr_degree_sums[i] += d[i] + d[j]
        nbr_degree_sums[j] += d[i] + d[j]
    slacks = [
        (2.0 * k * d[i] - nbr_degree_sums[i]) / (2.0 * math.sqrt(d[i])) for i in range(g.n)
    ]
    certified = min(slacks) >= -1e-12
    rep = CertificateReport(
        graph6=write_graph6(g),
        k=float(k),
        x=[math.sqrt(x) for x in d],
        slacks=slacks,
        certified=certified,
    )
    if certified:
        rep.radius = ag_radius(g)
        rep.consistent = rep.radius <= k + 1e-9
        if not rep.consistent:
            raise VerificationError(
                f"certificate at k={k} contradicts radius {rep.radius} on {rep.graph6}"
            )
    return rep


def verify_theorem4_case_split(n: int, margin: float = 1e-6, fmt: str = "json") -> Report:
    """The unicyclic maximum argument, run exhaustively: graphs whose adjacent
    degree sums stay below n are certified at (n-1)/2; the rest are compared
    with n/2 directly; the global maximiser must be the star plus edge."""
    if not 8 <= n <= 10:
        raise ValueError(f"verify_theorem4_case_split supports 8 <= n <= 10, got {n}")
    k = (n - 1) / 2.0
    graphs = enumerate_unicyclic(n)
    plus6 = write_graph6(canonical_graph(make_star_plus_edge(n)))
    failures: list[str] = []
    part_a = part_b = certified_a = certified_b = 0
    direct: list[tuple[float, str]] = []
    for g in graphs:
        g6 = write_graph6(g)
        if max_adjacent_degree_sum(g) <= n - 1:
            part_a += 1
            rep = perron_certificate(g, k)
            if rep.certified:
                certified_a += 1
            else:
                failures.append(f"part (a) graph not certified: {g6}")
        else:
            part_b += 1
            rep = perron_certificate(g, k)
            if rep.certified:
                certified_b += 1
                continue
            rho = ag_radius(g)
            direct.append((rho, g6))
            if not rho < n / 2:
                failures.append(f"part (b) graph with radius {rho} >= n/2: {g6}")
    direct.sort()
    if not direct or direct[-1][1] != plus6:
        failures.append("maximiser is not the star plus edge")
    else:
        # certified graphs sit at or below k, so the direct maximum is the
        # global one only if it clears k by the same margin
        if direct[-1][0] <= k + margin:
            failures.append(f"direct maximum {direct[-1][0]} does not clear k={k}")
        if len(direct) >= 2 and direct[-1][0] - direct[-2][0] <= margin:
            failures.append(f"maximum not separated: {direct[-2:]}")
    return Report(
        kind="theorem4-case-split",
        payload={
            "order": n,
            "k": k,
            "part_a": part_a,
            "part_a_certified": certified_a,
            "part_b": part_b,
            "part_b_certified": certified_b,
            "part_b_direct": len(direct),
            "max_graph6": direct[-1][1] if direct else None,
            "max_value": direct[-1][0] if direct else None,
            "failures": failures,
            "all_ok": not failures,
        },
        fmt=fmt,
    )


def match_char_poly(n: int, target, tol: float = 1e-6) -> list[Graph]:
    """Unicyclic graphs of order n whose AG characteristic polynomial matches
    ``target`` (a callable of rho) on a fixed 20-point grid, relative to the
    target's scale."""
    if not 8 <= n <= 10:
        raise ValueError(f"match_char_poly supports 8 <= n <= 10, got {n}")
    grid = np.linspace(-(n / 2.0 + 1.0), n / 2.0 + 1.0, 20)
    tv = np.array([float(target(r)) for r in grid])
    scale = max(1.0, float(np.abs(tv).max()))
    out = []
    for g in enumerate_unicyclic(n):
        pv = np.polyval(char_poly(ag_matrix(g)), grid)
        if float(np.abs(pv - tv).max()) <= tol * scale:
            out.append(g)
    return out


def verify_lemma25(n: int, margin: float = 1e-6) -> ExtremalReport:
    """Adjacency-scheme extremes over unicyclic graphs: cycle minimum at 2,
    star-plus-edge maximum."""
    if not 3 <= n <= 9:
        raise ValueError(f"verify_lemma25 supports 3 <= n <= 9, got {n}")
    graphs = enumerate_unicyclic(n)
    values = family_radii(graphs, WeightScheme.ADJACENCY)
    rep = _extremal_report("unicyclic-adjacency", n, graphs, values, margin)
    cycle6 = write_graph6(canonical_graph(make_cycle(n)))
    plus6 = write_graph6(canonical_graph(make_star_plus_edge(n)))
    if rep.min_graphs != [cycle6]:
        rep.failures.append(f"adjacency minimum not uniquely the cycle: {rep.min_graphs}")
    if abs(rep.min_value - 2.0) > 1e-10:
        rep.failures.append(f"cycle adjacency value {rep.min_value!r} != 2")
    if rep.max_graphs != [plus6]:
        rep.failures.append(
            f"adjacency maximum not uniquely the star plus edge: {rep.max_graphs}"
        )
    rep.bounds_ok = not rep.failures
    return rep


def verify_proof_devices(fmt: str = "json") -> Report:
    """The quoted spot values for the fully specified proof trees."""
    rows = []
    ok = True
    t1g = make_named("T1")
    r = spectral_radius(build_weighted(t1g.graph, WeightScheme.ADJACENCY), tol=1e-12)
    matched = abs(r.radius - 2.0) <= 1e-10
    ok = ok and matched
    rows.append({"id": "T1", "printed": "2", "computed": r.radius, "matched": matched})
    for name, printed in PROOF_DEVICE_RADII.items():
        ng = make_named(name)
        rho = spectral_radius(ag_matrix(ng.graph, ng.degree_override)).radius
        matched = abs(rho - float(printed)) <= printed_tolerance(printed)
        ok = ok and matched
        rows.append({"id": name, "printed": printed, "computed": rho, "matched": matched})
    return Report(kind="proof-devices", payload={"rows": rows, "all_ok": ok}, fmt=fmt)


def search_unverifiable_claims(fmt: str = "json") -> Report:
    """Search enumerated trees for structures matching the quoted values whose
    defining figures are unavailable.  Misses are findings, not failures."""
    rows = []
    for claim in UNVERIFIABLE_CLAIMS:
        printed = claim["value"]
        target = float(printed)
        tol = max(printed_tolerance(printed), 1e-9)
        matches = []
        for order in claim["orders"]:
            for t in enumerate_trees(order):
                if claim["kind"] == "adjacency-radius":
                    rho = spectral_radius(build_weighted(t, WeightScheme.ADJACENCY)).radius
                    if abs(rho - target) <= tol:
                        matches.append({"graph6": write_graph6(t), "override": None})
                else:
                    # quoted matrix uses stipulated degrees: try every way of
                    # letting some leaves stand for degree-2 continuations
                    d = degrees(t)
                    leaves = [v for v in range(t.n) if d[v] == 1]
                    for pick in range(1, 1 << len(leaves)):
                        override = list(d)
                        for b, v in enumerate(leaves):
                            if pick >> b & 1:
                                override[v] = 2
                        rho = spectral_radius(ag_matrix(t, tuple(override))).radius
                        if abs(rho - target) <= tol:
                            matches.append(
                                {"graph6": write_graph6(t), "override": override}
                            )
        rows.append(
            {
                "id": claim["id"],
                "kind": claim["kind"],
                "printed": printed,
                "orders": list(claim["orders"]),
                "match_count": len(matches),
                "matches": matches[:8],
                "verified": bool(matches),
            }
        )
    return Report(kind="claims-search", payload={"rows": rows}, fmt=fmt)
