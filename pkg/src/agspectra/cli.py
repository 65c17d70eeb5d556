"""Command-line front end.

Verbs: radius, spectrum, charpoly, index, enumerate, tables, certificate,
verify.  Graphs are given as literals (``path:n``, ``star:n``, ``cycle:n``,
``starplus:n``, ``dstar:p,q``, ``named:ID``), as ``--graph6`` strings, or as
``--edges FILE`` edge lists.  Exit status: 0 on success, 1 on verification
failure, 2 on usage or bad input, 3 on I/O failure.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction

import numpy as np

from . import __version__
from .enumeration import enumerate_trees, enumerate_unicyclic, family_counts
from .graphio import Report, parse_edge_list, parse_graph6, render_report, write_graph6
from .graphs import (
    Graph,
    make_cycle,
    make_double_star,
    make_named,
    make_path,
    make_star,
    make_star_plus_edge,
)
from .matrices import IndexKind, WeightScheme, build_weighted, topological_index
from .spectra import (
    char_poly,
    double_star_radius,
    full_spectrum,
    path_charpoly_closed,
    spectral_radius,
)
from .verify import (
    VerificationError,
    ag_matrix,
    ag_radius,
    case1_inequality,
    case1_value,
    lemma27_bound,
    perron_certificate,
    radius_table,
    reproduce_table,
    search_unverifiable_claims,
    t1_root_bracket,
    verify_g234_positive,
    verify_g_positive,
    verify_lemma25,
    verify_proof_devices,
    verify_theorem4_case_split,
    verify_tree_extremes,
    verify_unicyclic_extremes,
)

TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]
UNICYCLIC_COUNTS = [1, 2, 5, 13, 33, 89, 240, 657]


def parse_graph_literal(text: str) -> tuple[Graph, tuple[int, ...] | None]:
    """Resolve a graph literal to (graph, degree override or None)."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise ValueError(f"bad graph literal {text!r}; expected kind:args")
    try:
        if kind == "path":
            return make_path(int(rest)), None
        if kind == "star":
            return make_star(int(rest)), None
        if kind == "cycle":
            return make_cycle(int(rest)), None
        if kind == "starplus":
            return make_star_plus_edge(int(rest)), None
        if kind == "dstar":
            p, q = (int(t) for t in rest.split(","))
            return make_double_star(p, q), None
        if kind == "named":
            ng = make_named(rest)
            return ng.graph, ng.degree_override
    except ValueError:
        raise
    raise ValueError(f"unknown graph literal kind {kind!r}")


def add_graph_arguments(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--graph",
        metavar="LITERAL",
        help="path:n | star:n | cycle:n | starplus:n | dstar:p,q | named:ID",
    )
    p.add_argument("--graph6", metavar="TEXT", help="graph6 string")
    p.add_argument("--edges", metavar="FILE", help="edge list file ('-' for stdin)")


def resolve_graph(args) -> tuple[Graph, tuple[int, ...] | None]:
    sources = [s for s in (args.graph, args.graph6, args.edges) if s]
    if len(sources) != 1:
        raise ValueError("give exactly one of --graph, --graph6, --edges")
    if args.graph:
        return parse_graph_literal(args.graph)
    if args.graph6:
        return parse_graph6(args.graph6), None
    if args.edges == "-":
        return parse_edge_list(sys.stdin.read()), None
    with open(args.edges, encoding="ascii") as fh:
        return parse_edge_list(fh.read()), None


def emit(args, report: Report, digits: int = 10) -> None:
    report.fmt = args.format
    text = render_report(report, digits)
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def emit_text(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# computation verbs


def cmd_radius(args) -> int:
    g, override = resolve_graph(args)
    scheme = WeightScheme(args.scheme)
    m = build_weighted(g, scheme, override if scheme.needs_degrees else None)
    res = spectral_radius(m, tol=args.tol)
    if args.format == "text":
        emit_text(args, f"{res.radius:.10g}\n")
    else:
        emit(
            args,
            Report(
                kind="radius",
                payload={
                    "graph6": write_graph6(g),
                    "scheme": scheme.value,
                    "radius": res.radius,
                    "residual": res.residual,
                    "iterations": res.iterations,
                },
            ),
        )
    return 0


def cmd_spectrum(args) -> int:
    g, override = resolve_graph(args)
    scheme = WeightScheme(args.scheme)
    m = build_weighted(g, scheme, override if scheme.needs_degrees else None)
    values = full_spectrum(m)
    if args.format == "text":
        emit_text(args, "".join(f"{v:.10g}\n" for v in values))
    else:
        emit(
            args,
            Report(
                kind="spectrum",
                payload={"graph6": write_graph6(g), "scheme": scheme.value, "values": values},
            ),
        )
    return 0


def cmd_charpoly(args) -> int:
    g, override = resolve_graph(args)
    scheme = WeightScheme(args.scheme)
    m = build_weighted(g, scheme, override if scheme.needs_degrees else None)
    coeffs = char_poly(m)
    if args.format == "text":
        emit_text(args, "".join(f"{c:.17g}\n" for c in coeffs))
    else:
        emit(
            args,
            Report(
                kind="charpoly",
                payload={"graph6": write_graph6(g), "scheme": scheme.value, "coeffs": coeffs},
            ),
            digits=17,
        )
    return 0


def cmd_index(args) -> int:
    g, _ = resolve_graph(args)
    value = topological_index(g, IndexKind(args.kind))
    if args.format == "text":
        emit_text(args, f"{value:.10g}\n")
    else:
        emit(
            args,
            Report(
                kind="index",
                payload={"graph6": write_graph6(g), "index": args.kind, "value": value},
            ),
        )
    return 0


def cmd_enumerate(args) -> int:
    if args.family == "tree":
        graphs = enumerate_trees(args.n)
    else:
        graphs = enumerate_unicyclic(args.n)
    if args.count:
        emit_text(args, f"{len(graphs)}\n")
    elif args.format == "text":
        emit_text(args, "".join(write_graph6(g) + "\n" for g in graphs))
    else:
        emit(
            args,
            Report(
                kind="enumeration",
                payload={
                    "family": args.family,
                    "order": args.n,
                    "count": len(graphs),
                    "graphs": [write_graph6(g) for g in graphs],
                },
            ),
        )
    return 0


def cmd_tables(args) -> int:
    emit(args, radius_table(args.n_lo, args.n_hi))
    return 0


def cmd_certificate(args) -> int:
    g, _ = resolve_graph(args)
    rep = perron_certificate(g, args.k)
    emit(args, Report(kind="certificate", payload=rep.payload()), digits=17)
    return 0 if rep.certified else 1


# ---------------------------------------------------------------------------
# verification checks


def _check_star_exact() -> tuple[bool, dict]:
    deltas = [abs(ag_radius(make_star(n)) - n / 2.0) for n in range(3, 13)]
    worst = max(deltas)
    return worst <= 1e-9, {"orders": "3..12", "max_delta": worst}


def _check_tables() -> tuple[bool, dict]:
    ok = True
    max_delta = 0.0
    for n in range(4, 8):
        payload = reproduce_table(n).payload
        ok = ok and payload["all_matched"]
        max_delta = max(max_delta, payload["max_delta"])
    return ok, {"orders": "4..7", "max_delta": max_delta}


def _check_tree_extremes() -> tuple[bool, dict]:
    failures: list[str] = []
    for n in range(2, 11):
        rep = verify_tree_extremes(n)
        failures += [f"n={n}: {f}" for f in rep.failures]
    return not failures, {"orders": "2..10", "failures": failures}


def _check_path_bounds() -> tuple[bool, dict]:
    failures: list[str] = []
    for n in range(2, 51):
        rho = ag_radius(make_path(n))
        lo = 2.0 * math.cos(math.pi / (n + 1))
        if not (rho > lo - 1e-9 and rho < 2.0 - 1e-9):
            failures.append(f"n={n}: rho={rho}, lo={lo}")
    return not failures, {"orders": "2..50", "failures": failures}


def _check_unicyclic_extremes() -> tuple[bool, dict]:
    failures: list[str] = []
    for n in range(3, 10):
        rep = verify_unicyclic_extremes(n)
        failures += [f"n={n}: {f}" for f in rep.failures]
    return not failures, {"orders": "3..9", "failures": failures}


def _check_closed_forms() -> tuple[bool, dict]:
    worst_star = 0.0
    for q in range(1, 9):
        for p in range(q, 9):
            got = spectral_radius(
                build_weighted(make_double_star(p, q), WeightScheme.ADJACENCY)
            ).radius
            worst_star = max(worst_star, abs(got - double_star_radius(p, q)))
    worst_path = 0.0
    for n in range(2, 11):
        coeffs = char_poly(build_weighted(make_path(n), WeightScheme.ADJACENCY))
        for lam in (-3.0, -1.0, 0.0, 0.5, 2.0, 2.5, 3.0):
            got = float(np.polyval(coeffs, lam))
            worst_path = max(worst_path, abs(got - path_charpoly_closed(lam, n)))
    ok = worst_star <= 1e-9 and worst_path <= 1e-8
    return ok, {"max_double_star_delta": worst_star, "max_path_delta": worst_path}


def _t1_reference_coeffs(n: int) -> list[float]:
    # rho^(n-4) (rho+1) t1(rho, n), expanded exactly
    cubic = [
        Fraction(1),
        Fraction(-1),
        Fraction(-(n**3 - 2 * n**2 + 2 * n + 1), 4 * (n - 1)),
        Fraction((n - 3) * n**2, 4 * (n - 1)),
    ]
    quartic = [Fraction(0)] * 5
    for i, c in enumerate(cubic):
        quartic[i] += c
        quartic[i + 1] += c
    return [float(c) for c in quartic] + [0.0] * (n - 4)


def _check_charpoly_identities() -> tuple[bool, dict]:
    failures: list[str] = []
    worst = 0.0
    for n in range(4, 13):
        coeffs = char_poly(ag_matrix(make_path(n)))
        delta = abs(float(np.polyval(coeffs, 2.0)) - (49 * n + 77) / 64.0)
        worst = max(worst, delta)
        if delta > 1e-8:
            failures.append(f"path value at 2 off by {delta} at n={n}")
    for n in range(8, 14):
        got = char_poly(ag_matrix(make_star_plus_edge(n)))
        ref = _t1_reference_coeffs(n)
        delta = max(abs(a - b) for a, b in zip(got, ref))
        worst = max(worst, delta)
        if delta > 1e-9:
            failures.append(f"star-plus-edge coefficients off by {delta} at n={n}")
    for n in range(7, 14):
        br = t1_root_bracket(n)
        if not br.matches_radius:
            failures.append(f"t1 root {br.root} != radius {br.radius} at n={n}")
        if n >= 8 and not (br.lo_ok and br.hi_ok):
            failures.append(f"t1 bracket signs fail at n={n}")
        if n == 7 and f"{br.root:.4f}" != "3.4526":
            failures.append(f"t1 root at n=7 prints {br.root:.4f}, not 3.4526")
    return not failures, {"max_delta": worst, "failures": failures}


def _check_proof_devices() -> tuple[bool, dict]:
    payload = verify_proof_devices().payload
    return payload["all_ok"], {"rows": payload["rows"]}


def _check_certificates() -> tuple[bool, dict]:
    failures: list[str] = []
    for n in range(8, 11):
        payload = verify_theorem4_case_split(n).payload
        failures += payload["failures"]
    for n in range(3, 10):
        rep = perron_certificate(make_cycle(n), 2.0)
        if not rep.certified or max(abs(s) for s in rep.slacks) != 0.0:
            failures.append(f"cycle certificate not tight at n={n}")
    return not failures, {"orders": "8..10 and cycles 3..9", "failures": failures}


def _check_dominance() -> tuple[bool, dict]:
    failures: list[str] = []
    pool: list[Graph] = []
    for n in range(2, 9):
        pool += list(enumerate_trees(n))
    for n in range(3, 9):
        pool += list(enumerate_unicyclic(n))
    for g in pool:
        rho_ag = ag_radius(g)
        rho_adj = spectral_radius(build_weighted(g, WeightScheme.ADJACENCY)).radius
        if not rho_ag >= rho_adj - 1e-9:
            failures.append(f"AG radius below adjacency radius on {write_graph6(g)}")
    rng = np.random.default_rng(20250814)
    for _ in range(100):
        g = pool[int(rng.integers(len(pool)))]
        if g.n < 2:
            continue
        size = int(rng.integers(1, g.n))
        keep = np.sort(rng.choice(g.n, size=size, replace=False))
        m = ag_matrix(g)
        sub = m[np.ix_(keep, keep)]
        if not spectral_radius(sub).radius <= spectral_radius(m).radius + 1e-9:
            failures.append(f"submatrix radius exceeds on {write_graph6(g)} keep={keep}")
    return not failures, {"graphs": len(pool), "samples": 100, "failures": failures}


def _check_positivity() -> tuple[bool, dict]:
    a = verify_g_positive(50).payload
    b = verify_g234_positive().payload
    return a["all_ok"] and b["all_ok"], {"failures": a["failures"] + b["failures"]}


def _check_case1() -> tuple[bool, dict]:
    worst = 0.0
    ok = True
    for dq in range(3, 41):
        for dp in range(dq, 41):
            ok = ok and case1_inequality(dp, dq)
            worst = max(
                worst, abs(case1_value(dp, dq) - double_star_radius(dp - 1, dq - 1))
            )
    return ok and worst <= 1e-9, {"degree_range": "3..40", "max_delta": worst}


def _check_counts() -> tuple[bool, dict]:
    trees = family_counts("tree", 10)
    unis = family_counts("unicyclic", 9)
    ok = trees == TREE_COUNTS[:10] and unis == UNICYCLIC_COUNTS[:7]
    return ok, {"trees": trees, "unicyclic": unis}


ALL_CHECKS = (
    ("star-exact", _check_star_exact),
    ("tables", _check_tables),
    ("tree-extremes", _check_tree_extremes),
    ("path-bounds", _check_path_bounds),
    ("unicyclic-extremes", _check_unicyclic_extremes),
    ("closed-forms", _check_closed_forms),
    ("charpoly-identities", _check_charpoly_identities),
    ("proof-devices", _check_proof_devices),
    ("certificates", _check_certificates),
    ("dominance", _check_dominance),
    ("positivity", _check_positivity),
    ("case1", _check_case1),
    ("counts", _check_counts),
)


def _run_all(args) -> int:
    rows = []
    all_ok = True
    t_start = time.perf_counter()
    for name, fn in ALL_CHECKS:
        t0 = time.perf_counter()
        ok, _ = fn()
        rows.append(
            {"check": name, "ok": ok, "seconds": round(time.perf_counter() - t0, 3)}
        )
        all_ok = all_ok and ok
    total = time.perf_counter() - t_start
    emit(
        args,
        Report(
            kind="verify-all",
            payload={
                "rows": rows,
                "all_ok": all_ok,
                "total_seconds": round(total, 3),
                "budget_seconds": args.budget,
                "within_budget": total <= args.budget,
            },
        ),
    )
    return 0 if all_ok else 1


def _need_n(args, lo: int, hi: int) -> int:
    if args.n is None:
        raise ValueError(f"check {args.check!r} needs --n in {lo}..{hi}")
    return args.n


def cmd_verify(args) -> int:
    check = args.check
    if check == "all":
        return _run_all(args)
    if check == "thm3":
        rep = verify_tree_extremes(_need_n(args, 2, 10))
        emit(args, Report(kind="tree-extremes", payload=rep.payload()))
        return 0 if rep.bounds_ok else 1
    if check == "thm4":
        rep = verify_unicyclic_extremes(_need_n(args, 3, 9))
        emit(args, Report(kind="unicyclic-extremes", payload=rep.payload()))
        return 0 if rep.bounds_ok else 1
    if check == "table":
        report = reproduce_table(_need_n(args, 4, 7))
        emit(args, report)
        return 0 if report.payload["all_matched"] else 1
    if check == "lemma25":
        rep = verify_lemma25(_need_n(args, 3, 9))
        emit(args, Report(kind="adjacency-extremes", payload=rep.payload()))
        return 0 if rep.bounds_ok else 1
    if check == "bound":
        g, _ = resolve_graph(args)
        bound, tight = lemma27_bound(g)
        emit(
            args,
            Report(
                kind="radius-bound",
                payload={
                    "graph6": write_graph6(g),
                    "radius": ag_radius(g),
                    "bound": bound,
                    "tight": tight,
                    "ok": True,
                },
            ),
        )
        return 0
    if check == "t1":
        br = t1_root_bracket(_need_n(args, 4, 16))
        ok = br.matches_radius and (br.order < 7 or (br.lo_ok and br.hi_ok))
        emit(
            args,
            Report(
                kind="t1-bracket",
                payload={
                    "order": br.order,
                    "root": br.root,
                    "radius": br.radius,
                    "lo_ok": br.lo_ok,
                    "hi_ok": br.hi_ok,
                    "matches_radius": br.matches_radius,
                    "ok": ok,
                },
            ),
        )
        return 0 if ok else 1
    if check == "case-split":
        report = verify_theorem4_case_split(_need_n(args, 8, 10))
        emit(args, report)
        return 0 if report.payload["all_ok"] else 1
    if check == "gpos":
        report = verify_g_positive(args.n if args.n else 50)
        emit(args, report)
        return 0 if report.payload["all_ok"] else 1
    if check == "g234":
        report = verify_g234_positive()
        emit(args, report)
        return 0 if report.payload["all_ok"] else 1
    if check == "devices":
        report = verify_proof_devices()
        emit(args, report)
        return 0 if report.payload["all_ok"] else 1
    if check == "claims":
        emit(args, search_unverifiable_claims())
        return 0
    raise ValueError(f"unknown check {check!r}")


VERIFY_CHECKS = (
    "all",
    "thm3",
    "thm4",
    "table",
    "lemma25",
    "bound",
    "t1",
    "case-split",
    "gpos",
    "g234",
    "devices",
    "claims",
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agspectra",
        description="Degree-weighted adjacency spectra of trees and unicyclic graphs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    schemes = [s.value for s in WeightScheme]

    p = sub.add_parser("radius", help="spectral radius of a weighted adjacency matrix")
    add_graph_arguments(p)
    p.add_argument("--scheme", choices=schemes, default="ag")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_radius)

    p = sub.add_parser("spectrum", help="all eigenvalues, descending")
    add_graph_arguments(p)
    p.add_argument("--scheme", choices=schemes, default="ag")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("charpoly", help="monic characteristic polynomial coefficients")
    add_graph_arguments(p)
    p.add_argument("--scheme", choices=schemes, default="ag")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("index", help="degree-based topological index")
    add_graph_arguments(p)
    p.add_argument("--kind", choices=[k.value for k in IndexKind], default="ag")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("enumerate", help="all non-isomorphic graphs of a family")
    p.add_argument("family", choices=("tree", "unicyclic"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print only the class count")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("tables", help="AG radii of all unicyclic graphs per order")
    p.add_argument("--n-lo", type=int, default=4)
    p.add_argument("--n-hi", type=int, default=7)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("certificate", help="radius upper-bound certificate at k")
    add_graph_arguments(p)
    p.add_argument("--k", type=float, required=True)
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_certificate)

    p = sub.add_parser("verify", help="run a named verification check")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--n", type=int)
    add_graph_arguments(p)
    p.add_argument("--budget", type=float, default=120.0, help="seconds allowed for 'all'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
