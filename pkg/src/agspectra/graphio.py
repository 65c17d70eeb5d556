"""graph6 codec, edge-list parsing, and deterministic report emission.

graph6 packs the upper triangle of the adjacency matrix in column-major
order, six bits per character, each character offset by 63 into the
printable range ``?``..``~``.  Sizes 0..62 use a single prefix byte; 63 and
64 use the long ``~`` form.  Anything above 64 is out of scope here and is
rejected.  Padding bits must be zero so that decoding stays injective.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_N = 64
SCHEMA_VERSION = 1


def write_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no header)."""
    n = g.n
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 support is limited to n <= {GRAPH6_MAX_N}, got {n}")
    if n <= 62:
        prefix = chr(63 + n)
    else:
        prefix = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    adj = set(g.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in adj else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        chars.append(chr(63 + val))
    return prefix + "".join(chars)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 string, with or without the ``>>graph6<<`` header."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    vals = []
    for c in s:
        o = ord(c)
        if not 63 <= o <= 126:
            raise ValueError(f"invalid graph6 character {c!r}")
        vals.append(o - 63)
    if vals[0] == 63:  # '~': long size form
        if len(vals) < 4:
            raise ValueError("truncated graph6 size prefix")
        n = vals[1] << 12 | vals[2] << 6 | vals[3]
        idx = 4
        if n <= 62:
            raise ValueError(f"non-canonical long size prefix for n={n}")
    else:
        n = vals[0]
        idx = 1
    if n < 1:
        raise ValueError("graph6 string encodes an empty graph")
    if n > GRAPH6_MAX_N:
        raise ValueError(f"graph6 support is limited to n <= {GRAPH6_MAX_N}, got {n}")
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(vals) - idx < nchars:
        raise ValueError("truncated graph6 payload")
    if len(vals) - idx > nchars:
        raise ValueError("trailing characters after graph6 payload")
    bits = []
    for v in vals[idx:]:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append(v >> s6 & 1)
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 payload")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, tuple(edges))


def graphs_to_graph6_lines(graphs) -> str:
    """One graph6 string per line, trailing newline included."""
    return "".join(write_graph6(g) + "\n" for g in graphs)


def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line ``n <count>``, then one
    ``i j`` pair per line with 0-based vertex indices."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty edge list")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "n":
        raise ValueError(f"edge list must start with 'n <count>', got {lines[0]!r}")
    try:
        n = int(head[1])
    except ValueError:
        raise ValueError(f"bad vertex count {head[1]!r}") from None
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad edge line {ln!r}") from None
        edges.append((i, j))
    return Graph(n, tuple(edges))  # Graph validates loops/dups/range


@dataclass
class Report:
    """A verification or computation report.

    ``payload`` holds JSON-serialisable key/value data; tabular payloads put
    a list of per-row dicts under ``rows``.
    """

    kind: str
    payload: dict = field(default_factory=dict)
    fmt: str = "json"
    schema_version: int = SCHEMA_VERSION


def _round_floats(obj, digits: int):
    if isinstance(obj, float):
        return float(f"{obj:.{digits}g}")
    if isinstance(obj, dict):
        return {k: _round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v, digits) for v in obj]
    return obj


def _cell(v, digits: int) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.{digits}g}"
    return str(v)


def render_report(report: Report, digits: int = 10) -> str:
    """Render a report to its deterministic textual form.

    JSON: sorted keys, two-space indent, floats rounded to ``digits``
    significant digits.  CSV: the ``rows`` payload entry only, header once,
    LF line endings.
    """
    if report.fmt == "json":
        doc = {
            "kind": report.kind,
            "schema_version": report.schema_version,
            "payload": _round_floats(report.payload, digits),
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if report.fmt == "csv":
        rows = report.payload.get("rows")
        if not isinstance(rows, list) or not rows:
            raise ValueError("csv reports need a nonempty 'rows' payload entry")
        header = list(rows[0].keys())
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            if list(row.keys()) != header:
                raise ValueError("csv rows must share one key order")
            writer.writerow([_cell(row[k], digits) for k in header])
        return buf.getvalue()
    raise ValueError(f"unknown report format {report.fmt!r}")


def emit_report(report: Report, sink, digits: int = 10) -> None:
    """Write a report to a file-like sink; bytes are deterministic per input."""
    sink.write(render_report(report, digits))
