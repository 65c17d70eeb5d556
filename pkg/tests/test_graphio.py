import json
import random

import pytest

from agspectra.graphio import (
    GRAPH6_HEADER,
    Report,
    graphs_to_graph6_lines,
    parse_edge_list,
    parse_graph6,
    render_report,
    write_graph6,
)
from agspectra.graphs import Graph, make_cycle, make_path, make_star


def random_graph(n, rng):
    edges = [(i, j) for j in range(1, n) for i in range(j) if rng.random() < 0.4]
    return Graph(n, tuple(edges))


def test_known_encodings():
    assert write_graph6(Graph(1)) == "@"
    assert write_graph6(Graph(2, ((0, 1),))) == "A_"
    assert parse_graph6("B?") == Graph(3)
    assert parse_graph6("A_") == Graph(2, ((0, 1),))
    assert parse_graph6(GRAPH6_HEADER + "A_") == Graph(2, ((0, 1),))


def test_round_trip_small_and_random():
    rng = random.Random(1009)
    graphs = [make_path(5), make_star(7), make_cycle(6), Graph(1), Graph(4)]
    graphs += [random_graph(rng.randint(2, 20), rng) for _ in range(60)]
    for g in graphs:
        assert parse_graph6(write_graph6(g)) == g


def test_long_form_sizes():
    for n in (63, 64):
        g = Graph(n, tuple((0, j) for j in range(1, n)))
        s = write_graph6(g)
        assert s.startswith("~")
        assert parse_graph6(s) == g


def test_oversize_rejected():
    with pytest.raises(ValueError):
        write_graph6(Graph(65))
    # long form declaring n = 65
    s = "~" + chr(63) + chr(63 + 1) + chr(63 + 1)
    with pytest.raises(ValueError):
        parse_graph6(s)


def test_malformed_strings_rejected():
    with pytest.raises(ValueError):
        parse_graph6("")
    with pytest.raises(ValueError):
        parse_graph6("B" + chr(30))
    with pytest.raises(ValueError):
        parse_graph6("D?")  # truncated payload
    with pytest.raises(ValueError):
        parse_graph6("B??")  # trailing characters
    # '~' size form for a small n is non-canonical
    with pytest.raises(ValueError):
        parse_graph6("~??B???")


def test_nonzero_padding_rejected():
    # K2 needs one bit; the remaining five padding bits must be zero
    bad = "A" + chr(63 + 0b110000)
    with pytest.raises(ValueError):
        parse_graph6(bad)


def test_decoding_is_injective_on_random_strings():
    # every accepted string re-encodes to itself, so distinct strings
    # cannot collide on one graph
    rng = random.Random(77)
    accepted = 0
    for n in range(2, 13):
        nchars = (n * (n - 1) // 2 + 5) // 6
        for _ in range(30):
            s = chr(63 + n) + "".join(
                chr(rng.randint(63, 126)) for _ in range(nchars)
            )
            try:
                g = parse_graph6(s)
            except ValueError:  # nonzero padding bits
                continue
            accepted += 1
            assert write_graph6(g) == s
    assert accepted > 100


def test_graph6_lines():
    text = graphs_to_graph6_lines([Graph(1), Graph(2, ((0, 1),))])
    assert text == "@\nA_\n"


def test_edge_list_parsing():
    g = parse_edge_list("n 4\n0 1\n2 3\n\n1 2\n")
    assert g == make_path(4)
    with pytest.raises(ValueError):
        parse_edge_list("")
    with pytest.raises(ValueError):
        parse_edge_list("4\n0 1\n")
    with pytest.raises(ValueError):
        parse_edge_list("n x\n")
    with pytest.raises(ValueError):
        parse_edge_list("n 3\n0 1 2\n")
    with pytest.raises(ValueError):
        parse_edge_list("n 3\n0 3\n")


def test_json_report_rendering():
    rep = Report(kind="demo", payload={"b": 1.23456789012345, "a": [True, 2]})
    text = render_report(rep)
    assert text.endswith("\n")
    doc = json.loads(text)
    assert doc["kind"] == "demo"
    assert doc["schema_version"] == 1
    assert doc["payload"]["b"] == 1.23456789
    # deterministic: sorted keys, stable bytes
    assert text == render_report(rep)
    assert text.index('"a"') < text.index('"b"')


def test_csv_report_rendering():
    rep = Report(
        kind="demo",
        payload={"rows": [{"x": 1.5, "ok": True}, {"x": 2.0, "ok": False}]},
        fmt="csv",
    )
    text = render_report(rep)
    assert text == "x,ok\n1.5,true\n2,false\n"


def test_csv_report_requires_uniform_rows():
    with pytest.raises(ValueError):
        render_report(Report(kind="demo", payload={}, fmt="csv"))
    bad = Report(kind="demo", payload={"rows": [{"x": 1}, {"y": 2}]}, fmt="csv")
    with pytest.raises(ValueError):
        render_report(bad)
    with pytest.raises(ValueError):
        render_report(Report(kind="demo", fmt="yaml"))
