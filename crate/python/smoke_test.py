#!/usr/bin/env python3
"""Smoke test for the wclique_py extension module.

Locates the built cdylib (release preferred), stages it under the
importable name, and exercises the main types and operations end to
end. Build the module first:

    cargo build -p wclique-py --release --features extension-module

then run:

    python3 python/smoke_test.py
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def stage_module() -> Path:
    candidates = [
        REPO / "target" / "release" / "libwclique_py.so",
        REPO / "target" / "debug" / "libwclique_py.so",
        REPO / "target" / "release" / "libwclique_py.dylib",
        REPO / "target" / "debug" / "libwclique_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "extension not built; run: "
            "cargo build -p wclique-py --release --features extension-module"
        )
    stage = Path(tempfile.mkdtemp(prefix="wclique_py_"))
    shutil.copy2(built, stage / "wclique_py.so")
    sys.path.insert(0, str(stage))
    return built


def approx(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b} (tol {tol})"


def main():
    built = stage_module()
    import wclique_py as wc

    print(f"loaded {built} (version {wc.__version__})")

    # reference graph: vertices 1..4, weights (1,1,1,2), edges
    # (1,2)=1, (1,3)=1, (2,3)=1, (1,4)=5
    g1 = wc.WeightedGraph(
        ["1", "2", "3", "4"],
        [1.0, 1.0, 1.0, 2.0],
        [("1", "2", 1.0), ("1", "3", 1.0), ("2", "3", 1.0), ("1", "4", 5.0)],
    )
    assert g1.vertex_count() == 4 and g1.edge_count() == 4
    assert g1.neighbors("1") == ["2", "3", "4"]
    approx(g1.weighted_degree("1"), 8.0)
    approx(g1.clique_weight(["1", "4"]), 8.0)
    assert g1.is_clique(["1", "4"]) and not g1.is_clique(["2", "4"])
    print("graph ops: ok")

    report = wc.solve(g1, pivot="clique", estimate="deg")
    assert report["clique"] == ["1", "4"]
    approx(report["weight"], 8.0)
    assert report["completed"]
    oracle_clique, oracle_weight = wc.brute_force(g1)
    assert oracle_clique == ["1", "4"]
    approx(oracle_weight, 8.0)
    print("solve + oracle: ok")

    cliques = wc.enumerate_cliques(g1)
    assert sorted(ids for ids, _ in cliques) == [["1", "2", "3"], ["1", "4"]]
    weights = {tuple(ids): w for ids, w in cliques}
    approx(weights[("1", "2", "3")], 6.0)
    approx(weights[("1", "4")], 8.0)
    print("enumerate: ok")

    # budgeted anytime run
    starved = wc.solve(g1, budget=2, estimate="inf", pivot="none")
    assert not starved["completed"] and starved["clique"] == []
    print("budget semantics: ok")

    # matching fixture: k = 8, l = (sqrt 6, sqrt 11), s = 8 / sqrt 66
    x2 = wc.AttributedGraph.from_json(
        '{"directed": false,'
        ' "vertices": [{"id": "1", "attr": [1.0]}, {"id": "2", "attr": [1.0]}],'
        ' "edges": [{"u": "1", "v": "2", "attr": [2.0]}]}'
    )
    y2 = wc.AttributedGraph.from_json(
        '{"directed": false,'
        ' "vertices": [{"id": "a", "attr": [1.0]}, {"id": "b", "attr": [1.0]}],'
        ' "edges": [{"u": "a", "v": "b", "attr": [3.0]}]}'
    )
    m = wc.match_graphs(x2, y2, kernel="dot", estimate="cs")
    approx(m["kernel"], 8.0)
    approx(m["length_x"], math.sqrt(6))
    approx(m["length_y"], math.sqrt(11))
    approx(m["similarity"], 8 / math.sqrt(66))
    assert m["morphism"] == [("1", "a"), ("2", "b")]
    approx(wc.graph_length(x2), math.sqrt(6))
    approx(wc.similarity(x2, x2), 1.0)
    print("matching: ok")

    # generated instances round-trip through json
    g = wc.generate_weighted(8, 0.5, 0.1, 1.0, seed=11)
    again = wc.WeightedGraph.from_json(g.to_json())
    assert again.vertex_count() == 8
    assert wc.solve(g)["weight"] == wc.solve(again)["weight"]
    a = wc.generate_attributed(4, 0.6, attr_dim=2, seed=3)
    b = wc.generate_attributed(4, 0.6, attr_dim=2, seed=4)
    r = wc.match_graphs(a, b, kernel="rbf", sigma=0.8)
    assert abs(r["kernel"]) <= r["length_x"] * r["length_y"] + 1e-9
    print("generators + rbf kernel: ok")

    print("smoke test: all checks passed")


if __name__ == "__main__":
    main()
