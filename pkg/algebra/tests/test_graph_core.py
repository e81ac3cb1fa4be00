import itertools
import json
import os
import random
import tempfile

from django.test import SimpleTestCase

from algebra.exceptions import (
    DanglingEndpointError,
    DuplicateIdError,
    EmptyVertexSetError,
    EnumerationCapError,
    GraphFormatError,
    InvalidPathError,
    UnknownEdgeError,
    UnknownVertexError,
)
from algebra.graph_core import (
    EventuallyPeriodic,
    FiniteToSink,
    SinkVertex,
    build_graph,
    condition_L,
    enumerate_hs_subsets,
    enumerate_points,
    graph_to_json,
    hs_closure,
    is_acyclic,
    load_graph,
    partition_basis,
    paths_from,
    periodic_point,
    point_drop,
    point_prepend,
    point_starts_with,
    trivial,
)
from algebra.sampling import CATALOG, catalog_graph, random_graph


def brute_force_hs(data):
    """Subconjuntos hereditarios y saturados calculados directamente sobre el listado de aristas."""
    vertices = data["vertices"]
    edges = [(e["src"], e["dst"]) for e in data["edges"]]
    found = []
    for n in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, n):
            H = set(combo)
            hereditary = all(dst in H for src, dst in edges if src in H)
            saturated = True
            for v in vertices:
                out = [dst for src, dst in edges if src == v]
                if out and v not in H and all(dst in H for dst in out):
                    saturated = False
            if hereditary and saturated:
                found.append(frozenset(H))
    return set(found)


class BuildGraphTests(SimpleTestCase):
    def test_catalog_graphs_load(self):
        for name, data in CATALOG.items():
            g = build_graph(data)
            self.assertEqual(graph_to_json(g)["vertices"], sorted(data["vertices"]), name)

    def test_duplicate_vertex(self):
        with self.assertRaises(DuplicateIdError):
            build_graph({"vertices": ["v", "v"], "edges": []})

    def test_edge_id_clashing_with_vertex(self):
        with self.assertRaises(DuplicateIdError) as ctx:
            build_graph({"vertices": ["v", "w"], "edges": [{"id": "w", "src": "v", "dst": "v"}]})
        self.assertEqual(ctx.exception.ident, "w")

    def test_dangling_endpoint(self):
        with self.assertRaises(DanglingEndpointError) as ctx:
            build_graph({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "x"}]})
        self.assertEqual(ctx.exception.vertex, "x")

    def test_empty_vertex_set(self):
        with self.assertRaises(EmptyVertexSetError):
            build_graph({"vertices": [], "edges": []})

    def test_unknown_and_missing_fields(self):
        with self.assertRaises(GraphFormatError):
            build_graph({"vertices": ["v"], "edges": [], "name": "x"})
        with self.assertRaises(GraphFormatError):
            build_graph({"vertices": ["v"], "edges": [{"id": "e", "src": "v"}]})
        with self.assertRaises(GraphFormatError):
            build_graph({"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "v", "w": 1}]})

    def test_load_graph_wraps_io_and_json_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(GraphFormatError):
                load_graph(os.path.join(tmp, "missing.json"))
            broken = os.path.join(tmp, "broken.json")
            with open(broken, "w", encoding="utf-8") as f:
                f.write("{not json")
            with self.assertRaises(GraphFormatError):
                load_graph(broken)
            good = os.path.join(tmp, "r2.json")
            with open(good, "w", encoding="utf-8") as f:
                json.dump(CATALOG["R2"], f)
            self.assertEqual(load_graph(good), catalog_graph("R2"))

    def test_lookup_errors(self):
        g = catalog_graph("A2")
        with self.assertRaises(UnknownVertexError):
            g.check_vertex("v9")
        with self.assertRaises(UnknownEdgeError):
            g.edge("z")
        with self.assertRaises(InvalidPathError):
            g.path(["e", "e"])


class PathTests(SimpleTestCase):
    def test_paths_from_counts(self):
        g = catalog_graph("R2")
        self.assertEqual([len(paths_from(g, "v", n)) for n in range(4)], [1, 2, 4, 8])
        self.assertEqual([str(p) for p in paths_from(g, "v", 2)], ["e e", "e f", "f e", "f f"])

    def test_partition_basis_stops_at_sinks(self):
        g = catalog_graph("A2")
        self.assertEqual([str(p) for p in partition_basis(g, "v1", 3)], ["e"])
        self.assertEqual([str(p) for p in partition_basis(g, "v2", 2)], ["v2"])

    def test_partition_basis_depth_must_be_positive(self):
        with self.assertRaises(ValueError):
            partition_basis(catalog_graph("R2"), "v", 0)

    def test_acyclicity(self):
        self.assertTrue(is_acyclic(catalog_graph("A3")))
        self.assertFalse(is_acyclic(catalog_graph("T")))


class ConditionLTests(SimpleTestCase):
    def test_catalog_verdicts(self):
        for name in ("R2", "A2", "A3", "T"):
            self.assertTrue(condition_L(catalog_graph(name)).holds, name)
        verdict = condition_L(catalog_graph("loop"))
        self.assertFalse(verdict.holds)
        self.assertEqual(str(verdict.witness), "g")

    def test_two_cycle_witness(self):
        g = build_graph({
            "vertices": ["a", "b"],
            "edges": [{"id": "x", "src": "a", "dst": "b"}, {"id": "y", "src": "b", "dst": "a"}],
        })
        verdict = condition_L(g)
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness.edges, ("x", "y"))


class HereditarySaturatedTests(SimpleTestCase):
    def test_catalog_subsets(self):
        self.assertEqual(enumerate_hs_subsets(catalog_graph("A2")), [frozenset(), frozenset({"v1", "v2"})])
        self.assertEqual(
            enumerate_hs_subsets(catalog_graph("T")),
            [frozenset(), frozenset({"w"}), frozenset({"u", "w"})],
        )
        self.assertEqual(enumerate_hs_subsets(catalog_graph("R2")), [frozenset(), frozenset({"v"})])

    def test_cap(self):
        with self.assertRaises(EnumerationCapError):
            enumerate_hs_subsets(catalog_graph("A3"), cap=2)

    def test_against_brute_force_on_random_graphs(self):
        for trial in range(20):
            rng = random.Random(100 + trial)
            g = random_graph(rng)
            data = graph_to_json(g)
            self.assertEqual(set(enumerate_hs_subsets(g)), brute_force_hs(data), data)

    def test_closure(self):
        g = catalog_graph("T")
        self.assertEqual(hs_closure(g, {"w"}), frozenset({"w"}))
        self.assertEqual(hs_closure(g, {"u"}), frozenset({"u", "w"}))
        g = catalog_graph("A3")
        self.assertEqual(hs_closure(g, {"v3"}), frozenset({"v1", "v2", "v3"}))


class PointTests(SimpleTestCase):
    def test_periodic_canonical_form(self):
        g = catalog_graph("loop")
        gg = g.path(["g", "g"])
        point = periodic_point(g.path(["g"]), gg)
        self.assertEqual(point, EventuallyPeriodic(trivial("v"), g.path(["g"])))
        self.assertEqual(str(point), "(g)^∞")

    def test_enumerate_points(self):
        loop = catalog_graph("loop")
        self.assertEqual(enumerate_points(loop, 3), [periodic_point(trivial("v"), loop.path(["g"]))])
        g = catalog_graph("A2")
        self.assertEqual(enumerate_points(g, 2), [SinkVertex("v2"), FiniteToSink(g.path(["e"]))])

    def test_drop_and_prepend(self):
        g = catalog_graph("T")
        point = periodic_point(g.path(["g"]), g.path(["g"]))
        self.assertTrue(point_starts_with(point, g.path(["g", "g"])))
        self.assertFalse(point_starts_with(point, g.path(["h"])))
        finite = FiniteToSink(g.path(["g", "h"]))
        self.assertEqual(point_drop(g, finite, 1), FiniteToSink(g.path(["h"])))
        self.assertEqual(point_drop(g, finite, 2), SinkVertex("w"))
        self.assertEqual(point_prepend(g.path(["h"]), SinkVertex("w")), FiniteToSink(g.path(["h"])))
        self.assertEqual(point_prepend(g.path(["g"]), point), point)
        with self.assertRaises(InvalidPathError):
            point_prepend(g.path(["h"]), point)
