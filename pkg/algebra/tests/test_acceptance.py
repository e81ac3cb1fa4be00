"""
Baterías completas sobre el catálogo con los tamaños de aceptación.
Son las pruebas lentas del proyecto: `python manage.py test --exclude-tag=acceptance` las omite.
"""
import random

from django.conf import settings
from django.test import SimpleTestCase, tag

from algebra.ideal_tools import acyclic_dimension, demonstrate_simplicity, simplicity_report, verify_certificate
from algebra.leavitt_front import check_ck_relations, parse_expression, phi_embed
from algebra.sampling import CATALOG, CONDITION_L_CATALOG, catalog_graph, random_graph
from algebra.scalars import make_field
from algebra.suites import (
    sink_path_formula,
    suite_grading,
    suite_reduction,
    suite_ring_axioms,
    suite_theta_alpha,
    suite_transcription,
    suite_zero_test,
)

QQ = make_field("rationals")
SEED = settings.LEAVITT_SEED


@tag("acceptance")
class AcceptanceTests(SimpleTestCase):
    def assertSuitePasses(self, result, name):
        self.assertIsNone(result.skipped, name)
        self.assertGreater(result.trials, 0, name)
        self.assertEqual(result.failures, [], name)

    def test_ck_relations(self):
        for name in CATALOG:
            self.assertEqual(check_ck_relations(catalog_graph(name), QQ), [], name)
        for trial in range(20):
            g = random_graph(random.Random(SEED + trial), max_vertices=6, max_edges=10)
            self.assertEqual(check_ck_relations(g, QQ), [])

    def test_transcription_tables(self):
        for name in CATALOG:
            self.assertSuitePasses(suite_transcription(catalog_graph(name), QQ, SEED, max_len=3), name)

    def test_ring_axioms(self):
        for name in CATALOG:
            self.assertSuitePasses(suite_ring_axioms(catalog_graph(name), QQ, SEED, trials=500), name)

    def test_grading(self):
        for name in CATALOG:
            self.assertSuitePasses(suite_grading(catalog_graph(name), QQ, SEED, trials=200), name)

    def test_theta_alpha_agreement(self):
        for name in CATALOG:
            result = suite_theta_alpha(catalog_graph(name), QQ, SEED, max_len=3, max_depth=3, point_size=6)
            self.assertSuitePasses(result, name)

    def test_reduction_pipeline(self):
        for name in CONDITION_L_CATALOG:
            self.assertSuitePasses(suite_reduction(catalog_graph(name), QQ, SEED, trials=200), name)

    def test_dimension_oracle(self):
        self.assertEqual(acyclic_dimension(catalog_graph("A2"), QQ), 4)
        self.assertEqual(acyclic_dimension(catalog_graph("A3"), QQ), 9)
        for trial in range(20):
            g = random_graph(random.Random(SEED + trial), max_vertices=5, max_edges=8, acyclic=True)
            self.assertEqual(acyclic_dimension(g, QQ), sink_path_formula(g))

    def test_simplicity_catalog(self):
        self.assertTrue(simplicity_report(catalog_graph("R2")).criteria_met)
        loop = catalog_graph("loop")
        report = simplicity_report(loop).to_json(loop)
        self.assertFalse(report["criteria_met"])
        self.assertEqual(report["witness"], "g")
        t = catalog_graph("T")
        report = simplicity_report(t).to_json(t)
        self.assertFalse(report["criteria_met"])
        self.assertEqual(report["hs_witness"], ["w"])

        r2 = catalog_graph("R2")
        demo = demonstrate_simplicity(r2, phi_embed(parse_expression("e", r2), r2, QQ))
        self.assertEqual(set(demo.certificates), set(r2.vertices))
        self.assertTrue(all(verify_certificate(c) for c in demo.certificates.values()))

    def test_zero_test(self):
        for name in CATALOG:
            self.assertSuitePasses(suite_zero_test(catalog_graph(name), QQ, SEED, trials=1000), name)
