from unittest import mock

from django.test import SimpleTestCase

from algebra.exceptions import ReductionInvariantError
from algebra.graph_core import build_graph, refine_path, trivial
from algebra.group_words import classify
from algebra.sampling import catalog_graph, forms_up_to
from algebra.scalars import make_field
from algebra.suites import DEFAULT_TRIALS, suite_simplicity

QQ = make_field("rationals")


class SimplicitySuiteTests(SimpleTestCase):
    def test_passes_on_r2(self):
        result = suite_simplicity(catalog_graph("R2"), QQ, 1729)
        self.assertIsNone(result.skipped)
        self.assertTrue(result.passed)
        self.assertGreater(result.trials, 0)

    def test_skips_only_when_criteria_fail(self):
        result = suite_simplicity(catalog_graph("T"), QQ, 1729)
        self.assertEqual(result.skipped, "proper hereditary saturated subset {w}")
        result = suite_simplicity(catalog_graph("loop"), QQ, 1729)
        self.assertEqual(result.skipped, "condition (L) fails: cycle g has no exit")

    def test_broken_proof_step_is_a_failure(self):
        error = ReductionInvariantError("step 3 did not reduce the number of fibers")
        with mock.patch("algebra.suites.demonstrate_simplicity", side_effect=error):
            result = suite_simplicity(catalog_graph("R2"), QQ, 1729)
        self.assertIsNone(result.skipped)
        self.assertFalse(result.passed)
        self.assertIn("ReductionInvariantError", result.failures[0])


class DefaultTrialTests(SimpleTestCase):
    def test_defaults_match_acceptance_sizes(self):
        self.assertEqual(DEFAULT_TRIALS["ring-axioms"], 500)
        self.assertEqual(DEFAULT_TRIALS["grading"], 200)
        self.assertEqual(DEFAULT_TRIALS["zero-test"], 1000)
        self.assertEqual(DEFAULT_TRIALS["reduction"], 200)


class CacheTests(SimpleTestCase):
    def test_caches_stay_bounded_across_graphs(self):
        for cached in (classify, refine_path, forms_up_to):
            cached.cache_clear()
        for i in range(300):
            g = build_graph({"vertices": [f"v{i}"], "edges": [{"id": f"e{i}", "src": f"v{i}", "dst": f"v{i}"}]})
            classify(g, ((f"e{i}", 1),))
            refine_path(g, trivial(f"v{i}"), 2)
            forms_up_to(g, 1)
        for cached in (classify, refine_path, forms_up_to):
            info = cached.cache_info()
            self.assertIsNotNone(info.maxsize)
            self.assertLessEqual(info.currsize, info.maxsize)
        self.assertEqual(forms_up_to.cache_info().currsize, forms_up_to.cache_info().maxsize)
