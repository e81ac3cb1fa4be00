import itertools
import random

from django.test import SimpleTestCase

from algebra.diagonal_algebra import theta_apply
from algebra.exceptions import InvalidPathError, NullFormError, PointNotInDomain, UnknownEdgeError
from algebra.graph_core import enumerate_points, trivial
from algebra.group_words import (
    NEUTRAL,
    FormKind,
    classify,
    compose,
    enumerate_forms,
    format_word,
    free_reduce,
    grade,
    invert,
    mixed,
    neg,
    parse_word,
    pos,
    unified,
)
from algebra.sampling import CATALOG, catalog_graph, random_word


def has_nonempty_domain(g, letters, points):
    """X_c != ∅ aplicando θ letra a letra (de derecha a izquierda) sobre los puntos enumerados."""
    for point in points:
        current = point
        try:
            for letter in reversed(letters):
                current = theta_apply(g, classify(g, (letter,)), current)
        except PointNotInDomain:
            continue
        return True
    return False


class ClassifyTests(SimpleTestCase):
    def test_r2_examples(self):
        g = catalog_graph("R2")
        self.assertEqual(parse_word(g, "e e~"), NEUTRAL)
        self.assertEqual(parse_word(g, "e f~").kind, FormKind.MIXED)
        self.assertEqual(parse_word(g, "e~ f").kind, FormKind.NULL)
        self.assertEqual(parse_word(g, "e e").kind, FormKind.POS)
        self.assertEqual(parse_word(g, "f~ e~").kind, FormKind.NEG)

    def test_paths_must_compose(self):
        g = catalog_graph("A3")
        self.assertEqual(parse_word(g, "e f").kind, FormKind.POS)
        self.assertTrue(parse_word(g, "f e").is_null)
        self.assertTrue(parse_word(g, "e f~").is_null)

    def test_unified_pairs(self):
        g = catalog_graph("R2")
        a, b = unified(parse_word(g, "e f~"))
        self.assertEqual((str(a), str(b)), ("e", "f"))
        a, b = unified(parse_word(g, "e~"))
        self.assertEqual((str(a), str(b)), ("v", "e"))
        with self.assertRaises(NullFormError):
            unified(parse_word(g, "e~ f"))

    def test_constructors_validate(self):
        g = catalog_graph("R2")
        with self.assertRaises(InvalidPathError):
            mixed(g.path(["e"]), g.path(["e"]))
        with self.assertRaises(InvalidPathError):
            pos(trivial("v"))

    def test_unknown_edge(self):
        with self.assertRaises(UnknownEdgeError):
            parse_word(catalog_graph("R2"), "z")

    def test_format(self):
        g = catalog_graph("R2")
        self.assertEqual(format_word(NEUTRAL), "0")
        self.assertEqual(format_word(parse_word(g, "e f f~ e~ e f~")), "e f~")


class GroupLawTests(SimpleTestCase):
    def test_compose_matches_concatenation(self):
        for name in CATALOG:
            g = catalog_graph(name)
            for trial in range(100):
                rng = random.Random(trial)
                w1, w2 = random_word(rng, g), random_word(rng, g)
                p, q = classify(g, w1), classify(g, w2)
                if p.is_null or q.is_null:
                    continue
                self.assertEqual(compose(g, p, q), classify(g, w1 + w2), (name, w1, w2))

    def test_inverse_and_grade(self):
        g = catalog_graph("R2")
        for p in enumerate_forms(g, 3):
            self.assertEqual(invert(invert(p)), p)
            self.assertTrue(compose(g, p, invert(p)).is_neutral)
            self.assertEqual(grade(invert(p)), -grade(p))
        self.assertEqual(grade(parse_word(g, "e f e~")), 1)

    def test_grade_of_null_raises(self):
        with self.assertRaises(NullFormError):
            grade(parse_word(catalog_graph("R2"), "e~ f"))


class EnumerationTests(SimpleTestCase):
    def test_a2_forms(self):
        g = catalog_graph("A2")
        e = g.path(["e"])
        self.assertEqual(set(enumerate_forms(g, 2)), {NEUTRAL, pos(e), neg(e)})

    def test_r2_counts(self):
        self.assertEqual(len(enumerate_forms(catalog_graph("R2"), 3)), 39)

    def test_null_iff_empty_domain(self):
        # una palabra reducida es Null exactamente cuando su dominio en X es vacío
        for name in CATALOG:
            g = catalog_graph(name)
            points = enumerate_points(g, 6)
            letters = [(e.id, s) for e in g.edges for s in (1, -1)]
            for n in range(1, 4):
                for word in itertools.product(letters, repeat=n):
                    if free_reduce(word) != word:
                        continue
                    p = classify(g, word)
                    self.assertEqual(
                        not p.is_null, has_nonempty_domain(g, word, points), (name, format_word(p), word)
                    )
