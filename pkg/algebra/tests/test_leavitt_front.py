import random

from django.test import SimpleTestCase
from sympy import Rational

from algebra.diagonal_algebra import indicator, mul_diag
from algebra.exceptions import ExpressionSyntaxError, UnknownIdError
from algebra.group_words import enumerate_forms
from algebra.leavitt_front import (
    Gen,
    Product,
    ScalarMul,
    Sum,
    adjoint,
    check_ck_relations,
    parse_expression,
    phi_embed,
    surjection_witness,
)
from algebra.sampling import CATALOG, catalog_graph, random_expression, random_graph
from algebra.scalars import make_field
from algebra.skew_ring import add_scale, monomial, mul_skew, star

QQ = make_field("rationals")


def phi(text, g, K=QQ):
    return phi_embed(parse_expression(text, g), g, K)


class ParserTests(SimpleTestCase):
    def setUp(self):
        self.g = catalog_graph("R2")

    def test_structure(self):
        expr = parse_expression("e* e - 1/2 v", self.g)
        self.assertIsInstance(expr, Sum)
        first, second = expr.terms
        self.assertEqual(first, Product((Gen("e", "ghost"), Gen("e", "edge"))))
        self.assertEqual(second, ScalarMul(Rational(-1), ScalarMul(Rational(1, 2), Gen("v", "vertex"))))

    def test_starred_vertex_is_the_vertex(self):
        self.assertEqual(parse_expression("v*", self.g), Gen("v", "vertex"))

    def test_syntax_errors_carry_position(self):
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_expression("e +", self.g)
        self.assertEqual(ctx.exception.position, 3)
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_expression("(e f", self.g)
        self.assertEqual(ctx.exception.position, 4)
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_expression("e ) f", self.g)
        self.assertEqual(ctx.exception.position, 2)
        with self.assertRaises(ExpressionSyntaxError):
            parse_expression("1/0 v", self.g)
        with self.assertRaises(ExpressionSyntaxError) as ctx:
            parse_expression("e $ f", self.g)
        self.assertEqual(ctx.exception.position, 2)

    def test_unknown_identifier(self):
        with self.assertRaises(UnknownIdError) as ctx:
            parse_expression("e x", self.g)
        self.assertEqual(ctx.exception.ident, "x")


class EmbeddingTests(SimpleTestCase):
    def test_ghost_edge(self):
        self.assertEqual(str(phi("e* e", catalog_graph("R2"))), "[1*[v]]·δ(0)")

    def test_relation_four_on_r2(self):
        self.assertEqual(str(phi("e e* + f f*", catalog_graph("R2"))), "[1*[v]]·δ(0)")

    def test_scalar_alone_is_a_multiple_of_the_unit(self):
        g = catalog_graph("A2")
        self.assertEqual(str(phi("2", g)), "[2*[v1] + 2*[v2]]·δ(0)")

    def test_mixed_monomial(self):
        g = catalog_graph("R2")
        self.assertEqual(str(phi("e f*", g)), "[1*[e]]·δ(e f~)")
        self.assertEqual(str(phi("e e f* e*", g)), "[1*[e e]]·δ(e e f~ e~)")

    def test_prime_field(self):
        g = catalog_graph("R2")
        self.assertEqual(str(phi("3 e e* + 4 f f*", g, make_field(3))), "[1*[f]]·δ(0)")

    def test_homomorphism_on_random_expressions(self):
        for name in CATALOG:
            g = catalog_graph(name)
            for trial in range(30):
                rng = random.Random(trial)
                a, b = random_expression(rng, g), random_expression(rng, g)
                self.assertEqual(phi_embed(Product((a, b)), g, QQ), mul_skew(phi_embed(a, g, QQ), phi_embed(b, g, QQ)))
                self.assertEqual(phi_embed(adjoint(a), g, QQ), star(phi_embed(a, g, QQ)))
                total = add_scale(QQ.one, phi_embed(a, g, QQ), QQ.one, phi_embed(b, g, QQ))
                self.assertEqual(phi_embed(Sum((a, b)), g, QQ), total)

    def test_surjection_witnesses(self):
        g = catalog_graph("R2")
        forms = enumerate_forms(g, 2)
        for p in forms:
            for q in forms:
                target = monomial(mul_diag(indicator(g, QQ, p), indicator(g, QQ, q)), q)
                self.assertEqual(phi_embed(surjection_witness(g, p, q), g, QQ), target, (str(p), str(q)))


class RelationCheckerTests(SimpleTestCase):
    def test_catalog_and_random_graphs(self):
        for name in CATALOG:
            self.assertEqual(check_ck_relations(catalog_graph(name), QQ), [], name)
        for trial in range(20):
            g = random_graph(random.Random(trial))
            self.assertEqual(check_ck_relations(g, QQ), [])

    def test_reversed_product_is_detected(self):
        violations = check_ck_relations(catalog_graph("A2"), QQ, product=lambda x, y: mul_skew(y, x))
        self.assertIn("(3)", {v.relation for v in violations})

    def test_doubled_product_is_detected(self):
        def doubled(x, y):
            result = mul_skew(x, y)
            return add_scale(QQ.one, result, QQ.one, result)

        violations = check_ck_relations(catalog_graph("R2"), QQ, product=doubled)
        self.assertTrue(violations)
