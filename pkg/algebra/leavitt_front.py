# algebra/leavitt_front.py
"""
Presentación de Leavitt: expresiones sobre los generadores v, e, e*, su inmersión φ en
D(X) ⋊_α 𝔽 y el verificador de las relaciones de Cuntz-Krieger.

Gramática (ply):
    expression := ['-'] term (('+' | '-') term)*
    term       := [NUMBER] factor*          (al menos un escalar o un factor)
    factor     := IDENT ['*'] | '(' expression ')'
    NUMBER     := entero | entero/entero
"""
import threading
from dataclasses import dataclass

import ply.lex as lex
import ply.yacc as yacc
from sympy import Rational

from .diagonal_algebra import path_indicator, vertex_indicator
from .exceptions import ExpressionSyntaxError, UnknownIdError
from .group_words import NEUTRAL, neg, pos, unified
from .scalars import from_rational
from .skew_ring import add_scale, monomial, mul_skew, scale_skew, skew
from .skew_ring import product as ordered_product


# ----------------------------
# Árbol sintáctico
# ----------------------------
@dataclass(frozen=True)
class Gen:
    name: str
    kind: str  # "vertex" | "edge" | "ghost"

    def __str__(self):
        return f"{self.name}*" if self.kind == "ghost" else self.name


@dataclass(frozen=True)
class ScalarMul:
    scalar: Rational
    expr: object

    def __str__(self):
        return f"{self.scalar} ({self.expr})"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self):
        return " ".join(f"({f})" if isinstance(f, (Sum, ScalarMul)) else str(f) for f in self.factors)


@dataclass(frozen=True)
class Sum:
    terms: tuple

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class _Name:
    """Identificador aún sin resolver contra el grafo."""
    ident: str
    starred: bool


# ----------------------------
# Tokens
# ----------------------------
tokens = ("NUMBER", "IDENT", "PLUS", "MINUS", "STAR", "LPAREN", "RPAREN")

t_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
t_PLUS = r"\+"
t_MINUS = r"-"
t_STAR = r"\*"
t_LPAREN = r"\("
t_RPAREN = r"\)"

t_ignore = " \t\n"


def t_NUMBER(t):
    r"\d+(?:/\d+)?"
    num, _, den = t.value.partition("/")
    if den and int(den) == 0:
        raise ExpressionSyntaxError("zero denominator", t.lexpos)
    t.value = Rational(int(num), int(den) if den else 1)
    return t


def t_error(t):
    raise ExpressionSyntaxError(f"unexpected character {t.value[0]!r}", t.lexpos)


# ----------------------------
# Reglas
# ----------------------------
class _EndOfInput(Exception):
    pass


def _minus(expr):
    return ScalarMul(Rational(-1), expr)


def _product(factors):
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


def p_expression(p):
    "expression : summands"
    p[0] = p[1][0] if len(p[1]) == 1 else Sum(tuple(p[1]))


def p_summands_first(p):
    """summands : term
                | MINUS term"""
    p[0] = [p[1]] if len(p) == 2 else [_minus(p[2])]


def p_summands_more(p):
    """summands : summands PLUS term
                | summands MINUS term"""
    p[0] = p[1] + [p[3] if p[2] == "+" else _minus(p[3])]


def p_term_scaled(p):
    "term : NUMBER factors"
    p[0] = ScalarMul(p[1], _product(p[2]))


def p_term_scalar(p):
    "term : NUMBER"
    # un escalar solo multiplica a la unidad (producto vacío)
    p[0] = ScalarMul(p[1], Product(()))


def p_term_plain(p):
    "term : factors"
    p[0] = _product(p[1])


def p_factors(p):
    """factors : factors factor
               | factor"""
    p[0] = p[1] + [p[2]] if len(p) == 3 else [p[1]]


def p_factor_name(p):
    """factor : IDENT
              | IDENT STAR"""
    p[0] = _Name(p[1], len(p) == 3)


def p_factor_group(p):
    "factor : LPAREN expression RPAREN"
    p[0] = p[2]


def p_error(t):
    if t is None:
        raise _EndOfInput()
    raise ExpressionSyntaxError(f"unexpected token '{t.value}'", t.lexpos)


_lexer = lex.lex()
_parser = yacc.yacc(start="expression", write_tables=False, debug=False, errorlog=yacc.NullLogger())
_lock = threading.Lock()


def _resolve(node, g):
    if isinstance(node, _Name):
        if node.ident in g.out_edges:
            # los vértices son proyecciones autoadjuntas: v* = v
            return Gen(node.ident, "vertex")
        if node.ident in g.edge_map:
            return Gen(node.ident, "ghost" if node.starred else "edge")
        raise UnknownIdError(node.ident)
    if isinstance(node, ScalarMul):
        return ScalarMul(node.scalar, _resolve(node.expr, g))
    if isinstance(node, Product):
        return Product(tuple(_resolve(f, g) for f in node.factors))
    return Sum(tuple(_resolve(t, g) for t in node.terms))


def parse_expression(text, g):
    with _lock:
        try:
            tree = _parser.parse(text, lexer=_lexer.clone())
        except _EndOfInput:
            raise ExpressionSyntaxError("unexpected end of input", len(text)) from None
    return _resolve(tree, g)


# ----------------------------
# Inmersión φ
# ----------------------------
def _embed_gen(gen, g, K):
    if gen.kind == "vertex":
        return monomial(vertex_indicator(g, K, gen.name), NEUTRAL)
    path = g.path([gen.name])
    if gen.kind == "edge":
        return monomial(path_indicator(g, K, path), pos(path))
    return monomial(vertex_indicator(g, K, path.target), neg(path))


def phi_embed(expr, g, K):
    """φ(v) = 1_vδ_0, φ(e) = 1_eδ_e, φ(e*) = 1_{e⁻¹}δ_{e⁻¹}, extendida homomórficamente."""
    if isinstance(expr, Gen):
        return _embed_gen(expr, g, K)
    if isinstance(expr, ScalarMul):
        return scale_skew(from_rational(K, expr.scalar), phi_embed(expr.expr, g, K))
    if isinstance(expr, Product):
        return ordered_product([phi_embed(f, g, K) for f in expr.factors], g, K)
    if isinstance(expr, Sum):
        result = skew(g, K, [])
        for term in expr.terms:
            result = add_scale(K.one, result, K.one, phi_embed(term, g, K))
        return result
    raise TypeError(f"not a Leavitt expression: {expr!r}")


def adjoint(expr):
    """Involución sobre el árbol: e <-> e*, productos invertidos, lineal en los escalares."""
    if isinstance(expr, Gen):
        if expr.kind == "vertex":
            return expr
        return Gen(expr.name, "edge" if expr.kind == "ghost" else "ghost")
    if isinstance(expr, ScalarMul):
        return ScalarMul(expr.scalar, adjoint(expr.expr))
    if isinstance(expr, Product):
        return Product(tuple(adjoint(f) for f in reversed(expr.factors)))
    return Sum(tuple(adjoint(t) for t in expr.terms))


def unit_expr(g):
    return Sum(tuple(Gen(v, "vertex") for v in g.vertices))


def path_monomial(a, b):
    """La expresión ab* para caminos a, b con r(a) = r(b)."""
    if a.is_trivial and b.is_trivial:
        return Gen(a.source, "vertex")
    factors = [Gen(e, "edge") for e in a.edges] + [Gen(e, "ghost") for e in reversed(b.edges)]
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


def monomial_expr(g, p):
    """Expresión cuya imagen es 1_pδ_p (la unidad para p neutro)."""
    if p.is_neutral:
        return unit_expr(g)
    return path_monomial(*unified(p))


def diagonal_expr(g, p):
    """Expresión cuya imagen es 1_pδ_0: aa* para p = ab⁻¹ (o r(b) si a es trivial)."""
    if p.is_neutral:
        return unit_expr(g)
    a, _ = unified(p)
    return path_monomial(a, a) if not a.is_trivial else Gen(a.source, "vertex")


def surjection_witness(g, p, q):
    """Expresión con imagen (1_p·1_q)δ_q, como (1_pδ_0)(1_qδ_q)."""
    return Product((diagonal_expr(g, p), monomial_expr(g, q)))


# ----------------------------
# Relaciones de Cuntz-Krieger
# ----------------------------
@dataclass(frozen=True)
class Violation:
    relation: str
    detail: str


def check_ck_relations(g, K, product=mul_skew):
    """Evalúa (1)-(4) y la ortogonalidad de los vértices sobre imágenes de φ; lista vacía si todo vale."""
    violations = []
    phi_v = {v: _embed_gen(Gen(v, "vertex"), g, K) for v in g.vertices}
    phi_e = {e.id: _embed_gen(Gen(e.id, "edge"), g, K) for e in g.edges}
    phi_s = {e.id: _embed_gen(Gen(e.id, "ghost"), g, K) for e in g.edges}
    zero = skew(g, K, [])

    def expect(relation, detail, lhs, rhs):
        if lhs != rhs:
            violations.append(Violation(relation, f"{detail}: got {lhs}, expected {rhs}"))

    for v in g.vertices:
        expect("idempotent", f"{v} {v} = {v}", product(phi_v[v], phi_v[v]), phi_v[v])
        for w in g.vertices:
            if w != v:
                expect("orthogonal", f"{v} {w} = 0", product(phi_v[v], phi_v[w]), zero)

    for e in g.edges:
        expect("(1)", f"{e.src} {e.id} = {e.id}", product(phi_v[e.src], phi_e[e.id]), phi_e[e.id])
        expect("(1)", f"{e.id} {e.dst} = {e.id}", product(phi_e[e.id], phi_v[e.dst]), phi_e[e.id])
        expect("(2)", f"{e.dst} {e.id}* = {e.id}*", product(phi_v[e.dst], phi_s[e.id]), phi_s[e.id])
        expect("(2)", f"{e.id}* {e.src} = {e.id}*", product(phi_s[e.id], phi_v[e.src]), phi_s[e.id])
        for f in g.edges:
            rhs = phi_v[e.dst] if f.id == e.id else zero
            expected = e.dst if f.id == e.id else "0"
            expect("(3)", f"{e.id}* {f.id} = {expected}", product(phi_s[e.id], phi_e[f.id]), rhs)

    for v in g.vertices:
        if g.is_sink(v):
            continue
        total = zero
        for edge_id in g.out_edges[v]:
            total = add_scale(K.one, total, K.one, product(phi_e[edge_id], phi_s[edge_id]))
        expect("(4)", f"{v} = sum of e e* over s(e) = {v}", total, phi_v[v])
    return violations

