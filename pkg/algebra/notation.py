# algebra/notation.py
"""
Lectura de la impresión canónica de vuelta a elementos.

    DiagElement:  1/2*[e] + 1*[e f] - 1*[v2]        ("0" para el cero)
    SkewElement:  [1*[v]]·δ(0) + [1*[e]]·δ(e f~)    ("0" para el cero)

Una sola gramática ply con dos símbolos iniciales, `diag` y `skew`.
"""
import threading

import ply.lex as lex
import ply.yacc as yacc

from .diagonal_algebra import diag
from .exceptions import ExpressionSyntaxError
from .graph_core import trivial
from .group_words import parse_word
from .scalars import parse_scalar
from .skew_ring import skew

tokens = (
    "NUMBER", "IDENT", "PLUS", "MINUS", "STAR", "TILDE",
    "LBRACKET", "RBRACKET", "DOT", "DELTA", "LPAREN", "RPAREN",
)

t_NUMBER = r"\d+(?:/\d+)?"
t_IDENT = r"[A-Za-z_][A-Za-z0-9_]*"
t_PLUS = r"\+"
t_MINUS = r"-"
t_STAR = r"\*"
t_TILDE = r"~"
t_LBRACKET = r"\["
t_RBRACKET = r"\]"
t_DOT = r"·"
t_DELTA = r"δ"
t_LPAREN = r"\("
t_RPAREN = r"\)"

t_ignore = " \t\n"


def t_error(t):
    raise ExpressionSyntaxError(f"unexpected character {t.value[0]!r}", t.lexpos)


class _EndOfInput(Exception):
    pass


def _zero(p):
    if p[1] != "0":
        raise ExpressionSyntaxError(f"expected a term, found '{p[1]}'", p.lexpos(1))
    return []


# ----------------------------
# Términos diagonales: (signo, escalar, índice)
# ----------------------------
def p_diag_zero(p):
    "diag : NUMBER"
    p[0] = _zero(p)


def p_diag_terms(p):
    "diag : diag_terms"
    p[0] = p[1]


def p_diag_terms_head(p):
    """diag_terms : diag_term
                  | PLUS diag_term
                  | MINUS diag_term"""
    p[0] = [p[1]] if len(p) == 2 else [(p[1], *p[2][1:])]


def p_diag_terms_more(p):
    """diag_terms : diag_terms PLUS diag_term
                  | diag_terms MINUS diag_term"""
    p[0] = p[1] + [(p[2], *p[3][1:])]


def p_diag_term(p):
    "diag_term : NUMBER STAR LBRACKET index RBRACKET"
    p[0] = ("+", p[1], tuple(p[4]))


def p_index(p):
    """index : index IDENT
             | IDENT"""
    p[0] = p[1] + [p[2]] if len(p) == 3 else [p[1]]


# ----------------------------
# Fibras: (términos, palabra)
# ----------------------------
def p_skew_zero(p):
    "skew : NUMBER"
    p[0] = _zero(p)


def p_skew_fibers(p):
    """skew : fibers"""
    p[0] = p[1]


def p_fibers(p):
    """fibers : fibers PLUS fiber
              | fiber"""
    p[0] = p[1] + [p[3]] if len(p) == 4 else [p[1]]


def p_fiber(p):
    "fiber : LBRACKET diag_terms RBRACKET DOT DELTA LPAREN word RPAREN"
    p[0] = (p[2], p[7])


def p_word_neutral(p):
    "word : NUMBER"
    _zero(p)
    p[0] = "0"


def p_word_letters(p):
    """word : letters"""
    p[0] = " ".join(p[1])


def p_letters(p):
    """letters : letters letter
               | letter"""
    p[0] = p[1] + [p[2]] if len(p) == 3 else [p[1]]


def p_letter(p):
    """letter : IDENT
              | IDENT TILDE"""
    p[0] = p[1] + ("~" if len(p) == 3 else "")


def p_error(t):
    if t is None:
        raise _EndOfInput()
    raise ExpressionSyntaxError(f"unexpected token '{t.value}'", t.lexpos)


_lexer = lex.lex()
_parsers = {
    "diag": yacc.yacc(start="diag", write_tables=False, debug=False, errorlog=yacc.NullLogger()),
    "skew": yacc.yacc(start="skew", write_tables=False, debug=False, errorlog=yacc.NullLogger()),
}
_lock = threading.Lock()


def _parse(start, text):
    with _lock:
        try:
            return _parsers[start].parse(text, lexer=_lexer.clone())
        except _EndOfInput:
            raise ExpressionSyntaxError("unexpected end of input", len(text)) from None


def _index_path(g, idents):
    if len(idents) == 1 and idents[0] in g.out_edges:
        return trivial(idents[0])
    return g.path(list(idents))


def _diag_pairs(terms, g, K):
    pairs = []
    for sign, scalar, index in terms:
        value = parse_scalar(K, scalar)
        pairs.append((_index_path(g, index), -value if sign == "-" else value))
    return pairs


def parse_diag(text, g, K):
    return diag(g, K, _diag_pairs(_parse("diag", text), g, K))


def parse_skew(text, g, K):
    """Inverso de format_skew; verifica que cada coeficiente esté en su ideal D_p."""
    pairs = [
        (parse_word(g, word), diag(g, K, _diag_pairs(terms, g, K)))
        for terms, word in _parse("skew", text)
    ]
    return skew(g, K, pairs, check=True)
