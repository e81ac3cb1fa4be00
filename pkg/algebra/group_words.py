# algebra/group_words.py
"""
Palabras reducidas del grupo libre sobre las aristas y su clasificación en formas admisibles.

Una palabra es una tupla de letras (id_arista, ±1). Toda forma no neutra se guarda en forma
unificada (a, b) con r(a) = r(b): Pos(a) = (a, r(a)), Neg(b) = (r(b), b), Mixed(a, b) = ab⁻¹.
"""
import enum
from dataclasses import dataclass
from functools import lru_cache

from .exceptions import InvalidPathError, NullFormError
from .graph_core import Path, paths_from, trivial


class FormKind(enum.Enum):
    NEUTRAL = "neutral"
    POS = "pos"
    NEG = "neg"
    MIXED = "mixed"
    NULL = "null"


@dataclass(frozen=True)
class AdmissibleForm:
    kind: FormKind
    letters: tuple = ()
    a: Path = None
    b: Path = None

    @property
    def is_null(self):
        return self.kind is FormKind.NULL

    @property
    def is_neutral(self):
        return self.kind is FormKind.NEUTRAL

    def __str__(self):
        return format_word(self)


NEUTRAL = AdmissibleForm(FormKind.NEUTRAL)


def pos(a):
    if a.is_trivial:
        raise InvalidPathError("Pos needs a path with at least one edge")
    return AdmissibleForm(FormKind.POS, tuple((e, 1) for e in a.edges), a, trivial(a.target))


def neg(b):
    if b.is_trivial:
        raise InvalidPathError("Neg needs a path with at least one edge")
    return AdmissibleForm(FormKind.NEG, tuple((e, -1) for e in reversed(b.edges)), trivial(b.target), b)


def mixed(a, b):
    if a.is_trivial or b.is_trivial or a.target != b.target or a.edges[-1] == b.edges[-1]:
        raise InvalidPathError(f"({a}, {b}) is not a reduced pair with common range")
    letters = tuple((e, 1) for e in a.edges) + tuple((e, -1) for e in reversed(b.edges))
    return AdmissibleForm(FormKind.MIXED, letters, a, b)


def from_pair(a, b):
    """Forma admisible de la palabra ab⁻¹ para caminos (posiblemente triviales) ya reducidos."""
    if a.is_trivial and b.is_trivial:
        return NEUTRAL
    if b.is_trivial:
        return pos(a)
    if a.is_trivial:
        return neg(b)
    return mixed(a, b)


def unified(p):
    if p.is_null:
        raise NullFormError(format_word(p))
    if p.is_neutral:
        raise ValueError("Neutral has no (a, b) pair")
    return p.a, p.b


def free_reduce(letters):
    stack = []
    for edge_id, sign in letters:
        if stack and stack[-1] == (edge_id, -sign):
            stack.pop()
        else:
            stack.append((edge_id, sign))
    return tuple(stack)


@lru_cache(maxsize=8192)
def classify(g, letters):
    """Reducción libre seguida de la clasificación en Neutral / Pos / Neg / Mixed / Null."""
    for edge_id, sign in letters:
        g.edge(edge_id)
        if sign not in (1, -1):
            raise ValueError(f"exponent must be ±1, got {sign}")
    word = free_reduce(tuple(letters))
    if not word:
        return NEUTRAL
    signs = [s for _, s in word]
    n_pos = signs.count(1)
    if signs != [1] * n_pos + [-1] * (len(signs) - n_pos):
        return AdmissibleForm(FormKind.NULL, word)
    try:
        a = g.path(e for e, _ in word[:n_pos]) if n_pos else None
        b = g.path(reversed([e for e, _ in word[n_pos:]])) if n_pos < len(word) else None
    except InvalidPathError:
        return AdmissibleForm(FormKind.NULL, word)
    if b is None:
        return pos(a)
    if a is None:
        return neg(b)
    if a.target != b.target:
        return AdmissibleForm(FormKind.NULL, word)
    return mixed(a, b)


def compose(g, p, q):
    """Ley de grupo: clasifica la concatenación de las palabras (Null es un resultado legal)."""
    return classify(g, p.letters + q.letters)


def invert(p):
    if p.is_null:
        raise NullFormError(format_word(p))
    if p.is_neutral:
        return p
    if p.kind is FormKind.POS:
        return neg(p.a)
    if p.kind is FormKind.NEG:
        return pos(p.b)
    return mixed(p.b, p.a)


def grade(p):
    if p.is_null:
        raise NullFormError(format_word(p))
    return sum(sign for _, sign in p.letters)


def word_length(p):
    return len(p.letters)


# ----------------------------
# Notación textual: "e f~" = ef⁻¹, "0" = neutro
# ----------------------------
def format_word(p):
    if not p.letters:
        return "0"
    return " ".join(e if s == 1 else f"{e}~" for e, s in p.letters)


def parse_word(g, text):
    tokens = text.split()
    if tokens == ["0"] or not tokens:
        return NEUTRAL
    letters = []
    for token in tokens:
        edge_id, inverse = (token[:-1], True) if token.endswith("~") else (token, False)
        g.edge(edge_id)
        letters.append((edge_id, -1 if inverse else 1))
    return classify(g, tuple(letters))


def form_key(p):
    return (len(p.letters), p.letters)


def display_key(p):
    """Orden de impresión de fibras: (grado, palabra impresa)."""
    return (grade(p), format_word(p))


def enumerate_forms(g, max_len):
    """Todas las formas no nulas de longitud de palabra <= max_len, en orden canónico."""
    by_range = {v: [] for v in g.vertices}
    for v in g.vertices:
        for n in range(max_len + 1):
            for path in paths_from(g, v, n):
                by_range[path.target].append(path)
    forms = {NEUTRAL}
    for paths in by_range.values():
        for a in paths:
            for b in paths:
                if len(a) + len(b) > max_len or (a.is_trivial and b.is_trivial):
                    continue
                if a.is_trivial or b.is_trivial or a.edges[-1] != b.edges[-1]:
                    forms.add(from_pair(a, b))
    return sorted(forms, key=form_key)
